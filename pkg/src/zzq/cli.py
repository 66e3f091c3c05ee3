"""Batch command line interface with deterministic JSON and DOT output.

Every command prints a single JSON report {"algebra": ..., "result": ...}
to stdout (DOT output replaces JSON for `tilting hasse --format dot`);
progress goes to stderr.  Exit codes: 0 success / all checks passed,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import build_leaf_quotient, check_structure
from .catalog import catalog, decompose_labels, identify
from .exceptional import enumerate_exceptional_sequences
from .gf import FieldPrime
from .homology import INFINITE, ext_dim, resolution
from .maps import hom_dim
from .quasihereditary import is_quasi_hereditary, natural_order, standard_for_order
from .reps import canonical_module, parse_label
from .tilting import enumerate_tilting, hasse_dot, hasse_edges
from .verify import run_criteria

LABEL_GRAMMAR = (
    "labels: L(i) P(i) I(i) M(i,j) N(i,j) W(i,j) S(i,j) Delta(i) Nabla(i) T(i), "
    "1-based indices, no whitespace"
)


class UsageError(Exception):
    pass


def _common(parser):
    parser.add_argument("--kind", choices=("A", "B", "C"), default="B")
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--prime", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)


def _build_parser():
    root = argparse.ArgumentParser(prog="zzq", description=__doc__)
    sub = root.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("algebra").add_subparsers(dest="sub", required=True)
    _common(alg.add_parser("info"))

    cat = sub.add_parser("catalog").add_subparsers(dest="sub", required=True)
    _common(cat.add_parser("list"))

    mod = sub.add_parser("module").add_subparsers(dest="sub", required=True)
    show = mod.add_parser("show")
    _common(show)
    show.add_argument("label")

    hom = sub.add_parser("hom")
    _common(hom)
    hom.add_argument("source")
    hom.add_argument("target")

    ext = sub.add_parser("ext")
    _common(ext)
    ext.add_argument("source")
    ext.add_argument("target")
    ext.add_argument("--kmax", type=int, default=None)

    res = sub.add_parser("resolve")
    _common(res)
    res.add_argument("label")
    res.add_argument("--kmax", type=int, default=None)

    qh = sub.add_parser("qh").add_subparsers(dest="sub", required=True)
    qhc = qh.add_parser("check")
    _common(qhc)
    qhc.add_argument("--order", default=None, help="comma separated permutation of 1..n")

    til = sub.add_parser("tilting").add_subparsers(dest="sub", required=True)
    _common(til.add_parser("enumerate"))
    th = til.add_parser("hasse")
    _common(th)
    th.add_argument("--format", choices=("dot", "json"), default="dot")

    exc = sub.add_parser("exceptional").add_subparsers(dest="sub", required=True)
    ee = exc.add_parser("enumerate")
    _common(ee)
    ee.add_argument("--length", type=int, default=None)
    ee.add_argument("--full-only", action="store_true")

    ver = sub.add_parser("verify")
    _common(ver)
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--all-kinds", action="store_true",
                     help="ignore --kind/--n and run the full suite")
    return root


def _algebra(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    return build_leaf_quotient(args.n, args.kind, FieldPrime(args.prime))


def _module(alg, text):
    try:
        lab = parse_label(text)
        return lab, canonical_module(alg, lab)
    except ValueError as exc:
        raise UsageError(f"{exc}; {LABEL_GRAMMAR}") from exc


def _module_json(alg, rep, label=None):
    return {
        "label": None if label is None else str(label),
        "dim_vector": list(rep.dims),
    }


def _emit(alg, result) -> str:
    report = {
        "algebra": {"kind": alg.kind, "n": alg.n, "p": alg.field.p},
        "result": result,
    }
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _pd_json(value):
    if value is None:
        return "unknown"
    if value == INFINITE:
        return "infinite"
    return value


def _run(args, out) -> int:
    alg = _algebra(args)
    cmd = (args.command, getattr(args, "sub", None))

    if cmd == ("algebra", "info"):
        basis = [alg.basis_name(i) for i in range(alg.dim)]
        out.write(_emit(alg, {
            "dimension": alg.dim,
            "basis": basis,
            "structure_ok": check_structure(alg),
        }))
        return 0

    if cmd == ("catalog", "list"):
        cat = catalog(alg)
        out.write(_emit(alg, [
            {"label": str(lab), "dim_vector": list(rep.dims)}
            for lab, rep in zip(cat.labels, cat.reps)
        ]))
        return 0

    if cmd == ("module", "show"):
        lab, rep = _module(alg, args.label)
        out.write(_emit(alg, {
            "label": str(identify(rep)),
            "requested": str(lab),
            "dim_vector": list(rep.dims),
            "total_dim": rep.total_dim,
            "matrices": {
                alg.basis_name(alg.idx_arrow[k]): rep.mats[k].tolist()
                for k in range(len(alg.arrows))
            },
        }))
        return 0

    if cmd == ("hom", None):
        _, x = _module(alg, args.source)
        _, y = _module(alg, args.target)
        out.write(_emit(alg, {"dim": hom_dim(x, y)}))
        return 0

    if cmd == ("ext", None):
        _, x = _module(alg, args.source)
        _, y = _module(alg, args.target)
        kmax = args.kmax if args.kmax is not None else 2 * alg.n
        table = [{"k": k, "dim": ext_dim(x, y, k)} for k in range(kmax + 1)]
        out.write(_emit(alg, table))
        return 0

    if cmd == ("resolve", None):
        _, x = _module(alg, args.label)
        kmax = args.kmax if args.kmax is not None else 4 * alg.n + 2
        res = resolution(x, kmax)
        out.write(_emit(alg, {
            "status": res.status,
            "pd": res.pd,
            "preperiod": res.preperiod,
            "period": res.period,
            "terms": [[str(l) for l in t] for t in res.terms],
        }))
        return 0

    if cmd == ("qh", "check"):
        if args.order is None:
            order = natural_order(alg.n)
        else:
            try:
                order = tuple(int(t) for t in args.order.split(","))
            except ValueError as exc:
                raise UsageError(f"--order must be a comma separated permutation: {exc}")
        try:
            ok = is_quasi_hereditary(alg, order)
            standards = standard_for_order(alg, order)
        except ValueError as exc:
            raise UsageError(str(exc))
        out.write(_emit(alg, {
            "order": list(order),
            "quasi_hereditary": ok,
            "standard_modules": [
                {"vertex": v + 1, "label": str(identify(rep)), "dim_vector": list(rep.dims)}
                for v, rep in enumerate(standards)
            ],
        }))
        return 0

    if cmd == ("tilting", "enumerate"):
        poset = enumerate_tilting(alg)
        out.write(_emit(alg, {
            "count": len(poset.members),
            "members": [[str(l) for l in m] for m in poset.members],
        }))
        return 0

    if cmd == ("tilting", "hasse"):
        poset = hasse_edges(enumerate_tilting(alg), alg)
        if args.format == "dot":
            out.write(hasse_dot(poset))
        else:
            out.write(_emit(alg, {
                "members": [[str(l) for l in m] for m in poset.members],
                "edges": [list(e) for e in poset.edges],
                "chain": poset.chain,
            }))
        return 0

    if cmd == ("exceptional", "enumerate"):
        length = args.length if args.length is not None else alg.n
        seqs = enumerate_exceptional_sequences(alg, length, full_only=args.full_only, seed=args.seed)
        out.write(_emit(alg, {
            "count": len(seqs),
            "sequences": [[str(l) for l in s] for s in seqs],
        }))
        return 0

    if cmd == ("verify", None):
        kinds = None if args.all_kinds else {args.kind}
        n_only = None if args.all_kinds else args.n
        if args.n_max is not None:
            n_only = None

        def progress(res):
            mark = "ok" if res.passed else "FAIL"
            print(f"{mark} {res.cid}" + ("" if res.passed else f": {res.details}"), file=sys.stderr)

        results = run_criteria(
            p=args.prime,
            n_max=args.n_max,
            n_only=n_only,
            kinds=kinds,
            seed=args.seed,
            progress=progress,
        )
        out.write(_emit(alg, {
            "all_passed": all(r.passed for r in results),
            "criteria": [
                {"id": r.cid, "passed": r.passed, "details": r.details}
                for r in results
            ],
        }))
        return 0 if all(r.passed for r in results) else 1

    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _run(args, sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
