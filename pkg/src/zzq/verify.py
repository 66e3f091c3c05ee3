"""The acceptance suite: every classification claim, checked exhaustively.

Each criterion function computes the relevant invariants at desk scale
and returns a CriterionResult whose payload carries the raw numbers; the
field-independence criterion reruns the numeric criteria at p = 3 and
p = 5 and compares payloads verbatim.  The CLI `verify` command and the
acceptance test module both run through `run_criteria`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .algebra import KIND_A, KIND_B, KIND_C, build_leaf_quotient, check_structure
from .catalog import canonical_label, catalog, decompose_labels, is_isomorphic
from .exceptional import (
    enumerate_exceptional_sequences,
    is_exceptional,
    is_ext_self_orthogonal,
    max_sequence_length,
)
from .gf import FieldPrime
from .homology import ext_dim, projective_dimension, resolution, syzygy
from .maps import hom_dim
from .quasihereditary import is_quasi_hereditary, natural_order
from .reps import (
    Label,
    canonical_module,
    delta_nabla_labels,
    dual_star,
    parse_label,
)
from .tilting import enumerate_tilting, hasse_edges, projective_injective_labels


@dataclass
class CriterionResult:
    cid: str
    passed: bool
    details: str = ""
    payload: object = None


_ALGEBRAS: dict = {}


def _alg(kind: str, n: int, p: int):
    key = (kind, n, p)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = build_leaf_quotient(n, kind, FieldPrime(p))
    return _ALGEBRAS[key]


def _fail(cid, details, payload=None):
    return CriterionResult(cid, False, details, payload)


def _ok(cid, payload=None, details=""):
    return CriterionResult(cid, True, details, payload)


def _labels(labs) -> list[str]:
    return [str(lab) for lab in labs]


def _dn_family(alg) -> list[str]:
    """Canonical catalog labels of Delta(n)..Delta(2), L(1), Nabla(2)..Nabla(n)."""
    return [str(canonical_label(alg, lab)) for lab in delta_nabla_labels(alg)]


# -- 1 -------------------------------------------------------------------

def crit_algebra_dimensions(p=2, n_lo=2, n_hi=8, kinds=(KIND_A, KIND_B, KIND_C)):
    cid = "01-algebra-dimensions"
    expected = {KIND_A: lambda n: 4 * n - 2, KIND_B: lambda n: 4 * n - 3, KIND_C: lambda n: 4 * n - 4}
    payload = {}
    for kind in kinds:
        for n in range(n_lo, n_hi + 1):
            alg = _alg(kind, n, p)
            payload[f"{kind}{n}"] = alg.dim
            if alg.dim != expected[kind](n):
                return _fail(cid, f"dim {kind}_{n} = {alg.dim}", payload)
            if not check_structure(alg):
                return _fail(cid, f"{kind}_{n} fails associativity/unit checks", payload)
    return _ok(cid, payload)


# -- 2 -------------------------------------------------------------------

def crit_catalog_integrity(p=2, n_lo=2, n_hi=6, kinds=(KIND_A, KIND_B, KIND_C)):
    cid = "02-catalog-integrity"
    offset = {KIND_A: 0, KIND_B: -1, KIND_C: -2}
    payload = {}
    for kind in kinds:
        for n in range(n_lo, n_hi + 1):
            alg = _alg(kind, n, p)
            cat = catalog(alg)  # build certifies indecomposability + distinctness
            payload[f"{kind}{n}"] = len(cat)
            if len(cat) != n * (n + 1) + offset[kind]:
                return _fail(cid, f"catalog {kind}_{n} has {len(cat)} entries", payload)
    return _ok(cid, payload)


# -- 3 -------------------------------------------------------------------

def crit_projective_injectives(p=2, n_lo=2, n_hi=6, kinds=(KIND_A, KIND_B, KIND_C)):
    cid = "03-projective-injectives"
    payload = {}
    for kind in kinds:
        for n in range(n_lo, n_hi + 1):
            if kind == KIND_C and n < 3:
                continue
            alg = _alg(kind, n, p)
            if kind == KIND_A:
                ok = all(
                    is_isomorphic(
                        canonical_module(alg, Label("P", v)),
                        dual_star(canonical_module(alg, Label("P", v))),
                    )
                    for v in range(1, n + 1)
                )
                payload[f"A{n}"] = n if ok else -1
                if not ok:
                    return _fail(cid, f"A_{n}: some P(v) not isomorphic to I(v)", payload)
                continue
            count = len(projective_injective_labels(alg))
            payload[f"{kind}{n}"] = count
            want = n - 1 if kind == KIND_B else n - 2
            if count != want:
                return _fail(cid, f"{kind}_{n}: {count} projective-injectives, want {want}", payload)
    return _ok(cid, payload)


# -- 4 -------------------------------------------------------------------

def crit_quasi_heredity(p=2, n_lo=2, n_hi=6, seed=0):
    cid = "04-quasi-heredity"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        if not is_quasi_hereditary(alg, natural_order(n)):
            return _fail(cid, f"B_{n} fails for the natural order", payload)
        if n <= 5:
            others = [o for o in itertools.permutations(range(1, n + 1)) if o != natural_order(n)]
        else:
            rng = random.Random(seed)
            others = set()
            while len(others) < 50:
                o = tuple(rng.sample(range(1, n + 1), n))
                if o != natural_order(n):
                    others.add(o)
            others = sorted(others)
        bad = [o for o in others if is_quasi_hereditary(alg, o)]
        payload[f"B{n}"] = {"natural": True, "other_orders_checked": len(others), "other_passing": len(bad)}
        if bad:
            return _fail(cid, f"B_{n} quasi-hereditary for non-natural order {bad[0]}", payload)
    for n in range(n_lo, min(n_hi, 4) + 1):
        alg = _alg(KIND_A, n, p)
        passing = [o for o in itertools.permutations(range(1, n + 1)) if is_quasi_hereditary(alg, o)]
        payload[f"A{n}"] = len(passing)
        if passing:
            return _fail(cid, f"A_{n} quasi-hereditary for order {passing[0]}", payload)
    return _ok(cid, payload)


# -- 5 -------------------------------------------------------------------

def crit_standard_ext_vanishing(p=2, n_lo=2, n_hi=6):
    cid = "05-standard-ext-vanishing"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        deltas = [canonical_module(alg, Label("Delta", i)) for i in range(1, n + 1)]
        nablas = [canonical_module(alg, Label("Nabla", i)) for i in range(1, n + 1)]
        checked = 0
        for k in range(1, 2 * n - 1):
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    checked += 2
                    if ext_dim(deltas[j - 1], deltas[i - 1], k):
                        return _fail(cid, f"B_{n}: Ext^{k}(Delta({j}),Delta({i})) != 0", payload)
                    if ext_dim(nablas[i - 1], nablas[j - 1], k):
                        return _fail(cid, f"B_{n}: Ext^{k}(Nabla({i}),Nabla({j})) != 0", payload)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    checked += 1
                    if ext_dim(deltas[i - 1], nablas[j - 1], k):
                        return _fail(cid, f"B_{n}: Ext^{k}(Delta({i}),Nabla({j})) != 0", payload)
        payload[f"B{n}"] = checked
    return _ok(cid, payload)


# -- 6 -------------------------------------------------------------------

def crit_second_self_extension(p=2, n_lo=2, n_hi=6):
    cid = "06-second-self-extension"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        cat = catalog(alg)
        family = set(_dn_family(alg))
        projective = {str(canonical_label(alg, Label("P", v))) for v in range(1, n + 1)}
        rows = {}
        for lab, rep in zip(cat.labels, cat.reps):
            name = str(lab)
            if name in family:
                pd = projective_dimension(rep)
                bad = [k for k in range(1, max(pd, 0) + 1) if ext_dim(rep, rep, k)]
                rows[name] = 0
                if bad:
                    return _fail(cid, f"B_{n}: Ext^{bad[0]}({name},{name}) != 0", payload)
            elif name not in projective:
                d2 = ext_dim(rep, rep, 2)
                rows[name] = d2
                if d2 < 1:
                    return _fail(cid, f"B_{n}: Ext^2({name},{name}) = 0", payload)
        payload[f"B{n}"] = dict(sorted(rows.items()))
    return _ok(cid, payload)


# -- 7 -------------------------------------------------------------------

def crit_tilting_classification_b(p=2, n_lo=2, n_hi=6):
    cid = "07-tilting-classification-B"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        poset = enumerate_tilting(alg)
        got = sorted(tuple(_labels(m)) for m in poset.members)
        core = [str(canonical_label(alg, Label("P", v))) for v in range(1, n)]
        want = sorted(
            tuple(sorted(core + [x], key=lambda s: parse_label(s).sort_key()))
            for x in _dn_family(alg)
        )
        payload[f"B{n}"] = got
        if got != want:
            return _fail(cid, f"B_{n}: tilting set mismatch ({len(got)} found)", payload)
    return _ok(cid, payload)


# -- 8 -------------------------------------------------------------------

def crit_resolution_shapes(p=2, n_lo=2, n_hi=6):
    cid = "08-resolution-shapes"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        proj_inj = set(_labels(projective_injective_labels(alg)))
        last_label = str(canonical_label(alg, Label("P", n)))
        rows = {}
        for lab in delta_nabla_labels(alg):
            name = str(canonical_label(alg, lab))
            if name == last_label:
                continue  # Delta(n) is the projective P(n)
            rep = canonical_module(alg, lab)
            res = resolution(rep, 4 * n + 2)
            if res.status != "finite":
                return _fail(cid, f"B_{n}: resolution of {lab} is {res.status}", payload)
            terms = [sorted(f"P({l.i})" for l in t) for t in res.terms]
            rows[str(lab)] = terms
            if [str(canonical_label(alg, l)) for l in res.terms[-1]] != [last_label]:
                return _fail(cid, f"B_{n}: last term of {lab} is {terms[-1]}", payload)
            for t in res.terms[:-1]:
                for l in t:
                    if str(canonical_label(alg, l)) not in proj_inj:
                        return _fail(cid, f"B_{n}: non-projective-injective term {l} for {lab}", payload)
        payload[f"B{n}"] = rows
    return _ok(cid, payload)


# -- 9 -------------------------------------------------------------------

def crit_hasse_chain(p=2, n_lo=2, n_hi=6):
    cid = "09-hasse-chain"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        poset = hasse_edges(enumerate_tilting(alg), alg)
        if len(poset.edges) != 2 * n - 2:
            return _fail(cid, f"B_{n}: {len(poset.edges)} edges, want {2 * n - 2}", payload)
        if poset.chain is None:
            return _fail(cid, f"B_{n}: Hasse graph is not a path", payload)
        core = {str(canonical_label(alg, Label("P", v))) for v in range(1, n)}
        chain_x = []
        for idx in poset.chain:
            extra = [str(l) for l in poset.members[idx] if str(l) not in core]
            chain_x.append(extra[0])
        # expected: Nabla(n) .. Nabla(2), L(1), Delta(2) .. Delta(n)
        want = [str(canonical_label(alg, lab)) for lab in reversed(delta_nabla_labels(alg))]
        payload[f"B{n}"] = chain_x
        if chain_x != want and chain_x != want[::-1]:
            return _fail(cid, f"B_{n}: chain {chain_x} differs from {want}", payload)
    return _ok(cid, payload)


# -- 10 ------------------------------------------------------------------

def crit_exceptional_set(p=2, n_lo=2, n_hi=6):
    cid = "10-exceptional-set"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        cat = catalog(alg)
        got = sorted(str(lab) for lab, rep in zip(cat.labels, cat.reps) if is_exceptional(rep))
        want = sorted(_dn_family(alg))
        payload[f"B{n}"] = got
        if got != want:
            return _fail(cid, f"B_{n}: exceptional set {got} != {want}", payload)
    return _ok(cid, payload)


# -- 11 ------------------------------------------------------------------

def crit_ordered_ext_nonvanishing(p=2, n_lo=2, n_hi=6):
    cid = "11-ordered-ext-nonvanishing"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        dims = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                k = j - i
                d1 = ext_dim(
                    canonical_module(alg, Label("Delta", i)),
                    canonical_module(alg, Label("Delta", j)),
                    k,
                )
                d2 = ext_dim(
                    canonical_module(alg, Label("Nabla", j)),
                    canonical_module(alg, Label("Nabla", i)),
                    k,
                )
                dims[f"{i},{j}"] = [d1, d2]
                if d1 < 1 or d2 < 1:
                    return _fail(cid, f"B_{n}: Ext^{k} vanishing at (i,j)=({i},{j})", payload)
        payload[f"B{n}"] = dims
    return _ok(cid, payload)


# -- 12 ------------------------------------------------------------------

def _matches_interleaving_pattern(seq: list[str], alg) -> bool:
    """Nabla indices strictly descending, then L(1), then Delta ascending."""
    n = alg.n
    delta_of = {str(canonical_label(alg, Label("Delta", i))): i for i in range(2, n + 1)}
    nabla_of = {str(canonical_label(alg, Label("Nabla", i))): i for i in range(2, n + 1)}
    l1 = str(canonical_label(alg, Label("L", 1)))
    try:
        pos = seq.index(l1)
    except ValueError:
        return False
    head, tail = seq[:pos], seq[pos + 1:]
    if any(s not in nabla_of for s in head) or any(s not in delta_of for s in tail):
        return False
    hi = [nabla_of[s] for s in head]
    ti = [delta_of[s] for s in tail]
    if hi != sorted(hi, reverse=True) or ti != sorted(ti):
        return False
    return sorted(hi + ti) == list(range(2, n + 1))


def crit_full_sequences_b(p=2, n_lo=2, n_hi=5, seed=0):
    cid = "12-full-sequences-B"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_B, n, p)
        seqs = enumerate_exceptional_sequences(alg, n, full_only=True, seed=seed)
        payload[f"B{n}"] = [_labels(s) for s in seqs]
        if len(seqs) != 2 ** (n - 1):
            return _fail(cid, f"B_{n}: {len(seqs)} full sequences, want {2 ** (n - 1)}", payload)
        for s in seqs:
            if not _matches_interleaving_pattern(_labels(s), alg):
                return _fail(cid, f"B_{n}: sequence {_labels(s)} out of pattern", payload)
    return _ok(cid, payload)


# -- 13 ------------------------------------------------------------------

def crit_c_self_orthogonal(p=2, n_lo=3, n_hi=6):
    cid = "13-C-self-orthogonal"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_C, n, p)
        cat = catalog(alg)
        got = sorted(str(lab) for lab, rep in zip(cat.labels, cat.reps) if is_ext_self_orthogonal(rep))
        want = set(_labels(projective_injective_labels(alg)))
        for i in range(1, n):
            want.add(f"N({i},{i + 1})")
            want.add(f"S({i},{i + 1})")
        payload[f"C{n}"] = got
        if got != sorted(want):
            return _fail(cid, f"C_{n}: self-orthogonal set {got} != {sorted(want)}", payload)
    alg3 = _alg(KIND_C, 3, p)
    orbit = []
    m = canonical_module(alg3, parse_label("W(1,3)"))
    for _ in range(4):
        orbit.append(_labels(decompose_labels(m)))
        m = syzygy(m)
    payload["C3-syzygy-orbit"] = orbit
    if orbit[0] != orbit[2] or orbit[1] != orbit[3] or orbit[0] == orbit[1]:
        return _fail(cid, f"C_3: syzygy orbit of W(1,3) is {orbit}, not period 2", payload)
    if orbit[1] != ["L(2)"]:
        return _fail(cid, f"C_3: syzygy of W(1,3) is {orbit[1]}, want L(2)", payload)
    return _ok(cid, payload)


# -- 14 ------------------------------------------------------------------

def crit_tilting_classification_c(p=2, n_lo=3, n_hi=6):
    cid = "14-tilting-classification-C"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_C, n, p)
        poset = enumerate_tilting(alg)
        got = sorted(tuple(_labels(m)) for m in poset.members)
        core = [str(canonical_label(alg, Label("P", v))) for v in range(2, n)]
        want = sorted(
            tuple(sorted(core + [f"S({i},{i + 1})", f"N({j},{j + 1})"],
                         key=lambda s: parse_label(s).sort_key()))
            for i in range(1, n)
            for j in range(1, n)
        )
        payload[f"C{n}-members"] = got
        if got != want:
            return _fail(cid, f"C_{n}: tilting set mismatch ({len(got)} found)", payload)
        worst = 0
        for i in range(1, n):
            for j in range(1, n):
                s = canonical_module(alg, Label("S", i, i + 1))
                t = canonical_module(alg, Label("N", j, j + 1))
                for x, y in ((s, t), (t, s)):
                    pd = projective_dimension(x)
                    for k in range(1, max(pd, 0) + 1):
                        worst = max(worst, ext_dim(x, y, k))
        payload[f"C{n}-max-cross-ext"] = worst
        if worst:
            return _fail(cid, f"C_{n}: nonzero Ext between an S and an N summand", payload)
    return _ok(cid, payload)


# -- 15 ------------------------------------------------------------------

def crit_c_sequences(p=2, n_lo=3, n_hi=6, seed=0):
    cid = "15-C-sequences"
    payload = {}
    for n in range(n_lo, n_hi + 1):
        alg = _alg(KIND_C, n, p)
        longest = max_sequence_length(alg)
        full = enumerate_exceptional_sequences(alg, n, full_only=True, seed=seed)
        payload[f"C{n}"] = {"max_length": longest, "full": len(full)}
        if longest != n - 1:
            return _fail(cid, f"C_{n}: longest sequence {longest}, want {n - 1}", payload)
        if full:
            return _fail(cid, f"C_{n}: found {len(full)} full sequences", payload)
    return _ok(cid, payload)


# -- 16 ------------------------------------------------------------------

def crit_duality_coherence(p=2, n=4, pairs=200, kmax=4, seed=0):
    cid = "16-duality-coherence"
    payload = {}
    for kind in (KIND_A, KIND_B, KIND_C):
        alg = _alg(kind, n, p)
        cat = catalog(alg)
        for v in range(1, n + 1):
            lv = canonical_module(alg, Label("L", v))
            if not is_isomorphic(dual_star(lv), lv):
                return _fail(cid, f"{kind}_{n}: duality moves L({v})", payload)
            pv = canonical_module(alg, Label("P", v))
            iv = canonical_module(alg, Label("I", v))
            if not is_isomorphic(dual_star(pv), iv):
                return _fail(cid, f"{kind}_{n}: dual of P({v}) is not I({v})", payload)
        rng = random.Random(seed)
        checked = 0
        for _ in range(pairs):
            x = cat.reps[rng.randrange(len(cat))]
            y = cat.reps[rng.randrange(len(cat))]
            dx, dy = dual_star(x), dual_star(y)
            for k in range(0, kmax + 1):
                if ext_dim(x, y, k) != ext_dim(dy, dx, k):
                    return _fail(
                        cid,
                        f"{kind}_{n}: Ext^{k} asymmetry at dims {x.dims} vs {y.dims}",
                        payload,
                    )
                checked += 1
        payload[kind] = checked
    return _ok(cid, payload)


# -- 17 ------------------------------------------------------------------

_NUMERIC_CRITERIA = [
    crit_standard_ext_vanishing,
    crit_second_self_extension,
    crit_tilting_classification_b,
    crit_resolution_shapes,
    crit_hasse_chain,
    crit_exceptional_set,
    crit_ordered_ext_nonvanishing,
    crit_full_sequences_b,
    crit_c_self_orthogonal,
    crit_tilting_classification_c,
    crit_c_sequences,
]


def crit_field_independence(primes=(2, 3, 5), n_lo=3, n_hi=4):
    cid = "17-field-independence"
    baseline = None
    payload = {}
    for p in primes:
        snapshot = {}
        for fn in _NUMERIC_CRITERIA:
            res = fn(p=p, n_lo=n_lo, n_hi=n_hi)
            if not res.passed:
                return _fail(cid, f"p={p}: {res.cid} failed: {res.details}", payload)
            snapshot[res.cid] = res.payload
        if baseline is None:
            baseline = snapshot
            payload["baseline_prime"] = p
        elif snapshot != baseline:
            diff = [k for k in baseline if snapshot.get(k) != baseline[k]]
            return _fail(cid, f"p={p} differs from baseline on {diff}", payload)
    payload["criteria_compared"] = len(_NUMERIC_CRITERIA)
    return _ok(cid, payload)


# -- runner --------------------------------------------------------------

CRITERIA = [
    ("01-algebra-dimensions", crit_algebra_dimensions, {"A", "B", "C"}, (2, 8)),
    ("02-catalog-integrity", crit_catalog_integrity, {"A", "B", "C"}, (2, 6)),
    ("03-projective-injectives", crit_projective_injectives, {"A", "B", "C"}, (2, 6)),
    ("04-quasi-heredity", crit_quasi_heredity, {"A", "B"}, (2, 6)),
    ("05-standard-ext-vanishing", crit_standard_ext_vanishing, {"B"}, (2, 6)),
    ("06-second-self-extension", crit_second_self_extension, {"B"}, (2, 6)),
    ("07-tilting-classification-B", crit_tilting_classification_b, {"B"}, (2, 6)),
    ("08-resolution-shapes", crit_resolution_shapes, {"B"}, (2, 6)),
    ("09-hasse-chain", crit_hasse_chain, {"B"}, (2, 6)),
    ("10-exceptional-set", crit_exceptional_set, {"B"}, (2, 6)),
    ("11-ordered-ext-nonvanishing", crit_ordered_ext_nonvanishing, {"B"}, (2, 6)),
    ("12-full-sequences-B", crit_full_sequences_b, {"B"}, (2, 5)),
    ("13-C-self-orthogonal", crit_c_self_orthogonal, {"C"}, (3, 6)),
    ("14-tilting-classification-C", crit_tilting_classification_c, {"C"}, (3, 6)),
    ("15-C-sequences", crit_c_sequences, {"C"}, (3, 6)),
    ("16-duality-coherence", crit_duality_coherence, {"A", "B", "C"}, None),
    ("17-field-independence", crit_field_independence, {"B", "C"}, None),
]


def run_criteria(p=2, n_max=None, n_only=None, kinds=None, seed=0, progress=None):
    """Run the acceptance criteria, optionally restricted, in order.

    kinds restricts to criteria touching any of the given kinds; n_max
    caps each criterion's range, n_only pins it to one value.  progress,
    when given, receives each CriterionResult as it completes.
    """
    results = []
    for cid, fn, fn_kinds, span in CRITERIA:
        if kinds and not (fn_kinds & set(kinds)):
            continue
        kwargs = {}
        if span is not None:
            lo, hi = span
            if n_max is not None:
                hi = min(hi, n_max)
            if n_only is not None:
                if not lo <= n_only:
                    continue
                lo = hi = min(n_only, hi)
            if hi < lo:
                continue
            kwargs = {"n_lo": lo, "n_hi": hi}
        if cid == "16-duality-coherence":
            if n_only is not None:
                kwargs["n"] = max(2, n_only)
            elif n_max is not None:
                kwargs["n"] = max(2, min(4, n_max))
            kwargs["seed"] = seed
        if cid in ("04-quasi-heredity", "12-full-sequences-B", "15-C-sequences"):
            kwargs["seed"] = seed
        if cid == "17-field-independence":
            if n_max is not None:
                kwargs["n_hi"] = max(3, min(4, n_max))
            if kinds is not None and "B" not in kinds and "C" not in kinds:
                continue
            res = fn(**kwargs)
        else:
            kwargs["p"] = p
            if "kinds" in fn.__code__.co_varnames[: fn.__code__.co_argcount] and kinds:
                kwargs["kinds"] = tuple(k for k in (KIND_A, KIND_B, KIND_C) if k in kinds)
            res = fn(**kwargs)
        results.append(res)
        if progress is not None:
            progress(res)
    return results
