"""Generalized tilting modules: certification, enumeration, exchange graph.

A module T is generalized tilting when it has finite projective
dimension, no self-extensions in positive degrees, and the regular
module has a finite coresolution by summands of T.  The coresolution is
certified constructively: starting from each indecomposable projective,
repeatedly take the left approximation into add(T), require it to be
injective, and pass to the cokernel.

Enumeration searches basic n-summand multisets of catalog modules; any
generalized tilting module must contain every projective-injective
indecomposable, and the free slots admit only ext-self-orthogonal
candidates of finite projective dimension, so the search space is tiny
and every survivor is certified by the full definition.

Two basic tilting modules differing in exactly one indecomposable
summand are joined by an exchange edge when a short exact sequence
0 -> X -> M' -> Y -> 0 with M' in add(common part) exists; this graph is
the Hasse diagram of the tilting order.  The certificate takes the left
approximation of X into the common part, checks injectivity, and
matches the cokernel against Y plus common summands.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf
from .algebra import KIND_B, KIND_C, Algebra, UnsupportedKindError
from .catalog import canonical_label, catalog, decompose_labels
from .homology import INFINITE, ext_dim, projective_dimension
from .maps import cokernel_of_map, hom_basis, is_mono
from .reps import Label, Representation, canonical_module, direct_sum_with_blocks, dual_star


@dataclass
class TiltingPoset:
    """Basic generalized tilting modules as sorted label tuples, plus edges.

    edges joins member indices; chain lists the member indices along the
    Hasse diagram when it is a path, oriented away from the regular
    module.
    """

    members: list[tuple[Label, ...]]
    edges: list[tuple[int, int]]
    chain: list[int] | None = None


def left_add_approximation(x: Representation, t_summands):
    """Universal map from x into a finite sum of the given summands.

    The target collects dim Hom(x, T_i) copies of each T_i and the map's
    coordinates run over a hom basis, so every map from x to add(T)
    factors through it.  Returns (target, map, part labels per copy).
    """
    alg = x.algebra
    parts = []
    comps = []
    for t in t_summands:
        for f in hom_basis(x, t):
            parts.append(t)
            comps.append(f)
    target, offsets = direct_sum_with_blocks(parts, alg)
    f = [gf.zeros(x.dims[v], target.dims[v]) for v in range(alg.n)]
    for part, comp, off in zip(parts, comps, offsets):
        for v in range(alg.n):
            f[v][:, off[v]: off[v] + part.dims[v]] = comp[v]
    return target, tuple(f)


def coresolves_regular(alg: Algebra, t_reps, bound: int) -> bool:
    """Whether every projective coresolves through add of the given modules.

    Each chain starts at an indecomposable projective and iterates (left
    approximation, injectivity check, cokernel) at most `bound` times.
    """
    for v in range(1, alg.n + 1):
        x = canonical_module(alg, Label("P", v))
        steps = 0
        while x.total_dim:
            if steps >= bound:
                return False
            target, f = left_add_approximation(x, t_reps)
            if not is_mono(x, f):
                return False
            x = cokernel_of_map(target, f)[0]
            steps += 1
    return True


def is_generalized_tilting(t_labels, alg: Algebra, bound: int | None = None) -> bool:
    """The three defining conditions, each checked constructively."""
    reps = [canonical_module(alg, lab) for lab in t_labels]
    pds = []
    for rep in reps:
        pd = projective_dimension(rep)
        if pd is None or pd == INFINITE:
            return False
        pds.append(max(pd, 0))
    for rep, pd in zip(reps, pds):
        for other in reps:
            if any(ext_dim(rep, other, k) for k in range(1, pd + 1)):
                return False
    return coresolves_regular(alg, reps, bound if bound is not None else 2 * alg.n)


def projective_injective_labels(alg: Algebra) -> list[Label]:
    """Catalog labels of the indecomposable projective-injective modules."""
    from .catalog import is_isomorphic

    projs = [canonical_module(alg, Label("P", v)) for v in range(1, alg.n + 1)]
    injs = [dual_star(p) for p in projs]
    out = []
    for v, pv in enumerate(projs, start=1):
        if any(is_isomorphic(pv, iw) for iw in injs):
            out.append(canonical_label(alg, Label("P", v)))
    return sorted(out, key=Label.sort_key)


def enumerate_tilting(alg: Algebra) -> TiltingPoset:
    """All basic generalized tilting modules of a kind B or C algebra."""
    if alg.kind not in (KIND_B, KIND_C):
        raise UnsupportedKindError("tilting enumeration covers kinds B and C")
    cat = catalog(alg)
    forced = projective_injective_labels(alg)
    slots = alg.n - len(forced)
    forced_set = {str(lab) for lab in forced}
    candidates = []
    for lab, rep in zip(cat.labels, cat.reps):
        if str(lab) in forced_set:
            continue
        pd = projective_dimension(rep)
        if pd is None or pd == INFINITE:
            continue
        if any(ext_dim(rep, rep, k) for k in range(1, max(pd, 0) + 1)):
            continue
        candidates.append(lab)
    members = []
    for combo in itertools.combinations(candidates, slots):
        labels = tuple(sorted(forced + list(combo), key=Label.sort_key))
        if is_generalized_tilting(labels, alg):
            members.append(labels)
    members.sort(key=lambda m: [lab.sort_key() for lab in m])
    return TiltingPoset(members, [])


def _exchange_certificate(alg, x_lab, y_lab, common) -> bool:
    """Short exact sequence 0 -> X -> M' -> Y -> 0 with M' in add(common)?

    Uses the left add(common)-approximation of X; when the sequence
    exists the approximation is injective with cokernel Y plus summands
    from the common part.
    """
    x = canonical_module(alg, x_lab)
    summands = [canonical_module(alg, lab) for lab in sorted(set(common), key=Label.sort_key)]
    target, f = left_add_approximation(x, summands)
    if not is_mono(x, f):
        return False
    coker = cokernel_of_map(target, f)[0]
    labels = decompose_labels(coker)
    names = [str(lab) for lab in labels]
    if str(y_lab) not in names:
        return False
    names.remove(str(y_lab))
    allowed = {str(lab) for lab in common}
    return all(name in allowed for name in names)


def hasse_edges(poset: TiltingPoset, alg: Algebra) -> TiltingPoset:
    """Fill in exchange edges and, when the graph is a path, the chain."""
    members = poset.members
    edges = []
    for i, j in itertools.combinations(range(len(members)), 2):
        a = list(members[i])
        b = list(members[j])
        common = []
        rest_a = a.copy()
        rest_b = b.copy()
        for lab in a:
            match = next((m for m in rest_b if str(m) == str(lab)), None)
            if match is not None:
                rest_b.remove(match)
                rest_a.remove(lab)
                common.append(lab)
        if len(rest_a) != 1 or len(rest_b) != 1:
            continue
        x_lab, y_lab = rest_a[0], rest_b[0]
        if _exchange_certificate(alg, x_lab, y_lab, common) or _exchange_certificate(
            alg, y_lab, x_lab, common
        ):
            edges.append((i, j))
    chain = _chain_order(members, edges, alg)
    return TiltingPoset(members, sorted(edges), chain)


def _chain_order(members, edges, alg):
    """Member indices along the Hasse graph when it is a path, else None."""
    if not members:
        return None
    adj = {i: [] for i in range(len(members))}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    endpoints = [i for i in adj if len(adj[i]) == 1]
    if len(edges) != len(members) - 1 or len(endpoints) != 2:
        return None
    regular = tuple(
        sorted((canonical_label(alg, Label("P", v)) for v in range(1, alg.n + 1)),
               key=Label.sort_key)
    )
    start = endpoints[0]
    for e in endpoints:
        if tuple(str(l) for l in members[e]) != tuple(str(l) for l in regular):
            start = e
            break
    walk = [start]
    prev = None
    while len(walk) < len(members):
        nxt = [k for k in adj[walk[-1]] if k != prev]
        if len(nxt) != 1:
            return None
        prev = walk[-1]
        walk.append(nxt[0])
    return walk


def distinguishing_summands(poset: TiltingPoset) -> list[tuple[Label, ...]]:
    """Per member, the summands outside the common core of all members."""
    if not poset.members:
        return []
    core = set.intersection(*({str(lab) for lab in m} for m in poset.members))
    out = []
    for m in poset.members:
        extra = [lab for lab in m if str(lab) not in core]
        out.append(tuple(sorted(extra, key=Label.sort_key)))
    return out


def hasse_dot(poset: TiltingPoset) -> str:
    """Deterministic DOT rendering of the exchange graph."""
    names = ["+".join(str(lab) for lab in extra) or "regular"
             for extra in distinguishing_summands(poset)]
    lines = ["graph tilting_hasse {"]
    for name in sorted(names):
        lines.append(f'  "{name}";')
    rendered = sorted(tuple(sorted((names[i], names[j]))) for i, j in poset.edges)
    for a, b in rendered:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
