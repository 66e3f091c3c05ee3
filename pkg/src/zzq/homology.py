"""Radical layers, projective covers, syzygies, resolutions and Ext.

The radical of a representation is the sum of the images of all arrow
actions, the socle the joint kernel; tops and socles of these algebras
are semisimple with zero arrow action.  A minimal projective cover is
assembled from one copy of P(v) per top multiplicity, the epimorphism
lifting chosen top representatives through the path structure of each
P(v); its kernel is the syzygy.  Iterating gives the minimal projective
resolution, whose termination status distinguishes finite projective
dimension from the periodic (infinite) case: over a representation
finite algebra every syzygy is a sum of catalog modules, so a repeated
summand multiset certifies periodicity.

Ext^k(X, Y) is the k-th cohomology of Hom(P_., Y) over the minimal
resolution P_. of X; with minimal resolutions Ext^k(X, L(v)) equals the
multiplicity of P(v) in the k-th term, which the tests use as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf
from .algebra import Algebra
from .catalog import decompose_labels
from .maps import hom_basis, hom_dim, subrep_from_rows, vec_map
from .reps import (
    Label,
    Representation,
    direct_sum_with_blocks,
    dual_star,
    path_matrix,
    projective_with_paths,
    zero_rep,
)

INFINITE = float("inf")


class InsufficientDepthError(RuntimeError):
    """A resolution was truncated before the depth an Ext computation needs."""


@dataclass
class Layers:
    radical: Representation
    radical_incl: tuple
    top: Representation
    top_proj: tuple
    socle: Representation
    socle_incl: tuple


def _radical_rows(m: Representation) -> list[np.ndarray]:
    alg = m.algebra
    rows = []
    for v in range(alg.n):
        incoming = [m.mats[k] for k, (s, t) in enumerate(alg.arrows) if t == v and m.dims[s]]
        stacked = np.vstack(incoming) if incoming else gf.zeros(0, m.dims[v])
        rows.append(gf.row_space(alg.field, stacked))
    return rows


def _socle_rows(m: Representation) -> list[np.ndarray]:
    alg = m.algebra
    rows = []
    for v in range(alg.n):
        outgoing = [m.mats[k] for k, (s, t) in enumerate(alg.arrows) if s == v and m.dims[t]]
        if not outgoing:
            rows.append(gf.eye(m.dims[v]))
            continue
        rows.append(gf.left_kernel(alg.field, np.hstack(outgoing)))
    return rows


def layers(m: Representation) -> Layers:
    """Radical, top and socle of m, with the connecting maps."""
    from .maps import quotient_by_rows

    rad_rows = _radical_rows(m)
    radical, incl = subrep_from_rows(m, rad_rows)
    top, proj = quotient_by_rows(m, rad_rows)
    soc_rows = _socle_rows(m)
    socle, socle_incl = subrep_from_rows(m, soc_rows)
    return Layers(radical, incl, top, proj, socle, socle_incl)


def top_dims(m: Representation) -> tuple[int, ...]:
    rad = _radical_rows(m)
    return tuple(m.dims[v] - rad[v].shape[0] for v in range(m.algebra.n))


def _projective_parts(alg: Algebra, v: int):
    cache = getattr(alg, "_proj_parts", None)
    if cache is None:
        cache = {}
        alg._proj_parts = cache
    if v not in cache:
        cache[v] = projective_with_paths(alg, v)
    return cache[v]


def projective_cover(m: Representation):
    """Minimal projective cover (P, epi) of m.

    P is the sum of one P(v) per top multiplicity at v; the epimorphism
    sends the generator of each copy to a lift of the corresponding top
    basis vector and follows the path structure of P(v) elsewhere, so
    its kernel lies in the radical of P.  The zero module gets the empty
    cover.  Also returns the summand labels of P.
    """
    alg = m.algebra
    field = alg.field
    rad_rows = _radical_rows(m)
    parts = []
    part_data = []  # (vertex v0, lift row)
    for v in range(alg.n):
        lifts = gf.quotient_lifts(field, rad_rows[v], m.dims[v])
        if lifts.shape[0] == 0:
            continue
        rep_v, slots_v, paths_v = _projective_parts(alg, v + 1)
        for c in range(lifts.shape[0]):
            parts.append(rep_v)
            part_data.append((v, lifts[c], slots_v, paths_v))
    cover, offsets = direct_sum_with_blocks(parts, alg)
    epi = [gf.zeros(cover.dims[w], m.dims[w]) for w in range(alg.n)]
    for (v, ell, slots_v, paths_v), off in zip(part_data, offsets):
        for w in range(alg.n):
            for r, b in enumerate(slots_v[w]):
                img = (ell @ path_matrix(m, paths_v[b], start_vertex=v)) % field.p
                epi[w][off[w] + r] = img
    labels = [Label("P", v + 1) for (v, _, _, _) in part_data]
    return cover, tuple(epi), labels


def syzygy(m: Representation) -> Representation:
    """Kernel of the minimal projective cover of m."""
    return _syzygy_with_inclusion(m)[0]


def _syzygy_with_inclusion(m: Representation):
    cover, epi, labels = projective_cover(m)
    field = m.algebra.field
    rows = [gf.left_kernel(field, epi[v]) for v in range(m.algebra.n)]
    ker, incl = subrep_from_rows(cover, rows)
    return ker, incl, cover, epi, labels


@dataclass
class Resolution:
    """Minimal projective resolution data.

    terms[k] is the multiset of projective labels of the k-th term,
    term_reps[k] its representation, diffs[0] the cover epi onto the
    module and diffs[k] (k >= 1) the differential term k -> term k-1;
    consecutive differentials compose to zero and every kernel lies in
    the radical of its cover.  status is "finite" (pd set), "periodic"
    (period and preperiod set: the preperiod-th syzygy recurs period
    steps later) or "truncated" (k_max reached undecided).
    """

    module: Representation
    terms: list[list[Label]]
    term_reps: list[Representation]
    diffs: list[tuple]
    status: str
    k_max: int
    pd: int | None = None
    preperiod: int | None = None
    period: int | None = None

    @property
    def depth(self) -> int:
        return len(self.terms) - 1


def resolution(m: Representation, k_max: int) -> Resolution:
    """Iterate minimal covers and syzygies for up to k_max steps."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if m.total_dim == 0:
        return Resolution(m, [], [], [], "finite", k_max, pd=-1)
    terms: list[list[Label]] = []
    term_reps: list[Representation] = []
    diffs: list[tuple] = []
    status = None
    preperiod = period = None
    seen: dict[tuple, int] = {}
    omega = m
    incl = None
    step = 0
    fingerprint = tuple(str(lab) for lab in decompose_labels(m))
    seen[fingerprint] = 0
    while True:
        ker, ker_incl, cover, epi, labels = _syzygy_with_inclusion(omega)
        if incl is None:
            diff = epi
        else:
            diff = tuple((epi[v] @ incl[v]) % m.algebra.field.p for v in range(m.algebra.n))
        terms.append(labels)
        term_reps.append(cover)
        diffs.append(diff)
        if ker.total_dim == 0:
            return Resolution(
                m, terms, term_reps, diffs,
                "finite", k_max, pd=step,
                preperiod=preperiod, period=period,
            )
        if status is None:
            fingerprint = tuple(str(lab) for lab in decompose_labels(ker))
            if fingerprint in seen:
                status = "periodic"
                preperiod = seen[fingerprint]
                period = step + 1 - seen[fingerprint]
            else:
                seen[fingerprint] = step + 1
        if step == k_max:
            return Resolution(
                m, terms, term_reps, diffs,
                status or "truncated", k_max,
                preperiod=preperiod, period=period,
            )
        omega = ker
        incl = ker_incl
        step += 1


def _resolution_to_depth(m: Representation, depth: int, k_max: int | None = None) -> Resolution:
    """Cached resolution with at least `depth` terms (or terminated)."""
    alg = m.algebra
    auto = k_max is None
    if auto:
        k_max = max(4 * alg.n + 2, depth)
    if not auto:
        res = resolution(m, k_max)
    else:
        cached = alg._res_cache.get(id(m))
        res = cached[0] if cached else None
        if res is None or (res.status != "finite" and res.depth < min(depth, k_max)):
            res = resolution(m, k_max)
            alg._res_cache[id(m)] = (res, m)
    if res.status == "truncated" and res.depth < depth:
        raise InsufficientDepthError(
            f"resolution truncated at depth {res.depth}, need {depth}; raise k_max"
        )
    return res


def projective_dimension(m: Representation, k_max: int | None = None):
    """Projective dimension: an int, INFINITE, or None when undecided."""
    if m.total_dim == 0:
        return -1
    res = _resolution_to_depth(m, 1, k_max) if k_max is not None else _resolution_to_depth(m, 1)
    if res.status == "finite":
        return res.pd
    if res.status == "periodic":
        return INFINITE
    return None


def ext_dim(x: Representation, y: Representation, k: int, k_max: int | None = None) -> int:
    """dim Ext^k(x, y) from the minimal resolution of x; k = 0 gives Hom."""
    if x.algebra is not y.algebra:
        raise ValueError("representations live over different algebras")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return hom_dim(x, y)
    if x.total_dim == 0 or y.total_dim == 0:
        return 0
    cache = x.algebra._ext_cache
    key = (id(x), id(y), k, k_max)
    hit = cache.get(key)
    if hit is not None:
        return hit[0]
    res = _resolution_to_depth(x, k + 1, k_max)
    top = res.depth
    if k > top:
        val = 0
    else:
        basis_k = hom_basis(res.term_reps[k], y)
        rank_out = 0
        if k + 1 <= top:
            rows = [
                vec_map(tuple((res.diffs[k + 1][v] @ f[v]) % x.algebra.field.p
                              for v in range(x.algebra.n)))
                for f in basis_k
            ]
            if rows:
                rank_out = gf.rank(x.algebra.field, np.vstack(rows))
        basis_prev = hom_basis(res.term_reps[k - 1], y)
        rank_in = 0
        rows = [
            vec_map(tuple((res.diffs[k][v] @ f[v]) % x.algebra.field.p
                          for v in range(x.algebra.n)))
            for f in basis_prev
        ]
        if rows:
            rank_in = gf.rank(x.algebra.field, np.vstack(rows))
        val = len(basis_k) - rank_out - rank_in
    cache[key] = (val, x, y)
    return val


def injective_envelope(m: Representation):
    """Injective envelope (I, mono) of m, via duality from the cover."""
    d = dual_star(m)
    cover, epi, labels = projective_cover(d)
    env = dual_star(cover)
    mono = tuple(epi[v].T for v in range(m.algebra.n))
    return env, mono, [Label("I", lab.i) for lab in labels]
