"""The catalog of indecomposables, isomorphism tests and decomposition.

Over the line-graph algebras the indecomposable modules are the simples,
the indecomposable projectives and the four string families; the kinds
A, B, C carry n(n+1), n(n+1)-1 and n(n+1)-2 of them.  The catalog holds
one canonical representative per class, certified indecomposable by an
exhaustive check that its endomorphism ring is local, and pairwise
non-isomorphic by invertible-hom search.

Krull-Schmidt decomposition is computed from Hom dimension counts: for
M = sum of X_b^(m_b) the vector h with h_a = dim Hom(X_a, M) equals
H @ m where H is the catalog's Hom dimension matrix.  H is invertible
for every algebra handled here (checked exactly at build time), so the
multiplicity vector is the unique solution of an integer linear system;
no splitting maps are ever searched for.  An independent Fitting-style
splitter is kept alongside as a cross-check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import gf
from .algebra import KIND_A, KIND_B, KIND_C, LEAF_KINDS, Algebra
from .maps import hom_basis, hom_dim, scale_add, subrep_from_rows
from .reps import Label, Representation, canonical_module, zero_rep

ENUM_BOUND = 4096
SAMPLE_TRIES = 256


class UndecidableIsomorphismError(RuntimeError):
    """Both search budgets exhausted without a verdict."""


class UndecidableDecompositionError(RuntimeError):
    """No consistent multiplicity vector over the catalog."""


def catalog_labels(alg: Algebra) -> list[Label]:
    """All catalog labels of the algebra, in canonical label order."""
    if alg.kind not in LEAF_KINDS:
        raise ValueError("catalog exists for kinds A, B, C only")
    n = alg.n
    labels = [Label("L", v) for v in range(1, n + 1)]
    if alg.kind == KIND_A:
        proj = range(1, n + 1)
    elif alg.kind == KIND_B:
        proj = range(1, n)
    else:
        proj = range(2, n)
    labels += [Label("P", v) for v in proj]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (j - i) % 2 == 0:
                labels += [Label("M", i, j), Label("W", i, j)]
            else:
                labels += [Label("N", i, j), Label("S", i, j)]
    return sorted(labels, key=Label.sort_key)


class Catalog:
    """All indecomposables of a leaf-quotient algebra, with lookup tables."""

    def __init__(self, alg: Algebra, entries: list[tuple[Label, Representation]]):
        self.algebra = alg
        self.entries = entries
        self.labels = [lab for lab, _ in entries]
        self.reps = [rep for _, rep in entries]
        self.by_label = {str(lab): rep for lab, rep in entries}
        self.by_dimvec: dict[tuple[int, ...], list[int]] = {}
        for k, (_, rep) in enumerate(entries):
            self.by_dimvec.setdefault(rep.dims, []).append(k)
        self._hom_matrix = None
        self._hom_inverse = None

    def __len__(self):
        return len(self.entries)

    def lookup(self, lab: Label) -> Representation:
        rep = self.by_label.get(str(lab))
        if rep is None:
            raise KeyError(f"{lab} is not a catalog label of {self.algebra}")
        return rep

    def hom_matrix(self) -> np.ndarray:
        """H[a, b] = dim Hom(X_a, X_b) over the catalog."""
        if self._hom_matrix is None:
            m = len(self.entries)
            h = np.zeros((m, m), dtype=np.int64)
            for a in range(m):
                for b in range(m):
                    h[a, b] = hom_dim(self.reps[a], self.reps[b])
            self._hom_matrix = h
        return self._hom_matrix

    def _inverse_rows(self):
        if self._hom_inverse is None:
            h = self.hom_matrix()
            inv = _invert_exact([[int(x) for x in row] for row in h])
            if inv is None:
                raise UndecidableDecompositionError(
                    "catalog Hom dimension matrix is singular; multiplicity solve unavailable"
                )
            self._hom_inverse = inv
        return self._hom_inverse

    def multiplicities(self, m: Representation) -> list[int]:
        """Multiplicity of each catalog entry in the decomposition of m."""
        h = [hom_dim(rep, m) for rep in self.reps]
        inv = self._inverse_rows()
        mult = []
        for row in inv:
            val = sum(c * x for c, x in zip(row, h))
            if val.denominator != 1 or val < 0:
                raise UndecidableDecompositionError(
                    f"no nonnegative integer multiplicity vector for dims {m.dims}"
                )
            mult.append(int(val))
        check = [0] * self.algebra.n
        for k, cnt in enumerate(mult):
            for v in range(self.algebra.n):
                check[v] += cnt * self.reps[k].dims[v]
        if tuple(check) != m.dims:
            raise UndecidableDecompositionError(
                f"multiplicity vector does not reproduce the dimension vector {m.dims}"
            )
        return mult


def _invert_exact(rows: list[list[int]]):
    """Exact inverse of an integer matrix over the rationals, or None."""
    m = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(rows)]
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            return None
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return [row[m:] for row in a]


def catalog(alg: Algebra, certify: bool = True) -> Catalog:
    """Build (once) and return the algebra's catalog.

    With certify=True every entry is checked to satisfy the algebra
    relations and to have a local endomorphism ring, and entries sharing
    a dimension vector are checked pairwise non-isomorphic.
    """
    if alg._catalog is not None:
        return alg._catalog
    from .reps import satisfies_relations

    alg._building_catalog = True
    try:
        entries = [(lab, canonical_module(alg, lab)) for lab in catalog_labels(alg)]
        cat = Catalog(alg, entries)
        if certify:
            for lab, rep in entries:
                if not satisfies_relations(rep):
                    raise AssertionError(f"{lab} violates the algebra relations")
                if not _endo_ring_is_local(rep):
                    raise AssertionError(f"{lab} is not indecomposable")
            for idxs in cat.by_dimvec.values():
                for a, b in itertools.combinations(idxs, 2):
                    if is_isomorphic(cat.reps[a], cat.reps[b]):
                        raise AssertionError(
                            f"catalog entries {cat.labels[a]} and {cat.labels[b]} are isomorphic"
                        )
        alg._catalog = cat
    finally:
        alg._building_catalog = False
    return alg._catalog


# -- isomorphism -------------------------------------------------------

def _nonzero_coefficient_vectors(p: int, d: int):
    for coeffs in itertools.product(range(p), repeat=d):
        if any(coeffs):
            yield coeffs


def _search_invertible(x, y, basis, seed: int):
    """Invertible element of Hom(x, y): exhaustive when small, else sampled."""
    field = x.algebra.field
    d = len(basis)
    if field.p ** d <= ENUM_BOUND:
        for coeffs in _nonzero_coefficient_vectors(field.p, d):
            f = scale_add(field, coeffs, basis)
            if all(gf.is_invertible(field, f[v]) for v in range(x.algebra.n)):
                return True
        return False
    rng = np.random.default_rng(seed)
    for _ in range(SAMPLE_TRIES):
        coeffs = rng.integers(0, field.p, size=d)
        if not coeffs.any():
            continue
        f = scale_add(field, coeffs, basis)
        if all(gf.is_invertible(field, f[v]) for v in range(x.algebra.n)):
            return True
    return None  # inconclusive


def is_isomorphic(x: Representation, y: Representation, seed: int = 0) -> bool:
    """Module isomorphism test: search for an everywhere-invertible hom.

    The Hom space is enumerated exhaustively when it has at most 4096
    elements, otherwise sampled; an inconclusive sample falls back to
    comparing Krull-Schmidt label multisets when a catalog is available.
    """
    if x.algebra is not y.algebra:
        raise ValueError("representations live over different algebras")
    if x.dims != y.dims:
        return False
    if x.total_dim == 0:
        return True
    basis = hom_basis(x, y)
    if not basis:
        return False
    verdict = _search_invertible(x, y, basis, seed)
    if verdict is not None:
        return verdict
    alg = x.algebra
    if alg.kind in LEAF_KINDS and not getattr(alg, "_building_catalog", False):
        return decompose_labels(x) == decompose_labels(y)
    raise UndecidableIsomorphismError(
        f"isomorphism search exhausted for dims {x.dims} (Hom dimension {len(basis)})"
    )


# -- decomposition -----------------------------------------------------

def decompose_labels(m: Representation) -> list[Label]:
    """Sorted catalog labels of the indecomposable summands of m, with multiplicity."""
    cat = catalog(m.algebra)
    mult = cat.multiplicities(m)
    out = []
    for k, cnt in enumerate(mult):
        out.extend([cat.labels[k]] * cnt)
    return sorted(out, key=Label.sort_key)


def decompose(m: Representation) -> list[Representation]:
    """Krull-Schmidt decomposition, as canonical catalog representatives."""
    cat = catalog(m.algebra)
    return [cat.lookup(lab) for lab in decompose_labels(m)]


def is_indecomposable(m: Representation) -> bool:
    return len(decompose_labels(m)) == 1


def identify(m: Representation):
    """The unique catalog label isomorphic to an indecomposable m, or None."""
    try:
        labels = decompose_labels(m)
    except UndecidableDecompositionError:
        return None
    if len(labels) != 1:
        raise ValueError(f"module with dims {m.dims} is not indecomposable: {list(map(str, labels))}")
    return labels[0]


def canonical_label(alg: Algebra, lab: Label) -> Label:
    """Resolve a label (possibly an alias like Delta, T or I) to its catalog label."""
    return identify(canonical_module(alg, lab))


# -- independent Fitting-style splitter --------------------------------

def _endo_power(field, f, n_power):
    out = list(f)
    for _ in range(n_power - 1):
        out = [(a @ b) % field.p for a, b in zip(out, f)]
    return tuple(out)


def _fitting_split(m: Representation, f):
    """Split m along ker(f^N) and im(f^N); None when the split is trivial."""
    field = m.algebra.field
    n = m.algebra.n
    power = _endo_power(field, f, max(m.total_dim, 1))
    ker_rows = [gf.left_kernel(field, power[v]) for v in range(n)]
    im_rows = [gf.row_space(field, power[v]) for v in range(n)]
    kdim = sum(r.shape[0] for r in ker_rows)
    if kdim == 0 or kdim == m.total_dim:
        return None
    ker, _ = subrep_from_rows(m, ker_rows)
    im, _ = subrep_from_rows(m, im_rows)
    return ker, im


def _endo_ring_is_local(m: Representation, bound: int = ENUM_BOUND) -> bool:
    """Exhaustive check that every endomorphism is nilpotent or invertible."""
    field = m.algebra.field
    basis = hom_basis(m, m)
    if field.p ** len(basis) > bound:
        raise UndecidableDecompositionError(
            f"endomorphism ring too large to enumerate (dim {len(basis)})"
        )
    n = m.algebra.n
    for coeffs in _nonzero_coefficient_vectors(field.p, len(basis)):
        f = scale_add(field, coeffs, basis)
        if all(gf.is_invertible(field, f[v]) for v in range(n)):
            continue
        power = _endo_power(field, f, max(m.total_dim, 1))
        if any(power[v].any() for v in range(n)):
            return False
    return True


def decompose_by_splitting(m: Representation, bound: int = ENUM_BOUND) -> list[Representation]:
    """Decomposition by repeated Fitting splits along endomorphisms.

    Tries the basis endomorphisms and their pairwise sums, then falls
    back to exhaustive enumeration of the endomorphism ring while it has
    at most `bound` elements.  Independent of the catalog; used as a
    cross-check of the Hom-count decomposition and for algebras of
    general graphs.
    """
    if m.total_dim == 0:
        return []
    field = m.algebra.field
    basis = hom_basis(m, m)
    candidates = list(basis)
    candidates += [
        scale_add(field, (1, 1), (basis[a], basis[b]))
        for a in range(len(basis))
        for b in range(a + 1, len(basis))
    ]
    split = None
    for f in candidates:
        split = _fitting_split(m, f)
        if split is not None:
            break
    if split is None:
        if _endo_ring_is_local(m, bound):
            return [m]
        for coeffs in _nonzero_coefficient_vectors(field.p, len(basis)):
            f = scale_add(field, coeffs, basis)
            split = _fitting_split(m, f)
            if split is not None:
                break
        if split is None:
            raise UndecidableDecompositionError("endomorphism ring is not local but no split found")
    ker, im = split
    return decompose_by_splitting(ker, bound) + decompose_by_splitting(im, bound)
