"""Module maps between representations and the linear systems behind them.

A map f: X -> Y is a tuple of matrices f_v of shape (dimX_v, dimY_v),
one per vertex, acting on row vectors; it is a module map when
R_X(arrow) @ f_target = f_source @ R_Y(arrow) for every arrow.  The
space of module maps is the kernel of one stacked exact linear system,
so Hom dimensions and bases come straight out of gf.kernel_basis.

Sub- and quotient representations are produced from invariant row
subspaces; the induced arrow matrices are the unique solutions of the
corresponding intertwining equations.
"""

from __future__ import annotations

import numpy as np

from . import gf
from .reps import Representation


def _require_same_algebra(x: Representation, y: Representation):
    if x.algebra is not y.algebra:
        raise ValueError("representations live over different algebras")


def _hom_system(x: Representation, y: Representation) -> tuple[np.ndarray, list[int]]:
    """Stacked commutation system; unknowns are the row-major entries of the f_v."""
    alg = x.algebra
    n = alg.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += x.dims[v] * y.dims[v]
    blocks = []
    for k, (s, t) in enumerate(alg.arrows):
        rows = x.dims[s] * y.dims[t]
        if rows == 0:
            continue
        block = gf.zeros(rows, total)
        # vec(R_x @ f_t) = (R_x kron I) vec(f_t)
        if x.dims[t] and y.dims[t]:
            block[:, offsets[t]: offsets[t] + x.dims[t] * y.dims[t]] = np.kron(
                x.mats[k], gf.eye(y.dims[t])
            )
        # vec(f_s @ R_y) = (I kron R_y^T) vec(f_s)
        if x.dims[s] and y.dims[s]:
            block[:, offsets[s]: offsets[s] + x.dims[s] * y.dims[s]] -= np.kron(
                gf.eye(x.dims[s]), y.mats[k].T
            )
        blocks.append(block % alg.field.p)
    system = np.vstack(blocks) if blocks else gf.zeros(0, total)
    return system, offsets


def _unvec(x: Representation, y: Representation, offsets, flat) -> tuple[np.ndarray, ...]:
    out = []
    for v in range(x.algebra.n):
        a, b = x.dims[v], y.dims[v]
        out.append(flat[offsets[v]: offsets[v] + a * b].reshape(a, b))
    return tuple(out)


def vec_map(f) -> np.ndarray:
    return np.concatenate([m.reshape(-1) for m in f]) if f else np.zeros(0, dtype=np.int64)


def hom_basis(x: Representation, y: Representation) -> list[tuple[np.ndarray, ...]]:
    """Basis of the space of module maps x -> y."""
    _require_same_algebra(x, y)
    system, offsets = _hom_system(x, y)
    if system.shape[1] == 0:
        return []
    return [_unvec(x, y, offsets, row) for row in gf.kernel_basis(x.algebra.field, system)]


def hom_dim(x: Representation, y: Representation) -> int:
    """Dimension of Hom(x, y); cached for repeated pairs."""
    _require_same_algebra(x, y)
    cache = x.algebra._homdim_cache
    key = (id(x), id(y))
    hit = cache.get(key)
    if hit is not None:
        return hit[0]
    system, _ = _hom_system(x, y)
    d = system.shape[1] - gf.rank(x.algebra.field, system)
    cache[key] = (d, x, y)  # keep refs so ids stay valid
    return d


def identity_map(x: Representation) -> tuple[np.ndarray, ...]:
    return tuple(gf.eye(d) for d in x.dims)


def zero_map(x: Representation, y: Representation) -> tuple[np.ndarray, ...]:
    return tuple(gf.zeros(a, b) for a, b in zip(x.dims, y.dims))


def compose(f, g, field) -> tuple[np.ndarray, ...]:
    """First f, then g."""
    return tuple((a @ b) % field.p for a, b in zip(f, g))


def scale_add(field, coeffs, maps) -> tuple[np.ndarray, ...]:
    """Linear combination sum(c * f) of map tuples."""
    out = None
    for c, f in zip(coeffs, maps):
        term = [(int(c) * m) % field.p for m in f]
        out = term if out is None else [(a + b) % field.p for a, b in zip(out, term)]
    return tuple(out)


def is_module_map(x: Representation, y: Representation, f) -> bool:
    p = x.algebra.field.p
    for k, (s, t) in enumerate(x.algebra.arrows):
        lhs = (x.mats[k] @ f[t]) % p
        rhs = (f[s] @ y.mats[k]) % p
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_mono(x: Representation, f) -> bool:
    field = x.algebra.field
    return all(gf.rank(field, f[v]) == x.dims[v] for v in range(x.algebra.n))


def is_epi(y: Representation, f) -> bool:
    field = y.algebra.field
    return all(gf.rank(field, f[v]) == y.dims[v] for v in range(y.algebra.n))


def is_invertible_map(x: Representation, y: Representation, f) -> bool:
    if x.dims != y.dims:
        return False
    field = x.algebra.field
    return all(gf.is_invertible(field, f[v]) for v in range(x.algebra.n))


def subrep_from_rows(m: Representation, rows) -> tuple[Representation, tuple[np.ndarray, ...]]:
    """Subrepresentation spanned by invariant row subspaces.

    rows[v] spans a subspace of k^{d_v}; the span must be closed under
    every arrow action.  Returns (sub, incl) with incl a mono into m.
    """
    alg = m.algebra
    field = alg.field
    basis = [gf.row_space(field, field.mat(rows[v]).reshape(-1, m.dims[v])) for v in range(alg.n)]
    dims = [b.shape[0] for b in basis]
    mats = []
    for k, (s, t) in enumerate(alg.arrows):
        mapped = (basis[s] @ m.mats[k]) % field.p
        if dims[t] == 0:
            if mapped.any():
                raise ValueError("row spaces are not closed under the arrow actions")
            sol = gf.zeros(dims[s], 0)
        else:
            sol = gf.solve_left(field, basis[t], mapped)
            if sol is None:
                raise ValueError("row spaces are not closed under the arrow actions")
        mats.append(sol)
    sub = Representation(alg, dims, mats)
    return sub, tuple(basis)


def quotient_by_rows(m: Representation, rows) -> tuple[Representation, tuple[np.ndarray, ...]]:
    """Quotient of m by the subrepresentation spanned by invariant rows.

    Returns (quot, proj) with proj an epi from m.
    """
    alg = m.algebra
    field = alg.field
    projs = [gf.quotient_map(field, field.mat(rows[v]).reshape(-1, m.dims[v]), m.dims[v]) for v in range(alg.n)]
    dims = [pi.shape[1] for pi in projs]
    mats = []
    for k, (s, t) in enumerate(alg.arrows):
        rhs = (m.mats[k] @ projs[t]) % field.p
        sol = gf.solve_matrix(field, projs[s], rhs)
        if sol is None:
            raise ValueError("row spaces are not closed under the arrow actions")
        mats.append(sol)
    quot = Representation(alg, dims, mats)
    return quot, tuple(projs)


def kernel_of_map(x: Representation, y: Representation, f) -> tuple[Representation, tuple[np.ndarray, ...]]:
    """Kernel subrepresentation of a module map, with its inclusion into x."""
    field = x.algebra.field
    rows = [gf.left_kernel(field, f[v]) for v in range(x.algebra.n)]
    return subrep_from_rows(x, rows)


def cokernel_of_map(y: Representation, f) -> tuple[Representation, tuple[np.ndarray, ...]]:
    """Cokernel of a module map into y, with the projection from y."""
    return quotient_by_rows(y, list(f))


def image_rows(y: Representation, f) -> list[np.ndarray]:
    field = y.algebra.field
    return [gf.row_space(field, f[v]) for v in range(y.algebra.n)]
