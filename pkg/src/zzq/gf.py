"""Exact dense linear algebra over a prime field GF(p).

Matrices are plain numpy integer arrays whose entries are the canonical
representatives 0..p-1.  Every routine reduces its output to the same
canonical form, and all arithmetic is exact: no tolerances exist
anywhere in this package.

Row-major dense storage throughout; everything here runs at desk scale
(matrices of a few hundred entries), so simplicity beats sparsity.  All
functions are pure and safe to call from concurrent workers.
"""

from __future__ import annotations

import numpy as np


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldPrime:
    """The prime field GF(p) with canonical representatives 0..p-1."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(int(p)):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = int(p)

    def __eq__(self, other):
        return isinstance(other, FieldPrime) and other.p == self.p

    def __hash__(self):
        return hash(("FieldPrime", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def mat(self, data) -> np.ndarray:
        """Coerce to a reduced int64 matrix."""
        a = np.asarray(data, dtype=np.int64)
        return a % self.p

    def inv_scalar(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(field: FieldPrime, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a @ b) % field.p


def rref(field: FieldPrime, m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).

    Returns (R, pivots) where R is fully reduced (pivots are 1, pivot
    columns are elsewhere 0) and pivots lists the pivot column indices.
    """
    p = field.p
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-dimensional array")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * field.inv_scalar(a[r, c])) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: FieldPrime, m) -> int:
    """Rank of m over GF(p) by exact row reduction."""
    a = np.asarray(m)
    if a.size == 0:
        return 0
    return len(rref(field, a)[1])


def kernel_basis(field: FieldPrime, m) -> np.ndarray:
    """Basis of the right null space {x : m @ x = 0}, one vector per row.

    The result has shape (cols - rank(m), cols).
    """
    a = np.asarray(m, dtype=np.int64) % field.p
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0 or not a.any():
        return eye(cols)
    r, pivots = rref(field, a)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % field.p
    return basis


def left_kernel(field: FieldPrime, m) -> np.ndarray:
    """Basis rows of {x : x @ m = 0}."""
    return kernel_basis(field, np.asarray(m).T)


def row_space(field: FieldPrime, m) -> np.ndarray:
    """Canonical (rref) basis rows of the row space of m."""
    a = np.asarray(m, dtype=np.int64) % field.p
    if a.shape[0] == 0:
        return zeros(0, a.shape[1])
    r, pivots = rref(field, a)
    return r[: len(pivots)]


def solve(field: FieldPrime, m, b):
    """Some x with m @ x = b, or None if the system is inconsistent."""
    a = np.asarray(m, dtype=np.int64) % field.p
    bv = np.asarray(b, dtype=np.int64) % field.p
    if bv.ndim != 1:
        raise ValueError("b must be a vector")
    if bv.shape[0] != a.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} rows vs b of length {bv.shape[0]}")
    x = solve_matrix(field, a, bv.reshape(-1, 1))
    return None if x is None else x[:, 0]


def solve_matrix(field: FieldPrime, a, b):
    """Some X with a @ X = b for a matrix right-hand side, or None."""
    a = np.asarray(a, dtype=np.int64) % field.p
    b = np.asarray(b, dtype=np.int64) % field.p
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    cols = a.shape[1]
    aug, pivots = rref(field, np.hstack([a, b]))
    for i, c in enumerate(pivots):
        if c >= cols:
            return None
    x = zeros(cols, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = aug[i, cols:]
    return x


def solve_left(field: FieldPrime, a, b):
    """Some X with X @ a = b, or None."""
    xt = solve_matrix(field, np.asarray(a).T, np.asarray(b).T)
    return None if xt is None else xt.T


def is_invertible(field: FieldPrime, m) -> bool:
    a = np.asarray(m)
    if a.shape[0] != a.shape[1]:
        return False
    return rank(field, a) == a.shape[0]


def inverse(field: FieldPrime, m):
    """Inverse of a square matrix, or None if singular."""
    a = np.asarray(m, dtype=np.int64) % field.p
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    x = solve_matrix(field, a, eye(n))
    if x is None or rank(field, a) < n:
        return None
    return x


def quotient_map(field: FieldPrime, sub_rows, dim: int) -> np.ndarray:
    """Projection matrix pi (dim x t) onto a complement of a row subspace.

    sub_rows spans a subspace S of k^dim; pi maps row vectors to their
    classes in k^dim / S, written in the coordinates of the non-pivot
    positions of the canonical basis of S.  Rows of S map to zero, and
    the indicator rows of the free positions are lifts of the standard
    basis of the quotient.
    """
    sub = np.asarray(sub_rows, dtype=np.int64).reshape(-1, dim) % field.p
    r, pivots = rref(field, sub) if sub.size else (zeros(0, dim), [])
    free = [c for c in range(dim) if c not in pivots]
    pi = zeros(dim, len(free))
    for j, f in enumerate(free):
        pi[f, j] = 1
        for i, c in enumerate(pivots):
            pi[c, j] = (-r[i, f]) % field.p
    return pi


def quotient_lifts(field: FieldPrime, sub_rows, dim: int) -> np.ndarray:
    """Rows of k^dim lifting the standard basis through quotient_map."""
    sub = np.asarray(sub_rows, dtype=np.int64).reshape(-1, dim) % field.p
    pivots = rref(field, sub)[1] if sub.size else []
    free = [c for c in range(dim) if c not in pivots]
    lifts = zeros(len(free), dim)
    for j, f in enumerate(free):
        lifts[j, f] = 1
    return lifts
