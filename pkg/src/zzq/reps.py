"""Representations of the doubled quiver and the named module families.

A representation assigns a space k^{d_v} to every vertex and a matrix to
every arrow, of shape (d_source, d_target).  Module elements are row
vectors and arrows act on the right, x -> x @ mat, along the arrow; a
path acts by the product of its arrow matrices in path order.  A
representation is a module over the algebra exactly when every defining
relation evaluates to the zero matrix.

String modules here live on an interval [i, j] of vertices with a
one-dimensional space at each; the module structure is fixed by the set
of "peaks", the vertices whose arrows act by identity onto both
neighbours inside the interval.  The four families are

    M(i,j): peaks at i+1, i+3, ..., j-1      (i = j mod 2)
    N(i,j): peaks at i+1, i+3, ..., j        (i != j mod 2)
    W(i,j): peaks at i, i+2, ..., j          (i = j mod 2)
    S(i,j): peaks at i, i+2, ..., j-1        (i != j mod 2)

so the top of the module is the sum of the simples at the peaks and the
socle sits at the remaining support.  The simple preserving duality
transposes every matrix and swaps each arrow with its reverse; it fixes
the simples, swaps M with W and N with S, and exchanges projectives
with injectives.

The standard module Delta(v) is defined structurally as the length-two
string with top L(v) and socle L(v-1), so Delta(v) = N(v-1, v) and its
dual Nabla(v) = S(v-1, v); Delta(1) = Nabla(1) = L(1).  (The reverse
assignment of the family names to Delta/Nabla appears in parts of the
literature; the two conventions differ by the duality and everything
verified here is symmetric under it.)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import gf
from .algebra import KIND_C, LEAF_KINDS, Algebra, UnsupportedKindError


class Representation:
    """Immutable quiver representation over a fixed algebra."""

    __slots__ = ("algebra", "dims", "mats")

    def __init__(self, algebra: Algebra, dims, mats):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n:
            raise ValueError(f"expected {algebra.n} vertex dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError("vertex dimensions must be nonnegative")
        frozen = []
        for k, (s, t) in enumerate(algebra.arrows):
            m = algebra.field.mat(mats[k])
            if m.shape != (self.dims[s], self.dims[t]):
                raise ValueError(
                    f"arrow {k} matrix has shape {m.shape}, expected {(self.dims[s], self.dims[t])}"
                )
            m.flags.writeable = False
            frozen.append(m)
        if len(frozen) != len(algebra.arrows):
            raise ValueError("one matrix per arrow required")
        self.mats = tuple(frozen)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __repr__(self):
        return f"<Rep {self.algebra.kind}_{self.algebra.n} dims={self.dims}>"


def zero_rep(alg: Algebra) -> Representation:
    dims = [0] * alg.n
    mats = [gf.zeros(0, 0) for _ in alg.arrows]
    return Representation(alg, dims, mats)


def path_matrix(rep: Representation, path, start_vertex: int | None = None) -> np.ndarray:
    """Matrix of a path (sequence of arrow indices) acting on rep."""
    if len(path) == 0:
        if start_vertex is None:
            raise ValueError("empty path needs a start vertex")
        return gf.eye(rep.dims[start_vertex])
    m = rep.mats[path[0]]
    for k in path[1:]:
        m = (m @ rep.mats[k]) % rep.algebra.field.p
    return m


def satisfies_relations(rep: Representation) -> bool:
    """True when every defining relation of the algebra vanishes on rep."""
    p = rep.algebra.field.p
    for rel in rep.algebra.relations:
        acc = None
        for coeff, path in rel:
            term = (coeff * path_matrix(rep, path)) % p
            acc = term if acc is None else (acc + term) % p
        if acc is not None and acc.any():
            return False
    return True


def assert_valid(rep: Representation) -> Representation:
    if not satisfies_relations(rep):
        raise AssertionError("representation violates the algebra relations")
    return rep


# -- labels ------------------------------------------------------------

_FAMILIES_ONE = ("L", "P", "I", "Delta", "Nabla", "T")
_FAMILIES_TWO = ("M", "N", "W", "S")
_FAMILY_ORDER = {f: k for k, f in enumerate(("L", "P", "I", "M", "N", "W", "S", "Delta", "Nabla", "T"))}
_LABEL_RE = re.compile(r"^(L|P|I|M|N|W|S|Delta|Nabla|T)\((\d+)(?:,(\d+))?\)$")


@dataclass(frozen=True)
class Label:
    """Symbolic name of a module: family tag plus one or two 1-based indices."""

    family: str
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.family in _FAMILIES_ONE:
            if self.j is not None:
                raise ValueError(f"{self.family} takes one index")
        elif self.family in _FAMILIES_TWO:
            if self.j is None:
                raise ValueError(f"{self.family} takes two indices")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def __str__(self):
        if self.j is None:
            return f"{self.family}({self.i})"
        return f"{self.family}({self.i},{self.j})"

    def sort_key(self):
        return (_FAMILY_ORDER[self.family], self.i, self.j if self.j is not None else -1)


def parse_label(text: str) -> Label:
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed label {text!r}")
    fam, i, j = m.group(1), int(m.group(2)), m.group(3)
    return Label(fam, i, None if j is None else int(j))


def check_label(alg: Algebra, lab: Label) -> Label:
    """Validate index constraints of a label against an algebra."""
    if alg.kind not in LEAF_KINDS:
        raise UnsupportedKindError("named modules need a line-graph algebra")
    n = alg.n
    if lab.j is None:
        if not 1 <= lab.i <= n:
            raise ValueError(f"{lab}: index out of range 1..{n}")
    else:
        if not 1 <= lab.i < lab.j <= n:
            raise ValueError(f"{lab}: need 1 <= i < j <= {n}")
        same_parity = (lab.i - lab.j) % 2 == 0
        if lab.family in ("M", "W") and not same_parity:
            raise ValueError(f"{lab}: indices must agree mod 2")
        if lab.family in ("N", "S") and same_parity:
            raise ValueError(f"{lab}: indices must differ mod 2")
    return lab


# -- constructions -----------------------------------------------------

def simple_rep(alg: Algebra, v: int) -> Representation:
    """The simple module L(v), one-dimensional at vertex v (1-based)."""
    dims = [1 if u == v - 1 else 0 for u in range(alg.n)]
    mats = [gf.zeros(dims[s], dims[t]) for s, t in alg.arrows]
    return Representation(alg, dims, mats)


def string_rep(alg: Algebra, i: int, j: int, peaks) -> Representation:
    """String module on the interval [i, j] with the given peak vertices."""
    peaks = set(peaks)
    dims = [1 if i <= u + 1 <= j else 0 for u in range(alg.n)]
    mats = []
    for k, (s, t) in enumerate(alg.arrows):
        m = gf.zeros(dims[s], dims[t])
        if dims[s] and dims[t] and (s + 1) in peaks:
            m[0, 0] = 1
        mats.append(m)
    return Representation(alg, dims, mats)


def projective_with_paths(alg: Algebra, v: int):
    """The right module e_v * alg on its path basis.

    Returns (rep, slots, gen_paths) where slots[u] lists the algebra
    basis indices sitting at vertex u and gen_paths maps each of those
    to the arrow path reaching it from the generator e_v.
    """
    if not 1 <= v <= alg.n:
        raise ValueError(f"vertex {v} out of range 1..{alg.n}")
    v0 = v - 1
    slots = [[] for _ in range(alg.n)]
    gen_paths = {}
    for b in range(alg.dim):
        if alg.source[b] != v0:
            continue
        slots[alg.target[b]].append(b)
        tag, x = alg.basis[b]
        if tag == "e":
            gen_paths[b] = ()
        elif tag == "arrow":
            gen_paths[b] = (x,)
        else:
            # loop: realized by the first two-cycle at v in arrow order
            for k, (s, t) in enumerate(alg.arrows):
                if s == v0 and alg.arrows[alg.reverse_arrow[k]] == (t, s):
                    gen_paths[b] = (k, alg.reverse_arrow[k])
                    break
    for u in range(alg.n):
        slots[u].sort()
    dims = [len(slots[u]) for u in range(alg.n)]
    pos = {b: (alg.target[b], r) for u in range(alg.n) for r, b in enumerate(slots[u])}
    mats = []
    for k, (s, t) in enumerate(alg.arrows):
        m = gf.zeros(dims[s], dims[t])
        for b in slots[s]:
            prod = alg.mult.get((b, alg.idx_arrow[k]))
            if not prod:
                continue
            for b2, c in prod:
                m[pos[b][1], pos[b2][1]] = c % alg.field.p
        mats.append(m)
    return Representation(alg, dims, mats), slots, gen_paths


def projective_rep(alg: Algebra, v: int) -> Representation:
    return projective_with_paths(alg, v)[0]


def dual_star(m: Representation) -> Representation:
    """Simple preserving duality: transpose matrices along the arrow swap.

    Applying it twice returns an identical representation, and it sends
    the projective cover of a simple to its injective envelope.
    """
    alg = m.algebra
    mats = [m.mats[alg.reverse_arrow[k]].T for k in range(len(alg.arrows))]
    return Representation(alg, m.dims, mats)


def twist_alpha(m: Representation) -> Representation:
    """Relabel a kind C representation along the flip i -> n+1-i."""
    alg = m.algebra
    if alg.kind != KIND_C:
        raise UnsupportedKindError("the flip twist exists for kind C only")
    n = alg.n
    arrow_of = {(s, t): k for k, (s, t) in enumerate(alg.arrows)}
    dims = [m.dims[n - 1 - u] for u in range(n)]
    mats = []
    for s, t in alg.arrows:
        mats.append(m.mats[arrow_of[(n - 1 - s, n - 1 - t)]])
    return Representation(alg, dims, mats)


def direct_sum_with_blocks(parts, algebra: Algebra | None = None):
    """Block-diagonal sum; also returns per-part row offsets at each vertex."""
    if not parts:
        if algebra is None:
            raise ValueError("empty direct sum needs an explicit algebra")
        return zero_rep(algebra), []
    alg = parts[0].algebra
    if algebra is not None and algebra is not alg:
        raise ValueError("parts live over a different algebra")
    for q in parts:
        if q.algebra is not alg:
            raise ValueError("all parts must share one algebra")
    offsets = []
    running = [0] * alg.n
    for q in parts:
        offsets.append(tuple(running))
        running = [running[u] + q.dims[u] for u in range(alg.n)]
    dims = running
    mats = []
    for k, (s, t) in enumerate(alg.arrows):
        m = gf.zeros(dims[s], dims[t])
        for q, off in zip(parts, offsets):
            m[off[s]: off[s] + q.dims[s], off[t]: off[t] + q.dims[t]] = q.mats[k]
        mats.append(m)
    return Representation(alg, dims, mats), offsets


def direct_sum(parts, algebra: Algebra | None = None) -> Representation:
    return direct_sum_with_blocks(list(parts), algebra)[0]


# -- the named catalog families ---------------------------------------

def canonical_module(alg: Algebra, lab: Label) -> Representation:
    """Build the representation a label names; results are cached per algebra."""
    check_label(alg, lab)
    key = str(lab)
    cached = alg._module_cache.get(key)
    if cached is not None:
        return cached
    fam, i, j = lab.family, lab.i, lab.j
    if fam == "L":
        rep = simple_rep(alg, i)
    elif fam == "P":
        rep = projective_rep(alg, i)
    elif fam == "I":
        rep = dual_star(projective_rep(alg, i))
    elif fam == "M":
        rep = string_rep(alg, i, j, range(i + 1, j, 2))
    elif fam == "N":
        rep = string_rep(alg, i, j, range(i + 1, j + 1, 2))
    elif fam == "W":
        rep = string_rep(alg, i, j, range(i, j + 1, 2))
    elif fam == "S":
        rep = string_rep(alg, i, j, range(i, j, 2))
    elif fam == "Delta":
        rep = simple_rep(alg, 1) if i == 1 else string_rep(alg, i - 1, i, {i})
    elif fam == "Nabla":
        rep = simple_rep(alg, 1) if i == 1 else string_rep(alg, i - 1, i, {i - 1})
    else:  # T
        rep = simple_rep(alg, 1) if i == 1 else projective_rep(alg, i - 1)
    alg._module_cache[key] = rep
    return rep


def module_by_name(alg: Algebra, text: str) -> Representation:
    return canonical_module(alg, parse_label(text))


def standard_labels(alg: Algebra) -> list[Label]:
    """Delta(1), ..., Delta(n)."""
    return [Label("Delta", i) for i in range(1, alg.n + 1)]


def costandard_labels(alg: Algebra) -> list[Label]:
    return [Label("Nabla", i) for i in range(1, alg.n + 1)]


def delta_nabla_labels(alg: Algebra) -> list[Label]:
    """Delta(n)..Delta(2), L(1), Nabla(2)..Nabla(n): the 2n-1 strict quotient shapes."""
    down = [Label("Delta", i) for i in range(alg.n, 1, -1)]
    up = [Label("Nabla", i) for i in range(2, alg.n + 1)]
    return down + [Label("L", 1)] + up
