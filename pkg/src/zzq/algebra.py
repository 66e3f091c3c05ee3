"""Zig-zag algebras of graphs and their type A leaf quotients.

The doubled quiver of a finite connected loop-free graph carries the
zig-zag relations: every path of length three is zero, every length-two
path that is not a cycle is zero, and all length-two cycles based at a
vertex coincide.  The common value of the cycles at a vertex v survives
as an extra basis element, the loop c_v, unless the quotient kills it.
Every product of two basis paths is therefore zero or a single basis
path, and the whole algebra is a finite structure-constant table.

Composition is written left to right: x * y means "first x, then y".
This matches the right-module convention used for representations,
where the matrix of an arrow maps the space at its source to the space
at its target.

The type A line graph on vertices 1..n gives the algebra of kind "A";
kind "B" additionally kills the loop at vertex n, kind "C" kills the
loops at both leaves 1 and n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldPrime

KIND_ZIGZAG = "zigzag"
KIND_A = "A"
KIND_B = "B"
KIND_C = "C"
LEAF_KINDS = (KIND_A, KIND_B, KIND_C)


class UnsupportedKindError(ValueError):
    """Operation applied to an algebra kind it is not defined for."""


@dataclass(frozen=True)
class Graph:
    """Finite unoriented graph: vertex count and edges as vertex pairs (0-based)."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        if len(self.edges) == 0:
            raise ValueError("graph must have at least one edge")
        if not self._connected():
            raise ValueError("graph must be connected")

    def _connected(self) -> bool:
        adj = {v: [] for v in range(self.vertices)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertices


def line_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


# Basis elements are tagged tuples:
#   ("e", v)     idempotent at vertex v
#   ("arrow", k) the k-th arrow of the doubled quiver
#   ("loop", v)  the common value of the surviving length-two cycles at v


class Algebra:
    """A based algebra given by a structure-constant table.

    Instances are immutable after construction and freely shareable;
    the attached caches are filled by other modules (dict get/set only,
    which is safe under the usual single-writer discipline).
    """

    def __init__(self, field: FieldPrime, kind: str, graph: Graph, killed_loops: frozenset[int]):
        self.field = field
        self.kind = kind
        self.graph = graph
        self.n = graph.vertices
        # each edge {u,v} doubles into u->v and v->u, consecutively
        arrows: list[tuple[int, int]] = []
        for u, v in graph.edges:
            arrows.append((u, v))
            arrows.append((v, u))
        self.arrows = tuple(arrows)
        self.reverse_arrow = tuple(k ^ 1 for k in range(len(arrows)))
        self.loop_vertices = tuple(v for v in range(self.n) if v not in killed_loops)

        basis: list[tuple] = [("e", v) for v in range(self.n)]
        basis += [("arrow", k) for k in range(len(arrows))]
        basis += [("loop", v) for v in self.loop_vertices]
        self.basis = tuple(basis)
        self.dim = len(basis)

        self.idx_e = {v: i for i, (tag, v) in enumerate(basis) if tag == "e"}
        self.idx_arrow = {k: i for i, (tag, k) in enumerate(basis) if tag == "arrow"}
        self.idx_loop = {v: i for i, (tag, v) in enumerate(basis) if tag == "loop"}

        src = []
        tgt = []
        for tag, x in basis:
            if tag == "e" or tag == "loop":
                src.append(x)
                tgt.append(x)
            else:
                src.append(arrows[x][0])
                tgt.append(arrows[x][1])
        self.source = tuple(src)
        self.target = tuple(tgt)

        self.mult = self._build_table()
        self.relations = self._build_relations(killed_loops)

        # caches filled lazily elsewhere (modules, catalog, resolutions, ext)
        self._module_cache: dict = {}
        self._catalog = None
        self._res_cache: dict = {}
        self._ext_cache: dict = {}
        self._homdim_cache: dict = {}

    # -- construction ----------------------------------------------------

    def _build_table(self):
        table: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}

        def put(i, j, k):
            table[(i, j)] = ((k, 1),)

        for i, (tag_x, x) in enumerate(self.basis):
            for j, (tag_y, y) in enumerate(self.basis):
                if self.target[i] != self.source[j]:
                    continue
                if tag_x == "e":
                    put(i, j, j)
                elif tag_y == "e":
                    put(i, j, i)
                elif tag_x == "arrow" and tag_y == "arrow":
                    s1, t1 = self.arrows[x]
                    s2, t2 = self.arrows[y]
                    if s1 == t2 and s1 in self.idx_loop:
                        put(i, j, self.idx_loop[s1])
                # arrow*loop, loop*arrow, loop*loop: length >= 3, zero
        return table

    def _build_relations(self, killed_loops):
        """Path relations a representation must satisfy, as signed arrow paths."""
        relations: list[list[tuple[int, tuple[int, ...]]]] = []
        m = len(self.arrows)
        comp = [
            (x, y)
            for x in range(m)
            for y in range(m)
            if self.arrows[x][1] == self.arrows[y][0]
        ]
        cycles_at = {v: [] for v in range(self.n)}
        for x, y in comp:
            if self.arrows[x][0] == self.arrows[y][1]:
                cycles_at[self.arrows[x][0]].append((x, y))
            else:
                relations.append([(1, (x, y))])
        for v in range(self.n):
            cyc = cycles_at[v]
            if v in killed_loops:
                relations.extend([(1, c)] for c in cyc)
            else:
                relations.extend([(1, c), (-1, cyc[0])] for c in cyc[1:])
        # every path of length three vanishes
        for x, y in comp:
            for z in range(m):
                if self.arrows[y][1] == self.arrows[z][0]:
                    relations.append([(1, (x, y, z))])
        return tuple(relations)

    # -- element arithmetic ----------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def unit(self) -> np.ndarray:
        u = self.zero()
        for v in range(self.n):
            u[self.idx_e[v]] = 1
        return u

    def basis_element(self, i: int) -> np.ndarray:
        x = self.zero()
        x[i] = 1
        return x

    def basis_name(self, i: int) -> str:
        tag, x = self.basis[i]
        if tag == "e":
            return f"e{x + 1}"
        if tag == "loop":
            return f"c{x + 1}"
        s, t = self.arrows[x]
        if self.kind in LEAF_KINDS:
            return f"a{s + 1}" if t == s + 1 else f"b{t + 1}"
        return f"({s + 1}->{t + 1})"

    def a_arrow(self, i: int) -> int:
        """Arrow index of a_i: i -> i+1 (1-based i), line kinds only."""
        if self.kind not in LEAF_KINDS:
            raise UnsupportedKindError("a/b arrow naming needs a line-graph algebra")
        return 2 * (i - 1)

    def b_arrow(self, i: int) -> int:
        """Arrow index of b_i: i+1 -> i (1-based i), line kinds only."""
        if self.kind not in LEAF_KINDS:
            raise UnsupportedKindError("a/b arrow naming needs a line-graph algebra")
        return 2 * (i - 1) + 1

    def key(self) -> tuple:
        return (self.kind, self.n, self.field.p, self.graph.edges)

    def __repr__(self):
        return f"Algebra({self.kind}_{self.n} over {self.field})"


def multiply(alg: Algebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear extension of the basis table."""
    p = alg.field.p
    out = alg.zero()
    xi = np.nonzero(x % p)[0]
    yi = np.nonzero(y % p)[0]
    for i in xi:
        ci = int(x[i]) % p
        for j in yi:
            prod = alg.mult.get((int(i), int(j)))
            if prod is None:
                continue
            cij = ci * (int(y[j]) % p)
            for k, c in prod:
                out[k] = (out[k] + cij * c) % p
    return out


def build_zigzag(graph: Graph, field: FieldPrime) -> Algebra:
    """The zig-zag algebra of a finite connected loop-free graph."""
    return Algebra(field, KIND_ZIGZAG, graph, frozenset())


def build_leaf_quotient(n: int, kind: str, field: FieldPrime) -> Algebra:
    """The line-graph algebra of the given kind on n >= 2 vertices.

    Kind "A" keeps every loop, "B" kills the loop at vertex n, "C" kills
    the loops at both leaves 1 and n.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if kind == KIND_A:
        killed = frozenset()
    elif kind == KIND_B:
        killed = frozenset({n - 1})
    elif kind == KIND_C:
        killed = frozenset({0, n - 1})
    else:
        raise UnsupportedKindError(f"unknown leaf quotient kind {kind!r}")
    return Algebra(field, kind, line_graph(n), killed)


def _permute_element(alg: Algebra, x: np.ndarray, perm: dict[int, int]) -> np.ndarray:
    out = alg.zero()
    for i in np.nonzero(x % alg.field.p)[0]:
        out[perm[int(i)]] = x[i] % alg.field.p
    return out


def anti_automorphism(alg: Algebra, x: np.ndarray) -> np.ndarray:
    """The involutive anti-automorphism fixing e_v and c_v, swapping a_i and b_i."""
    if alg.kind not in LEAF_KINDS:
        raise UnsupportedKindError("anti-automorphism is provided for kinds A, B, C only")
    perm = {}
    for i, (tag, y) in enumerate(alg.basis):
        perm[i] = alg.idx_arrow[alg.reverse_arrow[y]] if tag == "arrow" else i
    return _permute_element(alg, x, perm)


def flip_automorphism(alg: Algebra, x: np.ndarray) -> np.ndarray:
    """The automorphism of kind C induced by the vertex relabeling i -> n+1-i."""
    if alg.kind != KIND_C:
        raise UnsupportedKindError("the flip i -> n+1-i preserves relations only for kind C")
    n = alg.n
    arrow_of = {(s, t): k for k, (s, t) in enumerate(alg.arrows)}
    perm = {}
    for i, (tag, y) in enumerate(alg.basis):
        if tag == "e":
            perm[i] = alg.idx_e[n - 1 - y]
        elif tag == "loop":
            perm[i] = alg.idx_loop[n - 1 - y]
        else:
            s, t = alg.arrows[y]
            perm[i] = alg.idx_arrow[arrow_of[(n - 1 - s, n - 1 - t)]]
    return _permute_element(alg, x, perm)


def check_structure(alg: Algebra) -> bool:
    """Associativity on all basis triples and unitality of the idempotent sum."""
    p = alg.field.p
    table = alg.mult

    def compose(terms, j):
        out: dict[int, int] = {}
        for k, c in terms:
            for k2, c2 in table.get((k, j), ()):
                out[k2] = (out.get(k2, 0) + c * c2) % p
        return tuple(sorted((k, c) for k, c in out.items() if c))

    def compose_left(i, terms):
        out: dict[int, int] = {}
        for k, c in terms:
            for k2, c2 in table.get((i, k), ()):
                out[k2] = (out.get(k2, 0) + c * c2) % p
        return tuple(sorted((k, c) for k, c in out.items() if c))

    unit_terms = [((alg.idx_e[v], 1),) for v in range(alg.n)]
    for i in range(alg.dim):
        left = sorted(t for e in unit_terms for t in compose(e, i))
        right = sorted(t for e in unit_terms for t in compose_left(i, e))
        if left != [(i, 1)] or right != [(i, 1)]:
            return False
    for i in range(alg.dim):
        for j in range(alg.dim):
            xy = table.get((i, j), ())
            for k in range(alg.dim):
                if compose(xy, k) != compose_left(i, table.get((j, k), ())):
                    return False
    return True
