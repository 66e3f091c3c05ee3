"""Exceptional modules, exceptional sequences, and fullness certificates.

A module is exceptional when its endomorphism ring is one-dimensional
and all its positive self-extensions vanish; for a module of infinite
projective dimension the periodicity of its minimal resolution bounds
the degrees that need checking (the cohomology repeats with the
resolution from the preperiod on).

A sequence (M_1, ..., M_k) is exceptional when each member is and
Hom and all Ext from later to earlier members vanish.  Fullness of a
length-n sequence is certified by generation: close the set of produced
modules under kernels of epimorphisms and cokernels of monomorphisms
between members (splitting every result into catalog summands); if all
n simples appear, the sequence generates the derived category.  A
closure that stalls only proves non-fullness when every hom space along
the way was enumerated exhaustively; otherwise the result is reported
as indeterminate rather than false.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import KIND_B, KIND_C, Algebra, UnsupportedKindError
from .catalog import ENUM_BOUND, SAMPLE_TRIES, catalog, decompose_labels
from .homology import INFINITE, _resolution_to_depth, ext_dim, projective_dimension
from .maps import cokernel_of_map, hom_basis, hom_dim, is_epi, is_mono, kernel_of_map, scale_add
from .reps import Label, Representation, canonical_module


class IndeterminateFullnessError(RuntimeError):
    """Generation closure stalled without exhausting the map search."""


def self_extension_bound(m: Representation) -> int:
    """Largest degree whose vanishing certifies all higher self-Ext vanish."""
    res = _resolution_to_depth(m, 1)
    if res.status == "finite":
        return max(res.pd, 0)
    if res.status == "periodic":
        return res.preperiod + res.period
    raise RuntimeError("resolution undecided; raise the depth budget")


def is_ext_self_orthogonal(m: Representation) -> bool:
    bound = self_extension_bound(m)
    return all(ext_dim(m, m, k) == 0 for k in range(1, bound + 1))


def is_exceptional(m: Representation) -> bool:
    """Trivial endomorphism ring and no positive self-extensions."""
    if hom_dim(m, m) != 1:
        return False
    return is_ext_self_orthogonal(m)


def _pair_vanishes(later: Representation, earlier: Representation) -> bool:
    """Hom and all Ext from a later member to an earlier one vanish."""
    if hom_dim(later, earlier):
        return False
    pd = projective_dimension(later)
    bound = self_extension_bound(later) if pd == INFINITE else max(pd, 0)
    return all(ext_dim(later, earlier, k) == 0 for k in range(1, bound + 1))


def enumerate_exceptional_sequences(
    alg: Algebra, length: int, full_only: bool = False, seed: int = 0
) -> list[tuple[Label, ...]]:
    """Exceptional sequences of exactly the given length, lexicographic.

    With full_only, keeps sequences of length n that pass the generation
    closure certificate.
    """
    if alg.kind not in (KIND_B, KIND_C):
        raise UnsupportedKindError("sequence enumeration covers kinds B and C")
    cat = catalog(alg)
    members = [(lab, rep) for lab, rep in zip(cat.labels, cat.reps) if is_exceptional(rep)]
    out: list[tuple[Label, ...]] = []
    seq: list[tuple[Label, Representation]] = []

    def extend():
        if len(seq) == length:
            labels = tuple(lab for lab, _ in seq)
            if not full_only or is_full_sequence(labels, alg, seed=seed):
                out.append(labels)
            return
        for lab, rep in members:
            if any(lab == used for used, _ in seq):
                continue
            if all(_pair_vanishes(rep, earlier) for _, earlier in seq):
                seq.append((lab, rep))
                extend()
                seq.pop()

    extend()
    return out


def max_sequence_length(alg: Algebra) -> int:
    """Length of the longest exceptional sequence."""
    best = 0
    for length in range(1, alg.n + 1):
        if not enumerate_exceptional_sequences(alg, length):
            break
        best = length
    return best


def _maps_between(x: Representation, y: Representation, seed: int):
    """Nonzero maps x -> y: exhaustive when small, else sampled.

    Yields (map, exhausted) where exhausted reports whether the whole
    hom space was enumerated.
    """
    field = x.algebra.field
    basis = hom_basis(x, y)
    d = len(basis)
    if d == 0:
        return
    if field.p ** d <= ENUM_BOUND:
        for coeffs in itertools.product(range(field.p), repeat=d):
            if any(coeffs):
                yield scale_add(field, coeffs, basis), True
        return
    for f in basis:
        yield f, False
    rng = np.random.default_rng(seed)
    for _ in range(SAMPLE_TRIES):
        coeffs = rng.integers(0, field.p, size=d)
        if coeffs.any():
            yield scale_add(field, coeffs, basis), False


def is_full_sequence(seq_labels, alg: Algebra, seed: int = 0) -> bool:
    """Generation closure certificate for fullness of a length-n sequence.

    Produces new catalog labels from kernels of epis and cokernels of
    monos between already generated modules until stable; fullness holds
    when all simples appear.
    """
    from .reps import parse_label

    labels = [lab if isinstance(lab, Label) else parse_label(str(lab)) for lab in seq_labels]
    if len(labels) != alg.n:
        return False
    generated: dict[str, Representation] = {}
    for lab in labels:
        generated[str(lab)] = canonical_module(alg, lab)
    simples = {str(Label("L", v)) for v in range(1, alg.n + 1)}
    exhausted_all = True
    processed: set[tuple[str, str]] = set()
    changed = True
    while changed and not simples <= set(generated):
        changed = False
        for (nx, x), (ny, y) in itertools.product(list(generated.items()), repeat=2):
            if nx == ny or (nx, ny) in processed:
                continue
            processed.add((nx, ny))
            for f, exhausted in _maps_between(x, y, seed):
                exhausted_all = exhausted_all and exhausted
                piece = None
                if is_epi(y, f):
                    piece = kernel_of_map(x, y, f)[0]
                elif is_mono(x, f):
                    piece = cokernel_of_map(y, f)[0]
                if piece is None or piece.total_dim == 0:
                    continue
                for lab in decompose_labels(piece):
                    if str(lab) not in generated:
                        generated[str(lab)] = canonical_module(alg, lab)
                        changed = True
    if simples <= set(generated):
        return True
    if exhausted_all:
        return False
    raise IndeterminateFullnessError(
        "closure stalled before producing every simple, with sampled hom spaces"
    )
