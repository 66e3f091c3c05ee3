"""Exact computations for type A zig-zag algebras and their leaf quotients.

Everything is computed over a configurable prime field GF(p) with exact
integer linear algebra; see the README for the conventions (right
modules, arrows acting along their direction, standard modules with
simple top).
"""

from .algebra import (
    Algebra,
    Graph,
    KIND_A,
    KIND_B,
    KIND_C,
    UnsupportedKindError,
    anti_automorphism,
    build_leaf_quotient,
    build_zigzag,
    check_structure,
    flip_automorphism,
    line_graph,
    multiply,
)
from .catalog import (
    Catalog,
    UndecidableDecompositionError,
    UndecidableIsomorphismError,
    canonical_label,
    catalog,
    decompose,
    decompose_by_splitting,
    decompose_labels,
    identify,
    is_indecomposable,
    is_isomorphic,
)
from .exceptional import (
    IndeterminateFullnessError,
    enumerate_exceptional_sequences,
    is_exceptional,
    is_ext_self_orthogonal,
    is_full_sequence,
    max_sequence_length,
)
from .gf import FieldPrime
from .homology import (
    INFINITE,
    InsufficientDepthError,
    Resolution,
    ext_dim,
    injective_envelope,
    layers,
    projective_cover,
    projective_dimension,
    resolution,
    syzygy,
)
from .maps import hom_basis, hom_dim
from .quasihereditary import (
    has_delta_filtration,
    is_quasi_hereditary,
    natural_order,
    standard_for_order,
    thm2_hypothesis_report,
)
from .reps import (
    Label,
    Representation,
    canonical_module,
    delta_nabla_labels,
    direct_sum,
    dual_star,
    module_by_name,
    parse_label,
    twist_alpha,
)
from .tilting import (
    TiltingPoset,
    coresolves_regular,
    enumerate_tilting,
    hasse_dot,
    hasse_edges,
    is_generalized_tilting,
    left_add_approximation,
    projective_injective_labels,
)

__version__ = "0.1.0"
