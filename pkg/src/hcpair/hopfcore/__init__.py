"""Finite-dimensional Hopf superalgebras by structure constants."""
from .algebra import (
    HopfSuperAlgebraData,
    MorphismData,
    NotCocommutativeError,
    NotCommutativeError,
    NotHopfError,
    QuotientHopf,
    SubHopf,
    SuperCoalgebra,
    dual,
    evaluation_morphism,
    format_tensor,
    format_vector,
    quotient,
    restrict,
    solve_antipode,
    verify_hopf,
    verify_hopf_pairing,
    verify_super_cocommutative,
    verify_super_commutative,
)
from .constructors import (
    InvalidGroupTable,
    cyclic_group,
    exterior_algebra,
    function_algebra,
    group_algebra,
    permutation_sign,
    symmetric_group,
    trivial_hopf,
    truncated_polynomial,
    z2_smash_exterior,
)
from .structure import (
    Primitives,
    adjoint_action,
    algebra_radical,
    coradical,
    dual_algebra_of,
    is_irreducible,
    is_primitive,
    is_purely_even,
    is_semisimple_algebra,
    check_smash_coradical,
    odd_primitives,
    one_tensor,
    primitive_space,
    primitives,
    smash_coproduct_Z2,
    super_commutator,
    underline,
)

HopfSuperAlgebra = HopfSuperAlgebraData
