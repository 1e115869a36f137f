"""Exact computer algebra for coinduction of finite-group representations.

The package builds, for a finite group G, a subgroup H, and an exact field
(the rationals or a prime field), the restriction/coinduction adjunction on
finite-dimensional representations, the commutative separable function ring
on the coset space, and the equivalence between H-representations and
modules over that ring.  Every asserted identity is checked as exact matrix
equality; the suite module turns those checks into a one-command verifier.
"""

from ._version import __version__
from .exactlin import (
    GF,
    QQ,
    Field,
    Matrix,
    mat_add,
    mat_inverse,
    mat_kron,
    mat_mul,
    mat_scale,
    mat_sub,
    nullspace_basis,
    parse_field,
    rank_and_column_basis,
    solve_linear,
)
from .groups import (
    CosetSpace,
    FiniteGroup,
    GroupError,
    Subgroup,
    factorize,
    group_from_cayley_table,
    group_from_permutations,
    load_group_json,
    right_cosets,
    subgroup_generated,
)
from .repcat import (
    Morphism,
    Rep,
    RepError,
    compose,
    find_iso,
    hom_space_basis,
    identity_mor,
    random_hom,
    random_rep,
    restrict,
    restrict_mor,
    symmetry,
    tensor_mor,
    tensor_obj,
    unit_rep,
    zero_mor,
)
from .adjunction import (
    coind_mor,
    coind_obj,
    counit_eps,
    ind_counit,
    lax_iota,
    lax_lambda,
    lax_lambda_composite,
    projection_pi,
    projection_pi_composite_matrix,
    projection_pi_inverse,
    rho_product_iso,
    section_xi,
    unit_eta,
)
from .monadring import (
    Monad,
    MonadMorphism,
    RingAxiomError,
    RingObject,
    canonical_ring_iso,
    monad_from_adjunction,
    monad_from_ring,
    monad_law_failures,
    monad_morphism_failures,
    monad_section_at,
    monad_separability_failures,
    pi_as_monad_morphism,
    ring_axiom_failures,
    ring_from_adjunction,
    ring_iso_failures,
    standard_ring,
    transport_section,
)
from .eilenberg import (
    AModMorphism,
    AModule,
    EMError,
    ModuleAxiomError,
    em_comparison,
    em_counit_iso,
    em_inverse,
    em_inverse_split,
    em_mor,
    em_unit_iso,
    extension_of_scalars_iso,
    find_idempotent_summand,
    find_module_iso,
    free_module,
    module_axiom_failures,
    module_hom_space,
    split_idempotent,
)
from .presets import load_preset, preset_names
from .suite import (
    CHECK_IDS,
    CORRUPTIONS,
    ConfigError,
    InternalError,
    SuiteConfig,
    SuiteReport,
    mutation_smoke,
    run_matrix,
    run_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
