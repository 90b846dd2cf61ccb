"""Classifying simplicial sets of finite simplicial groups.

The package computes the Kan classifying simplicial set and the diagonal of
the dimensionwise nerve for a truncated simplicial group given by finite
multiplication tables, realizes the retraction, coretraction and simplicial
homotopy between them, and machine-checks the defining identities exhaustively
on finite fixtures.
"""

from .delta import (
    Delta1Simplex,
    Factorization,
    MonotoneMap,
    all_monotone_maps,
    apply_operator_to_tau,
    codegeneracy,
    coface,
    compose,
    factorize,
    format_map,
    identity_map,
    parse_map,
    recompose,
    restrict,
    splitting,
    tau,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    cyclic_group,
    direct_product,
    hom_apply,
    hom_compose,
    identity_hom,
    symmetric_group_3,
    trivial_group,
    trivial_hom,
)
from .simplicial import (
    LeveledElement,
    SimplicialMorphism,
    TruncatedSimplicialGroup,
    TruncationError,
    apply_operator,
    check_simplicial_identities,
    composite_degeneracies,
    composite_faces,
    constant_simplicial_group,
    product_simplicial_group,
    simplicial_group_from_json,
    simplicial_group_to_json,
    translation_simplicial_group,
    verify_functoriality,
)
from .classifying import (
    DiagSimplex,
    NerveSimplex,
    TotalSimplex,
    WBarSimplex,
    bisimplicial_action,
    diag_action,
    enumerate_level,
    enumerate_total_by_matching,
    nerve_action,
    phi,
    total_action,
    total_matching_violations,
    total_to_wbar,
    verify_iso,
    wbar_action,
    wbar_to_total,
)
from .retract import (
    HomotopyInput,
    coretraction_S,
    homotopy_H,
    retraction_D,
    verify_constant_along_S,
    verify_homotopy_endpoints,
    verify_naturality,
    verify_phi_factorization,
    verify_retraction_identity,
    verify_simplicial_map,
)
from .reports import Budget, VerificationReport, Witness
from .suite import SuiteConfig, run_compute, run_factorize, run_suite

__version__ = "0.1.0"
