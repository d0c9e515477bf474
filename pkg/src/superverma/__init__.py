"""Exact singular-vector computations in Verma modules over basic Lie
superalgebras of osp and exceptional type."""

__version__ = "0.1.0"

from .rootdata import (
    CaseId,
    AlgebraData,
    RootDatum,
    InvalidParams,
    IsotropicCoroot,
    ParityViolation,
    build_algebra_data,
    bilinear_form,
    coroot_pairing,
    reflect,
    wprime_orbit,
)
from .superalgebra import (
    BracketTable,
    build_structure_constants,
    check_jacobi,
    check_reference_scaling,
    dump_table,
)
from .pbw import (
    PBWEngine,
    PBWOrder,
    make_order,
    NotDivisible,
    WrongOrder,
    Inhomogeneous,
)
from .verma import (
    VermaVector,
    SingularityReport,
    highest_weight_vector,
    act,
    weight_of,
    is_singular,
)
from .singular import (
    CaseParams,
    Context,
    ShapovalovElement,
    ChainReport,
    WitnessReport,
    build_context,
    default_lambda,
    candidate_u,
    permuted_u,
    orbit_propagate,
    propagate_chain,
    run_witness,
)

__all__ = [
    "CaseId",
    "AlgebraData",
    "RootDatum",
    "InvalidParams",
    "IsotropicCoroot",
    "ParityViolation",
    "build_algebra_data",
    "bilinear_form",
    "coroot_pairing",
    "reflect",
    "wprime_orbit",
    "BracketTable",
    "build_structure_constants",
    "check_jacobi",
    "check_reference_scaling",
    "dump_table",
    "PBWEngine",
    "PBWOrder",
    "make_order",
    "NotDivisible",
    "WrongOrder",
    "Inhomogeneous",
    "VermaVector",
    "SingularityReport",
    "highest_weight_vector",
    "act",
    "weight_of",
    "is_singular",
    "CaseParams",
    "Context",
    "ShapovalovElement",
    "ChainReport",
    "WitnessReport",
    "build_context",
    "default_lambda",
    "candidate_u",
    "permuted_u",
    "orbit_propagate",
    "propagate_chain",
    "run_witness",
    "__version__",
]
