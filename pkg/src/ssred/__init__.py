"""Exact semisimplification of matrix groups by cocharacter degeneration."""

from .errors import (
    AlgebraNotStable,
    CertificateSearchExhausted,
    DimensionMismatch,
    GeneratorCountMismatch,
    InternalInvariantViolation,
    InvalidInput,
    LimitDoesNotExist,
    NotBlockDiagonal,
    NotInUnipotentRadical,
    NotNormal,
    PreconditionNotDestabilizable,
    ResourceBoundExceeded,
    SearchSpaceExceeded,
    SsredError,
    UndecidedIrreducibility,
)
from .exact import Field, Matrix, Subspace, solve_conjugating
from .flags import Cocharacter, Flag, c_lambda, flag_to_cocharacter
from .oracle import accessible_closed_orbits, generic_tuple, oracle_gcr
from .pipeline import (
    CliffordResult,
    ConjugacyCertificate,
    LeviDescentReport,
    OptimalFlagReport,
    SsResult,
    clifford_joint_ss,
    conjugacy_certificate,
    is_gcr_over_k,
    levi_descent,
    optimal_flag,
    semisimplify,
)
from .repfile import load_rep, parse_rep, serialize_rep
from .reps import (
    CompositionSeries,
    Representation,
    SemisimpleCertificate,
    composition_series,
    is_semisimple,
    iso_class_multiset,
    module_iso,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraNotStable",
    "CertificateSearchExhausted",
    "CliffordResult",
    "Cocharacter",
    "CompositionSeries",
    "ConjugacyCertificate",
    "DimensionMismatch",
    "Field",
    "Flag",
    "GeneratorCountMismatch",
    "InternalInvariantViolation",
    "InvalidInput",
    "LeviDescentReport",
    "LimitDoesNotExist",
    "Matrix",
    "NotBlockDiagonal",
    "NotInUnipotentRadical",
    "NotNormal",
    "OptimalFlagReport",
    "PreconditionNotDestabilizable",
    "Representation",
    "ResourceBoundExceeded",
    "SearchSpaceExceeded",
    "SemisimpleCertificate",
    "SsResult",
    "SsredError",
    "Subspace",
    "UndecidedIrreducibility",
    "accessible_closed_orbits",
    "c_lambda",
    "clifford_joint_ss",
    "composition_series",
    "conjugacy_certificate",
    "flag_to_cocharacter",
    "generic_tuple",
    "is_gcr_over_k",
    "is_semisimple",
    "iso_class_multiset",
    "levi_descent",
    "load_rep",
    "module_iso",
    "optimal_flag",
    "oracle_gcr",
    "parse_rep",
    "semisimplify",
    "serialize_rep",
    "solve_conjugating",
    "__version__",
]
