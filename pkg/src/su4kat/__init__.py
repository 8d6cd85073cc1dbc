"""KAT factorization of SU(4).

A small numerical library for composing SU(4) elements from the 15
coordinates of the K*A1*A2*T chart, validating the logarithmic-chart
domain, recovering coordinates from an arbitrary special unitary matrix
by damped least squares, and realizing the two-to-one map onto SO(6).
"""

from su4kat.linalg import (
    BranchPointError,
    NonSkewHermitianError,
    NotUnitaryError,
    UnitaryCheckReport,
    check_special_unitary,
    eig_unitary,
    expm,
    logm_principal,
)
from su4kat.fano import (
    NonIntegralError,
    NotInAlgebraError,
    StructureConstants,
    fano_lambda,
    lambda_basis,
    project,
    structure_constants,
)
from su4kat.chart import (
    ChartParams,
    KATFactors,
    RotationForm,
    a1_coefficients,
    a_factor,
    compose,
    compose_k,
    d_matrix,
    hadamards,
    magic_matrix,
    sample_chart,
    sample_haar_su4,
    validate_domain,
)
from su4kat.factorize import (
    FactorizationResult,
    NoConvergenceError,
    SolverOptions,
    TargetNotUnitaryError,
    factorize,
    residual,
    roundtrip_report,
)
from su4kat.spin6 import (
    So6Element,
    algebra_iso,
    cover_map,
    ort6_build,
    so6_generator,
    verify_double_cover,
)

__version__ = "0.1.0"

__all__ = [
    "BranchPointError",
    "ChartParams",
    "FactorizationResult",
    "KATFactors",
    "NoConvergenceError",
    "NonIntegralError",
    "NonSkewHermitianError",
    "NotInAlgebraError",
    "NotUnitaryError",
    "RotationForm",
    "So6Element",
    "SolverOptions",
    "StructureConstants",
    "TargetNotUnitaryError",
    "UnitaryCheckReport",
    "a1_coefficients",
    "a_factor",
    "algebra_iso",
    "check_special_unitary",
    "compose",
    "compose_k",
    "cover_map",
    "d_matrix",
    "eig_unitary",
    "expm",
    "factorize",
    "fano_lambda",
    "hadamards",
    "lambda_basis",
    "logm_principal",
    "magic_matrix",
    "ort6_build",
    "project",
    "residual",
    "roundtrip_report",
    "sample_chart",
    "sample_haar_su4",
    "so6_generator",
    "structure_constants",
    "validate_domain",
    "verify_double_cover",
]
