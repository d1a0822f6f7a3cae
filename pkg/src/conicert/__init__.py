"""Exact rationality decisions for norm-form surface fields.

Given rational parameters (a, b, c, d) with a a nonsquare, the surface
t1^2 - a*t2^2 = b, t3^2 - a*t4^2 = 2*c*t1 + d has a function field whose
Q-rationality is decided exactly from Hilbert-symbol conditions, with
machine-checkable certificates: rational points, symbol obstructions, and
verified birational parametrizations.
"""

from .config import DEFAULT_BUDGETS, SearchBudgets
from .conic import (
    ConicSolution,
    QuadricSpec,
    SurfaceParam,
    fiberwise_quadric_point,
    find_quadric_point,
    parametrize_conic,
    solve_norm_equation,
    stereographic_parametrize,
)
from .decider import (
    Certificate,
    Decision,
    MultiDecision,
    NormToriDecision,
    NotRationalCert,
    RationalCert,
    ScanEntry,
    ScanResult,
    build_parametrization,
    decide,
    decide_multi,
    decide_norm_tori,
    point_on_X,
    scan,
)
from .errors import (
    ConicertError,
    DegenerateCenterError,
    FactorizationLimitError,
    InvalidSpecError,
    SearchBudgetError,
    VerificationError,
)
from .hilbert import (
    Place,
    RamificationSet,
    candidate_places,
    factor,
    global_hilbert,
    is_prime,
    jacobi,
    kronecker,
    local_hilbert,
)
from .multipoly import MultiPoly, RatFunc, poly_gcd
from .quadelem import QuadElem, sqrt_of
from .quadfield import (
    ExtSymbol,
    QuadField,
    SplitType,
    ext_hilbert,
    place_splitting,
    squarefree_core,
)
from .rationals import format_rat, is_square, rat, squarefree_kernel_int
from .sigma import (
    CheckResult,
    GeneratorSet,
    Report,
    SigmaAction,
    apply_sigma,
    build_generators,
    sigma_action,
    verify_involution_and_invariance,
    verify_norm_product_identity,
    verify_proof_chain_nonsquare,
    verify_proof_chain_square,
)
from .surface import SurfaceSpec

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "Certificate",
    "ConicSolution",
    "ConicertError",
    "DEFAULT_BUDGETS",
    "Decision",
    "DegenerateCenterError",
    "ExtSymbol",
    "FactorizationLimitError",
    "GeneratorSet",
    "InvalidSpecError",
    "MultiDecision",
    "MultiPoly",
    "NormToriDecision",
    "NotRationalCert",
    "Place",
    "QuadElem",
    "QuadField",
    "QuadricSpec",
    "RamificationSet",
    "RatFunc",
    "RationalCert",
    "Report",
    "ScanEntry",
    "ScanResult",
    "SearchBudgetError",
    "SearchBudgets",
    "SigmaAction",
    "SplitType",
    "SurfaceParam",
    "SurfaceSpec",
    "VerificationError",
    "apply_sigma",
    "build_generators",
    "build_parametrization",
    "candidate_places",
    "decide",
    "decide_multi",
    "decide_norm_tori",
    "ext_hilbert",
    "factor",
    "fiberwise_quadric_point",
    "find_quadric_point",
    "format_rat",
    "global_hilbert",
    "is_prime",
    "is_square",
    "jacobi",
    "kronecker",
    "local_hilbert",
    "parametrize_conic",
    "place_splitting",
    "point_on_X",
    "poly_gcd",
    "rat",
    "scan",
    "sigma_action",
    "solve_norm_equation",
    "squarefree_core",
    "squarefree_kernel_int",
    "sqrt_of",
    "stereographic_parametrize",
    "verify_involution_and_invariance",
    "verify_norm_product_identity",
    "verify_proof_chain_nonsquare",
    "verify_proof_chain_square",
]
