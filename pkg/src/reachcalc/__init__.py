"""reachcalc: how reachable is a computer program?

Inverts the entropy variation of a solution through the real branches of
the Lambert W function to get a reachability semi-measure, prices searches
in Landauer work, and grounds everything in an enumerable prefix-free toy
machine.
"""

__version__ = "0.1.0"

from .entropy import (
    BOLTZMANN_K,
    VARIATION_MAX,
    EntropyVariation,
    FiniteDistribution,
    ThermoEntropy,
    algorithmic_entropy,
    entropy_to_work,
    entropy_variation,
    microstate_entropy,
    shannon_entropy,
    work_to_entropy,
)
from .errors import (
    ConvergenceError,
    DegenerateSetWarning,
    DomainError,
    EmptySetError,
    InvalidDistribution,
    InvalidPolicy,
    InvalidProgram,
    ReachcalcError,
    ResourceExceeded,
)
from .lambertw import (
    BRANCH_POINT,
    BranchChoice,
    WEvaluation,
    eval_w,
    solve_xlog,
    w_derivative,
)
from .loss import (
    ConvexityCertificate,
    LossEvaluation,
    convexity_certificate,
    f_exp_negw,
    f_inverse,
    f_prime,
    matching_loss,
)
from .machine import (
    CORE_BACKEND,
    ComplexityBound,
    Problem,
    Program,
    Scheme,
    SolutionSet,
    enumerate_solutions,
    kolmogorov_upper,
    literal_program,
    reachability_report,
    run,
    solution_distribution,
)
from .reachability import (
    ReachabilityRecord,
    kol_posterior_identity,
    normalize,
    reach_from_energy,
    reach_from_variation,
)
from .search import Budget, SearchPolicy, SearchTrace, demiurge_search

__all__ = [
    "__version__",
    "BOLTZMANN_K",
    "BRANCH_POINT",
    "VARIATION_MAX",
    "CORE_BACKEND",
    "BranchChoice",
    "WEvaluation",
    "eval_w",
    "solve_xlog",
    "w_derivative",
    "FiniteDistribution",
    "EntropyVariation",
    "ThermoEntropy",
    "shannon_entropy",
    "entropy_variation",
    "microstate_entropy",
    "algorithmic_entropy",
    "entropy_to_work",
    "work_to_entropy",
    "ReachabilityRecord",
    "reach_from_variation",
    "reach_from_energy",
    "normalize",
    "kol_posterior_identity",
    "LossEvaluation",
    "ConvexityCertificate",
    "f_exp_negw",
    "f_prime",
    "matching_loss",
    "convexity_certificate",
    "f_inverse",
    "Problem",
    "Program",
    "SolutionSet",
    "ComplexityBound",
    "Scheme",
    "run",
    "literal_program",
    "enumerate_solutions",
    "kolmogorov_upper",
    "solution_distribution",
    "reachability_report",
    "SearchPolicy",
    "Budget",
    "SearchTrace",
    "demiurge_search",
    "ReachcalcError",
    "DomainError",
    "ConvergenceError",
    "InvalidDistribution",
    "InvalidProgram",
    "ResourceExceeded",
    "EmptySetError",
    "InvalidPolicy",
    "DegenerateSetWarning",
]
