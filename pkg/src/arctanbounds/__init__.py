"""Certified closed-form bounds for the arc tangent.

A catalog of classical and parameterized bounds with validity predicates, a
regime classifier and interior-minimum solver for the underlying ratio, a
high-precision arctan oracle with a grid-sweep verification harness, and a
fast approximation kernel whose error is certified by enclosure width.
"""

from .catalog import (
    TWO_OVER_PI,
    BoundId,
    Enclosure,
    Regime,
    best_enclosure,
    classify_regime,
    enclosure,
    eval_bound,
    eval_bound_hp,
)
from .errors import (
    ArctanBoundsError,
    BracketError,
    ConvergenceError,
    DomainError,
    NoCrossingError,
    ParamError,
    PrecisionError,
    SingularityError,
)
from .family import (
    MinimumResult,
    SolverConfig,
    family_ratio,
    family_ratio_at_zero,
    find_interior_minimum,
    gap_quadratic,
    minimum_value_closed_form,
    quadratic_root_neg,
    quadratic_root_pos,
    shafer_defect,
    shafer_defect_derivative,
    stationarity_gap,
)
from .fixedpoint import FixedReal
from .kernel import (
    DEFAULT_CROSSOVER,
    DEFAULT_KERNEL,
    CertifiedValue,
    ErrorProfile,
    KernelSpec,
    approx,
    enclosure_half_width,
    error_profile,
    tune_crossover,
)
from .oracle import (
    DEFAULT_DIGITS,
    DEFAULT_GRID,
    DEFAULT_SWEEP_DIGITS,
    DominanceReport,
    GridSpec,
    SweepReport,
    dominance_report,
    oracle_arctan,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ArctanBoundsError",
    "BoundId",
    "BracketError",
    "CertifiedValue",
    "ConvergenceError",
    "DEFAULT_CROSSOVER",
    "DEFAULT_DIGITS",
    "DEFAULT_GRID",
    "DEFAULT_KERNEL",
    "DEFAULT_SWEEP_DIGITS",
    "DomainError",
    "DominanceReport",
    "Enclosure",
    "ErrorProfile",
    "FixedReal",
    "GridSpec",
    "KernelSpec",
    "MinimumResult",
    "NoCrossingError",
    "ParamError",
    "PrecisionError",
    "Regime",
    "SingularityError",
    "SolverConfig",
    "SweepReport",
    "TWO_OVER_PI",
    "approx",
    "best_enclosure",
    "classify_regime",
    "dominance_report",
    "enclosure",
    "enclosure_half_width",
    "error_profile",
    "eval_bound",
    "eval_bound_hp",
    "family_ratio",
    "family_ratio_at_zero",
    "find_interior_minimum",
    "gap_quadratic",
    "minimum_value_closed_form",
    "oracle_arctan",
    "quadratic_root_neg",
    "quadratic_root_pos",
    "shafer_defect",
    "shafer_defect_derivative",
    "stationarity_gap",
    "sweep",
    "tune_crossover",
    "__version__",
]
