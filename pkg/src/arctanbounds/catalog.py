"""Catalog of closed-form arctan bounds, enclosure construction, and the
monotonicity-regime classifier.

All bounds share the shape ``c(a) * x / (a + sqrt(1 + x^2))`` or are classical
one-off inequalities.  Every entry carries a validity predicate; evaluating a
family bound outside its certified parameter range is a hard ParamError, never
a silent number.

The formulas are cancellation-free for x > 0, so a single implementation
serves both the float path and the fixed-point path used by the verification
sweeps (see :mod:`arctanbounds.fixedpoint`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional

from . import fixedpoint as fp
from .errors import DomainError, ParamError

TWO_OVER_PI = 2.0 / math.pi


class Regime(Enum):
    """Monotonicity of the family ratio on (0, inf) as a function of the parameter.

    The slice -1 < a < 0 carries no certified claim and reports Unclassified.
    """

    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    INTERIOR_MINIMUM = "InteriorMinimum"
    UNCLASSIFIED = "Unclassified"


class BoundId(Enum):
    """Identifiers for every bound in the catalog.

    The ``two-over-pi`` entries are the a = 2/pi specialization of the
    reversed family; the ``-errata`` variant is a circulated mis-statement of
    that lower bound (constant term 2 instead of 4) kept as a documented
    counterexample: it exceeds arctan at x = 1.
    """

    SHAFER_LOWER = "shafer-lower"                  # 3x / (1 + 2*sqrt(1+x^2))
    HALF_ANGLE_UPPER = "half-angle-upper"          # 2x / (1 + sqrt(1+x^2))
    RATIO_LOWER = "ratio-lower"                    # x / (1 + x^2)
    IDENTITY_UPPER = "identity-upper"              # x
    CUBIC_LOWER = "cubic-lower"                    # x - x^3/3
    LOG_LOWER = "log-lower"                        # ln(1+x^2) / (2x)
    LOG_UPPER = "log-upper"                        # (1+x) ln(1+x)
    FAMILY_LOWER = "family-lower"                  # (1+a)x / (a+u),   0 <= a <= 1/2
    FAMILY_UPPER = "family-upper"                  # (pi/2)x / (a+u),  0 <= a <= 1/2
    REVERSED_LOWER = "reversed-lower"              # (pi/2)x / (a+u),  a >= 2/pi
    REVERSED_UPPER = "reversed-upper"              # (1+a)x / (a+u),   a >= 2/pi
    MID_REGIME_LOWER = "mid-regime-lower"          # 4a(1-a^2)x / (a+u),        1/2 < a < 2/pi
    MID_REGIME_UPPER = "mid-regime-upper"          # max(pi/2, 1+a)x / (a+u),   1/2 < a < 2/pi
    TWO_OVER_PI_LOWER = "two-over-pi-lower"        # pi^2 x / (4 + 2*pi*u)
    TWO_OVER_PI_UPPER = "two-over-pi-upper"        # (pi+2)x / (2 + pi*u)
    TWO_OVER_PI_LOWER_ERRATA = "two-over-pi-lower-errata"  # pi^2 x / (2 + 2*pi*u): NOT a bound


@dataclass(frozen=True)
class Enclosure:
    """A certified two-sided bracket for arctan at a point."""

    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError(f"inverted enclosure: {self.lower} > {self.upper}")

    @property
    def half_width(self) -> float:
        return 0.5 * (self.upper - self.lower)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)


def _u(x):
    return fp.sqrt_of(1 + x * x)


def _one_plus_a_member(a, x):
    # (1+a)x/(a+u): family lower bound for a <= 1/2, reversed upper for a >= 2/pi
    return (1 + a) * x / (a + _u(x))


def _half_pi_member(a, x):
    # (pi/2)x/(a+u): family upper bound for a <= 1/2, reversed lower for a >= 2/pi
    half_pi = fp.pi_of(x) / 2
    return half_pi * x / (a + _u(x))


def _mid_lower(a, x):
    return 4 * a * (1 - a * a) * x / (a + _u(x))


def _mid_upper(a, x):
    # upper constant max(pi/2, 1+a); the exact switch sits at a = pi/2 - 1
    half_pi = fp.pi_of(x) / 2
    one_plus_a = 1 + a
    c = one_plus_a if one_plus_a > half_pi else half_pi
    return c * x / (a + _u(x))


def _shafer_lower(a, x):
    # the classical 3x/(1+2u) bound is exactly the a = 1/2 family member
    return _one_plus_a_member(fp.lift_to(0.5, x), x)


def _half_angle_upper(a, x):
    # 2x/(1+u) is exactly the a = 1 reversed-family upper bound
    return _one_plus_a_member(fp.lift_to(1.0, x), x)


def _ratio_lower(a, x):
    return x / (1 + x * x)


def _identity_upper(a, x):
    return x


def _cubic_lower(a, x):
    return x - x * x * x / 3


def _log_lower(a, x):
    return fp.log_of(1 + x * x) / (2 * x)


def _log_upper(a, x):
    return (1 + x) * fp.log_of(1 + x)


def _two_over_pi_lower(a, x):
    pi = fp.pi_of(x)
    return pi * pi * x / (4 + 2 * pi * _u(x))


def _two_over_pi_upper(a, x):
    pi = fp.pi_of(x)
    return (pi + 2) * x / (2 + pi * _u(x))


def _two_over_pi_lower_errata(a, x):
    pi = fp.pi_of(x)
    return pi * pi * x / (2 + 2 * pi * _u(x))


@dataclass(frozen=True)
class _BoundInfo:
    side: str                                   # "lower" | "upper"
    fn: Callable
    takes_param: bool = False
    param_ok: Optional[Callable[[float], bool]] = None
    param_range: str = ""
    trusted: bool = True                        # errata entries are swept for failure


_CATALOG: dict[BoundId, _BoundInfo] = {
    BoundId.SHAFER_LOWER: _BoundInfo("lower", _shafer_lower),
    BoundId.HALF_ANGLE_UPPER: _BoundInfo("upper", _half_angle_upper),
    BoundId.RATIO_LOWER: _BoundInfo("lower", _ratio_lower),
    BoundId.IDENTITY_UPPER: _BoundInfo("upper", _identity_upper),
    BoundId.CUBIC_LOWER: _BoundInfo("lower", _cubic_lower),
    BoundId.LOG_LOWER: _BoundInfo("lower", _log_lower),
    BoundId.LOG_UPPER: _BoundInfo("upper", _log_upper),
    BoundId.FAMILY_LOWER: _BoundInfo(
        "lower", _one_plus_a_member, True, lambda a: 0.0 <= a <= 0.5, "0 <= a <= 1/2"),
    BoundId.FAMILY_UPPER: _BoundInfo(
        "upper", _half_pi_member, True, lambda a: 0.0 <= a <= 0.5, "0 <= a <= 1/2"),
    BoundId.REVERSED_LOWER: _BoundInfo(
        "lower", _half_pi_member, True, lambda a: a >= TWO_OVER_PI, "a >= 2/pi"),
    BoundId.REVERSED_UPPER: _BoundInfo(
        "upper", _one_plus_a_member, True, lambda a: a >= TWO_OVER_PI, "a >= 2/pi"),
    BoundId.MID_REGIME_LOWER: _BoundInfo(
        "lower", _mid_lower, True, lambda a: 0.5 < a < TWO_OVER_PI, "1/2 < a < 2/pi"),
    BoundId.MID_REGIME_UPPER: _BoundInfo(
        "upper", _mid_upper, True, lambda a: 0.5 < a < TWO_OVER_PI, "1/2 < a < 2/pi"),
    BoundId.TWO_OVER_PI_LOWER: _BoundInfo("lower", _two_over_pi_lower),
    BoundId.TWO_OVER_PI_UPPER: _BoundInfo("upper", _two_over_pi_upper),
    # the errata entry is *claimed* as a lower bound; sweeping it on that side
    # tests the claim that was actually made (and finds it false)
    BoundId.TWO_OVER_PI_LOWER_ERRATA: _BoundInfo(
        "lower", _two_over_pi_lower_errata, trusted=False),
}


def bound_side(bound: BoundId) -> str:
    return _CATALOG[bound].side


def bound_is_trusted(bound: BoundId) -> bool:
    return _CATALOG[bound].trusted


def bound_takes_param(bound: BoundId) -> bool:
    return _CATALOG[bound].takes_param


def _check_param(bound: BoundId, a: Optional[float]) -> None:
    info = _CATALOG[bound]
    if not info.takes_param:
        if a is not None:
            raise ParamError(f"{bound.value} takes no family parameter")
        return
    if a is None:
        raise ParamError(f"{bound.value} requires a family parameter")
    if not math.isfinite(a):
        raise ParamError("family parameter must be finite")
    if not info.param_ok(a):
        raise ParamError(
            f"a={a!r} outside the certified range {info.param_range} for {bound.value}")


def _check_x(x: float) -> None:
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"bounds are stated for x > 0, got {x!r}")


def eval_bound(bound: BoundId, x: float, a: Optional[float] = None) -> float:
    """Evaluate one catalog bound at x > 0 (float arithmetic)."""
    _check_param(bound, a)
    _check_x(x)
    return _CATALOG[bound].fn(a, float(x))


def eval_bound_hp(bound: BoundId, x: float, a: Optional[float] = None,
                  digits: int = 50) -> fp.FixedReal:
    """Evaluate one catalog bound in fixed point.

    x and a enter through their exact float values, so the result is the
    bound for the precise arguments a caller's doubles denote.  Used by the
    sweep engine, where float evaluation cannot resolve the thinnest margins.
    """
    _check_param(bound, a)
    _check_x(x)
    x_hp = fp.FixedReal(float(x), digits)
    a_hp = None if a is None else fp.FixedReal(float(a), digits)
    return _CATALOG[bound].fn(a_hp, x_hp)


def classify_regime(a: float) -> Regime:
    """Monotonicity regime of the family ratio for parameter a.

    Increasing for a <= -1 or 0 <= a <= 1/2; decreasing for a >= 2/pi; a
    unique interior minimum for 1/2 < a < 2/pi; no claim on -1 < a < 0.
    """
    if not math.isfinite(a):
        raise DomainError("parameter must be finite")
    if a <= -1 or 0 <= a <= 0.5:
        return Regime.INCREASING
    if a >= TWO_OVER_PI:
        return Regime.DECREASING
    if 0.5 < a < TWO_OVER_PI:
        return Regime.INTERIOR_MINIMUM
    return Regime.UNCLASSIFIED


def enclosure(a: float, x: float) -> Enclosure:
    """Two-sided family enclosure of arctan x at parameter a.

    For 0 <= a <= 1/2 the bracket is ((1+a)x/(a+u), (pi/2)x/(a+u)); for
    a >= 2/pi the same two expressions swap roles.  Parameters in the gap
    (1/2, 2/pi), or negative, have no certified two-sided bracket and raise.
    """
    _check_x(x)
    if not math.isfinite(a):
        raise ParamError("family parameter must be finite")
    x = float(x)
    if 0.0 <= a <= 0.5:
        return Enclosure(_one_plus_a_member(a, x), _half_pi_member(a, x))
    if a >= TWO_OVER_PI:
        return Enclosure(_half_pi_member(a, x), _one_plus_a_member(a, x))
    raise ParamError(
        f"no two-sided enclosure for a={a!r}; need 0 <= a <= 1/2 or a >= 2/pi")


def best_enclosure(x: float, params: Iterable[float]) -> Enclosure:
    """Pointwise-best enclosure over several parameters: max of the lowers,
    min of the uppers.  Containment is preserved since every constituent
    brackets arctan x."""
    parts = [enclosure(a, x) for a in params]
    if not parts:
        raise ParamError("best_enclosure needs at least one parameter")
    return Enclosure(max(p.lower for p in parts), min(p.upper for p in parts))
