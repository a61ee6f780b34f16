"""Fast arctan approximation with a certified absolute error bound.

Each call evaluates one family enclosure (a shared denominator a + sqrt(1+x^2),
so one square root and one division) and returns its midpoint together with
its half-width.  The half-width *is* the certificate: the true arctan lies
strictly inside the enclosure, so |value - arctan x| never exceeds it beyond
double-rounding noise (tests allow two ulps of the value).

Two parameters are carried, one from each certified regime, switched at a
fixed abscissa.  The reversed-regime enclosure at a = 2/pi is the narrower of
the two at every x (its width coefficient (1+a) - pi/2 ~ 0.0658 beats the
family regime's best pi/2 - 3/2 ~ 0.0708, and its larger denominator helps
again), so the default switch point sits where the two *lower bounds* trade
dominance (x ~ 2.1758); below it the a = 1/2 enclosure is still certified,
merely a little wider.  Certification is independent of the switch choice.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from . import fixedpoint as fp
from . import oracle as orc
from .catalog import TWO_OVER_PI
from .errors import NoCrossingError, ParamError

#: Abscissa where the a = 1/2 family lower bound and the a = 2/pi reversed
#: lower bound exchange tightness: u* = (pi/4 - 3/pi) / (3/2 - pi/2),
#: x* = sqrt(u*^2 - 1).  Frozen from that closed form; a regression test
#: re-derives it through dominance_report.
DEFAULT_CROSSOVER = 2.1758413981537927


@dataclass(frozen=True)
class KernelSpec:
    """Kernel configuration: one enclosure parameter per regime plus the
    switch abscissa (a_low serves |x| < crossover, a_high the rest)."""

    a_low: float = 0.5
    a_high: float = TWO_OVER_PI
    crossover: float = DEFAULT_CROSSOVER

    def __post_init__(self):
        if not 0.0 <= self.a_low <= 0.5:
            raise ParamError(f"a_low must lie in [0, 1/2], got {self.a_low!r}")
        if not self.a_high >= TWO_OVER_PI:
            raise ParamError(f"a_high must be >= 2/pi, got {self.a_high!r}")
        if not (math.isfinite(self.crossover) and self.crossover > 0):
            raise ParamError(f"crossover must be positive, got {self.crossover!r}")


DEFAULT_KERNEL = KernelSpec()


@dataclass(frozen=True)
class CertifiedValue:
    """Approximation plus its certified absolute error bound."""

    value: float
    error_bound: float
    x: float


def _coefficients(a: float) -> tuple[float, float]:
    """(lower, upper) numerator constants of the enclosure at parameter a."""
    half_pi = 0.5 * math.pi
    if a <= 0.5:
        return 1.0 + a, half_pi
    return half_pi, 1.0 + a


def approx(spec: KernelSpec, x: float) -> CertifiedValue:
    """Approximate arctan x with a certified error bound, for any finite x.

    Odd symmetry is applied exactly (computed on |x| and negated), x = 0
    returns (0, 0).  math.hypot keeps sqrt(1+x^2) overflow-free across the
    whole double range.
    """
    if x == 0.0:
        return CertifiedValue(0.0, 0.0, x)
    ax = abs(x)
    a = spec.a_low if ax < spec.crossover else spec.a_high
    c_lo, c_hi = _coefficients(a)
    base = ax / (a + math.hypot(1.0, ax))
    value = 0.5 * (c_lo + c_hi) * base
    half = 0.5 * (c_hi - c_lo) * base
    return CertifiedValue(value if x > 0 else -value, half, x)


@dataclass(frozen=True)
class ProfileRow:
    x: float
    value: float
    certified: float
    actual: float
    ratio: float


@dataclass(frozen=True)
class ErrorProfile:
    """Certified versus measured error of a kernel over a grid.

    `actual` is |value - arctan x| measured against the fixed-point oracle;
    `ratio` is (certified + 2 ulp(value)) / actual, folding in the double-
    rounding allowance so that >= 1 everywhere is exactly the certification
    property.  (The raw quotient can dip a hair under 1 at the bottom of the
    grid, where true enclosure margins sit far below one ulp.)
    """

    spec: KernelSpec
    grid: orc.GridSpec
    digits: int
    rows: list[ProfileRow]
    max_certified: float
    max_actual: float

    def write_csv(self, stream: io.TextIOBase) -> None:
        writer = csv.writer(stream)
        writer.writerow(["x", "value", "certified", "actual", "ratio"])
        for r in self.rows:
            writer.writerow([r.x, r.value, r.certified, r.actual, r.ratio])

    def to_json_dict(self) -> dict:
        return {
            "a_low": self.spec.a_low,
            "a_high": self.spec.a_high,
            "crossover": self.spec.crossover,
            "digits": self.digits,
            "grid": {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "points": self.grid.points,
                "spacing": self.grid.spacing,
            },
            "max_certified": self.max_certified,
            "max_actual": self.max_actual,
            "certified_everywhere": all(r.ratio >= 1.0 for r in self.rows),
        }


def error_profile(spec: KernelSpec, grid: orc.GridSpec = orc.DEFAULT_GRID,
                  digits: int = orc.DEFAULT_DIGITS) -> ErrorProfile:
    """Tabulate certified and actual error of the kernel over a grid."""
    rows = []
    max_cert = 0.0
    max_act = 0.0
    oracle_vals = orc._oracle_on_grid(grid, digits)
    for x, oracle_hp in zip(grid.values(), oracle_vals):
        est = approx(spec, x)
        actual = abs(float(fp.FixedReal(est.value, digits) - oracle_hp))
        slack = 2.0 * math.ulp(est.value)
        ratio = math.inf if actual == 0.0 else (est.error_bound + slack) / actual
        rows.append(ProfileRow(x, est.value, est.error_bound, actual, ratio))
        max_cert = max(max_cert, est.error_bound)
        max_act = max(max_act, actual)
    return ErrorProfile(spec=spec, grid=grid, digits=digits, rows=rows,
                        max_certified=max_cert, max_actual=max_act)


def enclosure_half_width(a: float, x: float) -> float:
    """Half-width of the family enclosure at parameter a (certified error of
    its midpoint)."""
    c_lo, c_hi = _coefficients(a)
    return 0.5 * (c_hi - c_lo) * x / (a + math.hypot(1.0, x))


def tune_crossover(a_low: float, a_high: float,
                   grid: orc.GridSpec = orc.DEFAULT_GRID) -> float:
    """Abscissa where the two enclosure half-width curves cross, located by a
    grid scan plus bisection on their difference.

    Raises NoCrossingError when one enclosure is narrower across the whole
    grid, which is the generic situation: for any admissible pair the
    a >= 2/pi enclosure is narrower everywhere than the a <= 1/2 one, so the
    width curves only cross for pairs of large-coefficient parameters such as
    (0, 2).
    """
    if not 0.0 <= a_low <= 0.5:
        raise ParamError(f"a_low must lie in [0, 1/2], got {a_low!r}")
    if not a_high >= TWO_OVER_PI:
        raise ParamError(f"a_high must be >= 2/pi, got {a_high!r}")

    xs = grid.values()
    diffs = [enclosure_half_width(a_low, x) - enclosure_half_width(a_high, x)
             for x in xs]
    lo = hi = None
    for i in range(1, len(xs)):
        if diffs[i - 1] == 0.0:
            return xs[i - 1]
        if diffs[i - 1] * diffs[i] < 0:
            lo, hi = xs[i - 1], xs[i]
            break
    if lo is None:
        if diffs[-1] == 0.0:
            return xs[-1]
        raise NoCrossingError(
            f"half-width curves of a={a_low!r} and a={a_high!r} do not cross "
            f"on [{grid.x_min}, {grid.x_max}]")

    f_lo = enclosure_half_width(a_low, lo) - enclosure_half_width(a_high, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = enclosure_half_width(a_low, mid) - enclosure_half_width(a_high, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
