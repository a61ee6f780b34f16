"""High-precision arctan reference and the grid-sweep verification engine.

The oracle evaluates arctan in integer fixed point (argument reduction plus
an alternating Taylor series, see :mod:`arctanbounds.fixedpoint`) with an
absolute error far below ``10**-digits``.  Sweeps compare a catalog bound
against the oracle at every grid point *with the bound itself also evaluated
in fixed point*: several true margins on the default grid (for instance the
a = 1/2 family lower bound near x = 1e-8, margin ~ x^5/180 ~ 5.6e-43) sit far
below one double ulp, so float evaluation would report spurious ties.  The
default 50 sweep digits resolve every certified margin on the default grid
with several orders to spare.

Margins are reported absolutely for x <= 1 and relative to the oracle for
x > 1 (both arctan and every bound vanish linearly at 0 and level off at
pi/2, so one convention cannot serve both ends of the grid).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import catalog as cat
from . import fixedpoint as fp
from .errors import DomainError, ParamError

DEFAULT_DIGITS = 30
DEFAULT_SWEEP_DIGITS = 50

#: Relative closeness under which two bounds count as tied in dominance reports.
DOMINANCE_EQUAL_RTOL = 1e-15


def oracle_arctan(x: float, digits: int = DEFAULT_DIGITS) -> fp.FixedReal:
    """arctan of the exact value of the double x, to `digits` decimal digits.

    The absolute error is below 10**-digits (the internal computation carries
    ten guard digits).  Returns a FixedReal; ``float()`` it for a correctly
    rounded double.
    """
    if digits < 20:
        raise ParamError("oracle mode needs at least 20 digits")
    if not math.isfinite(x):
        raise DomainError("oracle_arctan needs a finite argument")
    return fp.FixedReal(float(x), digits).atan()


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid. Log spacing requires x_min > 0."""

    x_min: float
    x_max: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if self.spacing not in ("log", "linear"):
            raise ParamError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")
        if self.points < 2:
            raise ParamError("a grid needs at least 2 points")
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ParamError("grid endpoints must be finite")
        if not self.x_min < self.x_max:
            raise ParamError("x_min must be below x_max")
        if self.spacing == "log" and self.x_min <= 0:
            raise ParamError("log spacing needs x_min > 0")

    def values(self) -> tuple[float, ...]:
        return _grid_values(self)


@lru_cache(maxsize=32)
def _grid_values(grid: GridSpec) -> tuple[float, ...]:
    n = grid.points
    if grid.spacing == "log":
        lo, hi = math.log(grid.x_min), math.log(grid.x_max)
        inner = (math.exp(lo + (hi - lo) * i / (n - 1)) for i in range(1, n - 1))
    else:
        lo, hi = grid.x_min, grid.x_max
        inner = (lo + (hi - lo) * i / (n - 1) for i in range(1, n - 1))
    return (grid.x_min, *inner, grid.x_max)


#: Default verification grid: both limiting regimes (x -> 0 and x -> inf) are
#: where the bound constants are attained, so the grid spans them widely.
DEFAULT_GRID = GridSpec(1e-8, 1e8, 10_000, "log")


@lru_cache(maxsize=8)
def _oracle_on_grid(grid: GridSpec, digits: int) -> tuple[fp.FixedReal, ...]:
    return tuple(fp.FixedReal(x, digits).atan() for x in grid.values())


def _reported_margin(x: float, margin: float, oracle_value: float) -> float:
    return margin if x <= 1.0 else margin / oracle_value


@dataclass(frozen=True)
class SweepReport:
    """Outcome of checking one bound against the oracle over a grid.

    rows hold (x, bound, oracle, margin) per grid point; margin is signed so
    that positive means the inequality holds at that point.  violations list
    (x, bound, oracle) for every non-positive margin; the report is clean iff
    violations is empty iff min_margin > 0.
    """

    bound: cat.BoundId
    a: Optional[float]
    side: str
    grid: GridSpec
    digits: int
    rows: list[tuple[float, float, float, float]] = field(repr=False)
    violations: list[tuple[float, float, float]]
    min_margin: float
    min_margin_x: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound.value,
            "a": self.a,
            "side": self.side,
            "digits": self.digits,
            "grid": {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "points": self.grid.points,
                "spacing": self.grid.spacing,
            },
            "trusted": cat.bound_is_trusted(self.bound),
            "violations": [
                {"x": x, "bound": b, "oracle": o} for x, b, o in self.violations
            ],
            "violation_count": len(self.violations),
            "min_margin": self.min_margin,
            "min_margin_x": self.min_margin_x,
            "ok": self.ok,
        }

    def write_csv(self, stream: io.TextIOBase) -> None:
        writer = csv.writer(stream)
        writer.writerow(["x", "bound", "oracle", "margin"])
        writer.writerows(self.rows)


def sweep(bound: cat.BoundId, a: Optional[float] = None,
          grid: GridSpec = DEFAULT_GRID, side: Optional[str] = None,
          digits: int = DEFAULT_SWEEP_DIGITS) -> SweepReport:
    """Check one bound's containment claim at every grid point.

    For a lower bound, a violation is bound >= arctan; for an upper bound,
    bound <= arctan.  `side` defaults to the catalog's declared side of the
    bound and must agree with it when given.
    """
    declared = cat.bound_side(bound)
    if side is None:
        side = declared
    elif side != declared:
        raise ParamError(f"{bound.value} is a {declared} bound, not {side}")
    if digits < 20:
        raise ParamError("sweep needs at least 20 digits")

    xs = grid.values()
    oracle_vals = _oracle_on_grid(grid, digits)
    rows = []
    violations = []
    min_margin = math.inf
    min_x = xs[0]
    for x, oracle_hp in zip(xs, oracle_vals):
        bound_hp = cat.eval_bound_hp(bound, x, a, digits=digits)
        diff = (oracle_hp - bound_hp) if side == "lower" else (bound_hp - oracle_hp)
        oracle_f = float(oracle_hp)
        bound_f = float(bound_hp)
        margin = _reported_margin(x, float(diff), oracle_f)
        rows.append((x, bound_f, oracle_f, margin))
        if diff.units <= 0:
            violations.append((x, bound_f, oracle_f))
        if margin < min_margin:
            min_margin = margin
            min_x = x
    return SweepReport(bound=bound, a=a, side=side, grid=grid, digits=digits,
                       rows=rows, violations=violations,
                       min_margin=min_margin, min_margin_x=min_x)


@dataclass(frozen=True)
class DominanceRegion:
    x_lo: float
    x_hi: float
    verdict: str  # "a" | "b" | "equal"


@dataclass(frozen=True)
class DominanceReport:
    """Pointwise tightness comparison of two same-side bounds.

    Region labels use the relative tie tolerance DOMINANCE_EQUAL_RTOL; the
    sign counts ignore it and record the exact fixed-point ordering, which is
    what "strictly tighter everywhere" statements should be read against
    (near x = 0 two uppers can differ by ~1e-18 relative: a real, strict gap
    that the tie band would label "equal").
    """

    bound_a: cat.BoundId
    bound_b: cat.BoundId
    a_a: Optional[float]
    a_b: Optional[float]
    side: str
    grid: GridSpec
    digits: int
    regions: list[DominanceRegion]
    crossovers: list[float]
    a_tighter: int
    b_tighter: int
    equal: int
    a_strict: int
    b_strict: int
    zero_diff: int

    @property
    def a_strictly_tighter_everywhere(self) -> bool:
        return self.a_strict > 0 and self.b_strict == 0 and self.zero_diff == 0

    @property
    def b_strictly_tighter_everywhere(self) -> bool:
        return self.b_strict > 0 and self.a_strict == 0 and self.zero_diff == 0

    def to_json_dict(self) -> dict:
        return {
            "bound_a": self.bound_a.value,
            "bound_b": self.bound_b.value,
            "a_a": self.a_a,
            "a_b": self.a_b,
            "side": self.side,
            "digits": self.digits,
            "grid": {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "points": self.grid.points,
                "spacing": self.grid.spacing,
            },
            "regions": [
                {"x_lo": r.x_lo, "x_hi": r.x_hi, "verdict": r.verdict}
                for r in self.regions
            ],
            "crossovers": list(self.crossovers),
            "counts": {
                "a_tighter": self.a_tighter,
                "b_tighter": self.b_tighter,
                "equal": self.equal,
            },
            "strict_sign_counts": {
                "a": self.a_strict,
                "b": self.b_strict,
                "zero": self.zero_diff,
            },
        }


def _tightness_sign(side: str, val_a: fp.FixedReal, val_b: fp.FixedReal) -> int:
    """+1 if A is strictly tighter, -1 if B is, 0 on an exact tie."""
    diff = val_a.units - val_b.units
    if diff == 0:
        return 0
    if side == "lower":  # bigger lower bound is tighter
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


def dominance_report(bound_a: cat.BoundId, bound_b: cat.BoundId,
                     a_a: Optional[float] = None, a_b: Optional[float] = None,
                     grid: GridSpec = DEFAULT_GRID,
                     digits: int = DEFAULT_SWEEP_DIGITS) -> DominanceReport:
    """Partition the grid by which of two same-side bounds is tighter.

    Crossover abscissae are refined by bisection on the sign of the
    difference between adjacent grid points whose verdicts flip.
    """
    side_a = cat.bound_side(bound_a)
    side_b = cat.bound_side(bound_b)
    if side_a != side_b:
        raise ParamError(
            f"dominance needs same-side bounds; {bound_a.value} is {side_a}, "
            f"{bound_b.value} is {side_b}")
    side = side_a

    xs = grid.values()
    verdicts = []
    signs = []
    for x in xs:
        va = cat.eval_bound_hp(bound_a, x, a_a, digits=digits)
        vb = cat.eval_bound_hp(bound_b, x, a_b, digits=digits)
        sign = _tightness_sign(side, va, vb)
        signs.append(sign)
        tie = abs(va.units - vb.units) <= max(abs(va.units), abs(vb.units)) * DOMINANCE_EQUAL_RTOL
        verdicts.append("equal" if tie else ("a" if sign > 0 else "b"))

    regions = []
    start = 0
    for i in range(1, len(xs) + 1):
        if i == len(xs) or verdicts[i] != verdicts[start]:
            regions.append(DominanceRegion(xs[start], xs[i - 1], verdicts[start]))
            start = i

    crossovers = []
    prev_idx = None
    for i, v in enumerate(verdicts):
        if v == "equal":
            continue
        if prev_idx is not None and verdicts[prev_idx] != v:
            crossovers.append(_bisect_crossover(
                bound_a, bound_b, a_a, a_b, side, xs[prev_idx], xs[i], digits))
        prev_idx = i

    return DominanceReport(
        bound_a=bound_a, bound_b=bound_b, a_a=a_a, a_b=a_b, side=side,
        grid=grid, digits=digits, regions=regions, crossovers=crossovers,
        a_tighter=verdicts.count("a"), b_tighter=verdicts.count("b"),
        equal=verdicts.count("equal"),
        a_strict=sum(1 for s in signs if s > 0),
        b_strict=sum(1 for s in signs if s < 0),
        zero_diff=sum(1 for s in signs if s == 0),
    )


def _bisect_crossover(bound_a, bound_b, a_a, a_b, side, lo, hi, digits) -> float:
    def sign_at(x: float) -> int:
        va = cat.eval_bound_hp(bound_a, x, a_a, digits=digits)
        vb = cat.eval_bound_hp(bound_b, x, a_b, digits=digits)
        return _tightness_sign(side, va, vb)

    s_lo = sign_at(lo)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        s_mid = sign_at(mid)
        if s_mid == 0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
        if (hi - lo) <= 1e-13 * max(1.0, abs(hi)):
            break
    return 0.5 * (lo + hi)
