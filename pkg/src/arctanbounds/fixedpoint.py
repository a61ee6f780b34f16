"""Integer-scaled fixed-point arithmetic with error-bounded elementary functions.

A value is an integer count of units of ``10**-digits``.  All primitives
(multiply, divide, square root) round toward minus infinity and are off by
less than one unit.  The transcendental routines (arctan, log, pi) carry ten
guard digits internally, so their results are accurate to well under one unit
of the requested precision; arctan in particular satisfies an absolute error
below ``10**-digits`` by several orders of magnitude.

Python integers already provide exact floor division and an exact integer
square root (``math.isqrt``), so no iterative refinement layer is needed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PrecisionError

_GUARD_DIGITS = 10


@lru_cache(maxsize=None)
def _pow10(digits: int) -> int:
    return 10 ** digits


def _round_div(n: int, d: int) -> int:
    # round to nearest, ties away from zero; d > 0
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def _rescale(units: int, from_digits: int, to_digits: int) -> int:
    if to_digits >= from_digits:
        return units * 10 ** (to_digits - from_digits)
    return _round_div(units, 10 ** (from_digits - to_digits))


def _atan_inv_small_int(m: int, scale: int) -> int:
    """arctan(1/m) for integer m >= 2, in units of 1/scale.

    Classic integer alternating series; each term is an exact floor of the
    previous, so the accumulated error stays below the term count in units.
    """
    total = term = scale // m
    m2 = m * m
    k = 3
    sign = -1
    while term:
        term //= m2
        total += sign * (term // k)
        k += 2
        sign = -sign
    return total


@lru_cache(maxsize=None)
def pi_units(digits: int) -> int:
    """pi in units of 10**-digits, via the Machin combination 16*arctan(1/5) - 4*arctan(1/239)."""
    work = digits + _GUARD_DIGITS
    scale = 10 ** work
    val = 16 * _atan_inv_small_int(5, scale) - 4 * _atan_inv_small_int(239, scale)
    return _rescale(val, work, digits)


def sqrt_units(units: int, digits: int) -> int:
    """Floor square root in fixed point: isqrt(units * 10**digits)."""
    if units < 0:
        raise DomainError("square root of a negative value")
    return math.isqrt(units * 10 ** digits)


def _series_budget(digits: int) -> int:
    # reduced arguments satisfy |t| <= 1/8 (arctan) or |z| <= ~1/500 (atanh),
    # so the true term count is ~digits/1.8; the budget only guards bugs
    return 8 * digits + 64


def _atan_reduced(t: int, scale: int, digits: int) -> int:
    """arctan of 0 <= t <= scale/8, alternating Taylor series with
    first-omitted-term cutoff."""
    total = term = t
    tsq = t * t // scale
    k = 3
    sign = -1
    budget = _series_budget(digits)
    while True:
        term = term * tsq // scale
        contrib = term // k
        if contrib == 0:
            break
        total += sign * contrib
        sign = -sign
        k += 2
        if k > budget:
            raise PrecisionError("arctan series budget exhausted")
    return total


def atan_units(x_units: int, digits: int) -> int:
    """arctan of x_units/10**digits, in the same units.

    Reduction: odd symmetry (computed on |x| and negated, so the symmetry is
    exact); arctan x = pi/2 - arctan(1/x) for |x| > 1; then the halving
    identity arctan x = 2*arctan(x / (1 + sqrt(1+x^2))) until the argument is
    at most 1/8.
    """
    if x_units == 0:
        return 0
    work = digits + _GUARD_DIGITS
    scale = 10 ** work
    t = abs(x_units) * 10 ** _GUARD_DIGITS

    recip = False
    if t > scale:
        t = scale * scale // t
        recip = True

    halvings = 0
    eighth = scale // 8
    while t > eighth:
        u = math.isqrt((scale + t * t // scale) * scale)  # sqrt(1 + t^2)
        t = t * scale // (scale + u)
        halvings += 1
        if halvings > 8:
            raise PrecisionError("argument halving failed to reduce")

    total = _atan_reduced(t, scale, work) << halvings
    if recip:
        total = pi_units(work) // 2 - total

    result = _rescale(total, work, digits)
    return result if x_units > 0 else -result


def log_units(y_units: int, digits: int) -> int:
    """Natural log of y_units/10**digits, in the same units.

    Reduction: repeated square roots pull the argument into (1 - 1/256,
    1 + 1/256), then ln y = 2*atanh((y-1)/(y+1)) by the odd atanh series.
    Each square root doubles the final error, bounded by the guard digits.
    """
    if y_units <= 0:
        raise DomainError("log of a non-positive value")
    work = digits + _GUARD_DIGITS
    scale = 10 ** work
    t = y_units * 10 ** _GUARD_DIGITS

    doublings = 0
    window = scale // 256
    while abs(t - scale) > window:
        t = math.isqrt(t * scale)
        doublings += 1
        if doublings > 120:
            raise PrecisionError("log reduction failed to converge")

    z = (t - scale) * scale // (t + scale)
    neg = z < 0
    z = abs(z)
    total = term = z
    zsq = z * z // scale
    k = 3
    budget = _series_budget(work)
    while True:
        term = term * zsq // scale
        contrib = term // k
        if contrib == 0:
            break
        total += contrib
        k += 2
        if k > budget:
            raise PrecisionError("log series budget exhausted")

    total = (-total if neg else total) << (doublings + 1)
    return _rescale(total, work, digits)


class FixedReal:
    """An immutable fixed-point real: ``units * 10**-digits``.

    Mixed arithmetic with ints is exact; floats and Fractions are converted
    through their exact rational value (a float contributes the real number
    it actually stores, not its decimal spelling).  Two FixedReal operands
    must carry the same precision; mixing precisions raises ValueError rather
    than silently degrading.
    """

    __slots__ = ("units", "digits")

    def __init__(self, value: "int | float | str | Fraction | FixedReal" = 0, digits: int = 30):
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if isinstance(value, FixedReal):
            units = _rescale(value.units, value.digits, digits)
        elif isinstance(value, int):
            units = value * 10 ** digits
        elif isinstance(value, float):
            if not math.isfinite(value):
                raise DomainError("cannot represent a non-finite float")
            frac = Fraction(value)
            units = _round_div(frac.numerator * 10 ** digits, frac.denominator)
        elif isinstance(value, (Fraction, str)):
            frac = Fraction(value)
            units = _round_div(frac.numerator * 10 ** digits, frac.denominator)
        else:
            raise TypeError(f"cannot build FixedReal from {type(value).__name__}")
        self.units = units
        self.digits = digits

    @classmethod
    def _raw(cls, units: int, digits: int) -> "FixedReal":
        obj = object.__new__(cls)
        obj.units = units
        obj.digits = digits
        return obj

    @classmethod
    def pi(cls, digits: int) -> "FixedReal":
        return cls._raw(pi_units(digits), digits)

    @property
    def scale(self) -> int:
        return _pow10(self.digits)

    def _coerce(self, other):
        if isinstance(other, FixedReal):
            if other.digits != self.digits:
                raise ValueError(
                    f"precision mismatch: {self.digits} vs {other.digits} digits"
                )
            return other
        if isinstance(other, (int, float, Fraction)):
            return FixedReal(other, self.digits)
        return None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FixedReal._raw(self.units + rhs.units, self.digits)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FixedReal._raw(self.units - rhs.units, self.digits)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FixedReal._raw(rhs.units - self.units, self.digits)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FixedReal._raw(self.units * rhs.units // self.scale, self.digits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.units == 0:
            raise ZeroDivisionError("fixed-point division by zero")
        return FixedReal._raw(self.units * self.scale // rhs.units, self.digits)

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.units == 0:
            raise ZeroDivisionError("fixed-point division by zero")
        return FixedReal._raw(rhs.units * self.scale // self.units, self.digits)

    def __neg__(self):
        return FixedReal._raw(-self.units, self.digits)

    def __abs__(self):
        return FixedReal._raw(abs(self.units), self.digits)

    # comparisons ----------------------------------------------------------

    def _cmp_units(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return None
        return rhs.units

    def __eq__(self, other):
        rhs = self._cmp_units(other)
        return NotImplemented if rhs is None else self.units == rhs

    def __lt__(self, other):
        rhs = self._cmp_units(other)
        return NotImplemented if rhs is None else self.units < rhs

    def __le__(self, other):
        rhs = self._cmp_units(other)
        return NotImplemented if rhs is None else self.units <= rhs

    def __gt__(self, other):
        rhs = self._cmp_units(other)
        return NotImplemented if rhs is None else self.units > rhs

    def __ge__(self, other):
        rhs = self._cmp_units(other)
        return NotImplemented if rhs is None else self.units >= rhs

    def __hash__(self):
        return hash((self.units, self.digits))

    # elementary functions -------------------------------------------------

    def sqrt(self) -> "FixedReal":
        return FixedReal._raw(sqrt_units(self.units, self.digits), self.digits)

    def atan(self) -> "FixedReal":
        return FixedReal._raw(atan_units(self.units, self.digits), self.digits)

    def log(self) -> "FixedReal":
        return FixedReal._raw(log_units(self.units, self.digits), self.digits)

    # conversions ----------------------------------------------------------

    def __float__(self) -> float:
        # big-int true division is correctly rounded in CPython
        return self.units / self.scale

    def as_fraction(self) -> Fraction:
        return Fraction(self.units, self.scale)

    def as_decimal_string(self) -> str:
        sign = "-" if self.units < 0 else ""
        whole, frac = divmod(abs(self.units), self.scale)
        return f"{sign}{whole}.{frac:0{self.digits}d}"

    def __repr__(self) -> str:
        return f"FixedReal('{self.as_decimal_string()}', digits={self.digits})"


# generic dispatch: the closed-form bound and family expressions are written
# once with ordinary operators and evaluated either on floats or on FixedReal

def sqrt_of(v):
    return v.sqrt() if isinstance(v, FixedReal) else math.sqrt(v)


def log_of(v):
    return v.log() if isinstance(v, FixedReal) else math.log(v)


def atan_of(v):
    return v.atan() if isinstance(v, FixedReal) else math.atan(v)


def pi_of(like):
    """pi at the precision of `like` (math.pi on the float path)."""
    return FixedReal.pi(like.digits) if isinstance(like, FixedReal) else math.pi


def lift_to(value, like):
    """Convert `value` exactly into the numeric world of `like`."""
    return FixedReal(value, like.digits) if isinstance(like, FixedReal) else float(value)
