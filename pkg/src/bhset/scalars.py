"""Numeric backends: exact rationals, exact Gaussian rationals, binary64 floats.

Exact backends never round: rationals live in ``fractions.Fraction`` (always
lowest terms, positive denominator) and complex values are pairs of such
rationals.  Complex magnitudes are carried as *squared* moduli so that no
square root is ever materialized; magnitude comparisons therefore stay exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import isfinite, isqrt
from typing import Union

from .errors import BackendMismatchError, ScalarSyntaxError

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FLOAT = "float"
BACKENDS = (RATIONAL, GAUSSIAN, FLOAT)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Supports the arithmetic the sumset kernels need: addition, subtraction,
    negation, and multiplication by integers or rationals.  A value with zero
    imaginary part compares (and hashes) equal to the rational it embeds.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        # Scaling by a rational only; full complex products are not needed.
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def mag_sq(self) -> Fraction:
        """Squared modulus re^2 + im^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic (re, im) key used for canonical ordering."""
        return (self.re, self.im)


def _as_gaussian(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


Scalar = Union[Fraction, GaussianRational, float]

_INT = r"-?[0-9]+"
_DEC = r"-?[0-9]+\.[0-9]+"
_RAT = r"-?[0-9]+/[1-9][0-9]*"
_REAL = f"(?:{_RAT}|{_DEC}|{_INT})"
_REAL_PAT = re.compile(rf"{_REAL}\Z")
_COMPLEX_PAT = re.compile(rf"(?P<re>{_REAL})(?:(?P<sign>[+-])(?P<im>{_REAL})?i)?\Z")
_ZERO_DEN_PAT = re.compile(r"-?[0-9]+/0[0-9]*\Z")


def backend_of(value: Scalar) -> str:
    """Backend tag of a scalar value (ints count as rationals)."""
    if isinstance(value, (Fraction, int)):
        return RATIONAL
    if isinstance(value, GaussianRational):
        return GAUSSIAN
    if isinstance(value, float):
        return FLOAT
    raise BackendMismatchError(f"not a scalar: {value!r}")


def check_backend(tag: str) -> str:
    if tag not in BACKENDS:
        raise BackendMismatchError(f"unknown backend {tag!r}; expected one of {BACKENDS}")
    return tag


def parse_scalar(text: str, backend: str) -> Scalar:
    """Parse ``text`` under the scalar grammar for the given backend.

    Integers, decimals and "p/q" literals convert exactly; the gaussian
    backend additionally accepts "re+imi" / "re-imi" forms.  Decimals never
    round-trip through floats on exact backends.
    """
    check_backend(backend)
    if not isinstance(text, str):
        raise ScalarSyntaxError(f"scalar must be a string, got {type(text).__name__}")
    if backend == GAUSSIAN:
        m = _COMPLEX_PAT.fullmatch(text)
        if m is None:
            _raise_syntax(text)
        real = Fraction(m.group("re"))
        if m.group("sign") is None:
            return GaussianRational(real, 0)
        unit = Fraction(m.group("im")) if m.group("im") is not None else Fraction(1)
        if m.group("sign") == "-":
            unit = -unit
        return GaussianRational(real, unit)
    if _REAL_PAT.fullmatch(text) is None:
        _raise_syntax(text)
    value = Fraction(text)
    if backend == FLOAT:
        return float(value)
    return value


def _raise_syntax(text: str):
    if _ZERO_DEN_PAT.fullmatch(text):
        raise ScalarSyntaxError(f"zero denominator in {text!r}")
    raise ScalarSyntaxError(f"malformed scalar {text!r}")


def format_scalar(value: Scalar) -> str:
    """Render a scalar in the grammar accepted by :func:`parse_scalar`."""
    if isinstance(value, (Fraction, int)):
        return str(value)
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return str(value.re)
        sign = "-" if value.im < 0 else "+"
        return f"{value.re}{sign}{abs(value.im)}i"
    if isinstance(value, float):
        return _format_float(value)
    raise BackendMismatchError(f"not a scalar: {value!r}")


def _format_float(x: float) -> str:
    if not isfinite(x):
        raise ValueError(f"non-finite float {x!r} has no grammar form")
    s = repr(x)
    if "e" in s or "E" in s:
        # repr is shortest-round-trip; re-render positionally to stay in-grammar.
        s = format(Decimal(s), "f")
        if "." not in s:
            s += ".0"
    return s


@dataclass(frozen=True)
class Magnitude:
    """Absolute value of a scalar, exact where the backend allows.

    Real rationals carry |x| directly (``squared`` false); Gaussian rationals
    carry |z|^2 (``squared`` true) so the value stays rational.  Only
    magnitudes of the same backend and form are comparable.
    """

    value: Union[Fraction, float]
    squared: bool
    backend: str

    def _key(self, other: "Magnitude"):
        if not isinstance(other, Magnitude):
            raise BackendMismatchError("can only compare Magnitude with Magnitude")
        if self.backend != other.backend or self.squared != other.squared:
            raise BackendMismatchError(
                f"incomparable magnitudes: {self.backend}/sq={self.squared} "
                f"vs {other.backend}/sq={other.squared}"
            )
        return other.value

    def __lt__(self, other):
        return self.value < self._key(other)

    def __le__(self, other):
        return self.value <= self._key(other)

    def __gt__(self, other):
        return self.value > self._key(other)

    def __ge__(self, other):
        return self.value >= self._key(other)

    def divided_by(self, k: int) -> "Magnitude":
        """Magnitude of value/k for positive integer k (k^2 in squared form)."""
        if k < 1:
            raise ValueError("divisor must be a positive integer")
        den = k * k if self.squared else k
        return Magnitude(self.value / den, self.squared, self.backend)


def magnitude(value: Scalar) -> Magnitude:
    """Magnitude of a scalar in its backend's canonical form."""
    tag = backend_of(value)
    if tag == RATIONAL:
        return Magnitude(abs(Fraction(value)), False, RATIONAL)
    if tag == GAUSSIAN:
        return Magnitude(value.mag_sq(), True, GAUSSIAN)
    return Magnitude(abs(value), False, FLOAT)


def mag_compare(u: Scalar, v: Scalar) -> int:
    """Order |u| against |v|: -1, 0, or +1.

    Exact backends compare via rationals (squared moduli for gaussians), so
    the result is never contaminated by rounding.
    """
    bu, bv = backend_of(u), backend_of(v)
    if bu != bv:
        raise BackendMismatchError(f"mixed backends {bu!r} and {bv!r}")
    if bu == GAUSSIAN:
        a, b = u.mag_sq(), v.mag_sq()
    else:
        a, b = abs(u), abs(v)
    return (a > b) - (a < b)


def scale_by_rational(value: Scalar, factor) -> Scalar:
    """Multiply a scalar by an exact rational factor.

    Exact for exact backends; float values multiply by the binary64 image of
    the factor.
    """
    factor = Fraction(factor)
    tag = backend_of(value)
    if tag == RATIONAL:
        return Fraction(value) * factor
    if tag == GAUSSIAN:
        return value * factor
    return value * float(factor)


def rational_sqrt_lower(x: Fraction) -> Fraction:
    """A fraction r with r^2 <= x, strictly positive whenever x > 0.

    Computed as isqrt(num*den)/den, tight to within 1/den of the true root;
    the perturbation bounds here only need positivity plus the inequality.
    """
    if x < 0:
        raise ValueError("square root of a negative rational")
    return Fraction(isqrt(x.numerator * x.denominator), x.denominator)
