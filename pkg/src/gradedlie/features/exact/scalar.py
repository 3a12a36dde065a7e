"""Exact arithmetic in the quadratic field Q(sqrt 2)."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Dict, Union

Rational = Union[int, Fraction]


@total_ordering
class Scalar:
    """The number r + s*sqrt(2) with rational r and s."""

    __slots__ = ("_r", "_s")

    def __init__(self, r: Rational = 0, s: Rational = 0) -> None:
        self._r = Fraction(r)
        self._s = Fraction(s)

    @property
    def r(self) -> Fraction:
        return self._r

    @property
    def s(self) -> Fraction:
        return self._s

    @classmethod
    def coerce(cls, value: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"Cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def sqrt2(cls) -> "Scalar":
        return cls(0, 1)

    def __repr__(self) -> str:
        return f"Scalar({self._r}, {self._s})"

    def __str__(self) -> str:
        if not self._s:
            return str(self._r)
        magnitude = abs(self._s)
        root = "√2" if magnitude == 1 else f"{magnitude}√2"
        sign = "-" if self._s < 0 else "+"
        if not self._r:
            return root if sign == "+" else f"-{root}"
        return f"{self._r}{sign}{root}"

    def __hash__(self) -> int:
        if not self._s:
            return hash(self._r)
        return hash((self._r, self._s))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._r == other._r and self._s == other._s
        if isinstance(other, (int, Fraction)):
            return not self._s and self._r == other
        return NotImplemented

    def __lt__(self, other: Union["Scalar", Rational]) -> bool:
        diff = self - Scalar.coerce(other)
        return diff.sign() < 0

    def __bool__(self) -> bool:
        return bool(self._r) or bool(self._s)

    def __neg__(self) -> "Scalar":
        return Scalar(-self._r, -self._s)

    def __add__(self, other: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(other, Scalar):
            return Scalar(self._r + other._r, self._s + other._s)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._r + other, self._s)
        return NotImplemented

    def __radd__(self, other: Rational) -> "Scalar":
        return self + other

    def __sub__(self, other: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(other, Scalar):
            return Scalar(self._r - other._r, self._s - other._s)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._r - other, self._s)
        return NotImplemented

    def __rsub__(self, other: Rational) -> "Scalar":
        return (-self) + other

    def __mul__(self, other: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(other, Scalar):
            return Scalar(
                self._r * other._r + 2 * self._s * other._s,
                self._r * other._s + self._s * other._r,
            )
        if isinstance(other, (int, Fraction)):
            return Scalar(self._r * other, self._s * other)
        return NotImplemented

    def __rmul__(self, other: Rational) -> "Scalar":
        return self * other

    def __truediv__(self, other: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar(self._r / other, self._s / other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Rational) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        """The Galois conjugate r - s*sqrt(2)."""
        return Scalar(self._r, -self._s)

    def norm(self) -> Fraction:
        """r^2 - 2 s^2, nonzero for every nonzero element."""
        return self._r * self._r - 2 * self._s * self._s

    def inverse(self) -> "Scalar":
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(self._r / norm, -self._s / norm)

    def sign(self) -> int:
        """Sign of the real number r + s*sqrt(2)."""
        if not self._s:
            return (self._r > 0) - (self._r < 0)
        if not self._r:
            return (self._s > 0) - (self._s < 0)
        if (self._r > 0) == (self._s > 0):
            return 1 if self._r > 0 else -1
        # opposite signs: compare r^2 with 2 s^2
        dominant_r = self._r * self._r > 2 * self._s * self._s
        if dominant_r:
            return 1 if self._r > 0 else -1
        return 1 if self._s > 0 else -1

    @property
    def is_rational(self) -> bool:
        return not self._s

    @property
    def is_integer(self) -> bool:
        return not self._s and self._r.denominator == 1

    def to_json(self) -> Dict[str, str]:
        return {"r": _fraction_text(self._r), "s": _fraction_text(self._s)}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "Scalar":
        return cls(Fraction(data["r"]), Fraction(data["s"]))


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
