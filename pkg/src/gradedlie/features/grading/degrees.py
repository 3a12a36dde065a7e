"""Z2xZ2 degrees and the two sign conventions for graded brackets."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


@dataclass(frozen=True, slots=True, order=True)
class Degree:
    """An element (a1, a2) of Z2xZ2 labelling a homogeneous component."""

    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 not in (0, 1) or self.a2 not in (0, 1):
            raise ValueError(f"Degree components must be bits, got ({self.a1}, {self.a2})")

    def __add__(self, other: "Degree") -> "Degree":
        return Degree((self.a1 + other.a1) % 2, (self.a2 + other.a2) % 2)

    def __str__(self) -> str:
        return f"{self.a1}{self.a2}"

    def __repr__(self) -> str:
        return f"Degree({self.a1}, {self.a2})"

    @property
    def is_zero(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    @classmethod
    def parse(cls, text: str) -> "Degree":
        """Parse the two-character wire form "00", "01", "10" or "11"."""
        cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
        if len(cleaned) != 2 or any(ch not in "01" for ch in cleaned):
            raise ValueError(f"Invalid degree string: {text!r}")
        return cls(int(cleaned[0]), int(cleaned[1]))


ZERO = Degree(0, 0)
D01 = Degree(0, 1)
D10 = Degree(1, 0)
D11 = Degree(1, 1)


def all_degrees() -> Tuple[Degree, ...]:
    """All four degrees in canonical order (0,0), (0,1), (1,0), (1,1)."""
    return (ZERO, D01, D10, D11)


class SignConvention(str, Enum):
    """Which pairing a.b drives the sign (-1)^{a.b} of the bracket."""

    LIE_ALGEBRA = "lie_algebra"
    LIE_SUPERALGEBRA = "lie_superalgebra"

    def pairing(self, a: Degree, b: Degree) -> int:
        """Return a.b reduced mod 2."""
        if self is SignConvention.LIE_ALGEBRA:
            return (a.a1 * b.a2 - a.a2 * b.a1) % 2
        return (a.a1 * b.a1 + a.a2 * b.a2) % 2

    def sign(self, a: Degree, b: Degree) -> int:
        return -1 if self.pairing(a, b) else 1


def add_degrees(a: Degree, b: Degree) -> Degree:
    """Componentwise sum mod 2."""
    return a + b


def bracket_sign(conv: SignConvention, a: Degree, b: Degree) -> int:
    """Return (-1)^{a.b} under the pairing of ``conv``."""
    return conv.sign(a, b)
