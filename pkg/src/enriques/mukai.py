"""Mukai vectors v = (r, L, a) on an Enriques surface.

The third component a = chi - r/2 is a half-integer, so it is stored doubled:
``a2 = 2a``. Integrality of chi forces ``a2 = r (mod 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityViolation
from .lattice import NSClass, norm, pair


@dataclass(frozen=True)
class MukaiVector:
    r: int
    L: NSClass
    a2: int

    def __post_init__(self):
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "a2", int(self.a2))

    @property
    def s(self) -> int:
        """The integer s with v = (r, L, s/2)."""
        return self.a2

    def parity_ok(self) -> bool:
        return (self.a2 - self.r) % 2 == 0

    def check_parity(self) -> "MukaiVector":
        if not self.parity_ok():
            raise ParityViolation(
                f"a2={self.a2} and r={self.r} have different parity; chi would not be integral")
        return self

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.L + other.L, self.a2 + other.a2)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.L, -self.a2)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return self + (-other)

    def __mul__(self, n: int) -> "MukaiVector":
        return MukaiVector(n * self.r, n * self.L, n * self.a2)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.a2 == 0 and self.L.is_zero()

    def __str__(self) -> str:
        return f"({self.r},{self.L},{self.a2})"


K_X = NSClass.canonical()

# v(O_X), v(O_X(K_X)) and v(k_x); chi(O_X) = 1 gives a = 1/2.
V_OX = MukaiVector(1, NSClass.zero(), 1)
V_OK = MukaiVector(1, K_X, 1)
V_POINT = MukaiVector(0, NSClass.zero(), 2)
# v(O_X + O_X(K_X) - k_x) = (2, K_X, 0)
V0 = V_OX + V_OK - V_POINT


def line_bundle(D: NSClass) -> MukaiVector:
    """v(O_X(D)) = (1, D, (D^2)/2 + 1/2)."""
    return MukaiVector(1, D, norm(D) + 1)


def mukai_pair(v: MukaiVector, w: MukaiVector) -> int:
    """<v, w> = (L, L') - r a' - r' a."""
    v.check_parity()
    w.check_parity()
    num = v.r * w.a2 + w.r * v.a2
    # both terms are even once parity holds
    return pair(v.L, w.L) - num // 2


def mukai_square(v: MukaiVector) -> int:
    """<v^2> = (L^2) - r s."""
    return mukai_pair(v, v)


def chi(v: MukaiVector):
    """Euler characteristic chi = a + r/2; an int whenever the parity holds."""
    total = v.a2 + v.r
    if total % 2 == 0:
        return total // 2
    return Fraction(total, 2)


def gcd_divisibility(v: MukaiVector) -> tuple[int, int]:
    """(gcd(r, L, s), gcd(r, L, (r+s)/2)).

    Divisibility of L is the gcd of its free coordinates; the K_X bit is left
    out, torsion conditions being separate congruences mod 2.
    """
    if v.is_zero():
        raise ValueError("divisibility of the zero vector is undefined")
    v.check_parity()
    g = v.L.free_gcd()
    return math.gcd(v.r, g, v.a2), math.gcd(v.r, g, (v.r + v.a2) // 2)


def is_primitive(v: MukaiVector) -> bool:
    return gcd_divisibility(v)[1] == 1


def congruent_mod2(x: NSClass, y: NSClass) -> bool:
    """x = y in NS(X)/2NS(X). 2NS(X) has no torsion part, so the K_X bits must agree."""
    if x.torsion != y.torsion:
        return False
    return all((a - b) % 2 == 0 for a, b in zip(x.free, y.free))
