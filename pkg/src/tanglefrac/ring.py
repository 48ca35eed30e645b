"""
Exact arithmetic in Z[x]/(x^4 + 1), the eighth-cyclotomic integers.

The generator ``x`` stands for A = exp(i*pi/4), so ``x**2`` is i and
``x**4`` is -1.  Python integers are unbounded, so coefficients never
overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

__all__ = [
    "CycInt",
    "ZERO",
    "ONE",
    "X",
    "I",
    "add",
    "mul",
    "unit_pow",
    "conj",
    "as_unit_multiple",
    "is_integer",
]


@dataclass(frozen=True, slots=True)
class CycInt:
    """c0 + c1*A + c2*A^2 + c3*A^3 with integer coefficients."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @classmethod
    def from_int(cls, n: int) -> CycInt:
        return cls(int(n), 0, 0, 0)

    @property
    def coeffs(self) -> Tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return CycInt(self.c0 + other.c0, self.c1 + other.c1,
                      self.c2 + other.c2, self.c3 + other.c3)

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(other * self.c0, other * self.c1,
                          other * self.c2, other * self.c3)
        if not isinstance(other, CycInt):
            return NotImplemented
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        # x^4 = -1 folds degrees 4..6 back with a sign flip
        return CycInt(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def conj(self) -> CycInt:
        return conj(self)

    def __str__(self) -> str:
        return f"{self.c0} + {self.c1}·A + {self.c2}·A^2 + {self.c3}·A^3"


ZERO = CycInt()
ONE = CycInt(1)
X = CycInt(0, 1)
I = CycInt(0, 0, 1)

_UNITS = tuple(
    CycInt(*[(1 if k < 4 else -1) if j == k % 4 else 0 for j in range(4)])
    for k in range(8)
)


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def unit_pow(k: int) -> CycInt:
    """Return A**k; only ``k mod 8`` matters."""
    return _UNITS[k % 8]


def conj(a: CycInt) -> CycInt:
    """Complex conjugation, the automorphism A -> A^-1 = -A^3."""
    return CycInt(a.c0, -a.c3, -a.c2, -a.c1)


def as_unit_multiple(a: CycInt) -> Optional[Tuple[int, int]]:
    """Write ``a`` as ``p * A**k`` with ``p >= 0`` and ``0 <= k < 8``.

    Returns ``(0, 0)`` for zero and ``None`` when two or more coordinates
    are nonzero, i.e. when ``a`` is not an integer times a unit.
    """
    nonzero = [(j, c) for j, c in enumerate(a.coeffs) if c]
    if not nonzero:
        return (0, 0)
    if len(nonzero) > 1:
        return None
    j, c = nonzero[0]
    return (c, j) if c > 0 else (-c, j + 4)


def is_integer(a: CycInt) -> Optional[int]:
    if a.c1 or a.c2 or a.c3:
        return None
    return a.c0
