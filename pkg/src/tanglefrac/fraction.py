"""Formal fractions: integer pairs [p, q] identified only with [-p, -q]."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = ["FormalFraction"]


@dataclass(frozen=True, slots=True, init=False)
class FormalFraction:
    """An unreduced fraction p/q, stored with q > 0, or q == 0 and p >= 0.

    Nothing is ever cancelled: ``FormalFraction(2, 4) != FormalFraction(1, 2)``,
    while ``FormalFraction(-1, -2) == FormalFraction(1, 2)``.  The
    denominator may be zero.
    """

    p: int
    q: int

    def __init__(self, p: int, q: int):
        p, q = int(p), int(q)
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> FormalFraction:
        num, sep, den = text.strip().partition("/")
        if not sep:
            raise ValueError(f"not a fraction: {text!r}")
        return cls(int(num), int(den))

    def __add__(self, other):
        # common denominator is always the product, even when it is zero
        if not isinstance(other, FormalFraction):
            return NotImplemented
        return FormalFraction(self.p * other.q + self.q * other.p,
                              self.q * other.q)

    def add(self, other: FormalFraction) -> FormalFraction:
        return self + other

    def star(self) -> FormalFraction:
        """[p, q] -> [-q, p], the effect of a quarter turn."""
        return FormalFraction(-self.q, self.p)

    def reflect(self) -> FormalFraction:
        return FormalFraction(-self.p, self.q)

    def reciprocal(self) -> FormalFraction:
        return self.star().reflect()

    def content_gcd(self) -> int:
        return gcd(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"FormalFraction({self.p}, {self.q})"
