"""
Algebraic tangle expressions.

Surface syntax::

    expr   := term ('+' term)*
    term   := factor '*'*
    factor := integer | '~' factor | '(' expr ')'

``n`` is the integral tangle T_n, ``+`` the tangle sum, postfix ``*`` a
quarter turn and prefix ``~`` the mirror image.  ``3* + -3*`` is the
square tangle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import List, Union

from . import diagram
from .bracket import UNIT_VECTOR, ZERO_VECTOR, BracketVector, compose
from .diagram import TangleDiagram
from .fraction import FormalFraction

__all__ = [
    "Integral",
    "Sum",
    "Rot",
    "Refl",
    "TangleExpr",
    "ParseError",
    "parse",
    "to_text",
    "eval_fraction",
    "eval_vector",
    "to_diagram",
    "crossing_count",
    "continued_fraction",
    "rational_tangle",
    "zero_over_odd",
    "tangle_s",
    "realize",
    "realize_zero_zero",
]


@dataclass(frozen=True)
class Integral:
    n: int

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Sum:
    left: "TangleExpr"
    right: "TangleExpr"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Rot:
    inner: "TangleExpr"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Refl:
    inner: "TangleExpr"

    def __str__(self):
        return to_text(self)


TangleExpr = Union[Integral, Sum, Rot, Refl]


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_INT = re.compile(r"-?\d+")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _INT.match(text, pos)
        if m:
            tokens.append(("int", int(m.group()), pos))
            pos = m.end()
        elif ch in "+*~()":
            tokens.append((ch, None, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            node = Sum(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.i += 1
            node = Rot(node)
        return node

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            return Integral(value)
        if kind == "~":
            self.i += 1
            return Refl(self.factor())
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {kind!r}", pos)


def parse(text: str) -> TangleExpr:
    p = _Parser(text)
    node = p.expr()
    p.take("end")
    return node


def _factor_text(e) -> str:
    if isinstance(e, Integral):
        return str(e.n)
    if isinstance(e, Refl):
        return "~" + _factor_text(e.inner)
    return f"({to_text(e)})"


def _term_text(e) -> str:
    if isinstance(e, Rot):
        return _term_text(e.inner) + "*"
    return _factor_text(e)


def to_text(e: TangleExpr) -> str:
    """Render an expression in the surface syntax; ``parse`` inverts it."""
    if isinstance(e, Sum):
        return f"{to_text(e.left)} + {_term_text(e.right)}"
    return _term_text(e)


# ---------------------------------------------------------------- semantics

def _fold(e, integral, add, rot, refl):
    # iterative post-order, so long left-nested sums cannot hit the recursion limit
    stack = [(e, False)]
    out = []
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Integral):
            out.append(integral(node.n))
        elif not ready:
            stack.append((node, True))
            if isinstance(node, Sum):
                stack.append((node.right, False))
                stack.append((node.left, False))
            else:
                stack.append((node.inner, False))
        elif isinstance(node, Sum):
            right = out.pop()
            out.append(add(out.pop(), right))
        elif isinstance(node, Rot):
            out.append(rot(out.pop()))
        else:
            out.append(refl(out.pop()))
    return out[0]


def eval_fraction(e: TangleExpr) -> FormalFraction:
    return _fold(e, lambda n: FormalFraction(n, 1), FormalFraction.__add__,
                 FormalFraction.star, FormalFraction.reflect)


def _integral_vector(n: int) -> BracketVector:
    step = UNIT_VECTOR if n > 0 else UNIT_VECTOR.reflect()
    v = ZERO_VECTOR
    for _ in range(abs(n)):
        v = compose(v, step)
    return v


def eval_vector(e: TangleExpr) -> BracketVector:
    """Bracket vector computed from the expression tree alone."""
    return _fold(e, _integral_vector, compose, BracketVector.rotate, BracketVector.reflect)


def _integral_diagram(n: int) -> TangleDiagram:
    if n == 0:
        return diagram.zero_tangle()
    step = diagram.unit_tangle()
    if n < 0:
        step = diagram.reflect(step)
    return reduce(diagram.tangle_sum, [step] * abs(n))


def to_diagram(e: TangleExpr) -> TangleDiagram:
    return _fold(e, _integral_diagram, diagram.tangle_sum, diagram.rotate, diagram.reflect)


def crossing_count(e: TangleExpr) -> int:
    return _fold(e, abs, lambda a, b: a + b, lambda a: a, lambda a: a)


# ---------------------------------------------------------------- realizability

def continued_fraction(p: int, q: int) -> List[int]:
    """Partial quotients [a0, a1, ..., ak] of p/q by floor division.

    p/q = a0 + 1/(a1 + 1/(... + 1/ak)); every quotient after a0 is nonzero.
    """
    if q == 0:
        raise ValueError("denominator must be nonzero")
    if q < 0:
        p, q = -p, -q
    quotients = []
    while q:
        a, r = divmod(p, q)
        quotients.append(a)
        p, q = q, r
    return quotients


def _reciprocal(e: TangleExpr) -> TangleExpr:
    return Refl(Rot(e))


def rational_tangle(p: int, q: int) -> TangleExpr:
    """Rational tangle with invariant [p, q], for coprime p and q."""
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not in lowest terms")
    if q == 0:
        return Rot(Integral(0))
    quotients = continued_fraction(p, q)
    node: TangleExpr = Integral(quotients[-1])
    for a in reversed(quotients[:-1]):
        node = _reciprocal(node)
        if a:
            node = Sum(node, Integral(a))
    return node


def zero_over_odd(d: int) -> TangleExpr:
    """Tangle with invariant 0/d for odd d > 0: (((-d)* + (-d)*)* + d')* + -2, d' = (d-1)/2."""
    if d <= 0 or d % 2 == 0:
        raise ValueError("d must be a positive odd integer")
    twist = Rot(Integral(-d))
    return Sum(Rot(Sum(Rot(Sum(twist, twist)), Integral((d - 1) // 2))), Integral(-2))


def tangle_s() -> TangleExpr:
    """(2* + 0*)*, invariant 0/2."""
    return Rot(Sum(Rot(Integral(2)), Rot(Integral(0))))


def realize(p: int, q: int) -> TangleExpr:
    """An algebraic tangle whose invariant is exactly [p, q].

    Writes p = 2^n d p', q = 2^n d q' with d odd and p', q' coprime, and
    sums n copies of the 0/2 tangle, a 0/d tangle and a rational tangle
    for p'/q'.  When q' is even the roles of p and q are swapped first
    and a reciprocal is taken at the end.
    """
    if p == 0 and q == 0:
        raise ValueError("[0,0] is not produced by this construction; see realize_zero_zero")
    g = gcd(p, q)
    pp, qq = p // g, q // g
    if qq % 2 == 0:
        return _reciprocal(realize(q, p))
    n = (g & -g).bit_length() - 1
    d = g >> n
    parts = [tangle_s() for _ in range(n)]
    if d > 1:
        parts.append(zero_over_odd(d))
    if not parts or pp != 0:
        parts.append(rational_tangle(pp, qq))
    return reduce(Sum, parts)


def realize_zero_zero() -> TangleExpr:
    """0* + 0*: two vertical strands enclosing a circle, invariant 0/0."""
    return Sum(Rot(Integral(0)), Rot(Integral(0)))
