"""
Kauffman bracket state sums at A = exp(i*pi/4) and the tangle invariant.

At this value of A the loop factor -A^2 - A^-2 vanishes, so a link
diagram only receives contributions from states that smooth to a single
circle, and a tangle diagram only from states that leave two arcs and no
circles.  The engine walks the state tree depth first with a union-find
that can be rolled back, and abandons a branch as soon as a surplus
circle closes.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from .diagram import (
    DiagramError,
    LinkDiagram,
    Pairing,
    TangleDiagram,
    component_count,
)
from .fraction import FormalFraction
from .ring import CycInt, ZERO, ONE, I, as_unit_multiple, conj, is_integer, unit_pow

__all__ = [
    "CrossingCapError",
    "BracketVector",
    "ObstructionReport",
    "max_crossings",
    "bracket_vector",
    "bracket_link",
    "determinant",
    "invariant",
    "extract_fraction",
    "compose",
    "rotate_vector",
    "reflect_vector",
    "obstruct",
    "component_count",
    "ZERO_VECTOR",
    "UNIT_VECTOR",
]

CAP_ENV = "TANGLEFRAC_MAX_CROSSINGS"
DEFAULT_CAP = 30


class CrossingCapError(RuntimeError):
    pass


def max_crossings() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


@dataclass(frozen=True)
class BracketVector:
    """The pair (<n(T)>, <d(T)>) of numerator and denominator brackets."""

    num: CycInt
    den: CycInt

    def compose(self, other: BracketVector) -> BracketVector:
        return compose(self, other)

    def rotate(self) -> BracketVector:
        return rotate_vector(self)

    def reflect(self) -> BracketVector:
        return reflect_vector(self)

    def fraction(self) -> FormalFraction:
        return extract_fraction(self)


ZERO_VECTOR = BracketVector(ZERO, ONE)          # T_0
UNIT_VECTOR = BracketVector(unit_pow(1), unit_pow(-1))  # T_1


def compose(v: BracketVector, w: BracketVector) -> BracketVector:
    """Bracket vector of a tangle sum from the vectors of its summands."""
    return BracketVector(v.num * w.den + v.den * w.num, v.den * w.den)


def rotate_vector(v: BracketVector) -> BracketVector:
    return BracketVector(v.den, v.num)


def reflect_vector(v: BracketVector) -> BracketVector:
    return BracketVector(conj(v.num), conj(v.den))


def extract_fraction(v: BracketVector) -> FormalFraction:
    """Find a unit u with u*N and u*i*D both integers; return [uN, uiD]."""
    for k in range(8):
        u = unit_pow(k)
        p = is_integer(u * v.num)
        if p is None:
            continue
        q = is_integer(u * I * v.den)
        if q is not None:
            return FormalFraction(p, q)
    raise ValueError(f"no unit makes {v} integral; diagram is probably not planar")


# ------------------------------------------------------------ state sums

def _bfs_order(crossings: Sequence[tuple], start_labels=()) -> List[int]:
    """Order crossings so that consecutive ones tend to share edges."""
    by_label = {}
    for i, c in enumerate(crossings):
        for e in c:
            by_label.setdefault(e, []).append(i)
    seen = [False] * len(crossings)
    order = []
    seeds = [i for e in start_labels for i in by_label.get(e, ())]
    seeds += range(len(crossings))
    for s in seeds:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            i = queue.popleft()
            order.append(i)
            for e in crossings[i]:
                for j in by_label[e]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
    return order


def _compact(crossings, extra=()):
    index = {}
    for c in crossings:
        for e in c:
            index.setdefault(e, len(index))
    for e in extra:
        index.setdefault(e, len(index))
    return [tuple(index[e] for e in c) for c in crossings], [index[e] for e in extra], len(index)


def _check_cap(n: int, cap: Optional[int]) -> None:
    cap = max_crossings() if cap is None else cap
    if n > cap:
        raise CrossingCapError(f"{n} crossings exceeds the cap of {cap}")


def _walk_states(crossings, nlabels, max_closed, leaf):
    """Depth-first walk over smoothings; ``leaf(a_count, closed, find)`` at each surviving state."""
    parent = list(range(nlabels))
    size = [1] * nlabels
    n = len(crossings)

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    def visit(i, a_count, closed):
        if i == n:
            leaf(a_count, closed, find)
            return
        p, q, r, s = crossings[i]
        for b_smoothing in (False, True):
            pairs = ((q, r), (s, p)) if b_smoothing else ((p, q), (r, s))
            undo = []
            cl = closed
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru == rv:
                    cl += 1
                    continue
                if size[ru] > size[rv]:
                    ru, rv = rv, ru
                parent[ru] = rv
                size[rv] += size[ru]
                undo.append(ru)
            if cl <= max_closed:
                visit(i + 1, a_count + (not b_smoothing), cl)
            for ru in reversed(undo):
                rv = parent[ru]
                size[rv] -= size[ru]
                parent[ru] = ru

    visit(0, 0, 0)


def _from_counts(counts) -> CycInt:
    total = ZERO
    for k, m in enumerate(counts):
        if m:
            total = total + unit_pow(k) * m
    return total


def bracket_vector(T: TangleDiagram, cap: Optional[int] = None) -> BracketVector:
    """(<n(T)>, <d(T)>) summed over loop-free states of ``T``.

    Vertical states (NW-SW, NE-SE) feed the numerator, horizontal states
    the denominator.  Each state contributes A**(#A - #B).
    """
    n = len(T.crossings)
    _check_cap(n, cap)
    if T.loops:
        return BracketVector(ZERO, ZERO)
    order = _bfs_order(T.crossings, T.boundary)
    crossings, (nw, sw, ne, se), nlabels = _compact([T.crossings[i] for i in order], T.boundary)
    counts = {Pairing.VERTICAL: [0] * 8, Pairing.HORIZONTAL: [0] * 8}

    def leaf(a_count, closed, find):
        r = find(nw)
        if r == find(ne):
            pairing = Pairing.HORIZONTAL
        elif r == find(sw):
            pairing = Pairing.VERTICAL
        else:
            raise DiagramError("loop-free state with crossed strands; diagram is not planar")
        counts[pairing][(2 * a_count - n) % 8] += 1

    _walk_states(crossings, nlabels, 0, leaf)
    return BracketVector(_from_counts(counts[Pairing.VERTICAL]),
                         _from_counts(counts[Pairing.HORIZONTAL]))


def bracket_link(L: LinkDiagram, cap: Optional[int] = None) -> CycInt:
    """<L> at A = exp(i*pi/4): the sum over single-circle states of A**(#A - #B)."""
    n = len(L.crossings)
    _check_cap(n, cap)
    if n == 0:
        if L.loops == 0:
            raise DiagramError("empty link diagram")
        return ONE if L.loops == 1 else ZERO
    if L.loops:
        return ZERO
    order = _bfs_order(L.crossings)
    crossings, _, nlabels = _compact([L.crossings[i] for i in order])
    counts = [0] * 8

    def leaf(a_count, closed, find):
        if closed == 1:
            counts[(2 * a_count - n) % 8] += 1

    _walk_states(crossings, nlabels, 1, leaf)
    return _from_counts(counts)


def determinant(L: LinkDiagram, cap: Optional[int] = None) -> int:
    value = bracket_link(L, cap)
    pu = as_unit_multiple(value)
    if pu is None:
        raise ValueError(f"bracket {value} is not an integer times a unit; malformed diagram?")
    return pu[0]


def invariant(T: TangleDiagram, cap: Optional[int] = None) -> FormalFraction:
    return extract_fraction(bracket_vector(T, cap))


# ------------------------------------------------------------ obstruction

@dataclass(frozen=True)
class ObstructionReport:
    tangle_fraction: FormalFraction
    g: int
    link_determinant: int
    divides: bool

    @property
    def verdict(self) -> str:
        return "inconclusive" if self.divides else "impossible"

    def to_line(self) -> str:
        return (f"f(T)={self.tangle_fraction} gcd={self.g} det={self.link_determinant} "
                f"verdict: {self.verdict}")

    def to_kv(self) -> str:
        return "\n".join([
            f"fraction={self.tangle_fraction}",
            f"gcd={self.g}",
            f"det={self.link_determinant}",
            f"divides={str(self.divides).lower()}",
            f"verdict={self.verdict}",
        ])


def _divides(g: int, n: int) -> bool:
    return n == 0 if g == 0 else n % g == 0


def obstruct(tangle, link: Union[LinkDiagram, int], cap: Optional[int] = None) -> ObstructionReport:
    """Test whether the gcd condition rules out embedding ``tangle`` in ``link``.

    ``tangle`` may be a diagram, a parsed expression or expression text;
    expressions are evaluated compositionally.  ``link`` is a diagram or
    a known determinant.  ``divides=False`` means the embedding is
    impossible; ``divides=True`` proves nothing.
    """
    if isinstance(tangle, TangleDiagram):
        frac = invariant(tangle, cap)
    else:
        from .algebra import eval_fraction, parse
        frac = eval_fraction(parse(tangle) if isinstance(tangle, str) else tangle)
    det = link if isinstance(link, int) else determinant(link, cap)
    if det < 0:
        raise ValueError("determinant must be non-negative")
    g = frac.content_gcd()
    return ObstructionReport(frac, g, det, _divides(g, det))
