"""
Fox colorings modulo a prime.

An arc is a maximal piece of a diagram that is never an under-strand; it
runs through over-crossings and stops at under-crossings (or at the
boundary of a tangle).  A p-coloring labels arcs by residues mod p so
that twice the over-arc equals the sum of the two under-arcs at every
crossing.  Constant labellings always work; a coloring is nontrivial
when it uses at least two colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from .bracket import determinant
from .diagram import LinkDiagram, TangleDiagram, _DSU, component_count

__all__ = [
    "ArcSet",
    "Coloring",
    "ColorabilityCheck",
    "arcs_of",
    "nullspace_mod_p",
    "find_coloring",
    "colorability_check",
    "is_prime",
]

Diagram = Union[LinkDiagram, TangleDiagram]


@dataclass(frozen=True)
class ArcSet:
    """Arcs as groups of edge labels, plus one (over, under, under) triple per crossing."""

    arcs: Tuple[Tuple[int, ...], ...]
    relations: Tuple[Tuple[int, int, int], ...]
    edge_arc: Dict[int, int]

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Coloring:
    modulus: int
    colors: Tuple[int, ...]  # indexed by arc

    @property
    def nontrivial(self) -> bool:
        return len(set(self.colors)) > 1


class ColorabilityCheck(NamedTuple):
    colorable: bool
    divides: bool

    @property
    def agree(self) -> bool:
        return self.colorable == self.divides


def arcs_of(D: Diagram) -> ArcSet:
    labels = {e for c in D.crossings for e in c}
    if isinstance(D, TangleDiagram):
        labels |= set(D.boundary)
    dsu = _DSU(labels)
    for a, _, c, _ in D.crossings:
        dsu.union(a, c)
    index: Dict[int, int] = {}
    groups: List[List[int]] = []
    for e in sorted(labels):
        r = dsu.find(e)
        if r not in index:
            index[r] = len(groups)
            groups.append([])
        groups[index[r]].append(e)
    # crossing-free circles are arcs of their own
    groups.extend([] for _ in range(D.loops))
    edge_arc = {e: index[dsu.find(e)] for e in labels}
    relations = tuple((edge_arc[a], edge_arc[b], edge_arc[d]) for a, b, _, d in D.crossings)
    return ArcSet(tuple(tuple(g) for g in groups), relations, edge_arc)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def nullspace_mod_p(rows: List[List[int]], ncols: int, p: int) -> List[List[int]]:
    """Basis of {x : rows @ x = 0 mod p} by Gauss-Jordan elimination."""
    m = [[v % p for v in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc] % p
        basis.append(v)
    return basis


def _equations(arcs: ArcSet, D: Diagram, same_boundary: bool) -> List[List[int]]:
    n = len(arcs)
    rows = []
    for over, u1, u2 in arcs.relations:
        row = [0] * n
        row[over] += 2
        row[u1] -= 1
        row[u2] -= 1
        rows.append(row)
    if same_boundary and isinstance(D, TangleDiagram):
        ends = [arcs.edge_arc[e] for e in D.boundary]
        for other in ends[1:]:
            row = [0] * n
            row[ends[0]] += 1
            row[other] -= 1
            rows.append(row)
    return rows


def find_coloring(D: Diagram, p: int, same_boundary: bool = False) -> Optional[Coloring]:
    """A nontrivial Fox p-coloring of ``D``, or None if only constants exist.

    With ``same_boundary`` the four arcs meeting the boundary of a tangle
    are forced to share one color.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    arcs = arcs_of(D)
    n = len(arcs)
    basis = nullspace_mod_p(_equations(arcs, D, same_boundary), n, p)
    # constants always solve the system; more than a line means a nontrivial solution
    for v in basis:
        if len(set(v)) > 1:
            coloring = Coloring(p, tuple(v))
            _verify(coloring, arcs, D, same_boundary)
            return coloring
    return None


def _verify(coloring: Coloring, arcs: ArcSet, D: Diagram, same_boundary: bool) -> None:
    p, c = coloring.modulus, coloring.colors
    for row in _equations(arcs, D, same_boundary):
        if sum(a * x for a, x in zip(row, c)) % p:
            raise AssertionError("coloring violates a crossing relation")


def colorability_check(K: LinkDiagram, p: int) -> ColorabilityCheck:
    """Compare p-colorability of a knot with divisibility of its determinant by p."""
    if component_count(K) != 1:
        raise ValueError("colorability_check expects a knot")
    colorable = find_coloring(K, p) is not None
    return ColorabilityCheck(colorable, determinant(K) % p == 0)
