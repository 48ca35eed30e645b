"""
Planar-diagram (PD) codes for 4-tangles and links.

A crossing is a 4-tuple of edge labels listed counterclockwise; the
over-strand runs through slots 0 and 2.  The A-smoothing joins slots
0-1 and 2-3, the B-smoothing joins 1-2 and 3-0.  A half-turn of the tuple
names the same crossing, and diagrams store the lexicographically smaller
form.  Every edge label occurs exactly twice among crossing slots and
tangle boundary slots, so a strand running straight from one boundary
point to another is a single label used by two boundary slots.
Crossing-free circles are kept as a count.

A tangle has four boundary points: NW and SW on the left side of the box,
NE and SE on the right.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple, Union

__all__ = [
    "DiagramError",
    "Pairing",
    "Boundary",
    "TangleDiagram",
    "LinkDiagram",
    "FlatTangle",
    "Connectivity",
    "smooth",
    "smooth_link",
    "iter_tangle_states",
    "iter_link_states",
    "closure_numerator",
    "closure_denominator",
    "connectivity",
    "component_count",
    "tangle_sum",
    "rotate",
    "reflect",
    "add_circle",
    "zero_tangle",
    "unit_tangle",
    "braid_closure",
    "parse_pd",
    "format_pd",
    "load_pd",
]

Crossing = Tuple[int, int, int, int]


class DiagramError(ValueError):
    """Raised for malformed PD data."""


class Pairing(enum.Enum):
    HORIZONTAL = "Horizontal"  # NW-NE, SW-SE
    VERTICAL = "Vertical"      # NW-SW, NE-SE
    CROSSED = "Crossed"        # NW-SE, SW-NE

    def __str__(self) -> str:
        return self.value


class Boundary(NamedTuple):
    nw: int
    sw: int
    ne: int
    se: int


class _DSU:
    """Union-find over arbitrary hashable labels."""

    def __init__(self, labels: Iterable[int] = ()):
        self.parent = {a: a for a in labels}

    def find(self, a):
        parent = self.parent
        if a not in parent:
            parent[a] = a
            return a
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; False if they were already one."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def roots(self):
        return {self.find(a) for a in list(self.parent)}


def _canonical(c) -> Crossing:
    # (a, b, c, d) and (c, d, a, b) describe the same crossing
    c = tuple(int(e) for e in c)
    if len(c) != 4:
        raise DiagramError(f"crossing {c!r} does not have four ends")
    return min(c, c[2:] + c[:2])


def _check_degree(crossings: Sequence[Crossing], boundary: Sequence[int] = ()) -> None:
    counts = Counter()
    for c in crossings:
        counts.update(c)
    counts.update(boundary)
    bad = sorted(e for e, k in counts.items() if k != 2)
    if bad:
        raise DiagramError(f"edge labels not used exactly twice: {bad}")


@dataclass(frozen=True)
class TangleDiagram:
    crossings: Tuple[Crossing, ...]
    boundary: Boundary
    loops: int = 0

    def __post_init__(self):
        crossings = tuple(_canonical(c) for c in self.crossings)
        boundary = Boundary(*(int(e) for e in self.boundary))
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "boundary", boundary)
        if self.loops < 0:
            raise DiagramError("negative loop count")
        _check_degree(crossings, boundary)

    def __len__(self) -> int:
        return len(self.crossings)

    def labels(self) -> set:
        return {e for c in self.crossings for e in c} | set(self.boundary)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[Crossing, ...]
    loops: int = 0

    def __post_init__(self):
        crossings = tuple(_canonical(c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.loops < 0:
            raise DiagramError("negative loop count")
        _check_degree(crossings)

    def __len__(self) -> int:
        return len(self.crossings)


class FlatTangle(NamedTuple):
    pairing: Pairing
    loop_count: int


class Connectivity(NamedTuple):
    pairing: Pairing
    has_loops: bool


def _pairing(dsu: _DSU, b: Boundary) -> Pairing:
    nw = dsu.find(b.nw)
    if nw == dsu.find(b.ne):
        return Pairing.HORIZONTAL
    if nw == dsu.find(b.sw):
        return Pairing.VERTICAL
    if nw == dsu.find(b.se):
        return Pairing.CROSSED
    raise DiagramError("boundary point NW is not joined to another boundary point")


def _smoothing_dsu(crossings, state: int) -> Tuple[_DSU, int]:
    dsu = _DSU()
    closed = 0
    for i, (a, b, c, d) in enumerate(crossings):
        if (state >> i) & 1:
            pairs = ((b, c), (d, a))
        else:
            pairs = ((a, b), (c, d))
        for u, v in pairs:
            if not dsu.union(u, v):
                closed += 1
    return dsu, closed


def smooth(T: TangleDiagram, state: int) -> FlatTangle:
    """Smooth every crossing of ``T``; bit i of ``state`` set means B at crossing i."""
    if state < 0 or state >> len(T.crossings):
        raise DiagramError(f"state {state} does not fit {len(T)} crossings")
    dsu, closed = _smoothing_dsu(T.crossings, state)
    for e in T.boundary:
        dsu.find(e)
    return FlatTangle(_pairing(dsu, T.boundary), closed + T.loops)


def smooth_link(L: LinkDiagram, state: int) -> int:
    """Number of circles after smoothing ``L`` in the given state."""
    if state < 0 or state >> len(L.crossings):
        raise DiagramError(f"state {state} does not fit {len(L)} crossings")
    _, closed = _smoothing_dsu(L.crossings, state)
    return closed + L.loops


def iter_tangle_states(T: TangleDiagram) -> Iterator[Tuple[int, FlatTangle]]:
    for s in range(1 << len(T.crossings)):
        yield s, smooth(T, s)


def iter_link_states(L: LinkDiagram) -> Iterator[Tuple[int, int]]:
    for s in range(1 << len(L.crossings)):
        yield s, smooth_link(L, s)


def connectivity(T: TangleDiagram) -> Connectivity:
    """Endpoint pairing of the strands, ignoring over/under information."""
    dsu = _DSU(T.labels())
    for a, b, c, d in T.crossings:
        dsu.union(a, c)
        dsu.union(b, d)
    boundary_roots = {dsu.find(e) for e in T.boundary}
    has_loops = T.loops > 0 or any(r not in boundary_roots for r in dsu.roots())
    return Connectivity(_pairing(dsu, T.boundary), has_loops)


def component_count(L: LinkDiagram) -> int:
    dsu = _DSU()
    for a, b, c, d in L.crossings:
        dsu.union(a, c)
        dsu.union(b, d)
    return len(dsu.roots()) + L.loops


def _glue(crossings, boundary, identify, loops):
    """Identify edge labels pairwise and relabel compactly.

    Label classes that end up with no crossing slot and no boundary slot
    are crossing-free circles and are added to the loop count.
    """
    dsu = _DSU()
    for c in crossings:
        for e in c:
            dsu.find(e)
    for e in boundary:
        dsu.find(e)
    for a, b in identify:
        dsu.union(a, b)
    used = set()
    relabel = {}
    for c in crossings:
        for e in c:
            r = dsu.find(e)
            used.add(r)
            relabel.setdefault(r, len(relabel))
    for e in boundary:
        r = dsu.find(e)
        used.add(r)
        relabel.setdefault(r, len(relabel))
    extra = sum(1 for r in dsu.roots() if r not in used)
    new_crossings = tuple(tuple(relabel[dsu.find(e)] for e in c) for c in crossings)
    new_boundary = tuple(relabel[dsu.find(e)] for e in boundary)
    return new_crossings, new_boundary, loops + extra


def closure_numerator(T: TangleDiagram) -> LinkDiagram:
    """n(T): join NW to NE over the top and SW to SE under the bottom."""
    b = T.boundary
    crossings, _, loops = _glue(T.crossings, (), [(b.nw, b.ne), (b.sw, b.se)], T.loops)
    return LinkDiagram(crossings, loops)


def closure_denominator(T: TangleDiagram) -> LinkDiagram:
    """d(T): join NW to SW on the left and NE to SE on the right."""
    b = T.boundary
    crossings, _, loops = _glue(T.crossings, (), [(b.nw, b.sw), (b.ne, b.se)], T.loops)
    return LinkDiagram(crossings, loops)


def tangle_sum(T: TangleDiagram, U: TangleDiagram) -> TangleDiagram:
    """Place U to the right of T and join T's east points to U's west points."""
    off = max(T.labels(), default=-1) + 1
    shifted = tuple(tuple(e + off for e in c) for c in U.crossings)
    ub = Boundary(*(e + off for e in U.boundary))
    tb = T.boundary
    crossings, boundary, loops = _glue(
        T.crossings + shifted,
        (tb.nw, tb.sw, ub.ne, ub.se),
        [(tb.ne, ub.nw), (tb.se, ub.sw)],
        T.loops + U.loops,
    )
    return TangleDiagram(crossings, Boundary(*boundary), loops)


def rotate(T: TangleDiagram) -> TangleDiagram:
    """Quarter turn counterclockwise."""
    b = T.boundary
    return TangleDiagram(T.crossings, Boundary(nw=b.ne, sw=b.nw, ne=b.se, se=b.sw), T.loops)


def reflect(T: TangleDiagram) -> TangleDiagram:
    """Mirror in the projection plane: every crossing changes over for under."""
    crossings = tuple(c[1:] + c[:1] for c in T.crossings)
    return TangleDiagram(crossings, T.boundary, T.loops)


def add_circle(T: TangleDiagram, count: int = 1) -> TangleDiagram:
    """Add split crossing-free circles."""
    return TangleDiagram(T.crossings, T.boundary, T.loops + count)


def zero_tangle() -> TangleDiagram:
    """T_0: two horizontal strands, no crossings."""
    return TangleDiagram((), Boundary(nw=0, sw=1, ne=0, se=1))


def unit_tangle() -> TangleDiagram:
    """T_1: one crossing with the over-strand running NW to SE.

    With the smoothing convention of this module this crossing has
    bracket A on its numerator closure and A^-1 on its denominator closure.
    """
    return TangleDiagram(((0, 1, 2, 3),), Boundary(nw=0, sw=1, ne=3, se=2))


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Closure of a braid word; ``k`` is sigma_k and ``-k`` its inverse (1-based)."""
    current = list(range(strands))
    nxt = strands
    crossings = []
    for g in word:
        i = abs(g)
        if not 1 <= i < strands:
            raise DiagramError(f"generator {g} out of range for {strands} strands")
        bl, br = current[i - 1], current[i]
        tl, tr = nxt, nxt + 1
        nxt += 2
        if g > 0:
            crossings.append((bl, br, tr, tl))
        else:
            crossings.append((br, tr, tl, bl))
        current[i - 1], current[i] = tl, tr
    crossings, _, loops = _glue(crossings, (), list(zip(current, range(strands))), 0)
    return LinkDiagram(crossings, loops)


# ---------------------------------------------------------------- PD text

Diagram = Union[TangleDiagram, LinkDiagram]


def parse_pd(text: str) -> Diagram:
    header: Optional[str] = None
    boundary = None
    loops = 0
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        key = words[0]
        try:
            if header is None:
                if key not in ("tangle", "link") or len(words) != 1:
                    raise DiagramError("expected header 'tangle' or 'link'")
                header = key
            elif key == "boundary" and header == "tangle":
                slots = dict(w.split("=", 1) for w in words[1:])
                boundary = Boundary(*(int(slots[k]) for k in ("NW", "SW", "NE", "SE")))
            elif key == "loops":
                loops = int(words[1])
            elif key == "X" and len(words) == 5:
                crossings.append(tuple(int(w) for w in words[1:]))
            else:
                raise DiagramError(f"unrecognised line {line!r}")
        except (KeyError, ValueError, IndexError) as exc:
            raise DiagramError(f"line {lineno}: {exc}") from exc
    if header is None:
        raise DiagramError("empty PD text")
    if header == "tangle":
        if boundary is None:
            raise DiagramError("tangle without boundary line")
        return TangleDiagram(tuple(crossings), boundary, loops)
    return LinkDiagram(tuple(crossings), loops)


def format_pd(D: Diagram) -> str:
    lines = []
    if isinstance(D, TangleDiagram):
        b = D.boundary
        lines += ["tangle", f"boundary NW={b.nw} SW={b.sw} NE={b.ne} SE={b.se}"]
    else:
        lines.append("link")
    if D.loops:
        lines.append(f"loops {D.loops}")
    lines += ["X " + " ".join(map(str, c)) for c in D.crossings]
    return "\n".join(lines) + "\n"


def load_pd(path) -> Diagram:
    return parse_pd(Path(path).read_text())
