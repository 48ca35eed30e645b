"""Independent reference computations used only by the tests.

Nothing here shares code with the state-sum engine: smoothings are
traced edge by edge over every one of the 2^c states.
"""

from tanglefrac.ring import CycInt, unit_pow


def _smoothing_graph(crossings, state):
    """Adjacency: each edge label has two ends; a smoothing joins ends at a crossing."""
    # an edge end is (label, occurrence index); the two ends of a label are joined by the edge itself
    seen = {}
    ends = []
    for i, c in enumerate(crossings):
        slot_end = []
        for e in c:
            k = seen.get(e, 0)
            seen[e] = k + 1
            slot_end.append((e, k))
        ends.append(slot_end)
    link = {}
    for i, (a, b, c, d) in enumerate(ends):
        if (state >> i) & 1:
            pairs = ((b, c), (d, a))
        else:
            pairs = ((a, b), (c, d))
        for u, v in pairs:
            link[u] = v
            link[v] = u
    return link, seen


def trace(crossings, boundary, state):
    """Return (pairing of boundary slot indices, number of closed circles)."""
    link, seen = _smoothing_graph(crossings, state)
    boundary_end = {}
    for j, e in enumerate(boundary):
        k = seen.get(e, 0)
        seen[e] = k + 1
        boundary_end[(e, k)] = j
    visited = set()
    pairs = []
    for (e, k), j in boundary_end.items():
        if (e, k) in visited:
            continue
        cur = (e, k)
        while True:
            visited.add(cur)
            other = (cur[0], 1 - cur[1])  # walk along the edge
            visited.add(other)
            if other in boundary_end:
                pairs.append(frozenset((j, boundary_end[other])))
                break
            cur = link[other]
    circles = 0
    for end in link:
        if end in visited:
            continue
        circles += 1
        cur = end
        while cur not in visited:
            visited.add(cur)
            other = (cur[0], 1 - cur[1])
            visited.add(other)
            cur = link[other]
    return frozenset(pairs), circles


NW, SW, NE, SE = range(4)
HORIZONTAL = frozenset({frozenset({NW, NE}), frozenset({SW, SE})})
VERTICAL = frozenset({frozenset({NW, SW}), frozenset({NE, SE})})
CROSSED = frozenset({frozenset({NW, SE}), frozenset({SW, NE})})


def _cyc(counts):
    total = CycInt()
    for k, m in enumerate(counts):
        total = total + unit_pow(k) * m
    return total


def naive_link_bracket(L):
    n = len(L.crossings)
    counts = [0] * 8
    for s in range(1 << n):
        _, circles = trace(L.crossings, (), s)
        if circles + L.loops == 1:
            b = bin(s).count("1")
            counts[(n - 2 * b) % 8] += 1
    return _cyc(counts)


def naive_tangle_vector(T):
    """(N, D) by exhaustive enumeration; returns CycInt pair."""
    n = len(T.crossings)
    num, den = [0] * 8, [0] * 8
    for s in range(1 << n):
        pairing, circles = trace(T.crossings, tuple(T.boundary), s)
        if circles or T.loops:
            continue
        k = (n - 2 * bin(s).count("1")) % 8
        if pairing == VERTICAL:
            num[k] += 1
        elif pairing == HORIZONTAL:
            den[k] += 1
        else:
            raise AssertionError("crossed loop-free state")
    return _cyc(num), _cyc(den)


def acyclic_states(T):
    """{state: 'N' or 'D'} for loop-free states."""
    out = {}
    for s in range(1 << len(T.crossings)):
        pairing, circles = trace(T.crossings, tuple(T.boundary), s)
        if circles == 0 and T.loops == 0:
            out[s] = "N" if pairing == VERTICAL else "D"
    return out


def monocyclic_states(L):
    return [s for s in range(1 << len(L.crossings))
            if trace(L.crossings, (), s)[1] + L.loops == 1]


def follow_strands(T):
    """Endpoint pairing ignoring over/under, by walking straight through crossings."""
    # going straight through a crossing connects slots 0-2 and 1-3
    pos = {}
    for i, c in enumerate(T.crossings):
        for j, e in enumerate(c):
            pos.setdefault(e, []).append((i, j))
    b = tuple(T.boundary)
    pairs = []
    done = set()
    for start in range(4):
        if start in done:
            continue
        e = b[start]
        came_from = ("b", start)
        while True:
            places = [p for p in pos.get(e, [])]
            ends = [("x",) + p for p in places] + [("b", j) for j, x in enumerate(b) if x == e]
            nxt = [p for p in ends if p != came_from]
            if len(ends) == 2 and ends[0] == ends[1]:
                nxt = [ends[0]]
            p = nxt[0]
            if p[0] == "b":
                pairs.append(frozenset((start, p[1])))
                done.update((start, p[1]))
                break
            _, i, j = p
            out_slot = (j + 2) % 4
            e = T.crossings[i][out_slot]
            came_from = ("x", i, out_slot)
    return frozenset(pairs)
