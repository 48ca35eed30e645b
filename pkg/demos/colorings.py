"""
Fox colorings and the determinant
=================================

A knot has a nontrivial p-coloring exactly when p divides its
determinant.  Colorings also give a picture-level proof that the square
tangle cannot sit in an unknot.
"""

from pathlib import Path

from tanglefrac import determinant, load_pd
from tanglefrac.algebra import parse, to_diagram
from tanglefrac.coloring import arcs_of, find_coloring

fixtures = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

for name in ["trefoil", "figure8", "torus27"]:
    K = load_pd(fixtures / f"{name}.pd")
    det = determinant(K)
    colorable = [p for p in (2, 3, 5, 7, 11) if find_coloring(K, p)]
    print(f"{name:8} det={det:2}  colorable mod {colorable}")

# a 3-coloring of the square tangle with all four ends the same color:
# closing it up in any way keeps the coloring, so the knot is not the unknot
T = to_diagram(parse("3* + -3*"))
coloring = find_coloring(T, 3, same_boundary=True)
arcs = arcs_of(T)
for edges, color in zip(arcs.arcs, coloring.colors):
    print(f"edges {list(edges)} -> {color}")
