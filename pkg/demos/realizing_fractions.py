"""
Every fraction is the invariant of some tangle
==============================================

Builds an algebraic tangle for a few target values and checks the
result two ways.
"""

from tanglefrac.algebra import crossing_count, eval_fraction, realize, realize_zero_zero, to_diagram, to_text
from tanglefrac.bracket import invariant
from tanglefrac.diagram import connectivity

targets = [(0, 2), (0, 3), (5, 3), (-6, 9), (12, 8), (7, 0)]

for p, q in targets:
    e = realize(p, q)
    D = to_diagram(e)
    c = connectivity(D)
    # the state sum over the diagram and the fraction arithmetic must agree
    assert invariant(D) == eval_fraction(e)
    print(f"{p}/{q}: {to_text(e)}")
    print(f"    {crossing_count(e)} crossings, pairing {c.pairing.name.lower()}, loops: {c.has_loops}")

# 0/0 needs a closed loop; it is handled separately
print("0/0:", to_text(realize_zero_zero()), "->", eval_fraction(realize_zero_zero()))
