"""
Square and granny tangles inside knots
======================================

Two tangles that look alike but sit very differently inside knots.
"""

from tanglefrac import closure_denominator, closure_numerator, determinant, obstruct
from tanglefrac.algebra import eval_fraction, parse, to_diagram

square = parse("3* + -3*")
granny = parse("3* + 3*")

# the invariant is computed from the expression alone
print("square:", eval_fraction(square))
print("granny:", eval_fraction(granny))

# |p| and |q| are the determinants of the two closures
T = to_diagram(square)
print("square closures:", determinant(closure_numerator(T)), determinant(closure_denominator(T)))

# a tangle can only sit in a link whose determinant is divisible by gcd(p, q)
for name, det in [("unknot", 1), ("Hopf link", 2), ("trefoil", 3)]:
    for label, tangle in [("square", square), ("granny", granny)]:
        report = obstruct(tangle, det)
        print(f"{label:6} in {name:9}: {report.verdict}")

# the granny really does sit in a trefoil: add one crossing and close up
knot = closure_numerator(to_diagram(parse("3* + 3* + 1")))
print("det n(G + 1) =", determinant(knot))
