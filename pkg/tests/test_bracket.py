import random

import pytest
from hypothesis import given, settings

from conftest import expressions, random_expr
from oracles import naive_link_bracket, naive_tangle_vector
from tanglefrac.algebra import eval_vector, parse, to_diagram
from tanglefrac.bracket import (
    CAP_ENV, UNIT_VECTOR, ZERO_VECTOR, BracketVector, CrossingCapError,
    bracket_link, bracket_vector, compose, determinant, extract_fraction,
    invariant, obstruct, reflect_vector, rotate_vector,
)
from tanglefrac.diagram import (
    Boundary, DiagramError, LinkDiagram, TangleDiagram, braid_closure,
    closure_denominator, closure_numerator, component_count, reflect, rotate,
    tangle_sum, unit_tangle, zero_tangle,
)
from tanglefrac.fraction import FormalFraction as F
from tanglefrac.ring import CycInt, ONE, X, ZERO, as_unit_multiple, unit_pow

SQUARE = to_diagram(parse("3* + -3*"))
GRANNY = to_diagram(parse("3* + 3*"))


def magnitudes(v):
    return as_unit_multiple(v.num)[0], as_unit_multiple(v.den)[0]


def test_vector_of_generators():
    assert bracket_vector(zero_tangle()) == BracketVector(ZERO, ONE)
    assert bracket_vector(unit_tangle()) == BracketVector(X, unit_pow(-1))
    assert UNIT_VECTOR == BracketVector(X, CycInt(0, 0, 0, -1))


def test_square_vector():
    assert magnitudes(bracket_vector(SQUARE)) == (0, 9)
    assert magnitudes(bracket_vector(rotate(SQUARE))) == (9, 0)


def test_engine_matches_naive_enumeration():
    rng = random.Random(2024)
    for _ in range(60):
        T = to_diagram(random_expr(rng, 9))
        assert bracket_vector(T) == BracketVector(*naive_tangle_vector(T))


def test_link_engine_matches_naive_enumeration(pd):
    links = [pd(n) for n in ("trefoil", "figure8", "hopf", "kink", "torus27", "unknot", "unlink2")]
    rng = random.Random(5)
    for _ in range(30):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 9))]
        links.append(braid_closure(word, 3))
    for L in links:
        assert bracket_link(L) == naive_link_bracket(L)


def test_bracket_link_examples(pd):
    assert bracket_link(pd("unknot")) == ONE
    assert bracket_link(pd("kink")) in (X, unit_pow(-1))
    assert as_unit_multiple(bracket_link(pd("trefoil")))[0] == 3
    assert as_unit_multiple(bracket_link(pd("hopf")))[0] == 2
    assert bracket_link(pd("unlink2")) == ZERO


def test_split_circle_kills_bracket(pd):
    L = pd("trefoil")
    assert bracket_link(LinkDiagram(L.crossings, 1)) == ZERO


def test_empty_link_rejected():
    with pytest.raises(DiagramError):
        bracket_link(LinkDiagram(()))


def test_determinant_examples(pd):
    assert determinant(pd("trefoil")) == 3
    assert determinant(pd("unlink2")) == 0
    assert determinant(closure_denominator(SQUARE)) == 9
    assert determinant(closure_numerator(rotate(SQUARE))) == 9


def test_determinant_rejects_non_unit_bracket():
    L = LinkDiagram(((0, 0, 1, 2), (1, 3, 2, 3)))  # not planar
    with pytest.raises(ValueError):
        determinant(L)


def test_crossed_loop_free_state_rejected():
    T = TangleDiagram(((0, 0, 1, 2), (1, 3, 4, 5)), Boundary(2, 3, 4, 5))
    with pytest.raises(DiagramError):
        bracket_vector(T)


def test_invariant_examples():
    assert invariant(zero_tangle()) == F(0, 1)
    assert invariant(unit_tangle()) == F(1, 1)
    assert invariant(SQUARE) == F(0, 9)
    assert invariant(GRANNY) == F(-6, 9)


def test_extract_fraction_failure():
    with pytest.raises(ValueError):
        extract_fraction(BracketVector(ONE + X, ONE))


def test_extract_fraction_zero_zero():
    assert extract_fraction(BracketVector(ZERO, ZERO)) == F(0, 0)


def test_compose_examples():
    T2 = tangle_sum(unit_tangle(), unit_tangle())
    assert compose(UNIT_VECTOR, UNIT_VECTOR) == bracket_vector(T2)
    for v in (UNIT_VECTOR, bracket_vector(SQUARE)):
        assert compose(v, ZERO_VECTOR) == v
        assert compose(ZERO_VECTOR, v) == v
    r3 = bracket_vector(rotate(to_diagram(parse("3"))))
    rm3 = bracket_vector(rotate(to_diagram(parse("-3"))))
    assert compose(r3, rm3) == bracket_vector(SQUARE)


def test_rotate_and_reflect_vector_examples():
    assert rotate_vector(rotate_vector(UNIT_VECTOR)) == UNIT_VECTOR
    assert rotate_vector(UNIT_VECTOR) == BracketVector(unit_pow(-1), X)
    assert reflect_vector(UNIT_VECTOR) == BracketVector(unit_pow(-1), X)
    assert reflect_vector(UNIT_VECTOR) == bracket_vector(to_diagram(parse("-1")))
    assert reflect_vector(reflect_vector(UNIT_VECTOR)) == UNIT_VECTOR


@given(expressions(9))
@settings(max_examples=40, deadline=None)
def test_vector_operations_match_diagram_operations(e):
    T = to_diagram(e)
    v = bracket_vector(T)
    assert bracket_vector(rotate(T)) == rotate_vector(v)
    assert bracket_vector(reflect(T)) == reflect_vector(v)


@given(expressions(6), expressions(6))
@settings(max_examples=40, deadline=None)
def test_compose_matches_sum(e1, e2):
    T, U = to_diagram(e1), to_diagram(e2)
    assert bracket_vector(tangle_sum(T, U)) == compose(bracket_vector(T), bracket_vector(U))
    assert invariant(tangle_sum(T, U)) == invariant(T) + invariant(U)


def test_obstruct_examples(pd):
    r = obstruct(SQUARE, pd("unknot"))
    assert (r.g, r.link_determinant, r.divides, r.verdict) == (9, 1, False, "impossible")
    r = obstruct("3* + 3*", pd("hopf"))
    assert (r.g, r.link_determinant, r.divides) == (3, 2, False)
    r = obstruct(parse("3* + 3*"), pd("trefoil"))
    assert (r.g, r.link_determinant, r.divides, r.verdict) == (3, 3, True, "inconclusive")
    assert obstruct("3* + 3*", 3) == r


def test_obstruct_divisibility_conventions():
    assert obstruct("0* + 0*", 0).divides          # g = 0 divides 0
    assert not obstruct("0* + 0*", 5).divides      # ... and nothing else
    assert obstruct("1", 7).divides                # g = 1 divides everything
    with pytest.raises(ValueError):
        obstruct("1", -1)


def test_obstruct_report_text():
    r = obstruct("3* + -3*", 1)
    assert r.to_line() == "f(T)=0/9 gcd=9 det=1 verdict: impossible"
    assert "divides=false" in r.to_kv()


def test_granny_plus_one_closes_to_trefoil():
    T = to_diagram(parse("3* + 3* + 1"))
    L = closure_numerator(T)
    assert determinant(L) == 3
    assert component_count(L) == 1
    assert determinant(closure_numerator(to_diagram(parse("-3")))) == 3


def test_component_count_examples(pd):
    assert component_count(pd("trefoil")) == 1
    assert component_count(pd("hopf")) == 2
    assert component_count(closure_numerator(zero_tangle())) == 2


def test_reidemeister_fixtures():
    base = [1, -2, 1, 1, -2]
    reference = bracket_link(braid_closure(base, 3))
    # R2: insert sigma_2 sigma_2^-1
    assert bracket_link(braid_closure(base + [2, -2], 3)) == reference
    assert bracket_link(braid_closure([-1, 1] + base, 3)) == reference
    # R3: sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
    for ctx in ([], [1], [-2, -1]):
        assert (bracket_link(braid_closure([1, 2, 1] + ctx, 3))
                == bracket_link(braid_closure([2, 1, 2] + ctx, 3)))
        assert (bracket_link(braid_closure([-1, -2, -1] + ctx, 3))
                == bracket_link(braid_closure([-2, -1, -2] + ctx, 3)))
    # R1: stabilisation adds a kink and multiplies by A^(+-1)
    for word, strands in ((base, 3), ([1, 1, 1], 2), ([], 1)):
        before = bracket_link(braid_closure(word, strands))
        for sign in (1, -1):
            after = bracket_link(braid_closure(word + [sign * strands], strands + 1))
            assert after in (before * X, before * unit_pow(-1))
            assert as_unit_multiple(after)[0] == as_unit_multiple(before)[0]


def test_crossing_cap(monkeypatch):
    T = to_diagram(parse("5"))
    with pytest.raises(CrossingCapError):
        bracket_vector(T, cap=4)
    monkeypatch.setenv(CAP_ENV, "3")
    with pytest.raises(CrossingCapError):
        bracket_link(closure_numerator(T))
    assert bracket_vector(T, cap=5) == eval_vector(parse("5"))


def test_twenty_crossing_state_sum_is_fast():
    e = parse("(3* + 2)* + (2* + -3)* + ~(4* + 1)* + 5")
    assert bracket_vector(to_diagram(e)) == eval_vector(e)
