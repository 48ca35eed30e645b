import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tanglefrac.algebra import Integral, Refl, Rot, Sum  # noqa: E402
from tanglefrac.diagram import load_pd  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def random_expr(rng: random.Random, budget: int):
    """Random algebraic expression with at most ``budget`` crossings."""
    r = rng.random()
    if budget <= 1 or r < 0.3:
        return Integral(rng.randint(-budget, budget))
    if r < 0.65:
        k = rng.randint(0, budget)
        return Sum(random_expr(rng, k), random_expr(rng, budget - k))
    if r < 0.85:
        return Rot(random_expr(rng, budget))
    return Refl(random_expr(rng, budget))


def expressions(max_crossings: int):
    """Hypothesis strategy wrapping ``random_expr``."""
    return st.builds(lambda seed, b: random_expr(random.Random(seed), b),
                     st.integers(0, 2**32), st.integers(0, max_crossings))


@pytest.fixture
def pd():
    return lambda name: load_pd(FIXTURES / f"{name}.pd")


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
