"""Exact 4-tangle invariants from the Kauffman bracket at A = exp(i*pi/4)."""

from .ring import CycInt, as_unit_multiple, conj, is_integer, unit_pow
from .fraction import FormalFraction
from .diagram import (
    Boundary,
    DiagramError,
    LinkDiagram,
    Pairing,
    TangleDiagram,
    braid_closure,
    closure_denominator,
    closure_numerator,
    component_count,
    connectivity,
    format_pd,
    load_pd,
    parse_pd,
    reflect,
    rotate,
    smooth,
    tangle_sum,
)
from .bracket import (
    BracketVector,
    CrossingCapError,
    ObstructionReport,
    bracket_link,
    bracket_vector,
    determinant,
    invariant,
    obstruct,
)
from .algebra import (
    eval_fraction,
    eval_vector,
    parse,
    realize,
    rational_tangle,
    to_diagram,
    to_text,
)


__version__ = "0.1.0"
from .coloring import colorability_check, find_coloring
