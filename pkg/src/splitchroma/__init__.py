"""Edge coloring of split-comparability graphs.

Typical use::

    from splitchroma import build_graph, recognize, classify, color

    g = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4)])
    cls = classify(g, recognize(g))
    result = color(g, cls)
"""

from .classify import Branch, Classification, Verdict, classify
from .coloring import EdgeColoring, is_balanced, rebalance, verify_coloring
from .construction import ColorResult, ConstructionGap, color
from .errors import (
    BudgetExhausted,
    InconclusiveError,
    NoOrderingError,
    NotSplitError,
    RecognitionError,
)
from .exact import exact_delta_coloring
from .fileio import ParseError, parse_graph, parse_graph_file, write_dimacs
from .graph import Graph, GraphInputError, build_graph
from .oracle import OracleResult, chromatic_index_exact
from .overfull import is_neighborhood_overfull, is_overfull
from .split import SplitCompStructure, mirror, recognize, recognize_by_permutations
from .vizing import vizing_plus_one

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "BudgetExhausted",
    "Classification",
    "ColorResult",
    "ConstructionGap",
    "EdgeColoring",
    "Graph",
    "GraphInputError",
    "InconclusiveError",
    "NoOrderingError",
    "NotSplitError",
    "OracleResult",
    "ParseError",
    "RecognitionError",
    "SplitCompStructure",
    "Verdict",
    "build_graph",
    "chromatic_index_exact",
    "classify",
    "color",
    "exact_delta_coloring",
    "is_balanced",
    "is_neighborhood_overfull",
    "is_overfull",
    "mirror",
    "parse_graph",
    "parse_graph_file",
    "rebalance",
    "recognize",
    "recognize_by_permutations",
    "verify_coloring",
    "vizing_plus_one",
    "write_dimacs",
]
