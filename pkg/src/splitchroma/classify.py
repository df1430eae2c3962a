"""Class 1 / Class 2 decision for split-comparability graphs.

A split-comparability graph is Class 2 exactly when it is
neighborhood-overfull.  The case analysis of the constructive argument is
replayed in order and the first case that applies is recorded as the branch:

    B0  neighborhood-overfull (Class 2)
    B1  odd maximum degree
    B2  all maximum-degree vertices on one side of Q
    B3  a stable vertex with |Q|/2 <= d(v) <= Delta/2
    B4  both Q_l and Q_r smaller than |Q|/2 (augmentation)
    B5  main construction, oriented so that Q_l is the large side
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import check
from .graph import Graph, GraphInputError, delta_and_core
from .overfull import is_neighborhood_overfull
from .split import SplitCompStructure, mirror


class Verdict(str, enum.Enum):
    CLASS1 = "class1"
    CLASS2 = "class2"


class Branch(str, enum.Enum):
    B0 = "B0"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"


@dataclass
class Classification:
    verdict: Verdict
    delta: int
    branch: Branch
    structure: SplitCompStructure
    witness_vertex: int | None = None
    # stable vertex certifying B3
    mid_degree_vertex: int | None = None
    # True when ``structure`` is the mirror of the recognized one (B5 only)
    mirrored: bool = False
    b5_preconditions: dict[str, bool] = field(default_factory=dict)

    @property
    def colors_needed(self) -> int:
        return self.delta + (self.verdict is Verdict.CLASS2)


def _same_graph(g: Graph, st: SplitCompStructure) -> bool:
    q = set(st.q_order)
    if q | set(st.stable) != set(range(g.n)):
        return False
    return all(st.neighborhood(s) == g.adj[s] for s in st.extents) and all(
        not g.adj[s] for s in st.isolated
    )


def b5_preconditions(g: Graph, st: SplitCompStructure, delta: int) -> dict[str, bool]:
    """Hypotheses under which the main construction is argued to work."""
    r = st.r
    core = {v for v in range(g.n) if g.degree(v) == delta}
    return {
        "delta_even": delta % 2 == 0,
        "core_in_q_l": bool(core & set(st.q_l)),
        "core_in_q_r": bool(core & set(st.q_r)),
        "balanced_sides": len(st.s_l) == len(st.s_r),
        "q_l_above_half_delta": 2 * st.p > delta,
        "q_r_below_half_q": 2 * st.size_q_r < r,
        "no_mid_degree_vertex": _mid_degree_vertex(g, st, delta) is None,
    }


def _mid_degree_vertex(g: Graph, st: SplitCompStructure, delta: int) -> int | None:
    r = st.r
    for s in sorted(st.stable):
        d = g.degree(s)
        if r <= 2 * d <= delta:
            return s
    return None


def classify(g: Graph, st: SplitCompStructure) -> Classification:
    if not _same_graph(g, st):
        raise GraphInputError("structure does not describe this graph")
    delta, core = delta_and_core(g)
    r = st.r

    witness = is_neighborhood_overfull(g)
    if witness is not None:
        return Classification(Verdict.CLASS2, delta, Branch.B0, st, witness_vertex=witness)
    if delta % 2 == 1:
        return Classification(Verdict.CLASS1, delta, Branch.B1, st)

    # A clique with only isolated stable vertices has odd or overfull-forcing
    # Delta, so it never reaches this point.
    check(bool(st.extents), "even-Delta non-overfull graph without stable edges")
    check(not core & set(st.q_t), "maximum-degree vertex in Q_t")
    check(core <= set(st.q_order), "maximum-degree vertex outside Q")
    in_left = bool(core & set(st.q_l))
    in_right = bool(core & set(st.q_r))
    if not (in_left and in_right):
        return Classification(Verdict.CLASS1, delta, Branch.B2, st)

    mid = _mid_degree_vertex(g, st, delta)
    if mid is not None:
        return Classification(Verdict.CLASS1, delta, Branch.B3, st, mid_degree_vertex=mid)

    if 2 * st.p < r and 2 * st.size_q_r < r:
        return Classification(Verdict.CLASS1, delta, Branch.B4, st)

    flipped = 2 * st.p < r
    oriented = mirror(st) if flipped else st
    return Classification(
        Verdict.CLASS1,
        delta,
        Branch.B5,
        oriented,
        mirrored=flipped,
        b5_preconditions=b5_preconditions(g, oriented, delta),
    )
