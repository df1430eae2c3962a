"""Edge-counting predicates: overfull, neighborhood-overfull, saturated.

All arithmetic is on integers. Slack is reported in doubled units,
``2m - (n-1)*Delta``, so no fractional comparison is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement, delta_and_core, induced_subgraph


@dataclass(frozen=True)
class OverfullVerdict:
    is_overfull: bool
    slack: int  # 2m - (n-1)*Delta


def is_overfull(g: Graph) -> OverfullVerdict:
    delta, _ = delta_and_core(g)
    slack = 2 * g.m - (g.n - 1) * delta
    return OverfullVerdict(g.n % 2 == 1 and slack > 0, slack)


def is_neighborhood_overfull(g: Graph) -> int | None:
    """Smallest-id maximum-degree vertex whose closed neighborhood induces an
    overfull graph with the same maximum degree, or ``None``."""
    delta, core = delta_and_core(g)
    for v in sorted(core):
        h, _ = induced_subgraph(g, g.closed_neighborhood(v))
        # v is universal in h, so the maximum degree is inherited
        assert h.max_degree == delta
        if is_overfull(h).is_overfull:
            return v
    return None


def is_saturated(g: Graph) -> bool:
    delta, _ = delta_and_core(g)
    if g.n % 2 == 0 or delta % 2 == 1:
        return False
    if complement(g).m != delta // 2:
        return False
    assert g.universal_vertices(), "saturated graph without a universal vertex"
    return True


def satisfies_delta_condition(g: Graph) -> bool:
    """Whether ``Delta(G) > n/3``."""
    return 3 * g.max_degree > g.n
