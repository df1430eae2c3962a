"""Ground truth at desk scale: exact chromatic index by exhaustive search.

The search is deliberately unrelated to the colorer in :mod:`.exact`: it
covers the edge set with color classes, always building the class that
contains a fixed edge at a maximum-degree vertex, and memoizes edge subsets
that were shown not to be coverable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, verify_coloring
from .errors import BudgetExhausted
from .exact import default_budget
from .graph import Graph
from .vizing import vizing_plus_one

# re-exported so the permutation recognizer is reachable next to the colorer oracle
from .split import recognize_by_permutations  # noqa: F401


@dataclass
class OracleResult:
    chi_prime: int | None  # None when the search budget ran out
    certificate: EdgeColoring | None
    nodes_explored: int

    @property
    def indeterminate(self) -> bool:
        return self.chi_prime is None


class _CoverSearch:
    def __init__(self, g: Graph, budget: int) -> None:
        self.edges = g.edges()
        m = len(self.edges)
        # bitmask of edges sharing an endpoint with edge i (including i)
        self.touch = [0] * m
        for i, (a, b) in enumerate(self.edges):
            for j, (c, d) in enumerate(self.edges):
                if a in (c, d) or b in (c, d):
                    self.touch[i] |= 1 << j
        self.at_vertex = [0] * g.n
        for i, (a, b) in enumerate(self.edges):
            self.at_vertex[a] |= 1 << i
            self.at_vertex[b] |= 1 << i
        self.budget = budget
        self.nodes = 0
        self.dead: set[tuple[int, int]] = set()

    def _bits(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def _maximal_matchings(self, mask: int, seed: int) -> list[int]:
        """Every matching inside ``mask`` that contains edge ``seed`` and
        cannot be extended within ``mask``."""
        found: list[int] = []

        def grow(chosen: int, avail: int, skipped: int) -> None:
            if not avail:
                # maximal iff every skipped edge conflicts with a chosen one
                for j in self._bits(skipped):
                    if not self.touch[j] & chosen:
                        return
                found.append(chosen)
                return
            low = avail & -avail
            j = low.bit_length() - 1
            grow(chosen | low, avail & ~self.touch[j], skipped)
            grow(chosen, avail & ~low, skipped | low)

        grow(1 << seed, mask & ~self.touch[seed], 0)
        return found

    def coverable(self, mask: int, k: int) -> list[int] | None:
        """Partition of ``mask`` into at most ``k`` matchings, or ``None``."""
        if not mask:
            return []
        if k == 0 or (mask, k) in self.dead:
            return None
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.budget)
        degs = [(mask & av).bit_count() for av in self.at_vertex]
        top = max(degs)
        if top > k:
            self.dead.add((mask, k))
            return None
        touched = sum(1 for d in degs if d)
        if mask.bit_count() > k * (touched // 2):
            self.dead.add((mask, k))
            return None
        x = degs.index(top)
        seed = (mask & self.at_vertex[x] & -(mask & self.at_vertex[x])).bit_length() - 1
        for matching in self._maximal_matchings(mask, seed):
            rest = self.coverable(mask & ~matching, k - 1)
            if rest is not None:
                return [matching] + rest
        self.dead.add((mask, k))
        return None


def chromatic_index_exact(g: Graph, budget: int | None = None) -> OracleResult:
    """Chromatic index of a simple graph, searched over ``{Delta, Delta + 1}``."""
    if g.m == 0:
        raise ValueError("chromatic index oracle needs at least one edge")
    if budget is None:
        budget = default_budget()
    delta = g.max_degree
    search = _CoverSearch(g, budget)
    try:
        classes = search.coverable((1 << g.m) - 1, delta)
    except BudgetExhausted:
        return OracleResult(None, None, search.nodes)
    if classes is not None:
        assign = {}
        for color, matching in enumerate(classes, start=1):
            for i in search._bits(matching):
                assign[search.edges[i]] = color
        cert = EdgeColoring(delta, assign)
        chi = delta
    else:
        cert = vizing_plus_one(g)
        chi = delta + 1
    assert verify_coloring(g, cert) is None
    return OracleResult(chi, cert, search.nodes)
