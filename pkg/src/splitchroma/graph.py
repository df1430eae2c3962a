"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphInputError(ValueError):
    """Raised for malformed graph input (self-loops, out-of-range ids, ...)."""


class EdgelessGraphError(ValueError):
    """Raised when a Delta-based quantity is requested on a graph with no edges."""


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Instances are immutable; build them with :func:`build_graph`.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", sum(len(a) for a in self.adj) // 2)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as sorted ``(min, max)`` pairs, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def neighborhood_of_set(self, xs: Iterable[int], closed: bool = False) -> frozenset[int]:
        out: set[int] = set()
        for x in xs:
            out |= self.adj[x]
            if closed:
                out.add(x)
        return frozenset(out)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def universal_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == self.n - 1]

    def add_edges(self, extra: Iterable[Edge]) -> Graph:
        return build_graph(self.n, list(self.edges()) + list(extra))

    def remove_edges(self, gone: Iterable[Edge]) -> Graph:
        drop = {norm(u, v) for u, v in gone}
        return build_graph(self.n, [e for e in self.edges() if e not in drop])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse to one edge."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphInputError(f"self-loop at edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``xs``, relabelled to ``0..|xs|-1`` in ascending id order.

    Returns the subgraph and the old-id -> new-id map.
    """
    members = sorted(set(xs))
    if not members:
        raise GraphInputError("induced subgraph of an empty vertex set")
    for x in members:
        if not 0 <= x < g.n:
            raise GraphInputError(f"vertex {x} outside 0..{g.n - 1}")
    relabel = {old: new for new, old in enumerate(members)}
    sub_edges = [
        (relabel[u], relabel[v])
        for u in members
        for v in g.adj[u]
        if u < v and v in relabel
    ]
    return build_graph(len(members), sub_edges), relabel


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))


def delta_and_core(g: Graph) -> tuple[int, frozenset[int]]:
    """Maximum degree and the set of vertices attaining it."""
    if g.m == 0:
        raise EdgelessGraphError("graph has no edges; maximum degree classification is vacuous")
    delta = g.max_degree
    return delta, frozenset(v for v in range(g.n) if len(g.adj[v]) == delta)


def is_clique(g: Graph, xs: Iterable[int]) -> bool:
    xs = list(xs)
    return all(v in g.adj[u] for i, u in enumerate(xs) for v in xs[i + 1:])


def is_stable(g: Graph, xs: Iterable[int]) -> bool:
    xs = list(xs)
    return not any(v in g.adj[u] for i, u in enumerate(xs) for v in xs[i + 1:])
