"""Edge colorings, their verification, missing-color tables and rebalancing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Edge, Graph, norm


@dataclass
class EdgeColoring:
    """Colors are ``1..k``; keys are normalized ``(min, max)`` edges."""

    k: int
    assignment: dict[Edge, int]

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[norm(*e)]

    def class_sizes(self) -> list[int]:
        counts = Counter(self.assignment.values())
        return [counts.get(c, 0) for c in range(1, self.k + 1)]

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def incident_colors(self, n: int) -> list[set[int]]:
        at: list[set[int]] = [set() for _ in range(n)]
        for (u, v), c in self.assignment.items():
            at[u].add(c)
            at[v].add(c)
        return at

    def restrict(self, g: Graph) -> EdgeColoring:
        return EdgeColoring(self.k, {e: self.assignment[e] for e in g.edges()})

    def triples(self) -> list[tuple[int, int, int]]:
        return [(u, v, c) for (u, v), c in sorted(self.assignment.items())]


@dataclass(frozen=True)
class Violation:
    kind: str  # "untotal" | "improper" | "range" | "foreign"
    detail: str


class ColoringError(ValueError):
    pass


def verify_coloring(g: Graph, col: EdgeColoring) -> Violation | None:
    """``None`` when ``col`` is a total proper coloring of ``g`` in ``1..k``."""
    edges = g.edges()
    for e in edges:
        if e not in col.assignment:
            return Violation("untotal", f"edge {e} has no color")
    if len(col.assignment) != len(edges):
        extra = next(e for e in col.assignment if not g.has_edge(*e))
        return Violation("foreign", f"colored pair {extra} is not an edge")
    seen: dict[tuple[int, int], Edge] = {}
    for e in edges:
        c = col.assignment[e]
        if not 1 <= c <= col.k:
            return Violation("range", f"edge {e} has color {c} outside 1..{col.k}")
        for x in e:
            other = seen.get((x, c))
            if other is not None:
                return Violation("improper", f"edges {other} and {e} share vertex {x} and color {c}")
            seen[(x, c)] = e
    return None


@dataclass
class MissingColorTable:
    """Colors in ``1..k`` with no incident edge, per vertex."""

    k: int
    missing: dict[int, set[int]]

    def __getitem__(self, v: int) -> set[int]:
        return self.missing[v]

    def vertices_missing(self, c: int) -> list[int]:
        return sorted(v for v, cs in self.missing.items() if c in cs)


def missing_colors(g: Graph, col: EdgeColoring) -> MissingColorTable:
    palette = set(range(1, col.k + 1))
    at = col.incident_colors(g.n)
    return MissingColorTable(col.k, {v: palette - at[v] for v in range(g.n)})


def is_balanced(col: EdgeColoring) -> bool:
    sizes = col.class_sizes()
    return max(sizes) - min(sizes) <= 1


def rebalance(col: EdgeColoring, g: Graph, trace: list[int] | None = None) -> EdgeColoring:
    """Equalize class sizes to within one by alternating-path swaps.

    While some class ``a`` has at least two more edges than class ``b``,
    their union (paths and even cycles) contains a path with one more
    ``a``-edge than ``b``-edges; swapping the two colors along it moves one
    edge from ``a`` to ``b``.  If ``trace`` is given, the sum of squared class
    sizes is appended after every swap.
    """
    bad = verify_coloring(g, col)
    if bad is not None:
        raise ColoringError(f"rebalance needs a proper coloring: {bad.detail}")
    assign = dict(col.assignment)
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    for (u, v), c in assign.items():
        at[u][c] = v
        at[v][c] = u
    sizes = Counter(assign.values())
    for c in range(1, col.k + 1):
        sizes.setdefault(c, 0)

    def energy() -> int:
        return sum(s * s for s in sizes.values())

    if trace is not None:
        trace.append(energy())
    while True:
        big = max(sizes, key=lambda c: (sizes[c], -c))
        small = min(sizes, key=lambda c: (sizes[c], c))
        if sizes[big] - sizes[small] <= 1:
            break
        path = _surplus_path(assign, at, big, small)
        before = energy()
        for x, y in path:
            c = assign[(x, y)]
            del at[x][c]
            del at[y][c]
        for x, y in path:
            c = small if assign[(x, y)] == big else big
            assign[(x, y)] = c
            at[x][c] = y
            at[y][c] = x
        sizes[big] -= 1
        sizes[small] += 1
        assert energy() < before
        if trace is not None:
            trace.append(energy())
    return EdgeColoring(col.k, assign)


def _surplus_path(
    assign: dict[Edge, int], at: list[dict[int, int]], big: int, small: int
) -> list[Edge]:
    """An alternating big/small path that starts and ends with ``big`` edges."""
    for (u, v), c in sorted(assign.items()):
        if c != big:
            continue
        # walk both directions from edge uv; it is a path component when
        # neither end has a continuing edge
        path = [(u, v)]
        closed = False
        for start in (u, v):
            x, want = start, small
            while want in at[x]:
                y = at[x][want]
                e = norm(x, y)
                if e == (u, v) or e in path:
                    closed = True
                    break
                path.append(e)
                x, want = y, (big if want == small else small)
            if closed:
                break
        if closed:
            continue
        big_edges = sum(1 for e in path if assign[e] == big)
        if 2 * big_edges == len(path) + 1:
            return path
    raise AssertionError("no surplus alternating path although class sizes differ by two")
