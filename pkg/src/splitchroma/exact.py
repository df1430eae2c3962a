"""Exact k-edge-coloring: Kempe-chain repair first, complete backtracking second.

The repair phase can only find colorings; every "no coloring" answer comes
from the complete search, and running out of nodes raises
:class:`BudgetExhausted` rather than guessing.
"""

from __future__ import annotations

import os
import random
import sys

from .coloring import EdgeColoring, verify_coloring
from .errors import BudgetExhausted
from .graph import Edge, Graph
from .vizing import PartialColoring

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "SPLITCHROMA_BUDGET"
REPAIR_RESTARTS = 30


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def exact_delta_coloring(
    g: Graph, budget: int | None = None, seed: int = 0
) -> EdgeColoring | None:
    """A proper ``Delta``-edge-coloring of ``g``, or ``None`` if none exists."""
    return k_edge_coloring(g, g.max_degree, budget=budget, seed=seed)


def k_edge_coloring(
    g: Graph, k: int, budget: int | None = None, seed: int = 0
) -> EdgeColoring | None:
    if budget is None:
        budget = default_budget()
    if g.max_degree > k:
        return None
    if g.m == 0:
        return EdgeColoring(k, {})
    found = None
    for attempt in range(REPAIR_RESTARTS):
        found = kempe_repair(g, k, random.Random(seed * 7919 + attempt), max_steps=20 * g.m + 500)
        if found is not None:
            break
    if found is None:
        found = _backtrack(g, k, budget)
    if found is not None:
        assert verify_coloring(g, found) is None
    return found


def kempe_repair(
    g: Graph, k: int, rng: random.Random, max_steps: int
) -> EdgeColoring | None:
    """Randomized local search: greedy start, then Kempe swaps and ejections.

    Returns ``None`` when ``max_steps`` repairs did not finish the coloring,
    which says nothing about whether a coloring exists.
    """
    pc = PartialColoring(g.n, k)
    deg = g.degrees()
    order = sorted(g.edges(), key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))
    pending: list[Edge] = []
    for u, v in order:
        common = [c for c in pc.free(u) if pc.is_free(v, c)]
        if common:
            pc.set(u, v, common[0])
        else:
            pending.append((u, v))

    steps = 0
    while pending:
        steps += 1
        if steps > max_steps:
            return None
        i = rng.randrange(len(pending))
        pending[i], pending[-1] = pending[-1], pending[i]
        u, v = pending.pop()
        if rng.random() < 0.5:
            u, v = v, u
        fu, fv = pc.free(u), pc.free(v)
        common = [c for c in fu if c in set(fv)]
        if common:
            pc.set(u, v, rng.choice(common))
            continue
        if _kempe_fix(pc, u, v, fu, fv, rng):
            continue
        # eject the a-colored edge at v and take its color
        a = rng.choice(fu)
        y = pc.at[v][a]
        pc.unset(v, y)
        pc.set(u, v, a)
        pending.append((v, y) if v < y else (y, v))
    return pc.to_coloring()


def _kempe_fix(
    pc: PartialColoring, u: int, v: int, fu: list[int], fv: list[int], rng: random.Random
) -> bool:
    pairs = [(a, b) for a in fu for b in fv]
    rng.shuffle(pairs)
    for a, b in pairs[:16]:
        # a is free at u only, b at v only
        path = pc.chain(v, a, b)
        if path[-1] != u:
            pc.flip(path, a, b)
            pc.set(u, v, a)
            return True
        path = pc.chain(u, b, a)
        if path[-1] != v:
            pc.flip(path, a, b)
            pc.set(u, v, b)
            return True
    return False


def _backtrack(g: Graph, k: int, budget: int) -> EdgeColoring | None:
    """Complete search over edges, most constrained first.

    Colors never used so far are interchangeable, so only the smallest unused
    one is tried.  Forward checks: every vertex keeps at least as many free
    colors as it has uncolored edges, and for each color the uncolored edges
    that could still take it fit into a matching on the vertices where it is
    free.
    """
    n = g.n
    used: list[set[int]] = [set() for _ in range(n)]
    left = g.degrees()
    uncolored: set[Edge] = set(g.edges())
    assign: dict[Edge, int] = {}
    nodes = 0

    def feasible() -> bool:
        for x in range(n):
            if left[x] > k - len(used[x]):
                return False
        capacity = 0
        for c in range(1, k + 1):
            open_ends = sum(1 for x in range(n) if left[x] and c not in used[x])
            capacity += open_ends // 2
        return capacity >= len(uncolored)

    def pick() -> tuple[Edge, list[int]]:
        best: tuple[Edge, list[int]] | None = None
        best_key = None
        for e in uncolored:
            u, v = e
            options = [c for c in range(1, k + 1) if c not in used[u] and c not in used[v]]
            key = (len(options), -(left[u] + left[v]), e)
            if best_key is None or key < best_key:
                best, best_key = (e, options), key
                if not options:
                    break
        assert best is not None
        return best

    def solve(max_used: int) -> bool:
        nonlocal nodes
        if not uncolored:
            return True
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(budget)
        (u, v), options = pick()
        for c in options:
            if c > max_used + 1:
                break
            uncolored.discard((u, v))
            assign[(u, v)] = c
            used[u].add(c)
            used[v].add(c)
            left[u] -= 1
            left[v] -= 1
            if feasible() and solve(max(max_used, c)):
                return True
            left[u] += 1
            left[v] += 1
            used[u].discard(c)
            used[v].discard(c)
            del assign[(u, v)]
            uncolored.add((u, v))
        return False

    if not feasible():
        return None
    sys.setrecursionlimit(max(sys.getrecursionlimit(), g.m + 1000))
    if solve(0):
        return EdgeColoring(k, dict(assign))
    return None
