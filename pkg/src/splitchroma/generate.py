"""Seeded split-comparability instances and exhaustive small-graph enumeration."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

import networkx as nx

from .classify import Branch, Classification, classify
from .errors import RecognitionError
from .graph import Graph, build_graph
from .split import SplitCompStructure, recognize


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    """Segment sizes of the clique order and of each stable class.

    Prefix and suffix lengths of stable vertices are drawn uniformly, then
    one vertex is stretched so that Q_l and Q_r have exactly the requested
    sizes.
    """

    seed: int
    q_l: int
    q_t: int
    q_r: int
    s_l: int
    s_r: int
    s_t: int
    shuffle_ids: bool = True

    @property
    def r(self) -> int:
        return self.q_l + self.q_t + self.q_r

    @property
    def n(self) -> int:
        return self.r + self.s_l + self.s_r + self.s_t


def _check_sizes(spec: InstanceSpec) -> None:
    sizes = (spec.q_l, spec.q_t, spec.q_r, spec.s_l, spec.s_r, spec.s_t)
    if min(sizes) < 0:
        raise GenerationError(f"negative size in {sizes}")
    if spec.r == 0:
        raise GenerationError("Q must be non-empty")
    if (spec.q_l > 0) != (spec.s_l + spec.s_t > 0):
        raise GenerationError("Q_l is non-empty exactly when S_l u S_t is")
    if (spec.q_r > 0) != (spec.s_r + spec.s_t > 0):
        raise GenerationError("Q_r is non-empty exactly when S_r u S_t is")
    if spec.s_l and spec.q_l >= spec.r:
        raise GenerationError("an S_l vertex would see all of Q")
    if spec.s_r and spec.q_r >= spec.r:
        raise GenerationError("an S_r vertex would see all of Q")
    if spec.s_t and spec.q_t == 0 and spec.q_l + spec.q_r < 3:
        raise GenerationError("S_t vertices need room for a gap in Q")


def sample_extents(spec: InstanceSpec, rng: random.Random) -> list[tuple[int, int]]:
    """(prefix_len, suffix_len) per stable vertex, ordered S_l, S_r, S_t."""
    _check_sizes(spec)
    r, ql, qr = spec.r, spec.q_l, spec.q_r
    ext: list[tuple[int, int]] = []
    ext += [(rng.randint(1, ql), 0) for _ in range(spec.s_l)]
    ext += [(0, rng.randint(1, qr)) for _ in range(spec.s_r)]
    for _ in range(spec.s_t):
        while True:
            a, b = rng.randint(1, ql), rng.randint(1, qr)
            if a + b < r:
                break
        ext.append((a, b))

    def stretch(side: int, full: int) -> None:
        if full == 0 or max(e[side] for e in ext) == full:
            return
        candidates = [i for i, e in enumerate(ext) if e[side] > 0 and e[1 - side] + full < r]
        if not candidates:
            raise GenerationError("cannot reach the requested segment size without covering Q")
        i = rng.choice(candidates)
        e = list(ext[i])
        e[side] = full
        ext[i] = (e[0], e[1])

    stretch(0, ql)
    stretch(1, qr)
    return ext


def gen_random(spec: InstanceSpec) -> Graph:
    """Graph with the requested shape; deterministic in ``spec``."""
    rng = random.Random(spec.seed)
    ext = sample_extents(spec, rng)
    r = spec.r
    n = spec.n
    labels = list(range(n))
    if spec.shuffle_ids:
        rng.shuffle(labels)
    q = labels[:r]
    stable = labels[r:]
    edges = [(q[i], q[j]) for i in range(r) for j in range(i + 1, r)]
    for s, (a, b) in zip(stable, ext):
        edges += [(s, q[i]) for i in range(a)]
        edges += [(s, q[i]) for i in range(r - b, r)]
    return build_graph(n, sorted(tuple(sorted(e)) for e in edges))


def propose(rng: random.Random, target: Branch | None, max_n: int) -> InstanceSpec | None:
    """Random sizes, skewed towards shapes where ``target`` is common."""
    seed = rng.getrandbits(64)
    if target is Branch.B0:
        # few stable vertices seeing almost all of Q make N[v] dense
        r = rng.randint(3, max(3, max_n - 4))
        s_l = rng.randint(1, 3)
        s_r = rng.choice([0, 0, 1])
        q_r = 1 if s_r else 0
        return InstanceSpec(seed, r - 1 - q_r, 1, q_r, s_l, s_r, 0)
    if target is Branch.B5:
        s = rng.randint(1, max(1, max_n // 6))
        t = rng.choice([0, 0, 0, 1, 2])
        r = rng.randint(2 * s + t + 2, max(2 * s + t + 2, max_n - 2 * s - t))
        q_r = rng.randint(1, max(1, (r - 1) // 2))
        q_t = rng.randint(0, max(0, r - q_r - 2 * s - t - 1))
        q_l = r - q_r - q_t
        return InstanceSpec(seed, q_l, q_t, q_r, s, s, t)
    r = rng.randint(1, max(1, max_n - 1))
    budget = max_n - r
    s_l = rng.randint(0, budget)
    s_r = rng.randint(0, budget - s_l)
    s_t = rng.randint(0, min(3, budget - s_l - s_r))
    if target in (Branch.B3, Branch.B4, Branch.B2) and rng.random() < 0.5:
        s_r = s_l if s_l + 2 * s_l + s_t <= budget + s_l else s_r
    cuts = sorted(rng.randint(0, r) for _ in range(2))
    q_l, q_t, q_r = cuts[0], cuts[1] - cuts[0], r - cuts[1]
    if s_l + s_t == 0:
        q_t += q_l
        q_l = 0
    elif q_l == 0:
        q_l, q_t = (1, q_t - 1) if q_t else (1, q_t)
    if s_r + s_t == 0:
        q_t += q_r
        q_r = 0
    elif q_r == 0:
        q_r, q_t = (1, q_t - 1) if q_t else (1, q_t)
    q_t = r - q_l - q_r
    if q_t < 0:
        return None
    return InstanceSpec(seed, q_l, q_t, q_r, s_l, s_r, s_t)


def gen_for_branch(
    target: Branch | None, seed: int, max_n: int = 60, attempts: int = 20000
) -> tuple[Graph, SplitCompStructure, Classification]:
    """Rejection-sample instances with at most ``max_n`` vertices until the
    classification lands on ``target`` (any branch when ``None``)."""
    rng = random.Random(seed)
    for _ in range(attempts):
        spec = propose(rng, target, max_n)
        if spec is None or spec.n > max_n or spec.n < 2:
            continue
        try:
            g = gen_random(spec)
        except GenerationError:
            continue
        if g.m == 0:
            continue
        st = recognize(g)
        cls = classify(g, st)
        if target is None or cls.branch is target:
            return g, st, cls
    raise GenerationError(f"no {target} instance after {attempts} attempts")


def _split_graph_candidates(n: int) -> Iterator[Graph]:
    """Split graphs on ``n`` vertices without isolated vertices, Q = 0..k-1
    maximal; many are isomorphic to each other."""
    for k in range(1, n + 1):
        clique = [(i, j) for i in range(k) for j in range(i + 1, k)]
        subsets = range(1, (1 << k) - 1)
        for rows in combinations_with_replacement(subsets, n - k):
            edges = list(clique)
            for idx, mask in enumerate(rows):
                s = k + idx
                edges += [(i, s) for i in range(k) if mask >> i & 1]
            yield build_graph(n, edges)


def _invariant(g: Graph) -> tuple:
    deg = g.degrees()
    return (g.m, tuple(sorted((deg[v], tuple(sorted(deg[u] for u in g.adj[v]))) for v in range(g.n))))


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nonisomorphic(graphs: Iterator[Graph]) -> Iterator[Graph]:
    """First representative of each isomorphism class, in input order."""
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    for g in graphs:
        key = (g.n, _invariant(g))
        h = _to_nx(g)
        if any(nx.is_isomorphic(h, other) for other in buckets[key]):
            continue
        buckets[key].append(h)
        yield g


def enumerate_split_graphs(max_n: int, min_n: int = 2) -> Iterator[Graph]:
    """All non-isomorphic split graphs with ``min_n <= n <= max_n`` and no
    isolated vertices."""
    for n in range(min_n, max_n + 1):
        yield from nonisomorphic(_split_graph_candidates(n))


def enumerate_small(max_n: int, min_n: int = 2) -> Iterator[tuple[Graph, SplitCompStructure]]:
    """Non-isomorphic split-comparability graphs without isolated vertices."""
    for g in enumerate_split_graphs(max_n, min_n):
        try:
            st = recognize(g)
        except RecognitionError:
            continue
        yield g, st
