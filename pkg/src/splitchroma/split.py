"""Split partitions and the ordered-clique decomposition of split-comparability graphs.

A split graph G = (Q u S) is split-comparability exactly when Q admits a total
order v_1 < ... < v_r under which every stable vertex sees a prefix, a suffix,
or a prefix plus a suffix of Q, with all prefixes ending before any suffix
starts.  Each stable vertex is stored by the pair ``(prefix_len, suffix_len)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations

from .errors import InconclusiveError, NoOrderingError, NotSplitError, check
from .graph import Graph, is_clique, is_stable
from .overfull import satisfies_delta_condition

PERMUTATION_LIMIT = 10


@dataclass(frozen=True)
class SplitCompStructure:
    q_order: tuple[int, ...]
    extents: dict[int, tuple[int, int]] = field(hash=False)
    s_l: tuple[int, ...]
    s_r: tuple[int, ...]
    s_t: tuple[int, ...]
    isolated: tuple[int, ...] = ()

    @property
    def r(self) -> int:
        return len(self.q_order)

    @property
    def p(self) -> int:
        """Size of Q_l; the 1-based index of its last vertex."""
        return max((a for a, _ in self.extents.values()), default=0)

    @property
    def size_q_r(self) -> int:
        return max((b for _, b in self.extents.values()), default=0)

    @property
    def q(self) -> int:
        """1-based index of the first vertex of Q_r (``r + 1`` when Q_r is empty)."""
        return self.r - self.size_q_r + 1

    @property
    def q_l(self) -> tuple[int, ...]:
        return self.q_order[: self.p]

    @property
    def q_r(self) -> tuple[int, ...]:
        return self.q_order[self.q - 1:]

    @property
    def q_t(self) -> tuple[int, ...]:
        return self.q_order[self.p: self.q - 1]

    @property
    def stable(self) -> tuple[int, ...]:
        return self.s_l + self.s_r + self.s_t + self.isolated

    def neighborhood(self, s: int) -> frozenset[int]:
        """Neighborhood of stable vertex ``s`` as encoded by its extents."""
        a, b = self.extents[s]
        return frozenset(self.q_order[:a]) | frozenset(self.q_order[self.r - b:])

    @property
    def d_q(self) -> int:
        """Maximum number of stable neighbors over clique vertices."""
        counts = dict.fromkeys(self.q_order, 0)
        for s in self.extents:
            for v in self.neighborhood(s):
                counts[v] += 1
        return max(counts.values(), default=0)

    @property
    def d_s(self) -> int:
        """Maximum degree over stable vertices."""
        return max((a + b for a, b in self.extents.values()), default=0)


def split_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Maximum clique Q and stable set S = V - Q, by the degree-sequence test.

    With degrees sorted d_1 >= ... >= d_n and k = max{i : d_i >= i - 1}, G is
    split iff sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i, and then the k highest
    degree vertices form a maximum clique.
    """
    if g.n == 0:
        raise NotSplitError("empty graph")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    k = max(i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1)
    lhs = sum(degs[:k])
    rhs = k * (k - 1) + sum(degs[k:])
    if lhs != rhs:
        raise NotSplitError(
            f"degree-sequence test failed: top-{k} degree sum {lhs} != {k}*{k - 1} + {sum(degs[k:])}"
        )
    q = frozenset(order[:k])
    s = frozenset(order[k:])
    check(is_clique(g, q) and is_stable(g, s), "degree-sequence partition is not split")
    # A maximum clique of a split graph contains at most one stable vertex,
    # so maximality is the only thing that can fail here.
    for v in s:
        check(not q <= g.adj[v], f"stable vertex {v} sees all of Q; Q not maximum")
    return q, s


def _structure_from_order(
    g: Graph, q_order: tuple[int, ...], stable: list[int]
) -> SplitCompStructure:
    pos = {v: i for i, v in enumerate(q_order)}
    extents: dict[int, tuple[int, int]] = {}
    isolated = []
    for s in stable:
        nb = sorted(pos[v] for v in g.adj[s])
        if not nb:
            isolated.append(s)
            continue
        a = 0
        while a < len(nb) and nb[a] == a:
            a += 1
        b = len(nb) - a
        extents[s] = (a, b)
    s_l = sorted((s for s, (a, b) in extents.items() if b == 0), key=lambda s: (extents[s][0], s))
    s_r = sorted((s for s, (a, b) in extents.items() if a == 0), key=lambda s: (extents[s][1], s))
    s_t = sorted((s for s, (a, b) in extents.items() if a and b), key=lambda s: (sum(extents[s]), s))
    return SplitCompStructure(
        q_order=q_order,
        extents=extents,
        s_l=tuple(s_l),
        s_r=tuple(s_r),
        s_t=tuple(s_t),
        isolated=tuple(sorted(isolated)),
    )


def validate_structure(g: Graph, st: SplitCompStructure) -> None:
    """Replay ``st`` against ``g``; raise :class:`InvariantError` on any mismatch."""
    q = set(st.q_order)
    stable = set(st.stable)
    check(len(q) == st.r, "q_order repeats a vertex")
    check(len(stable) == len(st.stable), "stable vertex listed twice")
    check(q | stable == set(range(g.n)) and not q & stable, "Q and S do not partition V")
    check(is_clique(g, q), "Q is not a clique")
    check(is_stable(g, stable), "S is not stable")
    for s in stable:
        check(not q <= g.adj[s], f"stable vertex {s} sees all of Q")
    for s in st.isolated:
        check(not g.adj[s], f"vertex {s} listed isolated but has neighbors")
    check(set(st.extents) == stable - set(st.isolated), "extents do not cover S")
    for s, (a, b) in st.extents.items():
        check(a + b >= 1 and a + b < st.r, f"bad extent {(a, b)} for {s}")
        check(st.neighborhood(s) == g.adj[s], f"N({s}) is not prefix/suffix of the order")
    check(st.p < st.q, f"prefixes overlap suffixes (p={st.p}, q={st.q})")
    for s in st.s_l:
        check(st.extents[s][1] == 0, f"{s} in S_l has a suffix part")
    for s in st.s_r:
        check(st.extents[s][0] == 0, f"{s} in S_r has a prefix part")
    for s in st.s_t:
        check(min(st.extents[s]) > 0, f"{s} in S_t lacks a prefix or suffix part")
    covered = g.neighborhood_of_set(st.extents)
    check(covered == set(st.q_l) | set(st.q_r), "Q_l u Q_r is not N(S)")


def recognize(g: Graph) -> SplitCompStructure:
    """Certified decomposition of a split-comparability graph.

    Along each side of the order, the stable neighborhoods of the clique
    vertices must form a chain.  Two clique vertices whose stable
    neighborhoods are incomparable therefore belong to opposite sides, and a
    valid order exists iff that conflict graph is bipartite.

    Raises:
        NotSplitError: ``g`` is not a split graph.
        NoOrderingError: no order of Q fits the prefix/suffix forms.
    """
    q_set, s_set = split_partition(g)
    seen_by = {v: frozenset(g.adj[v] & s_set) for v in q_set}
    touched = sorted(v for v in q_set if seen_by[v])

    side: dict[int, int] = {}
    for root in touched:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in touched:
                if y == x:
                    continue
                tx, ty = seen_by[x], seen_by[y]
                if tx <= ty or ty <= tx:
                    continue
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NoOrderingError(
                        f"clique vertices {x} and {y} have incomparable stable "
                        "neighborhoods but are forced onto the same side"
                    )

    left = sorted((v for v in touched if side[v] == 0), key=lambda v: (-len(seen_by[v]), v))
    right = sorted((v for v in touched if side[v] == 1), key=lambda v: (len(seen_by[v]), v))
    middle = sorted(q_set - set(touched))
    st = _structure_from_order(g, tuple(left + middle + right), sorted(s_set))
    try:
        validate_structure(g, st)
    except AssertionError:
        if len(q_set) > PERMUTATION_LIMIT:
            raise InconclusiveError("ordering failed verification and |Q| is too large to enumerate")
        st = recognize_by_permutations(g)
    _check_delta_bound(g, st)
    return st


def _check_delta_bound(g: Graph, st: SplitCompStructure) -> None:
    if st.extents and not st.isolated:
        check(satisfies_delta_condition(g), f"split-comparability graph with 3*Delta <= n: {g}")


def _fits(g: Graph, order: tuple[int, ...], stable: list[int]) -> bool:
    """Whether every stable vertex sees prefix/suffix/both under ``order``,
    with every prefix ending before every suffix starts."""
    r = len(order)
    max_prefix, min_suffix = 0, r + 1
    for s in stable:
        bits = [v in g.adj[s] for v in order]
        a = 0
        while a < r and bits[a]:
            a += 1
        c = r
        while c > a and bits[c - 1]:
            c -= 1
        if any(bits[a:c]):
            return False
        if a:
            max_prefix = max(max_prefix, a)
        if c < r:
            min_suffix = min(min_suffix, c + 1)
    return max_prefix < min_suffix


def recognize_by_permutations(g: Graph) -> SplitCompStructure:
    """Reference recognizer: the lexicographically first order of Q (by vertex
    id) that fits the prefix/suffix forms, found by trying every order.

    Raises:
        InconclusiveError: |Q| exceeds :data:`PERMUTATION_LIMIT`.
    """
    q_set, s_set = split_partition(g)
    if len(q_set) > PERMUTATION_LIMIT:
        raise InconclusiveError(f"|Q| = {len(q_set)} is too large to enumerate")
    stable = sorted(v for v in s_set if g.adj[v])
    for order in permutations(sorted(q_set)):
        if _fits(g, order, stable):
            st = _structure_from_order(g, order, sorted(s_set))
            validate_structure(g, st)
            return st
    raise NoOrderingError(f"none of the {len(q_set)}! orders of Q fits")


def mirror(st: SplitCompStructure) -> SplitCompStructure:
    """Reverse the clique order, exchanging the roles of the two sides."""
    extents = {s: (b, a) for s, (a, b) in st.extents.items()}
    return SplitCompStructure(
        q_order=tuple(reversed(st.q_order)),
        extents=extents,
        s_l=st.s_r,
        s_r=st.s_l,
        s_t=st.s_t,
        isolated=st.isolated,
    )
