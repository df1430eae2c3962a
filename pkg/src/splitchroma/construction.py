"""Delta-edge-colorings of Class 1 split-comparability graphs.

The main case builds a saturated graph G_l on Q u S_l u S_t, colors it with
every color class a near-perfect matching, and transfers that coloring to G,
reusing the colors of u_j's edges for the partner vertex w_j in S_r.  The
remaining cases rely on results that are not constructive, so they are
handed to the exact solver and reported as such.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .classify import Branch, Classification, Verdict
from .coloring import (
    EdgeColoring,
    MissingColorTable,
    missing_colors,
    rebalance,
    verify_coloring,
)
from .errors import check
from .exact import exact_delta_coloring
from .graph import Edge, Graph, GraphInputError, build_graph, norm
from .overfull import is_saturated
from .split import SplitCompStructure
from .vizing import vizing_plus_one

log = logging.getLogger(__name__)

BETA_ATTEMPTS = 8


class ConstructionGap(Exception):
    """A step of the main construction could not be carried out as argued."""

    def __init__(self, stage: str, detail: str) -> None:
        super().__init__(f"{stage}: {detail}")
        self.stage = stage
        self.detail = detail


@dataclass
class GapReport:
    stage: str
    detail: str
    n: int
    edges: list[Edge]


@dataclass
class SaturationTrace:
    anchor: int
    gl: Graph  # same vertex ids as G; vertices outside ``vertices`` are isolated
    vertices: frozenset[int]
    added: list[tuple[int, int, int]]  # (a, b, group)
    h: int | None  # 1-based index into S_l of the partially joined vertex
    d: int  # its number of Q_r neighbors in G_l
    beta_seed: int = 0  # seed of the balanced coloring the transfer used

    @property
    def complement_edges(self) -> int:
        k = len(self.vertices)
        return k * (k - 1) // 2 - self.gl.m

    def compact(self) -> tuple[Graph, list[int]]:
        """G_l relabelled onto ``0..|V(G_l)|-1`` and the local -> original id list."""
        ids = sorted(self.vertices)
        local = {v: i for i, v in enumerate(ids)}
        return build_graph(len(ids), [(local[a], local[b]) for a, b in self.gl.edges()]), ids


@dataclass
class ColorResult:
    coloring: EdgeColoring
    branch: Branch
    method: str
    diagnostics: list[GapReport] = field(default_factory=list)
    trace: SaturationTrace | None = None


def _candidate_edges(g: Graph, st: SplitCompStructure, literal: bool = False):
    """Edges that may be added to G_l, in the prescribed order, tagged by group.

    Group 1 joins pairs of stable vertices.  By default it runs over
    S_l followed by S_t, so u_1 is joined to every u_i and x_j before u_2 is
    touched; with ``literal`` it stays inside S_l.  The literal order never
    joins u_h to S_t, which lets the transfer run out of partners when
    S_t is non-empty.
    """
    q_order = st.q_order
    before_q_r = q_order[: st.q - 1]
    q_r = st.q_r
    s_l = st.s_l
    pool = s_l if literal else s_l + st.s_t
    for i, a in enumerate(pool):
        for b in pool[i + 1:]:
            yield a, b, 1
    for u in s_l:
        for v in before_q_r:
            if not g.has_edge(u, v):
                yield u, v, 2
    for x in st.s_t:
        for v in q_order:
            if not g.has_edge(x, v):
                yield x, v, 3
    for u in s_l:
        for v in q_r:
            yield u, v, 4


def build_saturated_gl(
    g: Graph, st: SplitCompStructure, delta: int, literal: bool = False
) -> SaturationTrace:
    """Grow G[N[v]] for the first maximum-degree vertex v of Q_l until saturated."""
    q_l = set(st.q_l)
    anchors = sorted(v for v in q_l if g.degree(v) == delta)
    if not anchors:
        raise ConstructionGap("saturation", "no maximum-degree vertex in Q_l")
    anchor = anchors[0]
    verts = g.closed_neighborhood(anchor)
    expected = set(st.q_order) | set(st.s_l) | set(st.s_t)
    check(verts == expected, "N[v] differs from Q u S_l u S_t")
    if len(verts) != delta + 1 or delta % 2:
        raise ConstructionGap("saturation", f"|N[v]| = {len(verts)} with Delta = {delta}")

    adj = [set(g.adj[x] & verts) if x in verts else set() for x in range(g.n)]
    size = len(verts)
    m = sum(len(a) for a in adj) // 2
    target = delta // 2
    missing = size * (size - 1) // 2 - m
    if missing < target:
        raise ConstructionGap("saturation", "G[N[v]] is overfull")
    added: list[tuple[int, int, int]] = []
    for a, b, group in _candidate_edges(g, st, literal):
        if missing == target:
            break
        if b in adj[a]:
            continue
        adj[a].add(b)
        adj[b].add(a)
        added.append((a, b, group))
        missing -= 1
    if missing != target:
        raise ConstructionGap(
            "saturation",
            f"all candidate edges added but the complement still has {missing} > {target} edges",
        )
    gl = build_graph(g.n, [(a, b) for a in range(g.n) for b in adj[a] if a < b])
    check(len(gl.adj[anchor]) == size - 1, "anchor is not universal in G_l")

    q_r = set(st.q_r)
    partial = [
        (i, len(gl.adj[u] & q_r))
        for i, u in enumerate(st.s_l, start=1)
        if 0 < len(gl.adj[u] & q_r) < len(q_r)
    ]
    check(len(partial) <= 1, f"several partially joined S_l vertices: {partial}")
    h, d = partial[0] if partial else (None, 0)
    trace = SaturationTrace(anchor, gl, frozenset(verts), added, h, d)
    compact, _ = trace.compact()
    check(is_saturated(compact), "G_l is not saturated")
    return trace


def saturated_balanced_coloring(
    gl: Graph, budget: int | None = None, seed: int = 0
) -> tuple[EdgeColoring, MissingColorTable]:
    """Delta-coloring of a saturated graph in which every class has Delta/2 edges.

    A saturated graph has a universal vertex and is not overfull, hence is
    Class 1; any Delta-coloring is then rebalanced.  With (n-1)*Delta/2
    edges and n = Delta + 1, a balanced coloring has classes of exactly
    Delta/2 edges, each missing exactly one vertex.
    """
    if not is_saturated(gl):
        raise GraphInputError("graph is not saturated")
    delta = gl.max_degree
    col = exact_delta_coloring(gl, budget=budget, seed=seed)
    if col is None:
        raise ConstructionGap("balanced-coloring", "no Delta-coloring of a saturated graph")
    col = rebalance(col, gl)
    sizes = col.class_sizes()
    check(all(s == delta // 2 for s in sizes), f"unbalanced classes {sizes}")
    # renumber classes by their smallest edge
    classes: dict[int, list[Edge]] = {}
    for e, c in col.assignment.items():
        classes.setdefault(c, []).append(e)
    order = sorted(classes, key=lambda c: min(classes[c]))
    renum = {old: new for new, old in enumerate(order, start=1)}
    col = EdgeColoring(delta, {e: renum[c] for e, c in col.assignment.items()})
    table = missing_colors(gl, col)
    for c in range(1, delta + 1):
        check(len(table.vertices_missing(c)) == 1, f"color {c} does not miss exactly one vertex")
    return col, table


def partner_orders(st: SplitCompStructure, h: int | None) -> list[list[int]]:
    """Orders of S_r to pair with S_l, tried in turn by the transfer.

    Only the partner of u_h matters: earlier partners copy every edge from
    their fully joined u_j and later ones copy none.  That partner inherits
    the colors of u_h's edges into its own neighborhood, which its other
    edges must then avoid, so candidates seeing less of Q_r come first.
    """
    base = list(st.s_r)
    if h is None:
        return [base]
    orders = []
    for w in sorted(base, key=lambda x: (st.extents[x][1], x)):
        rest = [x for x in base if x != w]
        orders.append(rest[: h - 1] + [w] + rest[h - 1:])
    return orders


def transfer(
    g: Graph,
    st: SplitCompStructure,
    trace: SaturationTrace,
    beta: EdgeColoring,
    table: MissingColorTable,
    literal: bool = False,
) -> EdgeColoring:
    """Turn the coloring of G_l into a Delta-coloring of G.

    A vertex of Q_r may miss several colors that are already used at w_h.
    With ``literal`` every such color is dropped after one goes to w_{h+1},
    which can leave too few, and S_r is paired in its stored order.  By
    default only the edge to w_h avoids them and every partner for u_h is
    tried before reporting a gap.
    """
    if len(st.s_l) != len(st.s_r):
        raise ConstructionGap("transfer", f"|S_l| = {len(st.s_l)} != |S_r| = {len(st.s_r)}")
    if literal:
        return _transfer_paired(g, st, trace, beta, table, list(st.s_r), literal)
    first_gap = None
    for s_r in partner_orders(st, trace.h):
        try:
            return _transfer_paired(g, st, trace, beta, table, s_r, literal)
        except ConstructionGap as gap:
            first_gap = first_gap or gap
    assert first_gap is not None
    raise first_gap


def _transfer_paired(
    g: Graph,
    st: SplitCompStructure,
    trace: SaturationTrace,
    beta: EdgeColoring,
    table: MissingColorTable,
    s_r: list[int],
    literal: bool,
) -> EdgeColoring:
    gl = trace.gl
    alpha: dict[Edge, int] = {}
    q = st.q_order
    for i, a in enumerate(q):
        for b in q[i + 1:]:
            alpha[norm(a, b)] = beta[(a, b)]
    for s in st.s_l + st.s_t:
        for v in g.adj[s]:
            alpha[norm(s, v)] = beta[(s, v)]

    s_l = st.s_l
    for u, w in zip(s_l, s_r):
        for v in g.adj[w]:
            if gl.has_edge(u, v):
                alpha[norm(v, w)] = beta[(u, v)]

    q_r = st.q_r
    ell = {v: set(table[v]) for v in q_r}
    c_prime: set[int] = set()
    w_h = None
    if trace.h is not None:
        w_h = s_r[trace.h - 1]
        c_prime = {alpha[norm(v, w_h)] for v in g.adj[w_h] if norm(v, w_h) in alpha}
        if trace.h >= len(s_r):
            raise ConstructionGap("transfer", "u_h exists but there is no w_{h+1}")
        w_next = s_r[trace.h]
        check(
            not any(norm(v, w_next) in alpha for v in g.adj[w_next]),
            "w_{h+1} already has colored edges",
        )
        for v in q_r:
            hits = sorted(ell[v] & c_prime)
            if not hits:
                continue
            if g.has_edge(v, w_next):
                alpha[norm(v, w_next)] = hits[0]
                ell[v].discard(hits[0])
            if literal:
                ell[v] -= set(hits)
        if literal:
            for v in q_r:
                check(not ell[v] & c_prime, "residual colors meet C'")
    for i, v in enumerate(q_r):
        for other in q_r[i + 1:]:
            check(not ell[v] & ell[other], f"missing colors of {v} and {other} overlap")

    in_s_r = set(s_r)
    for v in q_r:
        todo = sorted(w for w in g.adj[v] if w in in_s_r and norm(v, w) not in alpha)
        if len(ell[v]) < len(todo):
            raise ConstructionGap(
                "transfer",
                f"vertex {v} has {len(todo)} uncolored edges but only {len(ell[v])} spare colors",
            )
        # colors of C' are already used at w_h, so its edge is served first
        # from the others; any w_j != w_h may take a color of C'
        free = sorted(ell[v] - c_prime)
        if w_h in todo:
            if not free:
                raise ConstructionGap("transfer", f"vertex {v} has no color outside C' for w_h")
            alpha[norm(v, w_h)] = free[0]
            ell[v].discard(free[0])
            todo.remove(w_h)
        for w, c in zip(todo, sorted(ell[v])):
            alpha[norm(v, w)] = c

    result = EdgeColoring(beta.k, alpha)
    bad = verify_coloring(g, result)
    if bad is not None:
        raise ConstructionGap("transfer", bad.detail)
    return result


def augment(g: Graph, st: SplitCompStructure, delta: int) -> tuple[Graph, int]:
    """Join a low-degree stable vertex to clique vertices until it has
    between |Q|/2 and Delta/2 neighbors.  Returns G' and that vertex.

    The preferred vertex is an S_r vertex adjacent to all of Q_r, joined to
    the first vertices of Q_t.  When no such vertex reaches |Q|/2 that way,
    any stable vertex below |Q|/2 is tried, taking Q_t first and then other
    clique vertices whose degree is below Delta.
    """
    r = st.r
    if not (2 * st.p < r and 2 * st.size_q_r < r):
        raise GraphInputError("augmentation needs both Q_l and Q_r below |Q|/2")
    q_r = set(st.q_r)
    q_t = st.q_t
    low = [s for s in st.s_r + st.s_l + st.s_t if 2 * g.degree(s) < r]
    if not low:
        raise ConstructionGap("augmentation", "no stable vertex of degree below |Q|/2")
    preferred = sorted(
        (s for s in st.s_r if q_r <= g.adj[s]), key=lambda s: (-g.degree(s), s)
    )
    others = sorted((s for s in low if s not in preferred), key=lambda s: (-g.degree(s), s))
    need = (r + 1) // 2
    for v in preferred + others:
        deg = g.degree(v)
        pool = [t for t in q_t if t not in g.adj[v]]
        pool += [t for t in st.q_order if t not in g.adj[v] and t not in pool and g.degree(t) < delta]
        if deg + len(pool) < need:
            continue
        extra = [(v, t) for t in pool[: max(0, need - deg)]]
        deg += len(extra)
        if 2 * deg > delta:
            continue
        g2 = g.add_edges(extra)
        check(g2.max_degree == delta, "augmentation raised the maximum degree")
        return g2, v
    raise ConstructionGap("augmentation", "no stable vertex can reach [|Q|/2, Delta/2]")


def augment_and_restrict(
    g: Graph, st: SplitCompStructure, delta: int, budget: int | None = None
) -> EdgeColoring:
    g2, _ = augment(g, st, delta)
    col = exact_delta_coloring(g2, budget=budget)
    if col is None:
        raise ConstructionGap("augmentation", "augmented graph has no Delta-coloring")
    out = col.restrict(g)
    check(verify_coloring(g, out) is None, "restriction is not a proper coloring")
    return out


def main_construction(
    g: Graph,
    st: SplitCompStructure,
    delta: int,
    budget: int | None = None,
    literal: bool = False,
) -> tuple[EdgeColoring, SaturationTrace]:
    """Saturate, color G_l in a balanced way, transfer.

    The transfer can fail for a particular balanced coloring when a vertex
    of Q_r misses only colors already used at w_h; other balanced colorings
    are then tried (``BETA_ATTEMPTS`` seeds, one when ``literal``).
    """
    trace = build_saturated_gl(g, st, delta, literal)
    compact, ids = trace.compact()
    first_gap = None
    for seed in range(1 if literal else BETA_ATTEMPTS):
        local_beta, local_table = saturated_balanced_coloring(compact, budget=budget, seed=seed)
        beta = EdgeColoring(
            local_beta.k, {norm(ids[a], ids[b]): c for (a, b), c in local_beta.assignment.items()}
        )
        table = MissingColorTable(
            local_table.k, {ids[i]: cs for i, cs in local_table.missing.items()}
        )
        try:
            col = transfer(g, st, trace, beta, table, literal)
        except ConstructionGap as gap:
            first_gap = first_gap or gap
            continue
        trace.beta_seed = seed
        return col, trace
    assert first_gap is not None
    raise first_gap


def color(
    g: Graph, cls: Classification, budget: int | None = None, literal: bool = False
) -> ColorResult:
    """Proper coloring of ``g`` with exactly ``chi'(g)`` colors, verified."""
    st = cls.structure
    delta = cls.delta
    diagnostics: list[GapReport] = []
    trace = None
    if cls.verdict is Verdict.CLASS2:
        col = vizing_plus_one(g)
        method = "vizing"
    elif cls.branch is Branch.B4:
        try:
            col = augment_and_restrict(g, st, delta, budget=budget)
            method = "augment+exact"
        except ConstructionGap as gap:
            diagnostics.append(_report(g, gap))
            col, method = _exact(g, budget), "exact-after-gap"
    elif cls.branch is Branch.B5:
        try:
            col, trace = main_construction(g, st, delta, budget=budget, literal=literal)
            method = "construction"
        except ConstructionGap as gap:
            diagnostics.append(_report(g, gap))
            col, method = _exact(g, budget), "exact-after-gap"
    else:
        col, method = _exact(g, budget), "exact"

    col = EdgeColoring(cls.colors_needed, col.assignment)
    bad = verify_coloring(g, col)
    check(bad is None, f"colorer produced an invalid coloring: {bad}")
    return ColorResult(col, cls.branch, method, diagnostics, trace)


def _exact(g: Graph, budget: int | None) -> EdgeColoring:
    col = exact_delta_coloring(g, budget=budget)
    if col is None:
        raise RuntimeError("exact solver found no Delta-coloring for a Class 1 verdict")
    return col


def _report(g: Graph, gap: ConstructionGap) -> GapReport:
    log.warning("construction gap on %s: %s", g, gap)
    return GapReport(gap.stage, gap.detail, g.n, g.edges())
