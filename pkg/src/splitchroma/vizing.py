"""Delta+1 edge coloring by fan rotation and Kempe-chain inversion (Misra-Gries)."""

from __future__ import annotations

from .coloring import EdgeColoring
from .graph import Edge, Graph, norm


class PartialColoring:
    """Mutable partial edge coloring with per-vertex ``color -> neighbor`` maps."""

    def __init__(self, n: int, k: int) -> None:
        self.k = k
        self.at: list[dict[int, int]] = [{} for _ in range(n)]
        self.color: dict[Edge, int] = {}

    def free(self, v: int) -> list[int]:
        used = self.at[v]
        return [c for c in range(1, self.k + 1) if c not in used]

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def set(self, u: int, v: int, c: int) -> None:
        e = norm(u, v)
        assert e not in self.color and c not in self.at[u] and c not in self.at[v]
        self.color[e] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def unset(self, u: int, v: int) -> int:
        c = self.color.pop(norm(u, v))
        del self.at[u][c]
        del self.at[v][c]
        return c

    def chain(self, start: int, first: int, second: int) -> list[int]:
        """Vertices of the path leaving ``start`` along ``first``, then alternating."""
        verts = [start]
        x, want = start, first
        while want in self.at[x]:
            y = self.at[x][want]
            if y == start:
                break
            verts.append(y)
            x, want = y, (second if want == first else first)
        return verts

    def flip(self, verts: list[int], a: int, b: int) -> None:
        """Exchange colors ``a`` and ``b`` along the path through ``verts``."""
        edges = [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
        old = [self.unset(x, y) for x, y in edges]
        for (x, y), c in zip(edges, old):
            self.set(x, y, b if c == a else a)

    def to_coloring(self) -> EdgeColoring:
        return EdgeColoring(self.k, dict(self.color))


def _max_fan(pc: PartialColoring, g: Graph, u: int, v: int) -> list[int]:
    fan = [v]
    in_fan = {v}
    grown = True
    while grown:
        grown = False
        last = fan[-1]
        for c, w in sorted(pc.at[u].items()):
            if w not in in_fan and pc.is_free(last, c):
                fan.append(w)
                in_fan.add(w)
                grown = True
                break
    return fan


def vizing_plus_one(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``Delta + 1`` colors; ``k = Delta + 1``."""
    k = g.max_degree + 1
    pc = PartialColoring(g.n, k)
    for u, v in g.edges():
        fan = _max_fan(pc, g, u, v)
        c = pc.free(u)[0]
        d = pc.free(fan[-1])[0]
        if c != d and not pc.is_free(u, d):
            # cd-path from u starts with u's d-edge; c is free at u
            pc.flip(pc.chain(u, d, c), c, d)
        # first fan prefix that is still a fan and ends at a vertex missing d
        for i, w in enumerate(fan):
            if i > 0:
                prev_color = pc.color.get(norm(u, w))
                if prev_color is None or not pc.is_free(fan[i - 1], prev_color):
                    break
            if pc.is_free(w, d):
                _rotate(pc, u, fan[: i + 1])
                pc.set(u, w, d)
                break
        else:  # pragma: no cover - guaranteed by the fan lemma
            raise AssertionError("fan rotation found no terminal vertex")
    return pc.to_coloring()


def _rotate(pc: PartialColoring, u: int, fan: list[int]) -> None:
    """Shift colors down the fan so the edge to its last vertex becomes uncolored."""
    for i in range(len(fan) - 1):
        c = pc.unset(u, fan[i + 1])
        pc.set(u, fan[i], c)
