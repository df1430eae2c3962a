"""DIMACS-style ``.col`` files and bare edge lists.

External ids are 1-based in DIMACS files and 0-based in edge lists;
everything past this module uses 0-based ids.
"""

from __future__ import annotations

import hashlib
import io
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .graph import Graph, GraphInputError, build_graph, norm

FORMATS = ("dimacs", "edgelist")


class ParseError(GraphInputError):
    def __init__(self, line: int | None, message: str) -> None:
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


@dataclass
class ParsedGraph:
    graph: Graph
    duplicates: int = 0


def _ids(tokens: list[str], lineno: int) -> tuple[int, int]:
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(lineno, f"vertex ids must be integers, got {' '.join(tokens)!r}") from None


def parse_dimacs(text: str) -> ParsedGraph:
    n = m = None
    header_line = 0
    edges: set[tuple[int, int]] = set()
    lines_seen = 0
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError(lineno, "second problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(lineno, f"malformed header {line!r}, expected 'p edge <n> <m>'")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(lineno, f"malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative size in header")
            header_line = lineno
            continue
        if tokens[0] != "e":
            raise ParseError(lineno, f"unknown line type {tokens[0]!r}")
        if n is None:
            raise ParseError(lineno, "edge before the 'p edge' header")
        if len(tokens) != 3:
            raise ParseError(lineno, f"malformed edge line {line!r}")
        u, v = _ids(tokens[1:], lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex id out of range 1..{n}: {line!r}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        lines_seen += 1
        e = norm(u - 1, v - 1)
        if e in edges:
            duplicates += 1
        edges.add(e)
    if n is None:
        raise ParseError(None, "missing 'p edge <n> <m>' header")
    if lines_seen != m:
        raise ParseError(header_line, f"header declares {m} edges but {lines_seen} edge lines follow")
    return ParsedGraph(build_graph(n, sorted(edges)), duplicates)


def parse_edgelist(text: str) -> ParsedGraph:
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {line!r}")
        u, v = _ids(tokens, lineno)
        if u < 0 or v < 0:
            raise ParseError(lineno, "negative vertex id")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        e = norm(u, v)
        if e in edges:
            duplicates += 1
        edges.add(e)
        top = max(top, u, v)
    return ParsedGraph(build_graph(top + 1, sorted(edges)), duplicates)


def parse_graph(text: str, fmt: str = "dimacs") -> ParsedGraph:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def parse_graph_file(source: str | Path | TextIO, fmt: str = "dimacs") -> ParsedGraph:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    return parse_graph(text, fmt)


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"c {line}\n")
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"e {u + 1} {v + 1}\n")
    return out.getvalue()


def write_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def digest(g: Graph) -> str:
    """Stable fingerprint of the labelled graph."""
    return "sha256:" + hashlib.sha256(write_dimacs(g).encode()).hexdigest()[:16]
