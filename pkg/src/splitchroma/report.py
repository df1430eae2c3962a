"""JSON-ready reports.  Vertex ids and colors are 1-based here."""

from __future__ import annotations

from typing import Any

from .classify import Classification
from .coloring import EdgeColoring
from .construction import ColorResult
from .errors import RecognitionError
from .fileio import ParsedGraph, digest
from .graph import Graph, GraphInputError, norm
from .oracle import OracleResult
from .split import SplitCompStructure

SCHEMA = 1


def _ext(vs) -> list[int]:
    return [v + 1 for v in vs]


def base(command: str, parsed: ParsedGraph | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"schema": SCHEMA, "command": command}
    if parsed is not None:
        g = parsed.graph
        out["input"] = {
            "digest": digest(g),
            "n": g.n,
            "m": g.m,
            "duplicate_edges": parsed.duplicates,
        }
    return out


def structure(st: SplitCompStructure) -> dict[str, Any]:
    return {
        "accepted": True,
        "q_order": _ext(st.q_order),
        "s_l": _ext(st.s_l),
        "s_r": _ext(st.s_r),
        "s_t": _ext(st.s_t),
        "isolated": _ext(st.isolated),
        "extents": {str(s + 1): list(st.extents[s]) for s in sorted(st.extents)},
        "sizes": {"q_l": len(st.q_l), "q_t": len(st.q_t), "q_r": len(st.q_r)},
    }


def rejection(err: RecognitionError) -> dict[str, Any]:
    return {"accepted": False, "reason": err.reason, "detail": err.detail}


def classification(cls: Classification) -> dict[str, Any]:
    return {
        "verdict": cls.verdict.value,
        "branch": cls.branch.value,
        "delta": cls.delta,
        "colors_needed": cls.colors_needed,
        "witness": None if cls.witness_vertex is None else cls.witness_vertex + 1,
        "mid_degree_vertex": None if cls.mid_degree_vertex is None else cls.mid_degree_vertex + 1,
        "mirrored": cls.mirrored,
    }


def coloring(col: EdgeColoring) -> dict[str, Any]:
    return {"k": col.k, "edges": [[u + 1, v + 1, c] for u, v, c in col.triples()]}


def color_result(res: ColorResult) -> dict[str, Any]:
    out = coloring(res.coloring)
    out["method"] = res.method
    out["diagnostics"] = [{"stage": d.stage, "detail": d.detail} for d in res.diagnostics]
    return out


def oracle(res: OracleResult, delta: int) -> dict[str, Any]:
    return {
        "chi_prime": res.chi_prime,
        "delta": delta,
        "indeterminate": res.indeterminate,
        "nodes_explored": res.nodes_explored,
        "certificate": None if res.certificate is None else coloring(res.certificate),
    }


def load_coloring(report: dict[str, Any], g: Graph) -> EdgeColoring:
    """The coloring embedded in a ``color`` (or ``oracle``) report."""
    body = report.get("coloring") or (report.get("oracle") or {}).get("certificate")
    if not body:
        raise GraphInputError("report carries no coloring")
    try:
        k = int(body["k"])
        assign: dict[tuple[int, int], int] = {}
        for u, v, c in body["edges"]:
            assign[norm(int(u) - 1, int(v) - 1)] = int(c)
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed coloring in report: {exc}") from None
    return EdgeColoring(k, assign)
