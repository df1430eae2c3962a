"""Exhaustive classifier-versus-oracle sweep over small graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classify import Verdict, classify
from .generate import enumerate_small
from .graph import Graph
from .oracle import chromatic_index_exact


@dataclass
class Mismatch:
    graph: Graph
    verdict: Verdict
    chi_prime: int | None


@dataclass
class SweepResult:
    max_n: int
    graphs: int = 0
    per_n: Counter = field(default_factory=Counter)
    branches: Counter = field(default_factory=Counter)
    mismatches: list[Mismatch] = field(default_factory=list)
    indeterminate: list[Graph] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.indeterminate


def conformance(max_n: int, budget: int | None = None, min_n: int = 2) -> SweepResult:
    """Compare the verdict with the oracle on every non-isomorphic
    split-comparability graph without isolated vertices, ``n <= max_n``."""
    out = SweepResult(max_n)
    for g, st in enumerate_small(max_n, min_n):
        out.graphs += 1
        out.per_n[g.n] += 1
        cls = classify(g, st)
        out.branches[cls.branch.value] += 1
        res = chromatic_index_exact(g, budget)
        if res.indeterminate:
            out.indeterminate.append(g)
            continue
        if (res.chi_prime == cls.delta) != (cls.verdict is Verdict.CLASS1):
            out.mismatches.append(Mismatch(g, cls.verdict, res.chi_prime))
    return out
