from __future__ import annotations


class InvariantError(AssertionError):
    """A structural invariant that must hold by construction was violated."""


def check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantError(msg)


class RecognitionError(Exception):
    """The graph is not (or could not be certified as) split-comparability."""

    reason = "rejected"

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class NotSplitError(RecognitionError):
    reason = "not-split"


class NoOrderingError(RecognitionError):
    reason = "no-ordering"


class InconclusiveError(RecognitionError):
    reason = "inconclusive"


class BudgetExhausted(Exception):
    """A backtracking search ran out of its node budget before deciding."""

    def __init__(self, nodes: int) -> None:
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes
