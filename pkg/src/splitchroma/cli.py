"""Command-line entry point.

Exit codes: 0 success, 1 rejection or failed check, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any

from . import report
from .audit import conformance
from .classify import Branch, classify
from .coloring import verify_coloring
from .construction import color
from .errors import BudgetExhausted, RecognitionError
from .exact import default_budget
from .fileio import FORMATS, ParseError, ParsedGraph, parse_graph_file, write_dimacs
from .generate import GenerationError, enumerate_small, gen_for_branch
from .graph import EdgelessGraphError, GraphInputError
from .oracle import chromatic_index_exact
from .overfull import satisfies_delta_condition
from .split import recognize

log = logging.getLogger("splitchroma")

EXIT_OK, EXIT_REJECT, EXIT_INPUT = 0, 1, 2


class Outcome:
    def __init__(self, body: dict[str, Any], code: int, summary: str) -> None:
        self.body = body
        self.code = code
        self.summary = summary


def _load(args) -> ParsedGraph:
    source = sys.stdin if args.file == "-" else args.file
    parsed = parse_graph_file(source, args.format)
    if parsed.duplicates:
        log.warning("%d duplicate edge lines collapsed", parsed.duplicates)
    return parsed


def _recognized(parsed: ParsedGraph, body: dict[str, Any]):
    try:
        st = recognize(parsed.graph)
    except RecognitionError as err:
        body["recognition"] = report.rejection(err)
        return None
    body["recognition"] = report.structure(st)
    return st


def cmd_recognize(args) -> Outcome:
    parsed = _load(args)
    body = report.base("recognize", parsed)
    st = _recognized(parsed, body)
    if st is None:
        return Outcome(body, EXIT_REJECT, f"rejected: {body['recognition']['reason']}")
    sizes = body["recognition"]["sizes"]
    return Outcome(body, EXIT_OK, f"split-comparability, |Q_l|,|Q_t|,|Q_r| = "
                                  f"{sizes['q_l']},{sizes['q_t']},{sizes['q_r']}")


def _classified(args, command: str):
    parsed = _load(args)
    body = report.base(command, parsed)
    if parsed.graph.m == 0:
        raise EdgelessGraphError("graph has no edges")
    st = _recognized(parsed, body)
    if st is None:
        return parsed, body, None
    cls = classify(parsed.graph, st)
    body["classification"] = report.classification(cls)
    return parsed, body, cls


def cmd_classify(args) -> Outcome:
    _, body, cls = _classified(args, "classify")
    if cls is None:
        return Outcome(body, EXIT_REJECT, f"rejected: {body['recognition']['reason']}")
    return Outcome(body, EXIT_OK, f"{cls.verdict.value} (branch {cls.branch.value}, Delta {cls.delta})")


def _attach_oracle(body: dict[str, Any], parsed: ParsedGraph, budget: int) -> bool:
    g = parsed.graph
    res = chromatic_index_exact(g, budget)
    body["oracle"] = report.oracle(res, g.max_degree)
    if res.indeterminate:
        return False
    cls = body.get("classification")
    if cls is not None:
        agrees = res.chi_prime == cls["colors_needed"]
        body["oracle"]["agrees"] = agrees
        return agrees
    return True


def cmd_color(args) -> Outcome:
    parsed, body, cls = _classified(args, "color")
    if cls is None:
        return Outcome(body, EXIT_REJECT, f"rejected: {body['recognition']['reason']}")
    start = time.perf_counter()
    res = color(parsed.graph, cls, budget=args.budget)
    body["coloring"] = report.color_result(res)
    body["timing_s"] = round(time.perf_counter() - start, 6)
    code = EXIT_OK if not res.diagnostics else EXIT_REJECT
    if args.oracle and not _attach_oracle(body, parsed, args.budget):
        code = EXIT_REJECT
    return Outcome(body, code, f"{res.coloring.k} colors via {res.method}")


def cmd_oracle(args) -> Outcome:
    parsed = _load(args)
    body = report.base("oracle", parsed)
    if parsed.graph.m == 0:
        raise EdgelessGraphError("graph has no edges")
    ok = _attach_oracle(body, parsed, args.budget)
    chi = body["oracle"]["chi_prime"]
    return Outcome(body, EXIT_OK if ok else EXIT_REJECT,
                   "indeterminate (budget)" if chi is None else f"chromatic index {chi}")


def cmd_verify(args) -> Outcome:
    parsed = _load(args)
    body = report.base("verify", parsed)
    try:
        with open(args.report) as fh:
            loaded = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphInputError(f"cannot read report {args.report}: {exc}") from None
    col = report.load_coloring(loaded, parsed.graph)
    bad = verify_coloring(parsed.graph, col)
    body["verify"] = {"ok": bad is None, "k": col.k}
    if bad is not None:
        body["verify"]["violation"] = {"kind": bad.kind, "detail": bad.detail}
        return Outcome(body, EXIT_REJECT, f"invalid: {bad.kind}: {bad.detail}")
    return Outcome(body, EXIT_OK, f"ok: proper {col.k}-edge-coloring")


def cmd_gen(args) -> Outcome:
    target = Branch(args.target_branch) if args.target_branch else None
    g, st, cls = gen_for_branch(target, args.seed, max_n=args.max_n)
    body = report.base("gen")
    body["seed"] = args.seed
    body["graph"] = {"n": g.n, "m": g.m, "dimacs": write_dimacs(g)}
    body["recognition"] = report.structure(st)
    body["classification"] = report.classification(cls)
    text = write_dimacs(g, comment=f"seed {args.seed} branch {cls.branch.value}")
    return Outcome(body, EXIT_OK, text.rstrip("\n"))


def cmd_enumerate(args) -> Outcome:
    counts: dict[int, int] = {}
    violations = []
    for g, st in enumerate_small(args.max_n):
        counts[g.n] = counts.get(g.n, 0) + 1
        if st.extents and not satisfies_delta_condition(g):
            violations.append(write_dimacs(g))
    body = report.base("enumerate")
    body["max_n"] = args.max_n
    body["counts"] = {str(n): c for n, c in sorted(counts.items())}
    body["delta_condition_violations"] = violations
    summary = ", ".join(f"n={n}: {c}" for n, c in sorted(counts.items()))
    return Outcome(body, EXIT_REJECT if violations else EXIT_OK, summary)


def cmd_conformance(args) -> Outcome:
    start = time.perf_counter()
    res = conformance(args.max_n, args.budget)
    body = report.base("conformance")
    body.update(
        max_n=args.max_n,
        graphs=res.graphs,
        per_n={str(n): c for n, c in sorted(res.per_n.items())},
        branches=dict(sorted(res.branches.items())),
        mismatches=[write_dimacs(m.graph) for m in res.mismatches],
        indeterminate=len(res.indeterminate),
        timing_s=round(time.perf_counter() - start, 3),
    )
    summary = (f"{res.graphs} graphs, {len(res.mismatches)} mismatches, "
               f"{len(res.indeterminate)} indeterminate")
    return Outcome(body, EXIT_OK if res.ok else EXIT_REJECT, summary)


COMMANDS = {
    "recognize": (cmd_recognize, "recognize a split-comparability graph", True),
    "classify": (cmd_classify, "decide Class 1 or Class 2", True),
    "color": (cmd_color, "emit a verified optimal edge coloring", True),
    "oracle": (cmd_oracle, "chromatic index by exhaustive search", True),
    "verify": (cmd_verify, "check a coloring report against a graph", True),
    "gen": (cmd_gen, "generate a seeded instance", False),
    "enumerate": (cmd_enumerate, "count small split-comparability graphs", False),
    "conformance": (cmd_conformance, "classifier versus oracle on all small graphs", False),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("--budget", type=int, default=None,
                        help="search node budget (default: $SPLITCHROMA_BUDGET or built-in)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="splitchroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, takes_file) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if takes_file:
            p.add_argument("file", help="graph file, or - for stdin")
            p.add_argument("--format", choices=FORMATS, default="dimacs")
        if name == "verify":
            p.add_argument("report", help="JSON report produced by 'color --json'")
        if name == "color":
            p.add_argument("--oracle", action="store_true", help="cross-check with the oracle")
        if name == "gen":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--target-branch", choices=[b.value for b in Branch])
            p.add_argument("--max-n", type=int, default=60)
        if name in ("enumerate", "conformance"):
            p.add_argument("--max-n", type=int, default=7)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    if args.budget is None:
        args.budget = default_budget()
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphInputError, EdgelessGraphError, GenerationError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"search stopped: {exc}", file=sys.stderr)
        return EXIT_REJECT
    if args.json:
        json.dump(out.body, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(out.summary)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
