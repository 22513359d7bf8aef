"""Command-line front end.

Edge-list files look like::

    # K_3 with a doubled edge
    n 3
    1 2 2
    2 3
    1 3

The first non-comment line declares the vertex count; every later non-blank
line is ``u v`` or ``u v mult``.  Forest files use the same grammar without
multiplicities.

Exit status: 0 on success, 1 on bad input, 2 when ``verify`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import io
import json
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from .counting import moon_count, trees_containing_forest
from .errors import (
    DuplicateEdgeError,
    ForestCountError,
    ParseError,
    RangeError,
)
from .graph import Forest, Multigraph, complete_graph, normalise_pair, validate_forest
from .oracle import brute_count_containing, brute_count_graph_containing
from .verify import run_suite

_INT = re.compile(r"[0-9]+")

METHODS = {"closed": "closed_form", "matrix": "matrix_tree", "brute": "brute_force"}


@dataclass(frozen=True)
class EdgeListDocument:
    declared_n: int
    edge_records: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)

    def to_multigraph(self) -> Multigraph:
        return Multigraph.from_edges(self.declared_n, self.edge_records)

    def to_forest(self) -> Forest:
        return validate_forest(self.declared_n, [(u, v) for u, v, _ in self.edge_records])


@dataclass
class CountReport:
    count: str
    method: str
    n: int
    component_sizes: list[int]
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _parse_int(token: str, line: int) -> int:
    if not _INT.fullmatch(token):
        raise ParseError(f"expected a non-negative integer, got {token!r}", line=line)
    return int(token)


def parse_edge_list(text: str, allow_multiplicity: bool = True) -> EdgeListDocument:
    declared_n = None
    records = []
    seen = set()
    for lineno, raw in enumerate(io.StringIO(text), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if declared_n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError("first line must be 'n <integer>'", line=lineno)
            declared_n = _parse_int(tokens[1], lineno)
            if declared_n < 1:
                raise RangeError("vertex count must be at least 1", line=lineno)
            continue
        width = (2, 3) if allow_multiplicity else (2,)
        if len(tokens) not in width:
            expected = "'u v' or 'u v mult'" if allow_multiplicity else "'u v'"
            raise ParseError(f"expected {expected}, got {len(tokens)} fields", line=lineno)
        u, v = (_parse_int(t, lineno) for t in tokens[:2])
        mult = _parse_int(tokens[2], lineno) if len(tokens) == 3 else 1
        if mult < 1:
            raise RangeError("multiplicity must be positive", line=lineno)
        pair = normalise_pair(u, v, declared_n, line=lineno)
        if pair in seen:
            raise DuplicateEdgeError(f"pair {pair} repeated", line=lineno)
        seen.add(pair)
        records.append((u, v, mult))
    if declared_n is None:
        raise ParseError("missing 'n <integer>' header", line=1)
    return EdgeListDocument(declared_n, tuple(records))


def serialize_edge_list(doc: EdgeListDocument) -> str:
    lines = [f"n {doc.declared_n}"]
    for u, v, k in doc.edge_records:
        lines.append(f"{u} {v}" if k == 1 else f"{u} {v} {k}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ForestCountError(f"cannot read {path}: {exc.strerror}") from None


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for verify failures
    def error(self, message):
        raise _UsageError(message)


def _positive(text: str) -> int:
    if not _INT.fullmatch(text) or int(text) < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(text)


def _sizes(text: str) -> list[int]:
    return [_positive(t.strip()) for t in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forestcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = sub.add_parser("count", help="count spanning trees containing a forest")
    target = count.add_mutually_exclusive_group(required=True)
    target.add_argument("--complete", type=_positive, metavar="N", help="use K_N")
    target.add_argument("--graph", metavar="FILE", help="multigraph edge-list file")
    count.add_argument("--forest", metavar="FILE", help="forest edge-list file")
    count.add_argument("--method", choices=sorted(METHODS))
    count.add_argument("--json", action="store_true", help="emit a JSON report")

    formula = sub.add_parser("formula", help="evaluate prod(q_i) * n^(m-2)")
    formula.add_argument("--n", type=_positive, required=True)
    formula.add_argument("--sizes", type=_sizes, required=True, metavar="q1,q2,...")

    verify = sub.add_parser("verify", help="cross-check all counting routes")
    verify.add_argument("--max-n", type=_positive, default=7)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _count(args, out) -> int:
    start = time.perf_counter()
    if args.complete is not None:
        n = args.complete
        graph = None
    else:
        graph = parse_edge_list(_read(args.graph)).to_multigraph()
        n = graph.vertex_count
    if args.forest:
        forest = parse_edge_list(_read(args.forest), allow_multiplicity=False).to_forest()
        if forest.vertex_count != n:
            raise RangeError(f"forest declares n={forest.vertex_count}, graph has n={n}")
    else:
        forest = validate_forest(n, [])

    method = METHODS[args.method] if args.method else None
    if graph is None:
        method = method or "closed_form"
        if method == "closed_form":
            value = moon_count(n, forest.sizes)
        elif method == "matrix_tree":
            value = trees_containing_forest(complete_graph(n), forest)
        else:
            value = brute_count_containing(n, forest)
    else:
        method = method or "matrix_tree"
        if method == "closed_form":
            raise ForestCountError("the closed form applies only to --complete graphs")
        if method == "matrix_tree":
            value = trees_containing_forest(graph, forest)
        else:
            value = brute_count_graph_containing(graph, forest)

    elapsed = (time.perf_counter() - start) * 1000.0
    if args.json:
        report = CountReport(str(int(value)), method, n, list(forest.sizes), round(elapsed, 3))
        print(report.to_json(), file=out)
    else:
        print(int(value), file=out)
    return 0


def _formula(args, out) -> int:
    print(int(moon_count(args.n, args.sizes)), file=out)
    return 0


def _verify(args, out) -> int:
    results = run_suite(max_n=args.max_n, seed=args.seed)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 2 if failed else 0


class CliResult(NamedTuple):
    status: int
    stdout: str
    stderr: str


def run(argv: list[str]) -> CliResult:
    out, err = io.StringIO(), io.StringIO()
    if hasattr(sys, "set_int_max_str_digits"):
        # counts are printed in full, however many digits
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        handler = {"count": _count, "formula": _formula, "verify": _verify}[args.command]
        status = handler(args, out)
    except SystemExit as exc:  # --help
        status = exc.code or 0
    except _UsageError as exc:
        print(f"forestcount: error: {exc}", file=err)
        status = 1
    except ForestCountError as exc:
        print(f"forestcount: {type(exc).__name__}: {exc}", file=err)
        status = 1
    return CliResult(status, out.getvalue(), err.getvalue())


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
