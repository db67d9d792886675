"""Command-line interface: ``vnumber {invariants,verify,search-q41,family,selfcheck}``.

Exit codes: 0 pass, 1 usage error or refusal, 2 suite failure, 3 internal
cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Iterator, Optional, Sequence

from . import corpus, families
from .betti import FIELDS
from .errors import CrossCheckError, DegenerateInputError, GraphParseError, ResourceCapError
from .io import iter_graph6, parse_edgelist, to_edgelist, to_graph6
from .report import InvariantReport, compute_report
from .suites import SUITES, Instance, SuiteResult, builtin_instances, run_suite, search_bight_counterexamples

EXIT_OK, EXIT_USAGE, EXIT_SUITE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("vnumber")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", choices=FIELDS, default="gf2", help="coefficient field for homology")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--csv", metavar="FILE", help="also write a CSV table")
    p.add_argument("--force", action="store_true", help="lift the size caps")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def _add_corpus(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("corpus")
    g.add_argument("--exhaustive", action="store_true", help="all labelled graphs with min-n..max-n vertices")
    g.add_argument("--min-n", type=int, default=1)
    g.add_argument("--max-n", type=int, default=5)
    g.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    g.add_argument("--graph6", metavar="FILE", help="read graphs from a graph6 stream")
    g.add_argument("--random", action="store_true", help="seeded G(n,p) samples")
    g.add_argument("--samples", type=int, default=100)
    g.add_argument("--n", dest="n_range", metavar="RANGE", help="vertex counts, e.g. 3..12")
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vnumber", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="full invariant report for graphs")
    p.add_argument("graph", nargs="?", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--family", choices=sorted(families.FAMILIES), help="build a family member instead of reading a file")
    p.add_argument("--params", default="", help="family parameters, e.g. 7 or 2,2,2")
    p.add_argument("--allow-edgeless", action="store_true")
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--k", dest="k_range", metavar="RANGE", help="glued-cycles copies, e.g. 1..2")
    p.add_argument("--parts", help="multipartite part sizes, ';'-separated, e.g. '2,2;1,2,3'")
    p.add_argument("--quiet", action="store_true", help="do not stream per-instance verdicts")
    _add_common(p)
    _add_corpus(p)

    p = sub.add_parser("search-q41", help="look for non-multipartite graphs with v(J) > bight-1")
    p.add_argument("--keep-isolated", action="store_true",
                   help="test complete multipartiteness on the graph as given, isolated vertices included")
    _add_common(p)
    _add_corpus(p)

    p = sub.add_parser("family", help="write a family member as a graph file")
    p.add_argument("name", choices=sorted(families.FAMILIES))
    p.add_argument("params")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("selfcheck", help="quick run of every suite at small size")
    p.add_argument("--field", choices=FIELDS, default="gf2")
    return parser


def _read_graphs(args) -> Iterator[tuple[str, object]]:
    if args.family:
        yield f"{args.family} {args.params}", families.build(args.family, args.params)
        return
    if args.graph is None:
        raise UsageError("give a graph file or --family")
    if args.graph == "-":
        data = sys.stdin.buffer.read()
        name = "<stdin>"
    else:
        with open(args.graph, "rb") as fh:
            data = fh.read()
        name = args.graph
    if args.format == "graph6":
        for idx, g in enumerate(iter_graph6(data)):
            yield f"{name}:{idx + 1}", g
    else:
        yield name, parse_edgelist(data.decode())


def _write_csv(path: str, rows: list[dict]) -> None:
    if not rows:
        return
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


def _human(r: InvariantReport) -> str:
    skip = {"timings", "schema"}
    width = max(len(k) for k in r.__dataclass_fields__)
    lines = [f"{k:<{width}}  {getattr(r, k)}" for k in r.__dataclass_fields__ if k not in skip]
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    reports = []
    for source, g in _read_graphs(args):
        reports.append(compute_report(g, source, args.field, allow_edgeless=args.allow_edgeless,
                                      force=args.force, jobs=args.jobs))
    if args.json:
        payload = [json.loads(r.to_json()) for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        print("\n\n".join(_human(r) for r in reports))
    if args.csv:
        _write_csv(args.csv, [r.row() for r in reports])
    return EXIT_OK


def _corpus(args, suite: Optional[str] = None) -> list[Instance] | Iterator[Instance]:
    ns = corpus.parse_range(args.n_range) if args.n_range else None
    if args.graph6:
        return (Instance(label, g) for label, g in corpus.from_graph6_file(args.graph6))
    if args.random:
        return (Instance(label, g) for label, g in corpus.random_sample(ns or [6], args.samples, args.p, args.seed))
    if not args.exhaustive and suite is not None:
        ks = corpus.parse_range(args.k_range) if getattr(args, "k_range", None) else None
        builtin = builtin_instances(suite, ns=ns, ks=ks, parts=getattr(args, "parts", None), force=args.force)
        if builtin is not None:
            return builtin
    total = corpus.exhaustive_count(args.min_n, args.max_n)
    if total > corpus.EXHAUSTIVE_CAP and not args.force:
        raise ResourceCapError(
            f"exhaustive corpus n={args.min_n}..{args.max_n} has {total} labelled graphs "
            f"(cap {corpus.EXHAUSTIVE_CAP}); lower --max-n, add --dedup with --force, or stream a graph6 file")
    log.info("exhaustive corpus: %d labelled graphs", total)
    return (Instance(label, g) for label, g in corpus.exhaustive(args.min_n, args.max_n, dedup=args.dedup))


def _print_result(res: SuiteResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps(res.to_dict(), indent=2))
        return
    status = "PASS" if res.passed else "FAIL"
    print(f"{status} {res.suite}: {res.instances} instances, {res.skipped} skipped, "
          f"{len(res.failures)} failures, {len(res.internal_errors)} internal errors, {res.wall_time:.2f}s")


def _exit_for(res: SuiteResult) -> int:
    if res.internal_errors:
        return EXIT_INTERNAL
    return EXIT_OK if res.passed else EXIT_SUITE


def cmd_verify(args) -> int:
    instances = _corpus(args, args.suite)
    rows = []

    def stream(idx, inst, verdict):
        if verdict.status != "skip":
            rows.append({"index": idx, "label": inst.label, "graph6": to_graph6(inst.graph),
                         "status": verdict.status, "expected": verdict.expected, "actual": verdict.actual})
        if args.json or verdict.status == "skip":
            return
        if not args.quiet or verdict.status in ("fail", "error"):
            print(f"[{idx}] {verdict.status.upper():5} {inst.label}: {verdict.actual}")

    res = run_suite(args.suite, instances, field=args.field, force=args.force, jobs=args.jobs, on_verdict=stream)
    _print_result(res, args.json)
    if args.csv:
        _write_csv(args.csv, rows)
    return _exit_for(res)


BANNER = "!" * 72


def cmd_search(args) -> int:
    examined, found = search_bight_counterexamples(_corpus(args), field=args.field, keep_isolated=args.keep_isolated)
    if args.json:
        print(json.dumps({"examined": examined, "counterexamples": [json.loads(r.to_json()) for r in found]}, indent=2))
    elif not found:
        print(f"no counterexample found among {examined} non-multipartite graphs (not a proof)")
    else:
        print(BANNER)
        print(f"FINDING: {len(found)} non-multipartite graph(s) with v(J) > bight(I)-1 among {examined}")
        print(BANNER)
        for r in found:
            print(r.to_json(indent=2))
    if args.csv:
        _write_csv(args.csv, [r.row() for r in found])
    return EXIT_OK


def cmd_family(args) -> int:
    g = families.build(args.name, args.params)
    text = to_edgelist(g) if args.format == "edgelist" else to_graph6(g) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    plan = [
        ("cycles", builtin_instances("cycles", ns=list(range(3, 11)))),
        ("multipartite", builtin_instances("multipartite")),
        ("glued-cycles", builtin_instances("glued-cycles", ks=[1])),
    ]
    small = [Instance(label, g) for label, g in corpus.exhaustive(2, 5, dedup=True)]
    for name in ("v-le-reg", "cohen-macaulay", "terai", "sandwich", "bight-bound", "free-vertex", "lower-bound"):
        plan.append((name, small))
    code = EXIT_OK
    for name, instances in plan:
        res = run_suite(name, instances, field=args.field)
        _print_result(res, False)
        code = max(code, _exit_for(res))
    examined, found = search_bight_counterexamples(small, field=args.field)
    print(f"{'PASS' if not found else 'FINDING'} search-q41: {examined} graphs examined, {len(found)} counterexamples")
    return code


COMMANDS = {
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "search-q41": cmd_search,
    "family": cmd_family,
    "selfcheck": cmd_selfcheck,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except CrossCheckError as exc:
        print(f"internal cross-check failed [{exc.kind}]: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ResourceCapError, DegenerateInputError, GraphParseError, ValueError, OSError) as exc:
        print(f"vnumber: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
