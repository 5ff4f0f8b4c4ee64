"""Command-line interface: ``graphcomp <subcommand> ...``.

Every count is printed as an exact decimal integer. ``--format json`` emits
``{"query", "method", "result"}`` records with the result as a string;
``--format csv`` emits one header line plus data rows.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Callable, Sequence

from graphcomp import bipartite, combinatorics, multipartite, oracle

ORACLE_VERTEX_LIMIT = 14

BIPARTITE_METHODS = ("formula", "egf", "oracle")
MULTIPARTITE_METHODS = ("egf", "oracle")
ATABLE_METHODS = ("stirling", "recurrence")
CONNECTED_METHODS = ("egf", "oracle")


class CliError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("plain", "csv", "json"), default=d("plain"))
    p.add_argument("--method", default=d(None), help="counting method (per subcommand)")
    p.add_argument("--all-methods", action="store_true", default=d(False),
                   help="run every applicable method and fail on disagreement")
    p.add_argument("--force", action="store_true", default=d(False),
                   help="lift brute-force size limits")
    p.add_argument("--stable", action="store_true", default=d(False),
                   help="omit elapsed time for byte-identical output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcomp",
        description="Exact counts of graph compositions and connected bipartite graphs.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        return p

    p = add("bipartite", "compositions of K_{m,n} (methods: formula, egf, oracle)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)

    p = add("multipartite", "compositions of K_{a1,...,an} (methods: egf, oracle)")
    p.add_argument("parts", type=_nonneg, nargs="+")

    p = add("atable", "rows 0..M of the a-table (methods: stirling, recurrence)")
    p.add_argument("M", type=_nonneg)
    p.add_argument("--both", action="store_true", help="build with both methods and report differences")

    p = add("connected-bipartite", "connected spanning subgraphs of K_{m,n} (methods: egf, oracle)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)

    p = add("graph", "compositions of a graph given as an edge list")
    p.add_argument("path", nargs="?")
    p.add_argument("--stdin", action="store_true", help="read the edge list from standard input")

    p = add("stirling", "Stirling number of the second kind S(n, k)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("k", type=_nonneg)

    p = add("bell", "Bell number B(n)")
    p.add_argument("n", type=_nonneg)
    return parser


# -- output -------------------------------------------------------------------


def _emit_record(args, query: list, method: str, result, elapsed: float, out, extra: dict | None = None):
    fmt = args.format
    if fmt == "json":
        record = {"query": {"command": args.command, "args": [str(a) for a in query]},
                  "method": method, "result": result}
        if extra:
            record.update(extra)
        if not args.stable:
            record["elapsed"] = round(elapsed, 6)
        out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        header = ["command", "args", "method", "result"] + ([] if args.stable else ["elapsed"])
        w.writerow(header)
        row = [args.command, " ".join(str(a) for a in query), method, result]
        w.writerow(row + ([] if args.stable else [f"{elapsed:.6f}"]))
    else:
        out.write(f"{result}\n")


def _pick_method(args, allowed: Sequence[str], default: str) -> str:
    method = args.method or default
    if method not in allowed:
        raise CliError(f"invalid method {method!r} for {args.command}; choose from {', '.join(allowed)}")
    return method


def _run_counts(args, query: list, methods: dict[str, Callable[[], int]], default: str,
                applicable: Callable[[str], str | None], out, err) -> int:
    """Run one method, or all applicable ones under ``--all-methods``.

    ``applicable(name)`` returns None if the method may run, else the reason it may not.
    """
    if args.all_methods:
        if args.method:
            raise CliError("--method and --all-methods are mutually exclusive")
        chosen = []
        for name in methods:
            reason = applicable(name)
            if reason is None:
                chosen.append(name)
            else:
                err.write(f"note: skipping {name}: {reason}\n")
    else:
        name = _pick_method(args, tuple(methods), default)
        reason = applicable(name)
        if reason is not None:
            raise CliError(reason)
        chosen = [name]

    t0 = time.perf_counter()
    results = {name: methods[name]() for name in chosen}
    elapsed = time.perf_counter() - t0

    values = set(results.values())
    if len(values) != 1:
        detail = ", ".join(f"{k}={v}" for k, v in results.items())
        err.write(f"error: methods disagree: {detail}\n")
        return 1
    result = str(values.pop())
    if len(chosen) == 1:
        _emit_record(args, query, chosen[0], result, elapsed, out)
    else:
        _emit_record(args, query, ",".join(chosen), result, elapsed, out,
                     extra={"results": {k: str(v) for k, v in results.items()}})
        if args.format == "plain":
            out.write(f"methods agree: {', '.join(chosen)}\n")
    return 0


# -- subcommands --------------------------------------------------------------


def cmd_bipartite(args, out, err) -> int:
    m, n = args.m, args.n
    methods = {
        "formula": lambda: bipartite.count_bipartite(m, n),
        "egf": lambda: bipartite.count_bipartite_via_egf(m, n),
        "oracle": lambda: oracle.count_compositions(oracle.complete_bipartite(m, n)),
    }

    def applicable(name):
        if name == "oracle" and m + n > ORACLE_VERTEX_LIMIT and not args.force:
            return f"oracle limited to {ORACLE_VERTEX_LIMIT} vertices (use --force)"
        return None

    return _run_counts(args, [m, n], methods, "formula", applicable, out, err)


def cmd_multipartite(args, out, err) -> int:
    parts = tuple(args.parts)
    methods = {
        "egf": lambda: multipartite.count_multipartite(parts),
        "oracle": lambda: oracle.count_compositions(oracle.complete_multipartite(parts)),
    }

    def applicable(name):
        if name == "oracle" and sum(parts) > ORACLE_VERTEX_LIMIT and not args.force:
            return f"oracle limited to {ORACLE_VERTEX_LIMIT} vertices (use --force)"
        return None

    return _run_counts(args, list(parts), methods, "egf", applicable, out, err)


def cmd_connected_bipartite(args, out, err) -> int:
    m, n = args.m, args.n
    if m == 0 and n == 0:
        raise CliError("connected count is undefined at (0, 0)")
    limit = m * n if args.force else oracle.MAX_BRUTEFORCE_EDGES
    methods = {
        "egf": lambda: bipartite.connected_bipartite_count(m, n),
        "oracle": lambda: oracle.connected_bipartite_bruteforce(m, n, max_edges=limit),
    }

    def applicable(name):
        if name == "oracle" and m * n > limit:
            return f"oracle limited to {oracle.MAX_BRUTEFORCE_EDGES} edges (use --force)"
        return None

    return _run_counts(args, [m, n], methods, "egf", applicable, out, err)


def cmd_atable(args, out, err) -> int:
    builders = {"stirling": bipartite.a_table_stirling, "recurrence": bipartite.a_table_recurrence}
    both = args.both or args.all_methods
    if both:
        if args.method:
            raise CliError("--method and --both are mutually exclusive")
        t0 = time.perf_counter()
        left, right = builders["stirling"](args.M), builders["recurrence"](args.M)
        elapsed = time.perf_counter() - t0
        diffs = [
            (m, i, a, b)
            for m, (ra, rb) in enumerate(zip(left.rows, right.rows))
            for i, (a, b) in enumerate(zip(ra, rb))
            if a != b
        ]
        status = "identical" if not diffs else f"{len(diffs)} entries differ"
        _emit_record(args, [args.M], "stirling,recurrence", status, elapsed, out)
        for m, i, a, b in diffs:
            err.write(f"a[{m}][{i}]: stirling={a} recurrence={b}\n")
        return 0 if not diffs else 1

    method = _pick_method(args, ATABLE_METHODS, "stirling")
    t0 = time.perf_counter()
    table = builders[method](args.M)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        _emit_record(args, [args.M], method, [[str(a) for a in row] for row in table.rows], elapsed, out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["m", "i", "value"])
        for m, row in enumerate(table.rows):
            for i, a in enumerate(row):
                w.writerow([m, i, a])
    else:
        for row in table.rows:
            out.write(" ".join(str(a) for a in row) + "\n")
    return 0


def cmd_graph(args, out, err) -> int:
    if args.stdin == bool(args.path):
        raise CliError("give exactly one of PATH or --stdin")
    if args.stdin:
        text, source = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.path}: {exc.strerror}")
        source = args.path
    g = oracle.from_edge_list(text)
    if g.n > ORACLE_VERTEX_LIMIT:
        err.write(f"warning: {g.n} vertices; enumerating B({g.n}) = {combinatorics.bell(g.n)} partitions\n")
    t0 = time.perf_counter()
    result = oracle.count_compositions(g)
    _emit_record(args, [source], "oracle", str(result), time.perf_counter() - t0, out)
    return 0


def cmd_stirling(args, out, err) -> int:
    t0 = time.perf_counter()
    result = combinatorics.stirling2(args.n, args.k)
    _emit_record(args, [args.n, args.k], "recurrence", str(result), time.perf_counter() - t0, out)
    return 0


def cmd_bell(args, out, err) -> int:
    t0 = time.perf_counter()
    result = combinatorics.bell(args.n)
    _emit_record(args, [args.n], "recurrence", str(result), time.perf_counter() - t0, out)
    return 0


COMMANDS = {
    "bipartite": cmd_bipartite,
    "multipartite": cmd_multipartite,
    "atable": cmd_atable,
    "connected-bipartite": cmd_connected_bipartite,
    "graph": cmd_graph,
    "stirling": cmd_stirling,
    "bell": cmd_bell,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out, err)
    except (CliError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
