"""Command-line frontend: compute, family, verify, search.

Every invocation prints one JSON document (schema_version "1") unless
``--table`` asks for the human layout or ``--quiet`` trims output to a
single verdict line.  Exit codes: 0 success, 1 violation of a claim that is
expected to hold, 2 usage error, 3 input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .families import FAMILIES, build_family, verify_instance
from .graph_core import (
    GraphFormatError,
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
)
from .invariants import full_report
from .theorem_lab import (
    EnumerationSource,
    FamilySource,
    Graph6Source,
    RandomSource,
    TheoremId,
    run_search,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _parse_params(tokens: Sequence[str]) -> dict[str, list[int]]:
    """Parse ``k=3`` / ``k=2..6`` tokens into per-name value lists."""
    out: dict[str, list[int]] = {}
    for token in tokens:
        name, sep, raw = token.partition("=")
        if not sep or not name:
            raise ValueError(f"expected NAME=VALUE or NAME=LO..HI, got {token!r}")
        if ".." in raw:
            lo_text, _, hi_text = raw.partition("..")
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range in {token!r}")
            out[name] = list(range(lo, hi + 1))
        else:
            out[name] = [int(raw)]
    return out


def _expand_param_grid(params: dict[str, list[int]]) -> list[dict[str, int]]:
    """Cartesian product of parameter value lists, first name varying fastest last."""
    combos: list[dict[str, int]] = [{}]
    for name, values in params.items():
        combos = [dict(combo, **{name: value}) for combo in combos for value in values]
    return combos


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(args: argparse.Namespace, envelope: dict, quiet_line: str, table: str) -> None:
    if args.quiet:
        print(quiet_line)
    elif args.table:
        print(table)
    else:
        print(json.dumps(envelope, indent=2, sort_keys=True))


def _envelope(command: str, inputs: dict, results, diagnostics: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics,
    }


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    text = _read_text(args.input)
    diagnostics: list[str] = []
    if args.format == "graph6":
        graphs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line.strip()))
            except GraphFormatError as exc:
                print(f"parse error on line {lineno}: {exc}", file=sys.stderr)
                return EXIT_PARSE
    else:
        try:
            graphs = [parse_edge_list(text)]
        except GraphFormatError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE

    method = "oracle" if args.oracle else "auto"
    results = []
    rows = []
    for index, g in enumerate(graphs):
        report = full_report(g, limit=args.limit_n, method=method)
        diagnostics.extend(f"graph {index}: {note}" for note in report.diagnostics)
        payload = report.to_dict(include_witnesses=args.witnesses)
        payload["graph6"] = encode_graph6(g)
        results.append(payload)
        rows.append({"label": index, **report.to_dict(include_witnesses=False)})

    if args.report_dir:
        from . import reporting

        paths = reporting.write_invariant_table(rows, args.report_dir, "compute")
        diagnostics.append(f"report files: {', '.join(str(p) for p in paths)}")

    envelope = _envelope(
        "compute",
        {"input": args.input, "format": args.format, "oracle": args.oracle},
        results,
        diagnostics,
    )
    header = f"{'#':>3} {'n':>4} {'m':>5} {'alpha':>5} {'a':>4} {'a_crit':>6} {'mu':>4} {'d':>4}"
    lines = [header]
    for index, item in enumerate(results):
        alpha = item["alpha"] if item["alpha"] is not None else "-"
        lines.append(
            f"{index:>3} {item['n']:>4} {item['m']:>5} {alpha:>5} {item['a']:>4} "
            f"{item['alpha_crit']:>6} {item['mu']:>4} {item['crit_diff']:>4}"
        )
    _emit(args, envelope, f"ok {len(results)} graph(s)", "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        params = _parse_params(args.params)
        combos = _expand_param_grid(params)
        instances = [build_family(args.name, **combo) for combo in combos]
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    diagnostics: list[str] = []
    results = []
    rows = []
    all_ok = True
    for inst in instances:
        entry = {
            "name": inst.name,
            "parameters": inst.parameters,
            "label": inst.label,
            "n": inst.graph.n,
            "m": inst.graph.m,
            "predicted": inst.predicted,
            "graph6": encode_graph6(inst.graph),
        }
        if args.out_format == "edgelist":
            entry["edgelist"] = encode_edge_list(inst.graph)
        if args.verify:
            ok, records = verify_instance(inst, limit=args.limit_n)
            entry["verification"] = {"ok": ok, "checks": records}
            all_ok = all_ok and ok
        results.append(entry)
        row = {"label": "-".join(str(v) for v in inst.parameters.values()) or inst.name}
        row.update({"n": inst.graph.n, "m": inst.graph.m})
        if args.verify:
            row.update(
                {
                    rec["invariant"]: rec["computed"]
                    for rec in entry["verification"]["checks"]
                    if rec["invariant"] in ("alpha", "a", "alpha_crit", "mu")
                }
            )
        rows.append(row)

    if args.graph_only:
        for entry in results:
            print(entry.get("edgelist", entry["graph6"]), end="" if args.out_format == "edgelist" else "\n")
        return EXIT_OK if (not args.verify or all_ok) else EXIT_VIOLATION

    if args.report_dir:
        from . import reporting

        paths = reporting.write_invariant_table(rows, args.report_dir, f"family_{args.name}")
        diagnostics.append(f"report files: {', '.join(str(p) for p in paths)}")

    envelope = _envelope(
        "family",
        {"name": args.name, "parameters": {k: v for k, v in params.items()}, "verify": args.verify},
        results,
        diagnostics,
    )
    lines = []
    for entry in results:
        summary = f"{entry['name']} {entry['parameters']} n={entry['n']} m={entry['m']}"
        if args.verify:
            summary += " PASS" if entry["verification"]["ok"] else " FAIL"
        lines.append(summary)
    verdict = "PASS" if all_ok else "FAIL"
    if not args.verify:
        verdict = f"ok {len(results)} instance(s)"
    _emit(args, envelope, verdict, "\n".join(lines))
    return EXIT_OK if (not args.verify or all_ok) else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# verify / search
# ---------------------------------------------------------------------------


def _build_source(args: argparse.Namespace):
    chosen = [
        name
        for name, value in (
            ("enumerate", args.enumerate is not None),
            ("graph6", args.graph6 is not None),
            ("random", args.random is not None),
            ("family", args.family is not None),
        )
        if value
    ]
    if len(chosen) != 1:
        raise ValueError("exactly one of --enumerate / --graph6 / --random / --family is required")
    if args.enumerate is not None:
        return EnumerationSource(max_n=args.enumerate)
    if args.graph6 is not None:
        text = _read_text(args.graph6)
        lines = tuple(line for line in text.splitlines() if line.strip())
        return Graph6Source(lines=lines, origin=f"graph6 file {args.graph6}")
    if args.random is not None:
        parts = args.random.split(",")
        if len(parts) not in (3, 4):
            raise ValueError("--random expects N,P,COUNT[,SEED]")
        n, p, count = int(parts[0]), float(parts[1]), int(parts[2])
        seed = int(parts[3]) if len(parts) == 4 else args.seed
        return RandomSource(n=n, p=p, count=count, seed=seed)
    name, *tokens = args.family
    params = _parse_params(tokens)
    combos = _expand_param_grid(params)
    parameter_sets = tuple(tuple(sorted(combo.items())) for combo in combos)
    return FamilySource(name=name, parameter_sets=parameter_sets)


def _theorem_ids(tokens: Sequence[str]) -> list[TheoremId]:
    ids = []
    for token in tokens:
        try:
            ids.append(TheoremId(token.upper()))
        except ValueError:
            known = ", ".join(t.value for t in TheoremId)
            raise ValueError(f"unknown theorem {token!r}; known: {known}") from None
    return ids


def _run_search_command(args: argparse.Namespace, command: str) -> int:
    try:
        checks = _theorem_ids(args.theorems) if args.theorems else list(TheoremId)
        source = _build_source(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        report = run_search(source, checks, jobs=args.jobs, early_exit=args.early_exit)
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    diagnostics = []
    if report.errors:
        diagnostics.append(f"{report.errors} graph(s) exceeded solver limits")
    payload = report.to_dict()

    if args.report_dir:
        from . import reporting

        paths = reporting.write_search_report(payload, args.report_dir, command)
        diagnostics.append(f"report files: {', '.join(str(p) for p in paths)}")

    envelope = _envelope(
        command,
        {"source": report.source, "theorems": [t.value for t in checks], "jobs": args.jobs},
        payload,
        diagnostics,
    )
    unexpected = report.unexpected_violations()
    verdict = "PASS" if unexpected == 0 else f"FAIL: {unexpected} unexpected violation(s)"
    header = f"{'theorem':<18} {'holds':>8} {'n/a':>8} {'violated':>8} {'errors':>7}"
    lines = [f"source: {report.source}  graphs: {report.graphs_examined}", header]
    for theorem in sorted(report.tallies):
        tally = report.tallies[theorem]
        lines.append(
            f"{theorem:<18} {tally['Holds']:>8} {tally['NotApplicable']:>8} "
            f"{tally['Violated']:>8} {tally['Error']:>7}"
        )
    if report.violations:
        lines.append(f"violating graphs: {len(report.violations)}")
        lines.extend(f"  {g6}  {theorem}" for g6, theorem in report.violations[:20])
    lines.append(verdict)
    _emit(args, envelope, verdict, "\n".join(lines))
    return EXIT_OK if unexpected == 0 else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--table", action="store_true", help="human-readable table instead of JSON")
    parser.add_argument("--quiet", action="store_true", help="print only the verdict line")
    parser.add_argument("--limit-n", type=int, default=None, help="exact-solver vertex cap override")
    parser.add_argument("--report-dir", default=None, help="write CSV and figure report files here")


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--enumerate", type=int, default=None, metavar="N",
                        help="all labeled graphs with at most N vertices")
    parser.add_argument("--graph6", default=None, metavar="PATH",
                        help="graph6 stream, one graph per line ('-' for stdin)")
    parser.add_argument("--random", default=None, metavar="N,P,COUNT[,SEED]",
                        help="seeded random graph sample")
    parser.add_argument("--family", nargs="+", default=None, metavar="NAME [PARAM=RANGE...]",
                        help="instances of a generator family")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    parser.add_argument("--seed", type=int, default=0, help="base seed for --random")
    parser.add_argument("--early-exit", action="store_true", help="stop at the first violation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annihilator",
        description="Graph invariants, counterexample families, and exhaustive claim checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="invariants of input graphs")
    compute.add_argument("input", nargs="?", default="-", help="path or '-' for stdin")
    compute.add_argument("--format", choices=("graph6", "edgelist"), required=True,
                         help="input format (auto-detection is deliberately unsupported)")
    compute.add_argument("--witnesses", action="store_true", help="include certifying sets")
    compute.add_argument("--oracle", action="store_true",
                         help="force the brute-force critical independence path")
    _add_common(compute)
    compute.set_defaults(func=_cmd_compute)

    family = sub.add_parser("family", help="generate a counterexample family instance")
    family.add_argument("name", choices=sorted(FAMILIES), help="family name")
    family.add_argument("params", nargs="*", help="parameters, e.g. k=3 or k=2..6")
    family.add_argument("--verify", action="store_true",
                        help="recompute invariants and compare with the manifest")
    family.add_argument("--out-format", choices=("graph6", "edgelist"), default="graph6")
    family.add_argument("--graph-only", action="store_true",
                        help="print only the encoded graph(s)")
    _add_common(family)
    family.set_defaults(func=_cmd_family)

    verify = sub.add_parser("verify", help="check claims over a graph source")
    verify.add_argument("theorems", nargs="+", help="theorem identifiers")
    _add_source_options(verify)
    _add_common(verify)
    verify.set_defaults(func=lambda args: _run_search_command(args, "verify"))

    search = sub.add_parser("search", help="sweep all claims over a graph source")
    search.add_argument("theorems", nargs="*", help="theorem identifiers (default: all)")
    _add_source_options(search)
    _add_common(search)
    search.set_defaults(func=lambda args: _run_search_command(args, "search"))

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
