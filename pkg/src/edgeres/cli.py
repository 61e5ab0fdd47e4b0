"""Command-line front end.

Exit codes: 0 all checks pass, 1 verification failure, 2 input error
(parse failures, non-linear input without --assert-linear), 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import NotLinearError, analyze_graph, analyze_hypergraph, render_text
from .complexes import ComplexTooLargeError
from .generate import FAMILIES, BadParamsError, generate_family
from .graphs import Graph, ParseError, format_graph, parse_input
from .oracle import DEFAULT_ORACLE_CAP, HARD_ORACLE_CAP, TooLargeError

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def report_json_bytes(report: dict) -> bytes:
    return (json.dumps(report, indent=2) + "\n").encode()


def _analyze_path(path: Path, args) -> dict:
    obj, label_map = parse_input(path.read_text())
    kwargs = dict(
        source=str(path),
        label_map=label_map,
        run_oracle=args.oracle,
        assert_linear=args.assert_linear,
        max_n=args.max_n,
    )
    if isinstance(obj, Graph):
        return analyze_graph(obj, **kwargs)
    return analyze_hypergraph(obj, **kwargs)


def cmd_analyze(args) -> int:
    path = Path(args.path)
    try:
        report = _analyze_path(path, args)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotLinearError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TooLargeError, ComplexTooLargeError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    payload = (
        report_json_bytes(report)
        if args.json
        else render_text(report).encode()
    )
    if args.output:
        Path(args.output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
    return EXIT_OK if report["checks_passed"] else EXIT_VERIFICATION


def cmd_generate(args) -> int:
    try:
        if args.count != 1 and args.family != "random-chordal":
            raise BadParamsError("--count only applies to random-chordal")
        if args.count < 1:
            raise BadParamsError("--count must be positive")
        graphs = []
        if args.family == "random-chordal" and args.count > 1:
            if not args.output:
                raise BadParamsError("--count > 1 needs -o pointing at a directory")
            for k in range(args.count):
                graphs.append(
                    (f"random_chordal_n{args.n}_s{args.seed}_{k}.txt",
                     generate_family(args.family, args.n, args.m, args.seed + k))
                )
        else:
            graphs.append((None, generate_family(args.family, args.n, args.m, args.seed)))
    except BadParamsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.output and len(graphs) > 1:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, g in graphs:
            (outdir / name).write_text(format_graph(g))
            print(outdir / name)
    else:
        text = format_graph(graphs[0][1])
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    files = sorted(
        p for p in directory.iterdir() if p.is_file() and not p.name.startswith(".")
    )
    if not files:
        print(f"warning: no corpus files in {directory}", file=sys.stderr)
    results = []
    for path in files:
        entry = {"file": path.name}
        try:
            report = _analyze_path(path, args)
        except ParseError as exc:
            entry.update(status="parse_error", detail=str(exc))
        except NotLinearError as exc:
            entry.update(status="not_linear", detail=str(exc))
        except (TooLargeError, ComplexTooLargeError) as exc:
            entry.update(status="too_large", detail=str(exc))
        else:
            entry.update(
                status="pass" if report["checks_passed"] else "fail",
                checks=report["checks"],
            )
        results.append(entry)

    counts = {}
    for entry in results:
        counts[entry["status"]] = counts.get(entry["status"], 0) + 1
    summary = {
        "schema": 1,
        "directory": str(directory),
        "total": len(results),
        "counts": counts,
        "entries": results,
    }
    if args.json:
        sys.stdout.buffer.write(report_json_bytes(summary))
    else:
        for entry in results:
            detail = entry.get("detail", "")
            line = f"{entry['status']:>12}  {entry['file']}"
            if detail:
                line += f"  ({detail})"
            print(line)
        print(
            f"total {len(results)}: "
            + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        )
    return EXIT_OK if counts.get("fail", 0) == 0 else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeres",
        description=(
            "Exact Betti numbers, Hilbert series and multiplicity for edge "
            "ideals with linear resolution, with a homological oracle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one graph or hypergraph file")
    pa.add_argument("path")
    _common_analysis_flags(pa)
    pa.add_argument("--json", action="store_true", help="emit the JSON report")
    pa.add_argument("--text", dest="json", action="store_false",
                    help="emit the text report (default)")
    pa.add_argument("-o", "--output", help="write the report to a file")
    pa.set_defaults(func=cmd_analyze, json=False)

    pg = sub.add_parser("generate", help="emit a graph file from a family")
    pg.add_argument("family", choices=FAMILIES)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--m", type=int, default=None,
                    help="second part size (bipartite only)")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--count", type=int, default=1,
                    help="number of random-chordal graphs (seeds seed..seed+count-1)")
    pg.add_argument("-o", "--output", help="output file (or directory with --count)")
    pg.set_defaults(func=cmd_generate)

    pv = sub.add_parser("verify", help="batch-verify a directory of inputs")
    pv.add_argument("directory")
    _common_analysis_flags(pv)
    pv.add_argument("--json", action="store_true", help="machine-readable summary")
    pv.set_defaults(func=cmd_verify)
    return parser


def _common_analysis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oracle", action="store_true",
                   help="run the graded-Betti homology oracle")
    p.add_argument("--assert-linear", action="store_true",
                   help="skip linearity recognition and trust the caller")
    p.add_argument("--max-n", type=int, default=DEFAULT_ORACLE_CAP,
                   help=f"oracle subset-enumeration cap (hard limit {HARD_ORACLE_CAP})")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
