"""Command line interface: ``tropdual <command> --n N --d D ...``.

Exit codes: 0 success, 1 suite failure, 2 usage error, 3 model error
(no resolution), 4 invalid object, 5 not a tilting object, 6 not a summand.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import (
    InvalidObject,
    InvalidParams,
    ModelError,
    NotASummand,
    NotATilting,
)
from .k0 import (
    INDEX_METHODS,
    c_matrix,
    c_vector,
    index_of,
    sign_coherence,
    staircase_candidates,
)
from .model import ModelParams, enumerate_indecs, format_indec, parse_indec
from .tilting import containing_vertex, enumerate_tiltings, exchange_report, parse_tilting
from .verify import ALL_SUITES, DEFAULT_GRID, reproduce_counterexample, run_suites

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_USAGE = 2
EXIT_MODEL = 3
EXIT_INVALID_OBJECT = 4
EXIT_NOT_A_TILTING = 5
EXIT_NOT_A_SUMMAND = 6


class UsageError(Exception):
    pass


def _params(args) -> ModelParams:
    if args.n is None or args.d is None:
        raise UsageError("--n and --d are required for this command")
    try:
        return ModelParams(args.n, args.d)
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None


def load_tilting(spec: str, params: ModelParams):
    """``vertex:K``, a JSON file path, or inline JSON."""
    spec = spec.strip()
    if spec.startswith("vertex:"):
        try:
            vertex = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad vertex shortcut {spec!r}") from None
        if not 1 <= vertex <= params.m:
            raise UsageError(f"vertex must lie in 1..{params.m}")
        return containing_vertex(params, vertex)
    if not spec.startswith("[") and Path(spec).is_file():
        spec = Path(spec).read_text(encoding="utf-8")
    return parse_tilting(spec, params)


def _table(rows, header=None) -> str:
    rows = [[str(c) for c in row] for row in rows]
    if header:
        rows = [list(header)] + rows
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_indecs(args):
    params = _params(args)
    objects = enumerate_indecs(params)
    if args.count:
        return {"n": params.n, "d": params.d, "count": len(objects)}, str(len(objects))
    data = [list(x) for x in objects]
    return data, "\n".join(format_indec(x) for x in objects)


def cmd_tiltings(args):
    params = _params(args)
    tiltings = enumerate_tiltings(params, args.limit)
    if args.count:
        return {"n": params.n, "d": params.d, "count": len(tiltings)}, str(len(tiltings))
    data = [t.to_json() for t in tiltings]
    text = "\n".join(" ".join(f"({format_indec(s)})" for s in t) for t in tiltings)
    return data, text


def cmd_index(args):
    params = _params(args)
    tilting = load_tilting(args.tilting, params)
    x = parse_indec(args.object, params)
    vector = index_of(x, tilting, params, method=args.method)
    data = {"object": list(x), "index": vector.to_json(), "vector": vector.as_list()}
    text = f"Ind({format_indec(x)}) = {vector!r}"
    if x not in tilting:
        angle = next(staircase_candidates(x, tilting, params), None)
        if angle is not None:
            data["angle"] = angle.to_json()
            text += f"\nangle: {angle}"
    return data, text


def cmd_cvectors(args):
    params = _params(args)
    tt = load_tilting(args.tilting_t, params)
    uu = load_tilting(args.tilting_u, params)
    header = ["u \\ t"] + [format_indec(t) for t in tt]
    if args.u is not None:
        u = parse_indec(args.u, params)
        cv = c_vector(u, uu, tt, params)
        rows = [[format_indec(u)] + cv.as_list()]
        text = _table(rows, header) + f"\nclassification: {sign_coherence(cv).value}"
        return cv.to_json(), text
    matrix = c_matrix(tt, uu, params)
    classes = [sign_coherence(row).value for row in matrix]
    data = {
        "basis_t": tt.to_json(),
        "basis_u": uu.to_json(),
        "matrix": matrix,
        "classification": {format_indec(u): c for u, c in zip(uu, classes)},
    }
    rows = [[format_indec(u)] + row + [c] for u, row, c in zip(uu, matrix, classes)]
    return data, _table(rows, header + ["sign"])


def cmd_mutations(args):
    params = _params(args)
    tilting = load_tilting(args.tilting, params)
    targets = [parse_indec(args.u, params)] if args.u else list(tilting)
    reports = [exchange_report(tilting, u, params) for u in targets]
    rows = [
        [
            format_indec(r.u),
            " ".join(format_indec(x) for x in r.mutations) or "-",
            "yes" if r.is_mutable else "no",
            "yes" if r.is_exchange_pair else "no",
        ]
        for r in reports
    ]
    text = _table(rows, ["u", "mutations", "mutable", "exchange pair"])
    return [r.to_json() for r in reports], text


def _report_line(r) -> str:
    where = f"n={r.params.n} d={r.params.d}" if r.params else ""
    status = "PASS" if r.passed else "FAIL"
    if r.skipped:
        status += f" ({r.skipped})"
    return f"{status:6s} {r.suite:15s} {where:9s} cases={r.cases_run} failures={len(r.failures)} {r.elapsed * 1000:.1f}ms"


def cmd_check(args):
    names = list(ALL_SUITES) if args.suite == "all" else [args.suite]
    if args.n is not None or args.d is not None:
        grid = (tuple(_params(args).as_dict().values()),)
    else:
        grid = DEFAULT_GRID
    reports = run_suites(names, grid)
    data = [r.to_json() for r in reports]
    text = "\n".join(_report_line(r) for r in reports)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_SUITE_FAILURE
    return data, text, code


def cmd_counterexample(args):
    report = reproduce_counterexample()
    cv = report.details["c_vector"]
    text = "\n".join(
        [_report_line(report)]
        + [f"c({t}) = {v}" for t, v in cv["values"].items() if v]
        + [f"classification: {cv['classification']}"]
    )
    code = EXIT_OK if report.passed else EXIT_SUITE_FAILURE
    return report.to_json(), text, code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="type A rank n >= 1")
    common.add_argument("--d", type=int, help="angulation parameter d >= 1")
    common.add_argument("--format", choices=("json", "table"),
                        help="default: table on a terminal, json otherwise")
    common.add_argument("--output", help="write the result to this file")

    parser = argparse.ArgumentParser(
        prog="tropdual",
        description="Exact computations in the polygon model of (d+2)-angulated cluster categories of type A.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indecs", parents=[common], help="list indecomposable objects")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_indecs)

    p = sub.add_parser("tiltings", parents=[common], help="list cluster tilting objects")
    p.add_argument("--limit", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_tiltings)

    p = sub.add_parser("index", parents=[common], help="index of an object")
    p.add_argument("--tilting", required=True, help="JSON file, inline JSON, or vertex:K")
    p.add_argument("--object", required=True, help='vertices, e.g. "4,6,8,10"')
    p.add_argument("--method", choices=INDEX_METHODS, default="auto")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("cvectors", parents=[common], help="c-vectors of a pair of tilting objects")
    p.add_argument("--tilting-t", "-t", dest="tilting_t", required=True)
    p.add_argument("--tilting-u", "-u", dest="tilting_u", required=True)
    p.add_argument("--u", help="a single summand of the U tilting object")
    p.set_defaults(func=cmd_cvectors)

    p = sub.add_parser("mutations", parents=[common], help="mutations and exchange pairs")
    p.add_argument("--tilting", required=True)
    p.add_argument("--u", help="restrict to one summand")
    p.set_defaults(func=cmd_mutations)

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all", help="one of: all, " + ", ".join(ALL_SUITES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("counterexample", parents=[common], help="mixed-sign c-vector at (n, d) = (3, 3)")
    p.set_defaults(func=cmd_counterexample)
    return parser


def _emit(data, text, args) -> None:
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.output or not sys.stdout.isatty() else "table"
    payload = json.dumps(data, indent=2) if fmt == "json" else text
    if args.output:
        Path(args.output).write_text(payload + "\n", encoding="utf-8")
    else:
        sys.stdout.write(payload + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and args.suite != "all" and args.suite not in ALL_SUITES:
        parser.error(f"unknown suite {args.suite!r}; choose from all, {', '.join(ALL_SUITES)}")
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except InvalidObject as exc:
        print(f"error: invalid object: {exc}", file=sys.stderr)
        return EXIT_INVALID_OBJECT
    except NotATilting as exc:
        print(f"error: not a tilting object: {exc}", file=sys.stderr)
        return EXIT_NOT_A_TILTING
    except NotASummand as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_SUMMAND
    except ModelError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if len(result) == 3:
        data, text, code = result
    else:
        data, text = result
    _emit(data, text, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
