"""Command-line front end.

    partialdom gamma [FILE]                 one certificate per graph6 line
    partialdom pd --alpha 7/8 [FILE]
    partialdom rho [FILE]
    partialdom construct --regime generic78 [FILE]
    partialdom gen --named A1 | --gp 7 2 | --random-cubic 20 --seed 1 [--connected]
    partialdom verify --suite ks CORPUS     (gp:3:13 needs no corpus)
    partialdom iso G6 G6
    partialdom stats [FILE]

FILE and CORPUS default to standard input ("-").  Exit codes: 0 success,
1 violation, timeout or failed construction, 2 usage error, 3 unreadable
input line.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator

from .catalog import NamedGraphId, named_graph
from .construct import ConstructionError, ConstructRegime, one_third_construct
from .exact import AlphaThreshold, SolveTimeout, gamma_exact, pd_exact, rho_exact
from .generators import generalized_petersen, random_cubic
from .graph import GraphError, classify
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .iso import MAX_ISO_ORDER, canonical_form
from .verify import SUITES, check_bounds, check_gp_formula

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _alpha(text: str) -> AlphaThreshold:
    try:
        return AlphaThreshold.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _suite(text: str) -> str:
    if text in SUITES:
        return text
    parts = text.split(":")
    if len(parts) == 3 and parts[0] == "gp" and parts[1].isdigit() and parts[2].isdigit():
        return text
    raise argparse.ArgumentTypeError(f"unknown suite {text!r}; choose from {', '.join(SUITES)} or gp:PMIN:PMAX")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--jobs", type=_positive, default=default if suppress else 1,
                        help="worker processes for verify (default 1)")
    parser.add_argument("--output", choices=("json", "tsv"), default=default if suppress else "json")
    parser.add_argument("--timeout-ms", type=_positive, default=default,
                        help="per-graph solver time limit")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partialdom", description="Exact and constructive domination tools.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("gamma", "rho", "stats"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", default="-")
    p = sub.add_parser("pd", parents=[common])
    p.add_argument("--alpha", type=_alpha, required=True, help="coverage fraction as P/Q")
    p.add_argument("input", nargs="?", default="-")
    p = sub.add_parser("construct", parents=[common])
    p.add_argument("--regime", choices=[r.value for r in ConstructRegime], required=True)
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("gen", parents=[common])
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--named", metavar="ID")
    which.add_argument("--gp", nargs=2, type=int, metavar=("P", "K"))
    which.add_argument("--random-cubic", type=int, metavar="N")
    p.add_argument("--seed", type=int)
    p.add_argument("--connected", action="store_true")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", type=_suite, required=True)
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")
    p.add_argument("corpus", nargs="?")

    p = sub.add_parser("iso", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    return parser


@contextmanager
def _open(path: str):
    if path == "-":
        yield sys.stdin.buffer
    else:
        try:
            handle = open(path, "rb")
        except OSError as exc:
            raise UsageError(f"cannot open {path}: {exc.strerror}") from None
        with handle:
            yield handle


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _tsv(values) -> str:
    return "\t".join(",".join(map(str, v)) if isinstance(v, list) else str(v) for v in values)


def _graphs(path: str, status: dict) -> Iterator:
    with _open(path) as handle:
        for number, line in read_graph6_lines(handle):
            try:
                yield parse_graph6(line)
            except (Graph6Error, GraphError) as exc:
                print(f"line {number}: {exc}", file=sys.stderr)
                status["parse"] = True


def _per_graph(args, solve) -> int:
    status = {"parse": False, "fail": False}
    for g in _graphs(args.input, status):
        try:
            out = solve(g)
        except SolveTimeout:
            status["fail"] = True
            out = {"status": "timeout", "graph6": write_graph6(g).decode("ascii")}
        except ConstructionError as exc:
            status["fail"] = True
            print(f"construct: {exc}", file=sys.stderr)
            out = {"status": "failed", "graph6": write_graph6(g).decode("ascii")}
        _emit(json.dumps(out) if args.output == "json" else _tsv(out.values()))
    if status["fail"]:
        return EXIT_FAIL
    return EXIT_PARSE if status["parse"] else EXIT_OK


def _timeout(args) -> float | None:
    return None if args.timeout_ms is None else args.timeout_ms / 1000


def _cmd_gen(args) -> int:
    if args.random_cubic is None and (args.seed is not None or args.connected):
        raise UsageError("--seed and --connected only apply to --random-cubic")
    try:
        if args.named is not None:
            g = named_graph(NamedGraphId.parse(args.named))
        elif args.gp is not None:
            g = generalized_petersen(*args.gp)
        else:
            if args.seed is None:
                raise UsageError("--random-cubic needs --seed")
            g = random_cubic(args.random_cubic, args.seed, args.connected)
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    _emit(write_graph6(g).decode("ascii"))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite.startswith("gp:"):
        if args.corpus is not None:
            raise UsageError("gp suites take no corpus")
        _, lo, hi = args.suite.split(":")
        try:
            report = check_gp_formula(int(lo), int(hi))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        with _open(args.corpus or "-") as handle:
            report = check_bounds(handle, args.suite, args.jobs, args.timeout_ms)
    if args.output == "json":
        _emit(json.dumps(report.to_dict(timing=args.timing), indent=2))
    else:
        sys.stdout.write(report.tsv())
        if args.timing:
            _emit(f"elapsed_ms\t{report.elapsed_ms}")
    for err in report.errors:
        print(f"line {err['line']}: {err['message']}", file=sys.stderr)
    if report.failed:
        return EXIT_FAIL
    return EXIT_PARSE if report.errors else EXIT_OK


def _cmd_iso(args) -> int:
    try:
        g, h = parse_graph6(args.first), parse_graph6(args.second)
    except (Graph6Error, GraphError) as exc:
        print(f"iso: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if max(g.n, h.n) > MAX_ISO_ORDER:
        raise UsageError(f"iso supports graphs up to order {MAX_ISO_ORDER}")
    cg, ch = canonical_form(g), canonical_form(h)
    out = {"isomorphic": cg == ch,
           "canonical": [write_graph6(cg).decode("ascii"), write_graph6(ch).decode("ascii")]}
    _emit(json.dumps(out) if args.output == "json" else _tsv(out.values()))
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        timeout = _timeout(args)
        if args.command == "gamma":
            return _per_graph(args, lambda g: gamma_exact(g, timeout).to_dict())
        if args.command == "pd":
            return _per_graph(args, lambda g: pd_exact(g, args.alpha, timeout).to_dict())
        if args.command == "rho":
            return _per_graph(args, lambda g: rho_exact(g, timeout).to_dict())
        if args.command == "construct":
            return _per_graph(args, lambda g: one_third_construct(g, args.regime).to_dict())
        if args.command == "stats":
            return _per_graph(args, lambda g: classify(g).to_dict())
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_iso(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
