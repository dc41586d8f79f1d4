"""Command-line entry point.

Exit codes: 0 success, 2 invalid input, 3 hypothesis violation (including
valuations that disagree with the ideal), 4 unsupported dimension.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .cone import alpha_matrix, classify_point, cone_closure, emit_mesh, limit_exists, relevant_valuations
from .errors import (
    DimensionError,
    DomainError,
    EmptyIdealError,
    HypothesisError,
    InsufficientDataError,
    InvalidDenominatorError,
    UnsupportedDimensionError,
)
from .limits import contains, limit_L_general, valuations_for
from .newton import ValuationSet, user_valuations
from .problem import InputError, ProblemInput, parse_input
from .rational import as_rational, rat_str
from .sequence import analyze

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_DIMENSION = 4

COMMANDS = ("limits", "valuations", "cone", "classify", "sequence", "mesh", "check", "limit-exists")


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_m: int = 10
    window: Optional[int] = None
    mesh_bound: int = 10
    output_path: Optional[str] = None
    verbosity: int = 0
    a: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    point: Optional[str] = None
    j_index: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError("command", f"unknown command {self.command!r}")
        for name in ("max_m", "mesh_bound", "j_index"):
            if getattr(self, name) <= 0:
                raise InputError(f"--{name.replace('_', '-')}", "must be positive")
        if self.window is not None and self.window <= 0:
            raise InputError("--window", "must be positive")


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _rational_list(text: str, flag: str) -> tuple:
    try:
        return tuple(as_rational(p) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(flag, f"cannot parse rational list {text!r}: {exc}") from exc


def _require_I(problem: ProblemInput, command: str):
    if problem.I is None:
        raise InputError("$.I", f"`{command}` needs the ideal I")
    return problem.I


def _pick_j(problem: ProblemInput, config: RunConfig):
    if not problem.J:
        raise InputError("$.J", f"`{config.command}` needs at least one ideal J")
    if config.j_index > len(problem.J):
        raise InputError("--j", f"only {len(problem.J)} ideals J were given")
    return problem.J[config.j_index - 1]


def _valuation_set(problem: ProblemInput) -> ValuationSet:
    """Valuations for the cone commands; when both sources exist they must agree."""
    if problem.I is not None:
        computed = valuations_for(problem.I)
        if problem.valuations is not None:
            given = sorted((v.weights, v.e) for v in problem.valuations)
            if given != sorted((v.weights, v.e) for v in computed):
                raise HypothesisError("supplied valuations differ from the Rees valuations of I")
        return computed
    return user_valuations(problem.valuations)


def _alpha(problem: ProblemInput, command: str):
    if not problem.J:
        raise InputError("$.J", f"`{command}` needs at least one ideal J")
    return alpha_matrix(_valuation_set(problem), problem.J)


def run(config: RunConfig, problem: ProblemInput) -> dict:
    """Carry out one command and return its JSON document. Errors propagate as exceptions."""
    cmd = config.command
    if cmd == "limits":
        res = limit_L_general(_require_I(problem, cmd), _pick_j(problem, config))
        return {
            "L": rat_str(res.L),
            "l": rat_str(res.l),
            "witness": {"m": res.witness_m, "n": res.witness_n},
            "active_regions": list(res.active_regions),
        }
    if cmd == "valuations":
        vs = valuations_for(_require_I(problem, cmd))
        return {"valuations": [v.to_json() for v in vs]}
    if cmd == "cone":
        a = _alpha(problem, cmd)
        return {**cone_closure(a).to_json(), "relevant": relevant_valuations(a)}
    if cmd == "classify":
        if config.point is None:
            raise InputError("--point", "`classify` needs --point m1,...,mk,n")
        pt = _rational_list(config.point, "--point")
        label = classify_point(cone_closure(_alpha(problem, cmd)), pt)
        return {"point": [rat_str(x) for x in pt], "classification": label}
    if cmd == "sequence":
        rep = analyze(_require_I(problem, cmd), _pick_j(problem, config), config.max_m, config.window)
        if config.output_path:
            Path(config.output_path).write_text(rep.to_csv())
        period = None if rep.period is None else {"t": rep.period.t, "onset": rep.period.onset}
        return {"values": list(rep.values), "period": period, "max_deviation": rat_str(rep.max_deviation)}
    if cmd == "mesh":
        if not config.output_path:
            raise InputError("--out", "`mesh` needs an output file")
        text = emit_mesh(cone_closure(_alpha(problem, cmd)), config.mesh_bound)
        Path(config.output_path).write_text(text)
        lines = text.splitlines()
        return {
            "out": config.output_path,
            "vertices": sum(1 for x in lines if x.startswith("v ")),
            "faces": sum(1 for x in lines if x.startswith("f ")),
            "seams": sum(1 for x in lines if x.startswith("l ")),
        }
    if cmd == "check":
        if config.m is None or config.n is None:
            raise InputError("--m/--n", "`check` needs both --m and --n")
        if config.m < 0 or config.n < 0:
            raise InputError("--m/--n", "must be nonnegative")
        i_ideal = _require_I(problem, cmd)
        j_ideal = _pick_j(problem, config)
        return {"m": config.m, "n": config.n, "contained": contains(j_ideal, config.m, i_ideal, config.n)}
    # limit-exists
    if config.a is None:
        raise InputError("--a", "`limit-exists` needs --a p/q,p/q,...")
    a = _rational_list(config.a, "--a")
    lim = limit_exists(_alpha(problem, cmd), a)
    return {"a": [rat_str(x) for x in a], "limit": None if lim is None else rat_str(lim)}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, UnsupportedDimensionError):
        return EXIT_DIMENSION
    if isinstance(exc, HypothesisError):
        return EXIT_HYPOTHESIS
    if isinstance(exc, (InputError, DimensionError, DomainError, EmptyIdealError, InvalidDenominatorError, InsufficientDataError)):
        return EXIT_INPUT
    raise exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="problem JSON (default: stdin)")
    common.add_argument("--max-m", type=int, default=10)
    common.add_argument("--window", type=int)
    common.add_argument("--bound", type=int, default=10, help="mesh extent in each m-direction")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--a", metavar="P/Q,...", help="weight vector for limit-exists")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--point", metavar="P/Q,...", help="point (m1,...,mk,n) for classify")
    common.add_argument("--j", type=int, default=1, help="which J (1-based) for limits/sequence/check")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="samuelcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if not exc.code else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    try:
        config = RunConfig(
            command=args.command, max_m=args.max_m, window=args.window, mesh_bound=args.bound,
            output_path=args.out, verbosity=args.verbose, a=args.a, m=args.m, n=args.n,
            point=args.point, j_index=args.j,
        )
        if args.input:
            try:
                text = Path(args.input).read_text()
            except OSError as exc:
                raise InputError("--input", str(exc)) from exc
        else:
            text = sys.stdin.read()
        doc = run(config, parse_input(text))
    except Exception as exc:  # mapped to the documented exit codes; anything else is a bug
        code = exit_code_for(exc)
        err = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, InputError):
            err["path"] = exc.path
        sys.stderr.write(dumps(err))
        return code
    sys.stdout.write(dumps(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
