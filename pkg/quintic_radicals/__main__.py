#!/usr/bin/env python3
"""
Main entry point for the quintic solvers
"""

import argparse
import sys
from contextlib import nullcontext
from typing import List, Optional

from .config import ConfigurationManager
from .engine import EXIT_USAGE, SolverEngine
from .error_handler import QuinticError, RequestError
from .report import FORM_COEFFICIENTS, FORMS, METHODS, SolveRequest, parse_complex


def _common_flags() -> argparse.ArgumentParser:
    """Flags accepted before or after the command"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "text", "csv"),
        default=argparse.SUPPRESS,
        help="Output format",
    )
    common.add_argument(
        "--tol", type=float, default=argparse.SUPPRESS, help="Iteration tolerance"
    )
    common.add_argument(
        "--max-iter",
        type=int,
        default=argparse.SUPPRESS,
        help="Maximum number of iterations",
    )
    common.add_argument(
        "--verify",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Cross-check roots against the reference root finder",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=argparse.SUPPRESS,
        help="Batch workers (0 = one per CPU)",
    )
    common.add_argument(
        "--no-timing",
        dest="include_timing",
        action="store_false",
        default=argparse.SUPPRESS,
        help="Leave timings out of reports",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="quintic_radicals",
        description="Solve x^5 + x + a = 0 and related quintics by iteration of radicals",
        parents=[common],
    )

    parser.add_argument(
        "--default-config",
        action="store_true",
        help="Dump default configuration as JSON to stdout and exit",
    )
    parser.add_argument(
        "--show-config",
        action="store_true",
        help="Show final configuration after applying all overrides",
    )
    parser.add_argument(
        "--config", "-c", help="Configuration file (JSON format)", default=None
    )
    parser.add_argument(
        "--verbose", "-v", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )

    commands = parser.add_subparsers(dest="command")

    solve = commands.add_parser("solve", help="Solve one equation", parents=[common])
    solve.add_argument("--form", choices=FORMS, default="form1")
    solve.add_argument("--method", choices=METHODS, default=None)
    solve.add_argument("--label", default=None)
    for name in sorted({c for names in FORM_COEFFICIENTS.values() for c in names}):
        solve.add_argument(f"--{name}", default=None, help=f"Coefficient {name}")

    batch = commands.add_parser(
        "batch", help="Solve JSONL requests, one per line", parents=[common]
    )
    batch.add_argument("input", nargs="?", default="-", help="JSONL file ('-' = stdin)")

    demo = commands.add_parser(
        "demo-divergence",
        help="Show the naive iteration failing to converge",
        parents=[common],
    )
    demo.add_argument("--a", type=float, default=None)
    demo.add_argument("--x0", type=float, default=None)
    demo.add_argument("--steps", type=int, default=None)

    bounds = commands.add_parser(
        "verify-bounds", help="Check the error bounds over a grid", parents=[common]
    )
    bounds.add_argument("--xi-min-exp", type=float, default=None)
    bounds.add_argument("--xi-max-exp", type=float, default=None)
    bounds.add_argument("--xi-points", type=int, default=None)
    bounds.add_argument("--theta-points", type=int, default=None)
    bounds.add_argument("--a-min-exp", type=float, default=None)
    bounds.add_argument("--a-max-exp", type=float, default=None)
    bounds.add_argument("--a-points", type=int, default=None)
    bounds.add_argument("--a-arguments", type=int, default=None)
    bounds.add_argument(
        "--skip-form1", action="store_true", help="Only sweep the Form 3 grid"
    )

    return parser


def _overrides(args: argparse.Namespace) -> dict:
    """Configuration overrides from flags; None means not given"""
    level = {0: None, 1: "INFO"}.get(args.verbose, "DEBUG")
    overrides = {
        "solver": {
            "tol": getattr(args, "tol", None),
            "max_iter": getattr(args, "max_iter", None),
            "method": getattr(args, "method", None),
        },
        "batch": {"jobs": getattr(args, "jobs", None)},
        "output": {
            "format": getattr(args, "format", None),
            "include_timing": getattr(args, "include_timing", None),
        },
        "verify": {"oracle": getattr(args, "verify", None)},
        "logging": {"level": level},
    }
    if args.command == "demo-divergence":
        overrides["demo"] = {"a": args.a, "x0": args.x0, "steps": args.steps}
    if args.command == "verify-bounds":
        overrides["bounds"] = {
            "xi_min_exp": args.xi_min_exp,
            "xi_max_exp": args.xi_max_exp,
            "xi_points": args.xi_points,
            "theta_points": args.theta_points,
            "a_min_exp": args.a_min_exp,
            "a_max_exp": args.a_max_exp,
            "a_points": args.a_points,
            "a_arguments": args.a_arguments,
        }
    return overrides


def _request_from_args(args: argparse.Namespace, engine: SolverEngine) -> SolveRequest:
    data = {"form": args.form, "label": args.label}
    for name in FORM_COEFFICIENTS[args.form]:
        value = getattr(args, name)
        if value is None:
            raise RequestError(f"--{name} is required for --form {args.form}")
        data[name] = parse_complex(value)
    return SolveRequest.from_dict(data, engine.request_defaults())


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.default_config:
        ConfigurationManager().dump_config_json()
        return 0

    if args.command is None and not args.show_config:
        parser.error("a command is required: solve, batch, demo-divergence or verify-bounds")

    engine = SolverEngine(config=_overrides(args), config_file=args.config)

    if args.show_config:
        print("\nFinal Configuration (after all overrides):", file=sys.stderr)
        engine.config.dump_config_json(sys.stderr)
        if args.command is None:
            return 0

    if args.command == "solve":
        try:
            request = _request_from_args(args, engine)
        except RequestError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        report, code = engine.solve(request)
        sys.stdout.write(engine.render_reports([report]))
        return code

    if args.command == "batch":
        try:
            stream = engine.pipeline.reader.open_input(args.input)
        except OSError as e:
            print(f"error: cannot read {args.input}: {e}", file=sys.stderr)
            return EXIT_USAGE
        with stream if stream is not sys.stdin else nullcontext(stream):
            reports, code = engine.run_batch(stream)
        sys.stdout.write(engine.render_reports(reports))
        return code

    if args.command == "demo-divergence":
        settings = engine.config.get("demo")
        try:
            demo = engine.demo_divergence(settings["a"], settings["x0"], settings["steps"])
        except QuinticError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(engine.render_demo(demo))
        return 0

    summary, code = engine.verify_bounds(include_form1=not args.skip_form1)
    sys.stdout.write(engine.render_bounds(summary))
    return code


if __name__ == "__main__":
    sys.exit(main())
