#!/usr/bin/env python3
"""
Quintic Solver Engine: configuration, logging and the four commands
"""

import json
import logging
import sys
from typing import IO, Any, Dict, List, Mapping, Optional, Tuple

from .bounds import BoundsSummary, render_bounds_text, verify_bounds
from .config import ConfigurationManager
from .pipeline import SolvePipeline
from .report import SolveReport, SolveRequest, render_csv, render_text
from .solvers.oracle import QuinticCoefficients, oracle_roots
from .solvers.radical_solver import naive_iteration_demo, solve_form1
from .solvers.reductions import Form1Problem

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_USAGE = 2
EXIT_SOLVER = 3


class SolverEngine:
    """
    Front door for solving: builds the configuration (defaults -> config file
    -> environment -> overrides) and runs requests through the pipeline.
    """

    def __init__(
        self,
        config: Optional[dict] = None,
        config_file: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
    ):
        """Initialize the solver engine"""
        self.config = ConfigurationManager()
        if config_file:
            self.config.load_config(config_file)
        self.config.apply_environment(environ)
        if config:
            self.config.update(config)

        self.logger = logging.getLogger(__name__)
        self._configure_logging()

        self.pipeline = SolvePipeline(self.config.config)

    def _configure_logging(self):
        """Configure logging for the engine; stdout stays machine-readable"""
        level = self.config.get("logging.level", "WARNING")
        logging.basicConfig(
            level=getattr(logging, str(level).upper(), logging.WARNING),
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            handlers=[logging.StreamHandler(sys.stderr)],
        )

    @property
    def output_format(self) -> str:
        return self.config.get("output.format", "json")

    def request_defaults(self) -> Dict[str, Any]:
        """Method, tolerances and verify flag a request falls back to"""
        return {
            "method": self.config.get("solver.method"),
            "tol": self.config.get("solver.tol"),
            "max_iter": self.config.get("solver.max_iter"),
            "verify": self.config.get("verify.oracle"),
        }

    def solve(self, request: SolveRequest) -> Tuple[SolveReport, int]:
        """Solve one request; exit code 3 when the solver failed"""
        self.logger.info(f"Solving {request.describe()} with method {request.method}")
        report = self.pipeline.process_request(request)
        return report, EXIT_OK if report.ok else EXIT_SOLVER

    def run_batch(self, stream: IO[str]) -> Tuple[List[SolveReport], int]:
        """Solve every JSONL line of `stream`; exit code 1 if any line failed"""
        reader = self.pipeline.reader
        reports = self.pipeline.process_batch(reader.read_lines(stream))
        self._print_summary()
        if any(not r.ok for r in reports):
            return reports, EXIT_PARTIAL
        return reports, EXIT_OK

    def demo_divergence(
        self, a: float, x0: float, steps: int
    ) -> Dict[str, Any]:
        """
        The naive real iteration next to the radical iteration for the same a.

        Errors are measured against the real root of x^5 + x + a = 0.
        """
        roots = oracle_roots(QuinticCoefficients.from_problem(Form1Problem(a)))
        real_root = min(roots, key=lambda v: abs(v.imag)).real
        naive = naive_iteration_demo(a, x0, steps, reference=real_root)

        _, trace = solve_form1(
            Form1Problem(a),
            self.config.get("solver.tol"),
            self.config.get("solver.max_iter"),
        )
        radical = trace.against(trace.iterates[-1])
        return {
            "a": a,
            "x0": x0,
            "real_root": real_root,
            "naive": [
                {"n": n, "x": float(v), "abs_err": e}
                for n, (v, e) in enumerate(zip(naive.iterates, naive.abs_errors))
            ],
            "radical": [
                {"n": n, "re": v.real, "im": v.imag, "abs_err": e}
                for n, (v, e) in enumerate(zip(radical.iterates, radical.abs_errors))
            ],
        }

    def verify_bounds(self, include_form1: bool = True) -> Tuple[BoundsSummary, int]:
        summary = verify_bounds(self.config.get("bounds"), include_form1)
        return summary, EXIT_OK if summary.passed else EXIT_SOLVER

    def render_reports(self, reports: List[SolveReport]) -> str:
        """Reports in the configured output format"""
        fmt = self.output_format
        if fmt == "csv":
            return render_csv(reports)
        if fmt == "text":
            return "\n".join(render_text(r) for r in reports)
        return "".join(r.to_json() + "\n" for r in reports)

    def render_demo(self, demo: Dict[str, Any]) -> str:
        if self.output_format != "text":
            return json.dumps(demo) + "\n"
        lines = [
            f"a = {demo['a']}, x0 = {demo['x0']}, real root = {demo['real_root']:.10f}",
            "",
            f"{'n':>3}  {'naive x_n':>10}  {'radical x_n':<34}",
        ]
        naive, radical = demo["naive"], demo["radical"]
        for n in range(max(len(naive), len(radical))):
            left = f"{naive[n]['x']:>10.4f}" if n < len(naive) else " " * 10
            right = ""
            if n < len(radical):
                row = radical[n]
                sign = "-" if row["im"] < 0 else "+"
                right = f"{row['re']:.10f}{sign}{abs(row['im']):.10f}i"
            lines.append(f"{n:>3}  {left}  {right}")
        return "\n".join(lines) + "\n"

    def render_bounds(self, summary: BoundsSummary) -> str:
        if self.output_format == "text":
            return render_bounds_text(summary)
        return json.dumps(summary.to_dict()) + "\n"

    def _print_summary(self):
        """Print processing summary to stderr"""
        stats = self.pipeline.get_stats()
        out = sys.stderr
        print("=" * 60, file=out)
        print("Solve Summary:", file=out)
        print(f"  Total requests: {stats['total_requests']}", file=out)
        print(f"  Successful: {stats['successful']}", file=out)
        print(f"  Failed: {stats['failed']}", file=out)
        print(f"    parse errors: {stats['parse_errors']}", file=out)
        print(f"    solver errors: {stats['solver_errors']}", file=out)
        print("=" * 60, file=out)

    def get_config(self) -> dict:
        """Get current configuration"""
        return self.config.config

    def save_config(self, config_file: str) -> bool:
        """Save current configuration to file"""
        return self.config.save_config(config_file)
