#!/usr/bin/env python3
"""
Empirical check of the proven error bounds over a grid of inputs.

For each Form 3 point (xi, theta) the closed-form value y1 and the iterates
are compared with the oracle root in the sector -theta/4 <= Arg y <= 0; for
each Form 1 point a the same is done for x1 and the x iterates.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .error_handler import MaxIterExceeded
from .solvers.oracle import QuinticCoefficients, oracle_roots, principal_root
from .solvers.radical_solver import (
    CONSTANTS,
    IterationTrace,
    bring_radical_formula,
    contraction_ratios,
    radical_formula,
    solve_form1,
    solve_form3,
)
from .solvers.reductions import (
    THETA_MAX,
    Form1Problem,
    Form3Problem,
    form1_to_form2,
    form2_to_form3,
    form3_root_to_form2_root,
)

logger = logging.getLogger(__name__)

CONTRACTION_FLOOR = 1e-13
CONTRACTION_REL_FLOOR = 1e-12


@dataclass
class BoundCheck:
    """Largest observed value of one error measure against its proven limit"""

    name: str
    limit: float
    observed: float = 0.0
    worst_point: Optional[Dict[str, float]] = None
    samples: int = 0
    note: Optional[str] = None
    soft_limit: Optional[float] = None

    def record(self, value: float, point: Dict[str, float]):
        self.samples += 1
        if value > self.observed or self.worst_point is None:
            self.observed = max(self.observed, value)
            self.worst_point = point

    @property
    def passed(self) -> bool:
        if self.observed < self.limit:
            return True
        return self.soft_limit is not None and self.observed < self.soft_limit

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "observed": self.observed,
            "limit": self.limit,
            "passed": self.passed,
            "samples": self.samples,
            "worst_point": self.worst_point,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class BoundsSummary:
    checks: List[BoundCheck] = field(default_factory=list)
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(c.passed for c in self.checks)

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "failures": self.failures,
        }


def _contraction_floor(root: complex) -> float:
    return max(CONTRACTION_FLOOR, CONTRACTION_REL_FLOOR * abs(root))


def _trace_of(solve, problem) -> IterationTrace:
    try:
        _, trace = solve(problem)
    except MaxIterExceeded as e:
        trace = e.trace
    return trace


def form3_grid(settings: Dict[str, Any]) -> List[Tuple[float, float]]:
    xis = np.logspace(
        settings["xi_min_exp"], settings["xi_max_exp"], settings["xi_points"]
    )
    thetas = np.linspace(0.0, THETA_MAX, settings["theta_points"])
    return [(float(xi), float(theta)) for xi in xis for theta in thetas]


def form1_grid(settings: Dict[str, Any]) -> List[complex]:
    moduli = np.logspace(
        settings["a_min_exp"], settings["a_max_exp"], settings["a_points"]
    )
    n_args = settings["a_arguments"]
    angles = 2 * np.pi * np.arange(n_args) / n_args
    return [complex(m * np.exp(1j * phi)) for m in moduli for phi in angles]


def check_form3_point(
    xi: float,
    theta: float,
    absolute: BoundCheck,
    relative: BoundCheck,
    contraction: BoundCheck,
):
    p = Form3Problem.from_angle(xi, theta)
    y_star = principal_root(oracle_roots(QuinticCoefficients.from_problem(p)), theta)
    point = {"xi": xi, "theta": theta}

    y1 = radical_formula(p)
    absolute.record(abs(y1 - y_star), point)
    relative.record(abs(y1 / y_star - 1), point)

    errors = _trace_of(solve_form3, p).against(y_star).abs_errors
    for ratio in contraction_ratios(errors, _contraction_floor(y_star)):
        contraction.record(ratio, point)


def check_form1_point(
    a: complex,
    absolute: BoundCheck,
    relative: BoundCheck,
    contraction: BoundCheck,
):
    p1 = Form1Problem(a)
    p3 = form2_to_form3(form1_to_form2(p1))
    y_star = principal_root(oracle_roots(QuinticCoefficients.from_problem(p3)), p3.theta)
    x_star = a / form3_root_to_form2_root(y_star, p3)
    point = {"a_re": a.real, "a_im": a.imag}

    x1 = bring_radical_formula(a)
    absolute.record(abs(x1 - x_star), point)
    relative.record(abs(x1 / x_star - 1), point)

    errors = _trace_of(solve_form1, p1).against(x_star).abs_errors
    for ratio in contraction_ratios(errors, _contraction_floor(x_star)):
        contraction.record(ratio, point)


def verify_bounds(settings: Dict[str, Any], include_form1: bool = True) -> BoundsSummary:
    """
    Sweep the grids described by `settings` (the "bounds" config section).

    A point that raises is recorded under `failures` and fails the summary.
    """
    summary = BoundsSummary()
    absolute = BoundCheck("absolute", CONSTANTS.C0)
    relative = BoundCheck("relative", CONSTANTS.C1, soft_limit=CONSTANTS.C1_overview)
    contraction = BoundCheck("contraction", 1 / CONSTANTS.K)
    summary.checks.extend([absolute, relative, contraction])

    grid3 = form3_grid(settings)
    logger.info(f"Checking {len(grid3)} Form 3 points")
    for xi, theta in grid3:
        try:
            check_form3_point(xi, theta, absolute, relative, contraction)
        except Exception as e:
            logger.error(f"xi={xi}, theta={theta}: {type(e).__name__}: {e}")
            summary.failures.append({"xi": xi, "theta": theta, "error": str(e)})

    if relative.limit <= relative.observed < relative.soft_limit:
        relative.note = (
            f"observed {relative.observed:.4e} exceeds {relative.limit} "
            f"but stays under {relative.soft_limit}"
        )
        logger.warning(f"Relative bound discrepancy: {relative.note}")

    if include_form1:
        f_absolute = BoundCheck("form1_absolute", CONSTANTS.C2)
        f_relative = BoundCheck("form1_relative", CONSTANTS.C1prime)
        f_contraction = BoundCheck("form1_contraction", 1 / CONSTANTS.Kprime)
        summary.checks.extend([f_absolute, f_relative, f_contraction])

        grid1 = form1_grid(settings)
        logger.info(f"Checking {len(grid1)} Form 1 points")
        for a in grid1:
            try:
                check_form1_point(a, f_absolute, f_relative, f_contraction)
            except Exception as e:
                logger.error(f"a={a}: {type(e).__name__}: {e}")
                summary.failures.append({"a_re": a.real, "a_im": a.imag, "error": str(e)})

    for c in summary.checks:
        logger.info(f"{c.name}: observed {c.observed:.4e} vs {c.limit:.4e}")
    return summary


def render_bounds_text(summary: BoundsSummary) -> str:
    lines = [f"{'bound':<18} {'observed':>11} {'limit':>11}  result  worst point"]
    for c in summary.checks:
        verdict = "pass" if c.passed else "FAIL"
        point = ", ".join(f"{k}={v:.6g}" for k, v in (c.worst_point or {}).items())
        lines.append(
            f"{c.name:<18} {c.observed:>11.4e} {c.limit:>11.4e}  {verdict:<6}  {point}"
        )
        if c.note:
            lines.append(f"  note: {c.note}")
    for failure in summary.failures:
        lines.append(f"error at {failure}")
    lines.append("all bounds hold" if summary.passed else "bound check FAILED")
    return "\n".join(lines) + "\n"
