#!/usr/bin/env python3
"""
Base Method Class for the quintic solve pipeline
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Union

from ..report import RootEntry, SolveReport, SolveRequest, TraceRow, complex_to_json
from ..solvers.oracle import (
    QuinticCoefficients,
    match_multisets,
    nearest_root,
    oracle_roots,
)
from ..solvers.radical_solver import IterationTrace, RootEstimate
from ..solvers.reductions import (
    BringJerrardProblem,
    Form1Problem,
    Form2Problem,
    Form3Problem,
    SpecialCaseRoots,
    bring_jerrard_to_form1,
    form1_to_form2,
    form2_to_form3,
)
from ..solvers.trig_solver import RootRecord

Problem = Union[BringJerrardProblem, Form1Problem, Form2Problem, Form3Problem]


def build_problem(request: SolveRequest) -> Problem:
    """The equation a request describes"""
    c = request.coefficients
    if request.form == "form1":
        return Form1Problem(c["a"])
    if request.form == "form2":
        return Form2Problem(c["lam"])
    if request.form == "form3":
        return Form3Problem.from_angle(c["xi"].real, c["theta"].real)
    return BringJerrardProblem(c["d1"], c["d0"])


def _form3_summary(p3: Form3Problem) -> Dict[str, Any]:
    return {"xi": p3.xi, "theta": p3.theta, "conjugated": p3.conjugated}


def reduction_summary(problem: Problem) -> Dict[str, Any]:
    """xi, theta and the intermediate coefficients the problem reduces through"""
    if isinstance(problem, Form3Problem):
        return _form3_summary(problem)
    if isinstance(problem, Form2Problem):
        return _form3_summary(form2_to_form3(problem))
    if isinstance(problem, Form1Problem):
        p2 = form1_to_form2(problem)
        summary = {"lam": complex_to_json(p2.lam)}
        summary.update(_form3_summary(form2_to_form3(p2)))
        return summary

    reduced = bring_jerrard_to_form1(problem)
    if isinstance(reduced, SpecialCaseRoots):
        return {"special_case": reduced.reason}
    p1, scale = reduced
    summary = {"a": complex_to_json(p1.a), "scale": complex_to_json(scale)}
    summary.update(reduction_summary(p1))
    return summary


def entry_from_estimate(estimate: RootEstimate, method: str = "radical") -> RootEntry:
    """Report entry for an iteration result (the root of the I_0 sector)"""
    return RootEntry(
        value=estimate.value,
        residual=estimate.residual,
        method=method,
        k=0,
        iterations=estimate.iterations,
        certified_bound=estimate.certified_abs_bound,
        via="iteration",
        converged=estimate.converged,
    )


def entry_from_record(record: RootRecord, method: str = "trig") -> RootEntry:
    return RootEntry(
        value=record.value,
        residual=record.residual,
        method=method,
        k=record.k,
        via=record.via,
        preimage=record.preimage,
    )


def trace_rows(trace: IterationTrace) -> List[TraceRow]:
    """Rows of a trace that carries errors against a reference"""
    return [
        TraceRow(n, value, abs_err, rel_err)
        for n, (value, abs_err, rel_err) in enumerate(
            zip(trace.iterates, trace.abs_errors, trace.rel_errors)
        )
    ]


class BaseSolveMethod:
    """Base class for all solve methods"""

    name = ""

    def __init__(self, config: dict):
        self.config = config
        solver_config = config["solver"]
        self.trig_tol = solver_config["trig_tol"]
        self.sigma_tol = solver_config["sigma_tol"]
        self.match_tol = config["verify"]["match_tol"]
        self.logger = logging.getLogger(__name__)

    def can_handle(self, request: SolveRequest) -> bool:
        """Check if this method serves the request"""
        return request.method == self.name

    def solve(self, request: SolveRequest) -> SolveReport:
        """Solve the request"""
        raise NotImplementedError("Subclasses must implement solve()")

    def _oracle_roots(self, problem: Problem) -> List[complex]:
        return oracle_roots(QuinticCoefficients.from_problem(problem))

    def _reference(
        self, problem: Problem, value: complex, request: SolveRequest
    ) -> complex:
        """The root errors are measured against: the oracle's when verifying"""
        if not request.verify:
            return value
        root, _ = nearest_root(value, self._oracle_roots(problem))
        return root

    def _compare_with_oracle(
        self,
        problem: Problem,
        all_roots: Optional[Sequence[complex]] = None,
        single_roots: Sequence[complex] = (),
    ) -> Dict[str, Any]:
        """
        Match a full root set against the oracle's as multisets, and single
        roots against their nearest oracle root.
        """
        reference = self._oracle_roots(problem)
        worst = 0.0
        if all_roots is not None:
            _, worst = match_multisets(list(all_roots), reference)
        for value in single_roots:
            worst = max(worst, nearest_root(value, reference)[1])
        scale = max(1.0, max(abs(v) for v in reference))
        matched = worst <= self.match_tol * scale
        if not matched:
            self.logger.warning(f"Oracle mismatch: max distance {worst:.3e}")
        return {"matched": matched, "max_distance": worst}
