#!/usr/bin/env python3
"""
Iteration of radicals: one root with its trace and the closed-form value
"""

from typing import Tuple

from ..report import SolveReport, SolveRequest, TraceRow
from ..solvers.bring_jerrard import bring_jerrard_radical
from ..solvers.radical_solver import (
    IterationTrace,
    RootEstimate,
    bring_radical_formula,
    radical_formula,
    relative_error,
    solve_form1,
    solve_form2,
    solve_form3,
)
from ..solvers.reductions import (
    BringJerrardProblem,
    Form1Problem,
    Form2Problem,
    form2_to_form3,
    form3_root_to_form2_root,
)
from .base_method import (
    BaseSolveMethod,
    Problem,
    build_problem,
    entry_from_estimate,
    reduction_summary,
    trace_rows,
)


def iterate(
    problem: Problem, tol: float, max_iter: int
) -> Tuple[RootEstimate, IterationTrace, complex]:
    """Estimate, trace and closed-form value in the problem's own variable"""
    if isinstance(problem, BringJerrardProblem):
        return bring_jerrard_radical(problem, tol, max_iter)
    if isinstance(problem, Form1Problem):
        estimate, trace = solve_form1(problem, tol, max_iter)
        return estimate, trace, bring_radical_formula(problem.a)
    if isinstance(problem, Form2Problem):
        estimate, trace = solve_form2(problem, tol, max_iter)
        p3 = form2_to_form3(problem)
        return estimate, trace, form3_root_to_form2_root(radical_formula(p3), p3)
    estimate, trace = solve_form3(problem, tol, max_iter)
    return estimate, trace, radical_formula(problem)


class RadicalMethod(BaseSolveMethod):
    """Solves for the root in the I_0 sector by iterating G"""

    name = "radical"

    def solve(self, request: SolveRequest) -> SolveReport:
        problem = build_problem(request)
        estimate, trace, formula = iterate(problem, request.tol, request.max_iter)
        self.logger.debug(
            f"{request.describe()}: {estimate.iterations} iterations, "
            f"residual {estimate.residual:.3e}"
        )

        reference = self._reference(problem, estimate.value, request)
        measured = trace.against(reference)
        formula_err = abs(formula - reference)
        formula_rel = relative_error(formula, reference)
        formula_row = TraceRow(1, formula, formula_err, formula_rel)

        oracle = None
        if request.verify:
            oracle = self._compare_with_oracle(problem, single_roots=[estimate.value])

        return SolveReport(
            request=request,
            roots=[entry_from_estimate(estimate)],
            formula_root=formula_row,
            trace=trace_rows(measured),
            reduced=reduction_summary(problem),
            oracle=oracle,
        )
