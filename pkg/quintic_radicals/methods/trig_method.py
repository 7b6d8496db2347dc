#!/usr/bin/env python3
"""
Angular bisection: all five roots of the requested equation
"""

from dataclasses import replace

from ..report import SolveReport, SolveRequest
from ..solvers.bring_jerrard import bring_jerrard_all_roots
from ..solvers.reductions import (
    BringJerrardProblem,
    Form1Problem,
    Form2Problem,
    form2_to_form3,
    form3_root_to_form2_root,
)
from ..solvers.trig_solver import RootSet, all_roots_form1, all_roots_form3
from .base_method import (
    BaseSolveMethod,
    Problem,
    build_problem,
    entry_from_record,
    reduction_summary,
)


def all_roots(problem: Problem, tol: float, tol_sigma: float) -> RootSet:
    """The five roots in the problem's own variable"""
    if isinstance(problem, BringJerrardProblem):
        return bring_jerrard_all_roots(problem, tol, tol_sigma)
    if isinstance(problem, Form1Problem):
        return all_roots_form1(problem, tol, tol_sigma)
    if isinstance(problem, Form2Problem):
        p3 = form2_to_form3(problem)
        records = []
        for rec in all_roots_form3(p3, tol, tol_sigma):
            z = form3_root_to_form2_root(rec.value, p3)
            records.append(
                replace(rec, value=z, residual=problem.residual(z), preimage=rec.value)
            )
        return RootSet(tuple(records))
    return all_roots_form3(problem, tol, tol_sigma)


class TrigMethod(BaseSolveMethod):
    """Finds every root from the argument intervals I_k"""

    name = "trig"

    def solve(self, request: SolveRequest) -> SolveReport:
        problem = build_problem(request)
        roots = all_roots(problem, self.trig_tol, self.sigma_tol)
        self.logger.debug(
            f"{request.describe()}: max residual {roots.max_residual:.3e}"
        )

        oracle = None
        if request.verify:
            oracle = self._compare_with_oracle(problem, all_roots=roots.values())

        return SolveReport(
            request=request,
            roots=[entry_from_record(rec) for rec in roots],
            reduced=reduction_summary(problem),
            oracle=oracle,
        )
