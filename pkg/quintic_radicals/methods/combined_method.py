#!/usr/bin/env python3
"""
Both methods at once: the five bisection roots plus the iteration trace
"""

from dataclasses import replace

from ..report import SolveReport, SolveRequest
from .base_method import BaseSolveMethod, build_problem
from .radical_method import RadicalMethod
from .trig_method import TrigMethod


class CombinedMethod(BaseSolveMethod):
    """Runs the angular bisection and the iteration on the same request"""

    name = "both"

    def __init__(self, config: dict):
        super().__init__(config)
        self.radical = RadicalMethod(config)
        self.trig = TrigMethod(config)

    def solve(self, request: SolveRequest) -> SolveReport:
        # the trace is measured against the oracle when verifying; the root
        # sets are compared with it once below
        trig_report = self.trig.solve(replace(request, verify=False))
        radical_report = self.radical.solve(request)

        oracle = None
        if request.verify:
            problem = build_problem(request)
            oracle = self._compare_with_oracle(
                problem,
                all_roots=[entry.value for entry in trig_report.roots],
                single_roots=[entry.value for entry in radical_report.roots],
            )

        return SolveReport(
            request=request,
            roots=trig_report.roots + radical_report.roots,
            formula_root=radical_report.formula_root,
            trace=radical_report.trace,
            reduced=trig_report.reduced,
            oracle=oracle,
        )
