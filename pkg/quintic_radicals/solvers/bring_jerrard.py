"""
Solving v^5 + d1 v + d0 = 0 through the Bring radical.
"""

import cmath
import logging
from dataclasses import replace
from typing import Tuple

from .radical_solver import (
    CONSTANTS,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    IterationTrace,
    RootEstimate,
    bring_radical_formula,
    certified_bound,
    solve_form1,
)
from .reductions import BringJerrardProblem, SpecialCaseRoots, bring_jerrard_to_form1
from .trig_solver import DEFAULT_TOL as TRIG_TOL
from .trig_solver import SIGMA_TOL, RootRecord, RootSet, all_roots_form1

logger = logging.getLogger(__name__)


def _closed_form_set(p: BringJerrardProblem, special: SpecialCaseRoots) -> RootSet:
    records = [
        RootRecord(v, k, cmath.phase(v), abs(v), p.residual(v), "closed_form")
        for k, v in zip(range(-2, 3), special.roots)
    ]
    return RootSet(tuple(records))


def bring_jerrard_radical(
    p: BringJerrardProblem, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Tuple[RootEstimate, IterationTrace, complex]:
    """
    One root v = scale * x of the Bring-Jerrard quintic by iteration.

    Returns the estimate, the trace of v_k and the closed-form value v1.
    When d1 = 0 or d0 = 0 the root is returned directly with no iterations.
    """
    reduced = bring_jerrard_to_form1(p)
    if isinstance(reduced, SpecialCaseRoots):
        logger.info(f"Bring-Jerrard special case: {reduced.reason}")
        v = reduced.roots[0]
        estimate = RootEstimate(v, p.residual(v), 0, 0.0)
        return estimate, IterationTrace([v]), v

    p1, scale = reduced
    estimate, trace = solve_form1(p1, tol, max_iter)
    x = estimate.value
    v = scale * x
    bound = certified_bound(estimate.iterations, abs(x), CONSTANTS.C2, CONSTANTS.Kprime)
    estimate = replace(
        estimate,
        value=v,
        residual=p.residual(v),
        certified_abs_bound=abs(scale) * bound,
    )
    v1 = scale * bring_radical_formula(p1.a)
    return estimate, trace.mapped(lambda x_k: scale * x_k), v1


def bring_jerrard_all_roots(
    p: BringJerrardProblem, tol: float = TRIG_TOL, tol_sigma: float = SIGMA_TOL
) -> RootSet:
    """All five roots, from the angular bisection of the Form 1 equation"""
    reduced = bring_jerrard_to_form1(p)
    if isinstance(reduced, SpecialCaseRoots):
        return _closed_form_set(p, reduced)

    p1, scale = reduced
    records = []
    for rec in all_roots_form1(p1, tol, tol_sigma):
        v = scale * rec.value
        records.append(replace(rec, value=v, residual=p.residual(v)))
    return RootSet(tuple(records))
