"""
Iteration of radicals for the trinomial quintic.

Form 3, (y^5 + u y^4)/2 = xi, is rewritten as the fixed point y = G(xi, y):

    t       = (2 xi / (u + y))^(1/4)
    G(xi,y) = (2 xi + 2u^2/5 t^3 + 2u^3/25 t^2 + u^4/125 t + u^5/3125)^(1/5) - u/5

started from y0 = (xi / alpha)^(2/9). The first iterate y1 is a closed-form
radical approximation of the root near the positive real axis; further
iterates contract towards it by a factor of at least K per step.
"""

import logging
import math
import sys
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Sequence, Tuple

from ..error_handler import DegenerateInput, MaxIterExceeded, OutOfRange
from .complex_branch import branch_nth_root, rational_power
from .reductions import (
    Form1Problem,
    Form2Problem,
    Form3Problem,
    form1_to_form2,
    form2_to_form3,
    form3_root_to_form1_root,
    form3_root_to_form2_root,
)

logger = logging.getLogger(__name__)

XI_MAX = 1e300
MIN_TOL = 1e-15
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 25


@dataclass(frozen=True)
class AlgorithmConstants:
    """Proven constants of the iteration (all dimensionless)"""

    alpha: float = math.sqrt((2 + math.sqrt(2)) / 4)
    C0: float = 4.32e-3
    C1: float = 2.51e-2
    C1prime: float = 2.57e-2
    C2: float = 2.90e-2
    K: float = 15.44
    Kprime: float = 14.68
    # relative bound as quoted in the algorithm overview; C1 is the proven one
    C1_overview: float = 2.58e-2

    def describe(self) -> dict:
        """Human-readable meaning of each constant"""
        return {
            "alpha": "cos(pi/8); scales the starting point y0 = (xi/alpha)^(2/9)",
            "C0": "|y1 - y*| < C0 for every xi > 0, 0 <= theta <= pi/5",
            "C1": "|y1/y* - 1| < C1 on the same domain",
            "C1prime": "|x1/x* - 1| < C1' for x^5 + x + a = 0",
            "C2": "|x1 - x*| < C2 for x^5 + x + a = 0",
            "K": "|y_{k+1} - y*| < |y_k - y*| / K for k >= 1",
            "Kprime": "|x_{k+1} - x*| < |x_k - x*| / K' for k >= 1",
        }


CONSTANTS = AlgorithmConstants()


def relative_error(value: complex, reference: complex) -> float:
    """|value - reference| / |reference|, taken as 0 when both vanish"""
    error = abs(value - reference)
    if reference == 0:
        return 0.0 if error == 0 else math.inf
    return error / abs(reference)


@dataclass(frozen=True)
class RootEstimate:
    """
    A root estimate with its scale-relative residual and the a-priori bound
    on its distance to the exact root.
    """

    value: complex
    residual: float
    iterations: int
    certified_abs_bound: float
    converged: bool = True


@dataclass(frozen=True)
class IterationTrace:
    """Ordered iterates, optionally with errors against a reference root"""

    iterates: List[complex]
    reference: Optional[complex] = None
    abs_errors: List[float] = field(default_factory=list)
    rel_errors: List[float] = field(default_factory=list)

    def __post_init__(self):
        if self.reference is None:
            if self.abs_errors or self.rel_errors:
                raise ValueError("Errors given without a reference root")
        elif not (len(self.abs_errors) == len(self.rel_errors) == len(self.iterates)):
            raise ValueError("Error lists must match the iterates")

    def against(self, reference: complex) -> "IterationTrace":
        """Copy of this trace with errors measured against `reference`"""
        abs_errors = [abs(v - reference) for v in self.iterates]
        rel_errors = [relative_error(v, reference) for v in self.iterates]
        return IterationTrace(list(self.iterates), reference, abs_errors, rel_errors)

    def mapped(self, fn: Callable[[complex], complex]) -> "IterationTrace":
        """Apply a change of variable to every iterate (errors are dropped)"""
        return IterationTrace([fn(v) for v in self.iterates])

    def __len__(self) -> int:
        return len(self.iterates)


def certified_bound(iterations: int, scale: float, c: float, k: float) -> float:
    """c / k^(iterations - 1), floored at machine precision relative to scale"""
    floor = sys.float_info.epsilon * max(1.0, scale)
    if iterations < 1:
        return math.inf
    return max(c / k ** (iterations - 1), floor)


def _check_xi(xi: float):
    if not 0 < xi <= XI_MAX:
        raise OutOfRange(f"xi must lie in (0, {XI_MAX:g}], got {xi}")


def _check_controls(tol: float, max_iter: int):
    if not tol >= MIN_TOL:
        raise OutOfRange(f"tol must be >= {MIN_TOL:g}, got {tol}")
    if max_iter < 1:
        raise OutOfRange(f"max_iter must be >= 1, got {max_iter}")


def starting_point(xi: float) -> float:
    """y0 = (xi / alpha)^(2/9)"""
    _check_xi(xi)
    return rational_power(xi / CONSTANTS.alpha, 2, 9).real


def g_map(p: Form3Problem, y: complex) -> complex:
    """One application of G(xi, y)"""
    u = p.u
    w = u + y
    if w == 0:
        raise DegenerateInput("u + y = 0: G is undefined")
    two_xi = 2 * p.xi
    t = branch_nth_root(two_xi / w, 4)
    radicand = (
        two_xi
        + (2 * u**2 / 5) * t**3
        + (2 * u**3 / 25) * t**2
        + (u**4 / 125) * t
        + u**5 / 3125
    )
    return branch_nth_root(radicand, 5) - u / 5


def radical_formula(p: Form3Problem) -> complex:
    """The closed-form approximation y1 = G(xi, y0)"""
    return g_map(p, complex(starting_point(p.xi)))


def solve_form3(
    p: Form3Problem, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Tuple[RootEstimate, IterationTrace]:
    """
    Iterate y_{k+1} = G(xi, y_k) until |y_{k+1} - y_k| <= tol * max(1, |y_{k+1}|).

    Raises:
        MaxIterExceeded: max_iter steps were taken without meeting tol; the
            exception carries the last estimate and the trace.
    """
    _check_controls(tol, max_iter)
    _check_xi(p.xi)

    y = complex(starting_point(p.xi))
    iterates = [y]
    converged = False
    k = 0
    while k < max_iter:
        k += 1
        y_next = g_map(p, y)
        iterates.append(y_next)
        step = abs(y_next - y)
        y = y_next
        logger.debug(f"iteration {k}: y={y} step={step:.3e}")
        if step <= tol * max(1.0, abs(y)):
            converged = True
            break

    trace = IterationTrace(iterates)
    estimate = RootEstimate(
        value=y,
        residual=p.residual(y),
        iterations=k,
        certified_abs_bound=certified_bound(k, abs(y), CONSTANTS.C0, CONSTANTS.K),
        converged=converged,
    )
    if not converged:
        raise MaxIterExceeded(
            f"No convergence to tol={tol:g} within {max_iter} iterations",
            estimate=estimate,
            trace=trace,
        )
    return estimate, trace


def _solve_mapped(
    p3: Form3Problem,
    tol: float,
    max_iter: int,
    to_frame: Callable[[complex], complex],
    finish: Callable[[RootEstimate], RootEstimate],
) -> Tuple[RootEstimate, IterationTrace]:
    """Run solve_form3 and express estimate and trace in another frame"""
    try:
        estimate3, trace3 = solve_form3(p3, tol, max_iter)
    except MaxIterExceeded as e:
        raise MaxIterExceeded(
            str(e), estimate=finish(e.estimate), trace=e.trace.mapped(to_frame)
        ) from e
    return finish(estimate3), trace3.mapped(to_frame)


def solve_form2(
    p: Form2Problem, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Tuple[RootEstimate, IterationTrace]:
    """Solve (z^5 + z^4)/2 = lam through its Form 3 rotation"""
    p3 = form2_to_form3(p)

    def to_z(y: complex) -> complex:
        return form3_root_to_form2_root(y, p3)

    def finish(estimate: RootEstimate) -> RootEstimate:
        z = to_z(estimate.value)
        return replace(estimate, value=z, residual=p.residual(z))

    return _solve_mapped(p3, tol, max_iter, to_z, finish)


def solve_form1(
    p: Form1Problem, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> Tuple[RootEstimate, IterationTrace]:
    """Solve x^5 + x + a = 0 with x_k = a / z_k"""
    p3 = form2_to_form3(form1_to_form2(p))
    a = complex(p.a)

    def to_x(y: complex) -> complex:
        return a / form3_root_to_form2_root(y, p3)

    def finish(estimate: RootEstimate) -> RootEstimate:
        if estimate.converged:
            x = form3_root_to_form1_root(estimate.value, p3, p)
        else:
            x = to_x(estimate.value)
        return replace(
            estimate,
            value=x,
            residual=p.residual(x),
            certified_abs_bound=certified_bound(
                estimate.iterations, abs(x), CONSTANTS.C2, CONSTANTS.Kprime
            ),
        )

    return _solve_mapped(p3, tol, max_iter, to_x, finish)


def bring_radical(
    a: complex, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> RootEstimate:
    """A root of x^5 + x + a = 0 (the Bring radical of a)"""
    if complex(a) == 0:
        return RootEstimate(0j, 0.0, 0, 0.0)
    estimate, _ = solve_form1(Form1Problem(complex(a)), tol, max_iter)
    return estimate


def bring_radical_formula(a: complex) -> complex:
    """Closed-form approximation x1 of the Bring radical, |x1 - x*| < C2"""
    a = complex(a)
    if a == 0:
        return 0j
    p3 = form2_to_form3(form1_to_form2(Form1Problem(a)))
    return a / form3_root_to_form2_root(radical_formula(p3), p3)


def naive_iteration_demo(
    a: float, x0: float, steps: int, reference: Optional[float] = None
) -> IterationTrace:
    """
    The real iteration x_{k+1} = -(a + x_k)^(1/5) using the odd real fifth root.

    This map expands errors near the real root of x^5 + x + a = 0, so the
    sequence does not converge.
    """
    if steps < 1:
        raise OutOfRange(f"steps must be >= 1, got {steps}")
    x = float(x0)
    iterates: List[complex] = [x]
    for _ in range(steps):
        s = a + x
        x = -math.copysign(abs(s) ** 0.2, s)
        iterates.append(x)
    trace = IterationTrace(iterates)
    if reference is not None:
        return trace.against(reference)
    return trace


def contraction_ratios(errors: Sequence[float], floor: float) -> List[float]:
    """|e_{k+1}| / |e_k| for k >= 1 while |e_k| stays above `floor`"""
    return [
        errors[k + 1] / errors[k]
        for k in range(1, len(errors) - 1)
        if errors[k] > floor
    ]
