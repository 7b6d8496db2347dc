"""
Reference roots for degree-5 polynomials.

Weierstrass / Durand-Kerner simultaneous iteration followed by Newton
polishing, plus helpers to compare root sets. Nothing here depends on the
radical or trigonometric solvers so it can be used to check them.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..error_handler import NoConvergence

logger = logging.getLogger(__name__)

DEGREE = 5
MAX_SWEEPS = 500
SWEEP_TOL = 1e-14
POLISH_STEPS = 3
START_OFFSET = 0.4


@dataclass(frozen=True)
class QuinticCoefficients:
    """c0 + c1 x + ... + c5 x^5 with c5 != 0"""

    c: Tuple[complex, ...]

    def __post_init__(self):
        if len(self.c) != DEGREE + 1:
            raise ValueError(f"Expected {DEGREE + 1} coefficients, got {len(self.c)}")
        if self.c[-1] == 0:
            raise ValueError("Leading coefficient c5 must be nonzero")

    @classmethod
    def from_problem(cls, problem) -> "QuinticCoefficients":
        """Coefficients of any problem exposing coefficients()"""
        return cls(tuple(complex(c) for c in problem.coefficients()))

    def descending(self) -> np.ndarray:
        """Leading-first array as numpy.polyval expects"""
        return np.array(self.c[::-1], dtype=np.complex128)

    def __call__(self, x):
        return np.polyval(self.descending(), x)

    def residual(self, x: complex) -> float:
        """|p(x)| relative to the largest term magnitude at x"""
        scale = max(abs(c) * abs(x) ** k for k, c in enumerate(self.c))
        return abs(self(x)) / max(scale, np.finfo(float).tiny)


def _initial_guesses(q: QuinticCoefficients) -> np.ndarray:
    c = np.array(q.c, dtype=np.complex128)
    radius = 1.0 + np.max(np.abs(c[:-1] / c[-1]))
    angles = 2 * np.pi * np.arange(DEGREE) / DEGREE + START_OFFSET
    return radius * np.exp(1j * angles)


def oracle_roots(q: QuinticCoefficients) -> List[complex]:
    """
    The five roots of q, sorted by (re, im).

    Raises:
        NoConvergence: the simultaneous iteration did not settle in 500 sweeps
    """
    coeffs = q.descending() / q.c[-1]
    z = _initial_guesses(q)
    eye = np.eye(DEGREE, dtype=bool)

    for sweep in range(1, MAX_SWEEPS + 1):
        diffs = z[:, None] - z[None, :]
        diffs[eye] = 1.0
        delta = np.polyval(coeffs, z) / np.prod(diffs, axis=1)
        z = z - delta
        scale = max(1.0, float(np.max(np.abs(z))))
        if np.max(np.abs(delta)) < SWEEP_TOL * scale:
            break
    else:
        raise NoConvergence(f"Durand-Kerner did not converge in {MAX_SWEEPS} sweeps")
    logger.debug(f"oracle converged after {sweep} sweeps")

    derivative = np.polyder(coeffs)
    for _ in range(POLISH_STEPS):
        dp = np.polyval(derivative, z)
        safe = dp != 0
        z = np.where(safe, z - np.polyval(coeffs, z) / np.where(safe, dp, 1.0), z)

    return sorted((complex(v) for v in z), key=lambda v: (v.real, v.imag))


def nearest_root(target: complex, roots: Sequence[complex]) -> Tuple[complex, float]:
    """The root closest to target and its distance (ties go to the lowest (re, im))"""
    ordered = sorted(roots, key=lambda v: (v.real, v.imag))
    distances = [abs(target - v) for v in ordered]
    i = int(np.argmin(distances))
    return ordered[i], distances[i]


@dataclass(frozen=True)
class VietaReport:
    """Per-identity outcome of comparing e_k(roots) with (-1)^k c_{5-k}/c5"""

    passed: Dict[str, bool]
    deviations: Dict[str, float]

    @property
    def all_passed(self) -> bool:
        return all(self.passed.values())


def vieta_check(
    q: QuinticCoefficients, roots: Sequence[complex], tol: float = 1e-10
) -> VietaReport:
    """
    Check the elementary symmetric functions of `roots` against q.

    Each identity e_k passes when its deviation is at most tol * max(1, |target|).
    """
    if len(roots) != DEGREE:
        raise ValueError(f"Expected {DEGREE} roots, got {len(roots)}")
    # numpy.poly gives [1, -e1, e2, -e3, e4, -e5]
    from_roots = np.poly(np.array(roots, dtype=np.complex128))
    monic = q.descending() / q.c[-1]
    passed, deviations = {}, {}
    for k in range(1, DEGREE + 1):
        deviation = abs(from_roots[k] - monic[k])
        name = f"e{k}"
        deviations[name] = float(deviation)
        passed[name] = bool(deviation <= tol * max(1.0, abs(monic[k])))
    return VietaReport(passed, deviations)


def match_multisets(
    found: Sequence[complex], expected: Sequence[complex]
) -> Tuple[List[Tuple[complex, complex]], float]:
    """
    Pair two root lists greedily by smallest distance.

    Returns the pairs (found, expected) and the largest paired distance.
    """
    if len(found) != len(expected):
        raise ValueError("Root lists differ in length")
    left = list(found)
    right = list(expected)
    candidates = sorted(
        (abs(f - e), i, j) for i, f in enumerate(left) for j, e in enumerate(right)
    )
    used_i, used_j = set(), set()
    pairs, worst = [], 0.0
    for distance, i, j in candidates:
        if i in used_i or j in used_j:
            continue
        used_i.add(i)
        used_j.add(j)
        pairs.append((left[i], right[j]))
        worst = max(worst, distance)
    return pairs, worst


def principal_root(roots: Sequence[complex], theta: float, slack: float = 1e-9) -> complex:
    """
    The Form 3 root whose argument lies in [-theta/4, 0].

    Raises:
        NoConvergence: no root falls in that sector
    """
    lo, hi = -theta / 4 - slack, slack
    inside = [v for v in roots if lo <= math.atan2(v.imag, v.real) <= hi]
    if not inside:
        raise NoConvergence(f"No reference root with argument in [{-theta / 4}, 0]")
    middle = -theta / 8
    return min(inside, key=lambda v: abs(math.atan2(v.imag, v.real) - middle))
