"""
Transformations between the equation forms.

    Bring-Jerrard   v^5 + d1 v + d0 = 0
    Form 1          x^5 + x + a = 0              x = v / scale
    Form 2          (z^5 + z^4) / 2 = lam        z = a / x,  lam = -a^4 / 2
    Form 3          (y^5 + u y^4) / 2 = xi       y = u z,    xi = |lam|

Form 3 is normalised to 0 <= theta <= pi/5 by conjugation; the `conjugated`
flag records it so roots can be mapped back into the original frame.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Tuple, Union

from ..error_handler import DegenerateInput, OutOfRange, ResidualTooLarge
from .complex_branch import branch_nth_root

logger = logging.getLogger(__name__)

THETA_MAX = math.pi / 5
THETA_SEAM_TOL = 1e-14
BACKMAP_RESIDUAL_TOL = 1e-10


def is_seam(theta: float) -> bool:
    """theta is (numerically) pi/5, i.e. lam is a negative real"""
    return abs(theta - THETA_MAX) < THETA_SEAM_TOL


def is_real_axis(theta: float) -> bool:
    """theta is (numerically) 0, i.e. lam is a positive real"""
    return abs(theta) < THETA_SEAM_TOL


@dataclass(frozen=True)
class BringJerrardProblem:
    """v^5 + d1 v + d0 = 0"""

    d1: complex
    d0: complex

    def __post_init__(self):
        if not (cmath.isfinite(complex(self.d1)) and cmath.isfinite(complex(self.d0))):
            raise OutOfRange(f"d1 and d0 must be finite, got {self.d1}, {self.d0}")

    def residual(self, v: complex) -> float:
        """|v^5 + d1 v + d0| relative to the largest term"""
        scale = max(1.0, abs(v) ** 5, abs(self.d1 * v), abs(self.d0))
        return abs(v**5 + self.d1 * v + self.d0) / scale

    def coefficients(self) -> Tuple[complex, ...]:
        """Constant-to-leading coefficients"""
        return (complex(self.d0), complex(self.d1), 0j, 0j, 0j, 1 + 0j)


@dataclass(frozen=True)
class Form1Problem:
    """x^5 + x + a = 0 with a != 0"""

    a: complex

    def __post_init__(self):
        if complex(self.a) == 0:
            raise DegenerateInput("a must be nonzero")
        if not cmath.isfinite(complex(self.a)):
            raise OutOfRange(f"a must be finite, got {self.a}")

    def residual(self, x: complex) -> float:
        """|x^5 + x + a| relative to max(1, |x|^5)"""
        return abs(x**5 + x + self.a) / max(1.0, abs(x) ** 5)

    def coefficients(self) -> Tuple[complex, ...]:
        return (complex(self.a), 1 + 0j, 0j, 0j, 0j, 1 + 0j)


@dataclass(frozen=True)
class Form2Problem:
    """(z^5 + z^4) / 2 = lam with lam != 0"""

    lam: complex

    def __post_init__(self):
        if complex(self.lam) == 0:
            raise DegenerateInput("lambda must be nonzero")
        if not cmath.isfinite(complex(self.lam)):
            raise OutOfRange(f"lambda must be finite, got {self.lam}")

    def residual(self, z: complex) -> float:
        """|(z^5 + z^4)/2 - lam| relative to max(1, |lam|)"""
        return abs((z**5 + z**4) / 2 - self.lam) / max(1.0, abs(self.lam))

    def coefficients(self) -> Tuple[complex, ...]:
        return (-2 * complex(self.lam), 0j, 0j, 0j, 1 + 0j, 1 + 0j)


@dataclass(frozen=True)
class Form3Problem:
    """
    (y^5 + u y^4) / 2 = xi with xi > 0 and u = exp(i theta), 0 <= theta <= pi/5.

    `conjugated` is True when the problem is the complex conjugate of the
    rotation of the original Form 2 equation.
    """

    xi: float
    theta: float
    u: complex
    conjugated: bool = False

    def __post_init__(self):
        if not (self.xi > 0 and math.isfinite(self.xi)):
            raise OutOfRange(f"xi must be a positive finite real, got {self.xi}")
        if not (-THETA_SEAM_TOL < self.theta < THETA_MAX + THETA_SEAM_TOL):
            raise OutOfRange(f"theta must lie in [0, pi/5], got {self.theta}")
        if abs(self.u * cmath.exp(-1j * self.theta) - 1) > 1e-13:
            raise DegenerateInput(f"u={self.u} is not exp(i*{self.theta})")

    @classmethod
    def from_angle(cls, xi: float, theta: float, conjugated: bool = False):
        """Build the problem from xi and theta, with u = exp(i theta)"""
        return cls(float(xi), float(theta), cmath.rect(1.0, theta), conjugated)

    @property
    def frames_coincide(self) -> bool:
        """
        True when a root of this problem is directly a root of the rotated
        original equation.

        Off the seam, a conjugated problem has u^5 = conj(|lam|/lam) and its
        roots must be conjugated back. On the seam u^5 = -1 is real, so
        exp(i pi/5) is itself a valid rotation and no conjugation is needed.
        """
        return not self.conjugated or is_seam(self.theta)

    def q(self, y: complex) -> complex:
        """y^5 + u y^4 - 2 xi"""
        return y**4 * (y + self.u) - 2 * self.xi

    def residual(self, y: complex) -> float:
        """|(y^5 + u y^4)/2 - xi| relative to max(1, xi)"""
        return abs(self.q(y) / 2) / max(1.0, self.xi)

    def coefficients(self) -> Tuple[complex, ...]:
        return (-2 * self.xi + 0j, 0j, 0j, 0j, complex(self.u), 1 + 0j)


@dataclass(frozen=True)
class SpecialCaseRoots:
    """Roots of a Bring-Jerrard problem with d1 = 0 or d0 = 0"""

    roots: Tuple[complex, ...]
    reason: str


def _roots_of_unity_times(base: complex, n: int) -> Tuple[complex, ...]:
    return tuple(base * cmath.rect(1.0, 2 * math.pi * j / n) for j in range(n))


def bring_jerrard_to_form1(
    p: BringJerrardProblem,
) -> Union[Tuple[Form1Problem, complex], SpecialCaseRoots]:
    """
    Reduce v^5 + d1 v + d0 = 0 to Form 1.

    Returns (Form1Problem, scale) with v = scale * x, or the roots themselves
    when d1 = 0 or d0 = 0.
    """
    d1, d0 = complex(p.d1), complex(p.d0)

    if d1 == 0 and d0 == 0:
        return SpecialCaseRoots((0j,) * 5, "d1 = d0 = 0")
    if d1 == 0:
        base = branch_nth_root(-d0, 5)
        return SpecialCaseRoots(_roots_of_unity_times(base, 5), "d1 = 0")
    if d0 == 0:
        base = branch_nth_root(-d1, 4)
        return SpecialCaseRoots((0j,) + _roots_of_unity_times(base, 4), "d0 = 0")

    c = branch_nth_root(d1**5, 4)
    # scale^4 = d1 and scale^5 = c, so scale agrees with the branch root of
    # d1 whenever the two radicals are consistent
    scale = c / d1
    a = d0 / c
    logger.debug(f"Bring-Jerrard reduced: a={a}, scale={scale}")
    return Form1Problem(a), scale


def form1_to_form2(p: Form1Problem) -> Form2Problem:
    """lam = -a^4 / 2"""
    return Form2Problem(-(complex(p.a) ** 4) / 2)


def form2_to_form3(p: Form2Problem) -> Form3Problem:
    """Rotate by u = (|lam|/lam)^(1/5) and conjugate if theta < 0"""
    lam = complex(p.lam)
    xi = abs(lam)
    u0 = branch_nth_root(xi / lam, 5)
    theta0 = cmath.phase(u0)

    if is_real_axis(theta0):
        return Form3Problem(xi, 0.0, 1 + 0j, False)
    if theta0 > 0:
        return Form3Problem(xi, theta0, u0, False)

    theta = -theta0
    if is_seam(theta):
        theta = THETA_MAX
    return Form3Problem(xi, theta, u0.conjugate(), True)


def form3_root_to_form2_root(y: complex, p3: Form3Problem) -> complex:
    """z = y/u in the original frame"""
    if p3.frames_coincide:
        return y / p3.u
    return y.conjugate() / p3.u.conjugate()


def form2_root_to_form3_root(z: complex, p3: Form3Problem) -> complex:
    """Inverse of form3_root_to_form2_root"""
    if p3.frames_coincide:
        return z * p3.u
    return (z * p3.u.conjugate()).conjugate()


def form3_root_to_form1_root(
    y: complex,
    p3: Form3Problem,
    p1: Form1Problem,
    tol: float = BACKMAP_RESIDUAL_TOL,
) -> complex:
    """
    Map a root of the Form 3 problem to a root of x^5 + x + a = 0.

    x = a u / y when the frames coincide, a conj(u) / conj(y) otherwise.
    The result is residual-checked.
    """
    if y == 0:
        raise DegenerateInput("0 is never a root of Form 3")
    x = complex(p1.a) / form3_root_to_form2_root(complex(y), p3)
    residual = p1.residual(x)
    if residual >= tol:
        raise ResidualTooLarge(
            f"Back-mapped root {x} has residual {residual:.3e} >= {tol:.1e}",
            value=x,
            residual=residual,
        )
    return x
