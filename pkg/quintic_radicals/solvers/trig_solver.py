"""
All five roots of (y^5 + u y^4)/2 = xi by bisection on the root argument.

Writing y = r exp(i sigma) and u = exp(i theta), the imaginary part of the
equation gives r = -sin(theta + 4 sigma) / sin(5 sigma) and the real part

    f(sigma) = sin^4(theta + 4 sigma) sin(sigma - theta) / sin^5(5 sigma) = 2 xi

Each root has its argument in one of five disjoint intervals I_k, where f
runs from 0 at one end to +inf at the other. For theta = 0 or pi/5 one
interval collapses and the missing root comes from the sum of the roots.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ..error_handler import (
    BracketFailure,
    OutOfRange,
    PoleEvaluation,
    ResidualTooLarge,
    VietaResidualFailure,
)
from .reductions import (
    THETA_MAX,
    THETA_SEAM_TOL,
    Form1Problem,
    Form3Problem,
    form1_to_form2,
    form2_to_form3,
    form3_root_to_form1_root,
    is_real_axis,
    is_seam,
)

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
SIGMA_TOL = 1e-13
MAX_HALVINGS = 200
MAX_BISECTIONS = 2000
NEWTON_STEPS = 5

# below these |sin(5 sigma)| the direct quotient over/underflows
SENTINEL_SIN = 1e-300
LOG_SIN = 1e-30
LOG_MAX = math.log(1.7976931348623157e308)

# max of y^4 (y + 1) on [-1, 0], reached at y = -4/5
REAL_AXIS_PEAK = 256 / 3125

LO = "lo"
HI = "hi"


@dataclass(frozen=True)
class AngularInterval:
    """
    I_k = [lo, hi[ holding the argument of the k-th root.

    f vanishes at `zero_end` and tends to +inf at `singular_end`.
    """

    k: int
    lo: float
    hi: float
    zero_end: str
    singular_end: str

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"Empty interval I_{self.k}: [{self.lo}, {self.hi}[")
        if {self.zero_end, self.singular_end} != {LO, HI}:
            raise ValueError("zero_end and singular_end must be 'lo' and 'hi'")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def singular_value(self) -> float:
        return self.hi if self.singular_end == HI else self.lo

    @property
    def zero_value(self) -> float:
        return self.hi if self.zero_end == HI else self.lo

    @property
    def direction(self) -> int:
        """+1 when sigma grows moving away from the singular end"""
        return 1 if self.singular_end == LO else -1

    def sigma_at(self, t: float) -> float:
        """The angle at distance t from the singular end"""
        return self.singular_value + self.direction * t

    def contains(self, sigma: float) -> bool:
        return self.lo <= sigma < self.hi


@dataclass(frozen=True)
class RootRecord:
    """
    One root with the angle and modulus it was recovered from.

    `via` is "bisection", "real_axis" or "vieta". `preimage` holds the Form 3
    root a Form 1 root was mapped from.
    """

    value: complex
    k: int
    sigma: float
    r: float
    residual: float
    via: str
    preimage: Optional[complex] = None


@dataclass(frozen=True)
class RootSet:
    """The five roots of one equation, ordered by k"""

    roots: Tuple[RootRecord, ...]

    def __post_init__(self):
        if len(self.roots) != 5:
            raise ValueError(f"Expected 5 roots, got {len(self.roots)}")
        if len({rec.k for rec in self.roots}) != 5:
            raise ValueError("Root labels k must be distinct")

    def __iter__(self) -> Iterator[RootRecord]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def values(self) -> List[complex]:
        return [rec.value for rec in self.roots]

    def by_k(self, k: int) -> RootRecord:
        for rec in self.roots:
            if rec.k == k:
                return rec
        raise KeyError(k)

    @property
    def max_residual(self) -> float:
        return max(rec.residual for rec in self.roots)


def _sin5_sign(s5: float) -> float:
    return 1.0 if s5 > 0 else -1.0


def _f_from_parts(a: float, b: float, s5: float) -> float:
    """sin^4 * sin / sin^5 with a = sin(theta + 4 sigma), b = sin(sigma - theta)"""
    if s5 == 0:
        raise PoleEvaluation("sin(5 sigma) = 0")
    if abs(s5) < SENTINEL_SIN:
        return math.copysign(math.inf, b) * _sin5_sign(s5)
    if abs(s5) < LOG_SIN:
        if a == 0 or b == 0:
            return 0.0
        log_f = 4 * math.log(abs(a)) + math.log(abs(b)) - 5 * math.log(abs(s5))
        sign = math.copysign(1.0, b) * _sin5_sign(s5)
        if log_f >= LOG_MAX:
            return sign * math.inf
        return sign * math.exp(log_f)
    return a**4 * b / s5**5


def _sin5(sigma: float) -> float:
    """sin(5 sigma) reduced against the nearest multiple of pi/5"""
    m = round(5 * sigma / math.pi)
    d = sigma - m * math.pi / 5
    value = math.sin(5 * d)
    return -value if m % 2 else value


def f_sigma(sigma: float, theta: float) -> float:
    """
    f(sigma) = sin^4(theta + 4 sigma) sin(sigma - theta) / sin^5(5 sigma)

    Raises:
        PoleEvaluation: sin(5 sigma) is exactly zero
    """
    return _f_from_parts(
        math.sin(theta + 4 * sigma), math.sin(sigma - theta), _sin5(sigma)
    )


def _radius_from_parts(a: float, s5: float) -> float:
    if s5 == 0:
        raise PoleEvaluation("sin(5 sigma) = 0")
    return -a / s5


def radius_from_sigma(sigma: float, theta: float) -> float:
    """r = -sin(theta + 4 sigma) / sin(5 sigma)"""
    return _radius_from_parts(math.sin(theta + 4 * sigma), _sin5(sigma))


def intervals_for(theta: float) -> List[AngularInterval]:
    """
    The intervals I_k for 0 <= theta <= pi/5.

    theta = 0 drops I_0 and theta = pi/5 drops I_-2 (both collapse to a point).
    """
    if not (-THETA_SEAM_TOL < theta < THETA_MAX + THETA_SEAM_TOL):
        raise OutOfRange(f"theta must lie in [0, pi/5], got {theta}")
    pi = math.pi
    candidates = [
        (-2, -pi + theta, -4 * pi / 5, LO, HI),
        (-1, -pi / 2 - theta / 4, -2 * pi / 5, LO, HI),
        (0, -theta / 4, 0.0, LO, HI),
        (1, 2 * pi / 5, pi / 2 - theta / 4, HI, LO),
        (2, 4 * pi / 5, pi - theta / 4, HI, LO),
    ]
    intervals = []
    for k, lo, hi, zero_end, singular_end in candidates:
        if k == 0 and is_real_axis(theta):
            continue
        if k == -2 and is_seam(theta):
            continue
        intervals.append(AngularInterval(k, lo, hi, zero_end, singular_end))
    return intervals


def _excess(interval: AngularInterval, theta: float, two_xi: float, t: float) -> float:
    """f - 2 xi at distance t from the singular end"""
    sigma = interval.sigma_at(t)
    # singular ends are even multiples of pi/5, so sin(5 sigma) = sin(5 dir t)
    s5 = math.sin(5 * interval.direction * t)
    f = _f_from_parts(math.sin(theta + 4 * sigma), math.sin(sigma - theta), s5)
    return f - two_xi


def _bisect_offset(
    interval: AngularInterval, theta: float, xi: float, tol_sigma: float
) -> Tuple[float, float]:
    """Distance from the singular end of the root, and the resulting sigma"""
    if not xi > 0:
        raise OutOfRange(f"xi must be positive, got {xi}")
    two_xi = 2 * xi
    width = interval.width

    # f - 2 xi < 0 at the zero end; find a point near the pole where it is > 0
    near = width / 8
    for _ in range(MAX_HALVINGS):
        if _excess(interval, theta, two_xi, near) > 0:
            break
        near /= 2
    else:
        raise BracketFailure(
            f"No sign change of f - 2xi in I_{interval.k} for xi={xi}, theta={theta}",
            interval=interval,
        )
    logger.debug(f"I_{interval.k}: bracket offset {near:.3e}")

    lo, hi = near, width
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _excess(interval, theta, two_xi, mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol_sigma * min(1.0, lo, width - hi):
            break
    t = 0.5 * (lo + hi)
    return t, interval.sigma_at(t)


def bisect_sigma(
    interval: AngularInterval, theta: float, xi: float, tol_sigma: float = SIGMA_TOL
) -> float:
    """
    Solve f(sigma) = 2 xi inside `interval`.

    The bracket is the zero end plus the first of singular_end -/+ width/8,
    width/16, ... where f exceeds 2 xi. Only the sign of f - 2 xi is used.

    Raises:
        BracketFailure: no sign change within 200 halvings
    """
    _, sigma = _bisect_offset(interval, theta, xi, tol_sigma)
    return sigma


def newton_polish(p: Form3Problem, y: complex, steps: int = NEWTON_STEPS) -> complex:
    """A few Newton steps on q(y) = y^5 + u y^4 - 2 xi"""
    u = p.u
    for _ in range(steps):
        dq = y**3 * (5 * y + 4 * u)
        if dq == 0:
            break
        step = p.q(y) / dq
        y -= step
        if abs(step) <= 1e-16 * abs(y):
            break
    return y


def _bisection_root(
    p: Form3Problem, interval: AngularInterval, tol: float, tol_sigma: float
) -> RootRecord:
    t, sigma = _bisect_offset(interval, p.theta, p.xi, tol_sigma)
    s5 = math.sin(5 * interval.direction * t)
    r = _radius_from_parts(math.sin(p.theta + 4 * sigma), s5)
    y = newton_polish(p, cmath.rect(r, sigma))
    rec = RootRecord(y, interval.k, sigma, r, _root_residual(p, y), "bisection")
    return _checked(p, rec, tol)


def _root_residual(p: Form3Problem, y: complex) -> float:
    """|q(y)| / max(1, 2 xi)"""
    return abs(p.q(y)) / max(1.0, 2 * p.xi)


def _checked(p: Form3Problem, rec: RootRecord, tol: float) -> RootRecord:
    if rec.residual >= tol:
        raise ResidualTooLarge(
            f"Root k={rec.k} ({rec.via}) has residual {rec.residual:.3e} >= {tol:.1e}",
            value=rec.value,
            residual=rec.residual,
        )
    return rec


def _bisect_real(xi: float, lo: float, hi: float) -> float:
    """Root of y^4 (y + 1) = 2 xi on [lo, hi], given a sign change there"""
    two_xi = 2 * xi

    def h(y: float) -> float:
        return y**4 * (y + 1) - two_xi

    h_lo = h(lo)
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        h_mid = h(mid)
        if (h_mid > 0) == (h_lo > 0):
            lo, h_lo = mid, h_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _real_axis_roots(p: Form3Problem, tol: float) -> List[RootRecord]:
    """
    The two negative real roots of y^4 (y + 1) = 2 xi for theta = 0.

    They exist when 2 xi <= 256/3125; f stays above 2 xi inside I_-2 and I_2
    then, so these roots are not reachable by the angular bisection.
    """
    records = []
    for k, lo, hi, sigma in ((-2, -1.0, -0.8, -math.pi), (2, -0.8, 0.0, math.pi)):
        y = newton_polish(p, complex(_bisect_real(p.xi, lo, hi)))
        rec = RootRecord(y, k, sigma, abs(y), _root_residual(p, y), "real_axis")
        records.append(_checked(p, rec, tol))
    return records


def all_roots_form3(
    p: Form3Problem, tol: float = DEFAULT_TOL, tol_sigma: float = SIGMA_TOL
) -> RootSet:
    """
    The five roots of (y^5 + u y^4)/2 = xi, one per interval I_k.

    Raises:
        BracketFailure: an interval had no sign change
        ResidualTooLarge: a bisection root failed its residual check
        VietaResidualFailure: the root recovered from the root sum is not a root
    """
    intervals = intervals_for(p.theta)
    use_real_axis = is_real_axis(p.theta) and 2 * p.xi <= REAL_AXIS_PEAK

    records: List[RootRecord] = []
    if use_real_axis:
        records.extend(_real_axis_roots(p, tol))
    for interval in intervals:
        if use_real_axis and interval.k in (-2, 2):
            continue
        records.append(_bisection_root(p, interval, tol, tol_sigma))

    if len(records) == 4:
        missing = ({-2, -1, 0, 1, 2} - {rec.k for rec in records}).pop()
        y = -p.u - sum(rec.value for rec in records)
        residual = _root_residual(p, y)
        if residual >= tol:
            raise VietaResidualFailure(
                f"Root k={missing} from the root sum has residual {residual:.3e}",
                value=y,
                residual=residual,
            )
        y = newton_polish(p, y)
        records.append(
            RootRecord(y, missing, cmath.phase(y), abs(y), _root_residual(p, y), "vieta")
        )

    logger.debug(f"all_roots_form3(xi={p.xi}, theta={p.theta}): {len(records)} roots")
    return RootSet(tuple(sorted(records, key=lambda rec: rec.k)))


def all_roots_form1(
    p: Form1Problem, tol: float = DEFAULT_TOL, tol_sigma: float = SIGMA_TOL
) -> RootSet:
    """The five roots of x^5 + x + a = 0, labelled by the k of their Form 3 root"""
    p3 = form2_to_form3(form1_to_form2(p))
    roots3 = all_roots_form3(p3, tol, tol_sigma)
    records = []
    for rec in roots3:
        x = form3_root_to_form1_root(rec.value, p3, p, tol)
        records.append(
            RootRecord(x, rec.k, rec.sigma, rec.r, p.residual(x), rec.via, preimage=rec.value)
        )
    return RootSet(tuple(records))
