"""
Complex n-th roots with the left-closed branch convention.

Every root taken by the solvers uses the branch whose argument lies in
[-pi/n, pi/n[. This differs from the usual principal root only on the
negative real axis: Arg(z) = pi maps to -pi/n, not pi/n.
"""

import cmath
import math


def fold_argument(phi: float) -> float:
    """
    Map an angle in [-pi, pi] onto [-pi, pi[.

    cmath.phase returns +pi for negative reals with +0.0 imaginary part and
    -pi for -0.0; both must end up at -pi.
    """
    if phi >= math.pi:
        return -math.pi
    return phi


def branch_nth_root(z: complex, n: int) -> complex:
    """
    n-th root of z with argument in [-pi/n, pi/n[.

    branch_nth_root(0, n) is 0 by convention.

    Args:
        z: Complex (or real) radicand
        n: Root order, n >= 1

    Returns:
        w with w**n == z and -pi/n <= Arg(w) < pi/n
    """
    if n < 1:
        raise ValueError(f"Root order must be positive, got {n}")
    z = complex(z)
    if z == 0:
        return 0j
    if n == 1:
        return z
    modulus = abs(z) ** (1.0 / n)
    return cmath.rect(modulus, fold_argument(cmath.phase(z)) / n)


def rational_power(z: complex, p: int, q: int) -> complex:
    """z**(p/q) as branch_nth_root(z, q)**p"""
    if q < 1:
        raise ValueError(f"Denominator must be positive, got {q}")
    root = branch_nth_root(z, q)
    if p < 0 and root == 0:
        raise ZeroDivisionError("Negative power of zero")
    return root**p
