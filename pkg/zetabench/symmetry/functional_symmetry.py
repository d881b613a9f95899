"""
The completed xi function, functional-equation residuals, the t coordinate, and
branch probes of f^k = (-f)^k e^{-i pi k}
"""

import cmath
from typing import Optional, Tuple

import numpy as np

from zetabench.config import *
from zetabench.errors import DomainError, PoleError
from zetabench.records import (
    XiValue, BranchCurve, BranchSpec, XI_CONVENTIONS, CONVENTION_HALF,
    FAMILY_X_POW_X, FAMILY_C_POW_X, BRANCH_FAMILIES, METHOD_THETA
)
from zetabench.utils.complex_util import complex_pow, exp_i_pi, log_gamma, LOG_PI
from zetabench.zeta.zeta_engine import zeta, reflection_factor


def _removable_point(s: complex) -> Optional[int]:
    """nearest point of {1, 0, -2, -4, ...} within XI_REMOVABLE_RADIUS, else None"""
    if abs(s - 1.0) <= XI_REMOVABLE_RADIUS:
        return 1
    nearest = 2 * round(s.real / 2.0)
    if nearest <= 0 and abs(s - nearest) <= XI_REMOVABLE_RADIUS:
        return nearest
    return None


def _xi_product(s: complex, tol: float) -> complex:
    # s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s), with the pi and Gamma parts combined in log space
    log_part = log_gamma(0.5 * s) - 0.5 * s * LOG_PI
    return s * (s - 1.0) * cmath.exp(log_part) * zeta(s, tol).value


def xi(s: complex, convention: str = CONVENTION_HALF, tol: float = DEFAULT_TOL) -> XiValue:
    """
    Completed xi(s) = prefactor * s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s)

    Entire. At the removable points of the product (s = 1, 0, -2, -4, ...) the
    value is the average of the product at s +/- 1e-6.
    :param s:
    :param convention: 'half' applies the leading 1/2, 'unit' does not
    :param tol: passed to zeta
    :return:
    """
    if convention not in XI_CONVENTIONS:
        raise DomainError(f"unknown xi convention {convention!r}")
    s = complex(s)
    prefactor = XI_CONVENTIONS[convention]
    if _removable_point(s) is not None:
        value = 0.5 * (_xi_product(s + XI_LIMIT_STEP, tol) + _xi_product(s - XI_LIMIT_STEP, tol))
    else:
        value = _xi_product(s, tol)
    return XiValue(prefactor * value, convention)


def _independent_zeta(s: complex, tol: float) -> complex:
    """zeta(s) without going through the reflection formula"""
    x = s.real
    reflects = x <= -0.5 or (x < 0.5 and abs(s.imag) > THETA_IM_LIMIT)
    if reflects:
        return zeta(s, tol, method=METHOD_THETA).value
    return zeta(s, tol).value


def functional_equation_residual(s: complex, tol: float = DEFAULT_TOL) -> float:
    """
    |zeta(s) - 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)| / max(1, |zeta(s)|)

    Both zeta values come from direct methods (theta integral, eta or Dirichlet),
    never from the reflection formula being checked.
    :param s: away from 0 and from the poles 1, 2, 3, ... of Gamma(1 - s)
    :param tol:
    :return:
    """
    s = complex(s)
    nearest = round(s.real)
    if nearest >= 0 and abs(s - nearest) <= FUNCTIONAL_POLE_RADIUS:
        raise PoleError(f"functional equation residual is undefined next to s = {nearest}")
    lhs = _independent_zeta(s, tol)
    rhs = reflection_factor(s) * _independent_zeta(1.0 - s, tol)
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def xi_symmetry_residual(s: complex, tol: float = DEFAULT_TOL) -> float:
    """|xi(s) - xi(1 - s)| / max(1, |xi(s)|)"""
    s = complex(s)
    left = xi(s, tol=tol).value
    right = xi(1.0 - s, tol=tol).value
    return abs(left - right) / max(1.0, abs(left))


def conjugate_symmetry_residual(y: float, tol: float = DEFAULT_TOL) -> float:
    """|zeta(1/2 + iy) - conj(zeta(1/2 - iy))|"""
    upper = zeta(complex(0.5, y), tol).value
    lower = zeta(complex(0.5, -y), tol).value
    return abs(upper - lower.conjugate())


def eq12_check(f: float, k: float, n_phase: float = 1.0) -> Tuple[complex, complex, float]:
    """
    Compare f^k with (-f)^k e^{-i pi k}, the power of -f taken on the branch n_phase
    :param f: f > 0
    :param k: real exponent
    :param n_phase: branch used for (-f)^k
    :return: (lhs, rhs, |lhs - rhs|)
    """
    if not f > 0:
        raise DomainError(f"eq12_check needs f > 0, got {f}")
    lhs = complex_pow(f, k)
    rhs = complex_pow(-f, k, BranchSpec(n_phase)) * exp_i_pi(-k)
    return lhs, rhs, abs(lhs - rhs)


def branch_curves(
        family: str,
        c: Optional[float],
        n_phase: float,
        x_min: float,
        x_max: float,
        samples: int
) -> BranchCurve:
    """
    Sample x^x or c^x on the branch n_phase over an even x grid
    :param family: 'x_pow_x' or 'c_pow_x'
    :param c: base for c_pow_x (nonzero); ignored for x_pow_x
    :param n_phase:
    :param x_min:
    :param x_max:
    :param samples: number of points, >= 2
    :return:
    """
    if family not in BRANCH_FAMILIES:
        raise DomainError(f"unknown branch family {family!r}")
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    if not x_max > x_min:
        raise DomainError(f"x range [{x_min}, {x_max}] is empty")
    if family == FAMILY_C_POW_X and not c:
        raise DomainError("c_pow_x needs a nonzero base c")

    branch = BranchSpec(n_phase)
    rows = []
    for x in np.linspace(x_min, x_max, samples):
        x = float(x)
        if family == FAMILY_X_POW_X:
            value = complex(1.0, 0.0) if x == 0.0 else complex_pow(x, x, branch)
        else:
            value = complex_pow(c, x, branch)
        rows.append((x, value.real, value.imag))
    return BranchCurve(family, c if family == FAMILY_C_POW_X else None, branch.n_phase, rows)


def t_of_s(s: complex) -> complex:
    """t = i/2 - i s, so the critical line maps to the real t axis"""
    return 0.5j - 1j * complex(s)


def s_of_t(t: complex) -> complex:
    return 0.5 + 1j * complex(t)
