"""
Complex arithmetic substrate: branch-controlled log and power, sin/cos through
their hyperbolic decomposition, and the Gamma function.

Gamma uses the Lanczos approximation (g = 7, 9 coefficients) for re(s) >= 0.5
and the reflection formula below that. Everything here is a pure function.
"""

import cmath
import math

from zetabench.config import GAMMA_POLE_TOL, HYPERBOLIC_OVERFLOW
from zetabench.errors import DomainError, PoleError, NumericOverflowError
from zetabench.records import BranchSpec, PRINCIPAL


LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
LOG_PI = math.log(math.pi)


def complex_log(z: complex, branch: BranchSpec = PRINCIPAL) -> complex:
    """
    Logarithm with -1 read as e^{i pi n_phase}
    :param z: nonzero argument
    :param branch: n_phase = 1 is the principal branch
    :return: ln|z| + i arg, with arg = pi * n_phase on the negative real axis,
             0 on the positive real axis, and the principal argument shifted by
             pi * (n_phase - 1) in the left half plane
    """
    z = complex(z)
    if z == 0:
        raise DomainError("log of zero")
    if z.imag == 0.0:
        if z.real > 0:
            return complex(math.log(z.real), 0.0)
        return complex(math.log(-z.real), math.pi * branch.n_phase)
    principal = cmath.log(z)
    if z.real < 0:
        return principal + complex(0.0, math.pi * (branch.n_phase - 1.0))
    return principal


def exp_i_pi(x: float) -> complex:
    """e^{i pi x} for real x, exact at quarter turns"""
    r = math.fmod(x, 2.0)
    if r < 0:
        r += 2.0
    if r == 0.0:
        return complex(1.0, 0.0)
    if r == 0.5:
        return complex(0.0, 1.0)
    if r == 1.0:
        return complex(-1.0, 0.0)
    if r == 1.5:
        return complex(0.0, -1.0)
    return complex(math.cos(math.pi * r), math.sin(math.pi * r))


def complex_pow(base: complex, exponent: complex, branch: BranchSpec = PRINCIPAL) -> complex:
    """
    base ** exponent = exp(exponent * complex_log(base, branch))
    :param base:
    :param exponent:
    :param branch:
    :return:
    """
    base = complex(base)
    exponent = complex(exponent)
    if base == 0:
        if exponent.real > 0:
            return complex(0.0, 0.0)
        raise DomainError(f"0 ** {exponent} is undefined")
    # real base, real exponent: keep positive powers real and phases exact
    if base.imag == 0.0 and exponent.imag == 0.0:
        b, k = base.real, exponent.real
        if b > 0:
            return complex(b ** k, 0.0)
        return (-b) ** k * exp_i_pi(branch.n_phase * k)
    try:
        return cmath.exp(exponent * complex_log(base, branch))
    except OverflowError:
        raise NumericOverflowError(f"{base} ** {exponent} overflows")


def complex_sin(s: complex) -> complex:
    """sin(a + ib) = cosh(b) sin(a) + i sinh(b) cos(a)"""
    s = complex(s)
    a, b = s.real, s.imag
    if abs(b) > HYPERBOLIC_OVERFLOW:
        raise NumericOverflowError(f"sin overflows at im = {b}")
    return complex(math.cosh(b) * math.sin(a), math.sinh(b) * math.cos(a))


def complex_cos(s: complex) -> complex:
    """cos(a + ib) = cosh(b) cos(a) - i sinh(b) sin(a)"""
    s = complex(s)
    a, b = s.real, s.imag
    if abs(b) > HYPERBOLIC_OVERFLOW:
        raise NumericOverflowError(f"cos overflows at im = {b}")
    return complex(math.cosh(b) * math.cos(a), -math.sinh(b) * math.sin(a))


def sin_pi(s: complex) -> complex:
    """sin(pi s), with re(s) reduced modulo 2 so integers give exact zeros"""
    s = complex(s)
    r = math.fmod(s.real, 2.0)
    if r < 0:
        r += 2.0
    sign = 1.0
    if r >= 1.0:
        r -= 1.0
        sign = -1.0
    return sign * complex_sin(complex(math.pi * r, math.pi * s.imag))


def _check_gamma_pole(s: complex):
    nearest = round(s.real)
    if nearest <= 0 and abs(s - nearest) < GAMMA_POLE_TOL:
        raise PoleError(f"Gamma has a pole at {nearest}")


def _lanczos_log(s: complex) -> complex:
    # valid for re(s) >= 0.5
    z = s - 1.0
    series = LANCZOS_COEFFS[0]
    for k in range(1, len(LANCZOS_COEFFS)):
        series += LANCZOS_COEFFS[k] / (z + k)
    t = z + LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def log_gamma(s: complex) -> complex:
    """
    A logarithm of Gamma(s); only exp(log_gamma(s)) is meaningful, the branch is unspecified
    :param s:
    :return:
    """
    s = complex(s)
    _check_gamma_pole(s)
    if s.real >= 0.5:
        return _lanczos_log(s)
    return LOG_PI - cmath.log(sin_pi(s)) - _lanczos_log(1.0 - s)


def gamma(s: complex) -> complex:
    """
    Gamma(s) for s away from 0, -1, -2, ...
    :param s:
    :return:
    """
    s = complex(s)
    _check_gamma_pole(s)
    if s.real >= 0.5:
        try:
            return cmath.exp(_lanczos_log(s))
        except OverflowError:
            raise NumericOverflowError(f"Gamma({s}) overflows")
    return math.pi / (sin_pi(s) * gamma(1.0 - s))


def reciprocal_gamma(s: complex) -> complex:
    """1 / Gamma(s); entire, exactly zero at 0, -1, -2, ..."""
    s = complex(s)
    if s.real >= 0.5:
        return cmath.exp(-_lanczos_log(s))
    return sin_pi(s) * gamma(1.0 - s) / math.pi
