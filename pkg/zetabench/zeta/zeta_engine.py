"""
Evaluate zeta(s) by independent strategies with region dispatch

dirichlet       partial sum of n^{-s} plus an integral tail, re(s) > 1.05
eta             accelerated alternating series over (1 - 2^{1-s}), re(s) > 0
theta_integral  theta-function integral representation, all s except 0 and 1
reflection      functional equation from zeta(1 - s), re(s) < 0

The theta representation is

    pi^{-s/2} Gamma(s/2) zeta(s) = 1/(s(s-1)) + int_1^inf psi(u) (u^{s/2-1} + u^{-(1+s)/2}) du

with psi(u) = sum_n exp(-pi n^2 u). The factor pi in the exponent is required
for the left side to hold; without it zeta(2) comes out wrong.
"""

import cmath
import math
import warnings
from functools import lru_cache

import numpy as np
from scipy.integrate import quad, IntegrationWarning

from zetabench.config import *
from zetabench.errors import PoleError, RegionError, RemovablePointError
from zetabench.primes.sieve import primes_up_to
from zetabench.records import EvalResult, METHOD_DIRICHLET, METHOD_ETA, METHOD_THETA, METHOD_REFLECTION, METHOD_AUTO
from zetabench.utils.complex_util import gamma, reciprocal_gamma, sin_pi, LOG_PI

EPS = np.finfo(float).eps
LOG_TWO = math.log(2.0)
BORWEIN_BASE = math.log(3.0 + math.sqrt(8.0))
MAX_ETA_TERMS = 380
QUAD_LIMIT = 200


def _check_pole(s: complex):
    if abs(s - 1.0) <= ZETA_POLE_RADIUS:
        raise PoleError("zeta has a simple pole at s = 1 (residue 1)")


def zeta_dirichlet(s: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    Partial sum of n^{-s} with the tail replaced by (N + 1/2)^{1-s} / (s - 1)
    :param s: re(s) > 1.05
    :param tol: target absolute error
    :return:
    """
    s = complex(s)
    x = s.real
    if x <= 1.0 + DIRICHLET_MARGIN:
        raise RegionError(f"dirichlet series needs re(s) > {1.0 + DIRICHLET_MARGIN}, got {x}")

    # leading neglected term of the midpoint tail: |s| (N + 1/2)^{-x-1} / 24
    n_terms = math.ceil((abs(s) / (24.0 * tol)) ** (1.0 / (x + 1.0)))
    n_terms = int(min(max(n_terms, 16), DIRICHLET_MAX_TERMS))

    log_n = np.log(np.arange(1, n_terms + 1, dtype=float))
    partial = np.sum(np.exp(-s * log_n))
    mid = n_terms + 0.5
    tail = cmath.exp((1.0 - s) * math.log(mid)) / (s - 1.0)

    est_error = abs(s) * mid ** (-x - 1.0) / 24.0 + EPS * abs(partial) * math.log2(n_terms)
    return EvalResult(complex(partial) + tail, METHOD_DIRICHLET, n_terms, est_error)


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    # d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), via the ratio of consecutive summands
    d = np.empty(n + 1)
    term = 1.0
    total = 1.0
    d[0] = total
    for i in range(1, n + 1):
        term *= 2.0 * (n + i - 1) * (n - i + 1) / (i * (2.0 * i - 1.0))
        total += term
        d[i] = total
    k = np.arange(n)
    weights = np.where(k % 2 == 0, 1.0, -1.0) * (d[n] - d[:n]) / d[n]
    weights.setflags(write=False)
    return weights


def _eta_factor(s: complex) -> complex:
    return 1.0 - cmath.exp((1.0 - s) * LOG_TWO)


def zeta_eta(s: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    zeta(s) = eta(s) / (1 - 2^{1-s}), eta summed with Chebyshev-type acceleration weights
    :param s: re(s) > 0 (or s = 0), away from the zeros of 1 - 2^{1-s}
    :param tol:
    :return:
    """
    s = complex(s)
    _check_pole(s)
    if s.real <= 0 and s != 0:
        raise RegionError(f"eta series needs re(s) > 0, got {s.real}")
    factor = _eta_factor(s)
    if abs(factor) < 1e-12:
        raise RegionError(f"1 - 2^(1-s) vanishes at {s}")

    t = abs(s.imag)
    log_bound = math.log(3.0 * (1.0 + 2.0 * t)) + math.pi * t / 2.0
    n_terms = math.ceil((log_bound - math.log(tol * abs(factor))) / BORWEIN_BASE)
    if n_terms > MAX_ETA_TERMS:
        raise RegionError(f"|im(s)| = {t} is beyond the eta series working region")
    n_terms = max(n_terms, 8)

    weights = _borwein_weights(n_terms)
    log_k = np.log(np.arange(1, n_terms + 1, dtype=float))
    terms = weights * np.exp(-s * log_k)
    eta = complex(np.sum(terms))

    truncation = math.exp(log_bound - n_terms * BORWEIN_BASE)
    roundoff = n_terms * EPS * float(np.sum(np.abs(terms)))
    return EvalResult(eta / factor, METHOD_ETA, n_terms, (truncation + roundoff) / abs(factor))


def _theta_sum(u: float) -> float:
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * u)
        total += term
        if term <= 1e-17 * total:
            return total
        n += 1


def zeta_theta_integral(s: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    Solve the theta integral representation for zeta(s)
    :param s: anything except 0 and 1
    :param tol: target absolute error; unattainable targets are reported through est_error
    :return:
    """
    s = complex(s)
    _check_pole(s)
    if abs(s) <= ZETA_POLE_RADIUS:
        raise RemovablePointError("theta representation has a removable point at s = 0; use eta or reflection")

    # pi^{s/2} / Gamma(s/2), exactly zero at the trivial zeros
    inv_factor = cmath.exp(0.5 * s * LOG_PI) * reciprocal_gamma(0.5 * s)
    if inv_factor == 0:
        return EvalResult(0j, METHOD_THETA, 1, 0.0)
    scale = abs(inv_factor)
    integral_tol = max(tol / scale, 1e-17)

    x = s.real
    growth = max(0.5 * x - 1.0, -0.5 * (1.0 + x), 0.0)
    upper = 1.0
    while 2.0 * math.exp(-math.pi * upper) * upper ** growth > integral_tol / 10.0 and upper < 400.0:
        upper += 0.5
    tail = 2.0 * math.exp(-math.pi * upper) * upper ** growth

    a = 0.5 * s - 1.0
    b = -0.5 * (1.0 + s)

    def integrand(u):
        log_u = math.log(u)
        return _theta_sum(u) * (cmath.exp(a * log_u) + cmath.exp(b * log_u))

    def bound(u):
        log_u = math.log(u)
        return _theta_sum(u) * (math.exp(a.real * log_u) + math.exp(b.real * log_u))

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', IntegrationWarning)
        re_part = quad(lambda u: integrand(u).real, 1.0, upper,
                       epsabs=integral_tol, epsrel=1e-14, limit=QUAD_LIMIT, full_output=1)
        if s.imag != 0.0:
            im_part = quad(lambda u: integrand(u).imag, 1.0, upper,
                           epsabs=integral_tol, epsrel=1e-14, limit=QUAD_LIMIT, full_output=1)
        else:
            im_part = (0.0, 0.0, {'neval': 0})
        abs_scale = quad(bound, 1.0, upper, epsrel=1e-3, limit=QUAD_LIMIT)[0]

    pole_term = 1.0 / (s * (s - 1.0))
    numerator = pole_term + complex(re_part[0], im_part[0])
    roundoff = 16.0 * EPS * (abs(pole_term) + abs_scale)
    est_error = (re_part[1] + im_part[1] + tail + roundoff) * scale
    terms_used = re_part[2]['neval'] + im_part[2]['neval']
    return EvalResult(numerator * inv_factor, METHOD_THETA, terms_used, est_error)


def reflection_factor(s: complex) -> complex:
    """2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), so that zeta(s) = factor * zeta(1 - s)"""
    s = complex(s)
    return cmath.exp(s * LOG_TWO + (s - 1.0) * LOG_PI) * sin_pi(0.5 * s) * gamma(1.0 - s)


def _reflect(s: complex, tol: float) -> EvalResult:
    factor = reflection_factor(s)
    if factor == 0:
        return EvalResult(0j, METHOD_REFLECTION, 1, 0.0)
    inner_tol = min(max(tol / abs(factor), 1e-15), 1e-6)
    inner = zeta(1.0 - s, inner_tol)
    value = factor * inner.value
    est_error = abs(factor) * inner.est_error + 16.0 * EPS * abs(value)
    return EvalResult(value, METHOD_REFLECTION, inner.terms_used, est_error)


def zeta_reflect(s: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    :param s: re(s) < 0
    :param tol:
    :return:
    """
    s = complex(s)
    if s.real >= 0:
        raise RegionError(f"reflection needs re(s) < 0, got {s.real}")
    return _reflect(s, tol)


def zeta(s: complex, tol: float = DEFAULT_TOL, method: str = METHOD_AUTO) -> EvalResult:
    """
    Evaluate zeta(s), choosing the method by region unless one is forced
    :param s: anything but s = 1
    :param tol:
    :param method: one of auto, dirichlet, eta, theta_integral, reflection
    :return:
    """
    s = complex(s)
    _check_pole(s)
    if method == METHOD_DIRICHLET:
        return zeta_dirichlet(s, tol)
    if method == METHOD_ETA:
        return zeta_eta(s, tol)
    if method == METHOD_THETA:
        return zeta_theta_integral(s, tol)
    if method == METHOD_REFLECTION:
        return zeta_reflect(s, tol)
    if method != METHOD_AUTO:
        raise ValueError(f"unknown method {method!r}")

    x = s.real
    if x >= 1.5:
        return zeta_dirichlet(s, tol)
    if x <= -0.5:
        return _reflect(s, tol)
    if abs(s.imag) <= THETA_IM_LIMIT:
        if abs(s) <= ZETA_POLE_RADIUS:
            return zeta_eta(s, tol)
        return zeta_theta_integral(s, tol)
    if x >= 0.5:
        if abs(_eta_factor(s)) >= ETA_FACTOR_MIN:
            return zeta_eta(s, tol)
        # next to a zero of 1 - 2^{1-s} neither method is reliable; keep the tighter estimate
        candidates = [zeta_theta_integral(s, tol)]
        try:
            candidates.append(zeta_eta(s, tol))
        except RegionError:
            pass
        return min(candidates, key=lambda r: r.est_error)
    return _reflect(s, tol)


def euler_product(s: complex, p_max: int = 10 ** 6) -> complex:
    """
    prod_{p <= p_max} (1 - p^{-s})^{-1}; an identity check against zeta for re(s) > 1
    :param s:
    :param p_max:
    :return:
    """
    s = complex(s)
    if s.real <= 1.0:
        raise RegionError(f"Euler product needs re(s) > 1, got {s.real}")
    primes = primes_up_to(p_max).astype(float)
    factors = 1.0 - np.exp(-s * np.log(primes))
    return complex(np.exp(-np.sum(np.log(factors))))
