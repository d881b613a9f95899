"""
Derivatives, Taylor and Laurent coefficients of zeta, and the cosine/sine split
of the Dirichlet partial sum
"""

import cmath
import math
from typing import List, Tuple

import numpy as np

from zetabench.config import *
from zetabench.errors import DomainError, RegionError, RadiusError, ContourError
from zetabench.zeta.zeta_engine import zeta


def _tail_coefficients(a: complex, log_m: float, n_coeffs: int) -> np.ndarray:
    """
    (-1)^k / k! * int_m^inf u^{-1-a} (ln u)^k du for k < n_coeffs, where a = s - 1
    """
    tails = np.empty(n_coeffs, dtype=complex)
    lead = cmath.exp(-a * log_m)
    # inner sum_j L^j / (j! a^{k-j+1}) built up one k at a time
    inner = 0j
    power = 1.0
    for k in range(n_coeffs):
        power = power * log_m / k if k else 1.0
        inner = inner / a + power / a
        tails[k] = (-1) ** k * lead * inner
    return tails


def _midpoint_bound(s: complex, log_m: float, mid: float, n_coeffs: int) -> float:
    worst = abs(s)
    prev = 1.0
    for k in range(1, n_coeffs):
        cur = prev * log_m / k
        worst = max(worst, prev + abs(s) * cur)
        prev = cur
    return mid ** (-s.real - 1.0) * worst / 24.0


def _termwise_coefficients(s0: complex, K: int, tol: float) -> np.ndarray:
    """
    Taylor coefficients zeta^{(k)}(s0) / k! = sum_n n^{-s0} (-ln n)^k / k!, k = 0..K,
    each summed to N with an integral tail from N + 1/2
    :param s0: re(s0) > 1.05
    :param K:
    :param tol: absolute error target for every coefficient
    :return: complex array of length K + 1
    """
    n_terms = 64
    while n_terms < DIRICHLET_MAX_TERMS:
        mid = n_terms + 0.5
        if _midpoint_bound(s0, math.log(mid), mid, K + 1) < tol:
            break
        n_terms *= 2

    log_n = np.log(np.arange(1, n_terms + 1, dtype=float))
    weights = np.exp(-s0 * log_n)
    coeffs = np.empty(K + 1, dtype=complex)
    for k in range(K + 1):
        if k:
            weights = weights * (-log_n) / k
        coeffs[k] = np.sum(weights)

    log_m = math.log(n_terms + 0.5)
    return coeffs + _tail_coefficients(s0 - 1.0, log_m, K + 1)


def _finite_difference(s: complex, k: int, h: float, tol: float) -> complex:
    total = 0j
    for j in range(k + 1):
        total += (-1) ** j * math.comb(k, j) * zeta(s + (0.5 * k - j) * h, tol).value
    return total / h ** k


def zeta_derivative(s: complex, k: int, tol: float = DEFAULT_TOL) -> complex:
    """
    k-th derivative of zeta

    Termwise (-1)^k sum (ln n)^k n^{-s} for re(s) > 1.05, otherwise central
    differences on zeta with one Richardson step.
    :param s:
    :param k: k >= 0
    :param tol:
    :return:
    """
    s = complex(s)
    if k < 0:
        raise DomainError(f"derivative order must be nonnegative, got {k}")
    if k == 0:
        return zeta(s, tol).value
    if s.real > TERMWISE_MIN_RE:
        coeff = _termwise_coefficients(s, k, tol / math.factorial(k))[k]
        return complex(coeff * math.factorial(k))

    h = FINITE_DIFF_STEP ** (1.0 / k)
    if abs(s - 1.0) <= 2.0 * k * h:
        raise RegionError(f"no derivative path at {s}: too close to the pole for finite differences")
    coarse = _finite_difference(s, k, h, tol)
    fine = _finite_difference(s, k, 0.5 * h, tol)
    return (4.0 * fine - coarse) / 3.0


def taylor_series_eval(
        s0: complex,
        K: int,
        s: complex,
        subtract_pole: bool = False,
        tol: float = DEFAULT_TOL
) -> complex:
    """
    sum_{k<=K} zeta^{(k)}(s0) (s - s0)^k / k!

    The plain truncation error decays like (|s - s0| / |s0 - 1|)^K, so close to the
    radius it stays large: at s0 = 2, s = 2.9, K = 60 it is about 2e-3. Pass
    subtract_pole=True there; the remainder is then entire and 1e-6 is reached.
    :param s0: expansion point, re(s0) > 1.05
    :param K: highest order
    :param s: |s - s0| < |s0 - 1|
    :param subtract_pole: expand zeta(s) - 1/(s - 1) and add the pole back exactly
    :param tol:
    :return:
    """
    s0 = complex(s0)
    s = complex(s)
    if s0.real <= TERMWISE_MIN_RE:
        raise RegionError(f"Taylor expansion point needs re(s0) > {TERMWISE_MIN_RE}, got {s0.real}")
    if abs(s - s0) >= abs(s0 - 1.0):
        raise RadiusError(f"|s - s0| = {abs(s - s0)} is outside the radius {abs(s0 - 1.0)} set by the pole")
    if K < 0:
        raise DomainError(f"K must be nonnegative, got {K}")

    coeffs = _termwise_coefficients(s0, K, tol)
    a = s0 - 1.0
    if subtract_pole:
        k = np.arange(K + 1)
        coeffs = coeffs - np.where(k % 2 == 0, 1.0, -1.0) / a ** (k + 1)

    dz = s - s0
    total = 0j
    for c in coeffs[::-1]:
        total = total * dz + c
    if subtract_pole:
        total += 1.0 / (s - 1.0)
    return complex(total)


def laurent_coeffs(
        s0: complex,
        radius: float,
        n_min: int,
        n_max: int,
        nodes: int = LAURENT_MIN_NODES,
        tol: float = DEFAULT_TOL
) -> List[Tuple[int, complex]]:
    """
    A_n = 1/(2 pi i) contour integral of zeta(s) / (s - s0)^{n+1} ds over |s - s0| = radius,
    by the equal-node trapezoidal rule
    :param s0: center
    :param radius:
    :param n_min:
    :param n_max:
    :param nodes: at least 64
    :param tol: accuracy of each zeta evaluation
    :return: [(n, A_n)] for n_min <= n <= n_max
    """
    s0 = complex(s0)
    if nodes < LAURENT_MIN_NODES:
        raise DomainError(f"need at least {LAURENT_MIN_NODES} nodes, got {nodes}")
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    if n_max < n_min:
        raise DomainError(f"empty coefficient range [{n_min}, {n_max}]")
    if abs(abs(s0 - 1.0) - radius) < LAURENT_POLE_MARGIN:
        raise ContourError(f"circle |s - {s0}| = {radius} passes within {LAURENT_POLE_MARGIN} of the pole at s = 1")

    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    points = s0 + radius * np.exp(1j * theta)
    values = np.array([zeta(p, tol).value for p in points])

    coeffs = []
    for n in range(n_min, n_max + 1):
        a_n = np.mean(values * np.exp(-1j * n * theta)) / radius ** n
        coeffs.append((n, complex(a_n)))
    return coeffs


def u_v_decompose(s: complex, N: int) -> Tuple[float, float]:
    """
    U = sum n^{-x} cos(y ln n), V = -sum n^{-x} sin(y ln n), n = 1..N

    n^{-s} = n^{-x} (cos(y ln n) - i sin(y ln n)), so (U, V) tends to
    (re zeta, im zeta) for re(s) > 1.
    """
    s = complex(s)
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N}")
    log_n = np.log(np.arange(1, N + 1, dtype=float))
    weights = np.exp(-s.real * log_n)
    u = float(np.sum(weights * np.cos(s.imag * log_n)))
    v = float(-np.sum(weights * np.sin(s.imag * log_n)))
    return u, v
