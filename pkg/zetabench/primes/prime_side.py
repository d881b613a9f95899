"""
Prime counting against the logarithmic integral
"""

import math
import warnings
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import quad, IntegrationWarning
from tqdm import tqdm

from zetabench.config import *
from zetabench.errors import DomainError, RangeError
from zetabench.primes.sieve import primes_up_to, sieve_pi
from zetabench.records import PrimeStats, ScanConfig, ZeroRecord
from zetabench.zeros.zero_locator import scan_zeros

QUAD_LIMIT = 400


def _exp_over_v(v: float) -> float:
    # dz / ln z under z = e^v
    return math.exp(v) / v


def _log_integral(lo: float, hi: float) -> float:
    """int_lo^hi dz / ln z for 1 < lo <= hi or lo <= hi < 1"""
    lower = -np.inf if lo == 0 else math.log(lo)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', IntegrationWarning)
        return quad(_exp_over_v, lower, math.log(hi), epsabs=0.0, epsrel=LI_QUAD_EPSREL, limit=QUAD_LIMIT)[0]


def _excised(x: float, a: float) -> float:
    return _log_integral(0.0, 1.0 - a) + _log_integral(1.0 + a, x)


def li(x: float, alpha: float = 0.01) -> float:
    """
    Principal value of int_0^x dz / ln z

    The integral with (1 - a, 1 + a) cut out equals li(x) - a - a^3/36 - O(a^5);
    two Richardson steps over a, a/2, a/4 remove the first two terms.
    :param x: x > 1
    :param alpha: excision half-width, 0 < alpha <= 0.1
    :return:
    """
    if not x > 1.0:
        raise DomainError(f"li needs x > 1, got {x}")
    if not 0.0 < alpha <= LI_MAX_ALPHA:
        raise DomainError(f"alpha must lie in (0, {LI_MAX_ALPHA}], got {alpha}")
    a = min(alpha, 0.5 * (x - 1.0))

    i1, i2, i4 = (_excised(x, a / d) for d in (1.0, 2.0, 4.0))
    r1 = 2.0 * i2 - i1
    r2 = 2.0 * i4 - i2
    return (8.0 * r2 - r1) / 7.0


def pnt_stats(x: float) -> PrimeStats:
    """
    pi(x), li(x) and x / ln x at one abscissa
    :param x: 2 <= x <= 1e8
    :return:
    """
    return PrimeStats(x, sieve_pi(x), li(x))


def pnt_curve(xs: Sequence[float], progress: bool = False) -> List[PrimeStats]:
    """PrimeStats at every x, sharing one sieve"""
    xs = [float(x) for x in xs]
    if not xs:
        return []
    if min(xs) < 2 or max(xs) > SIEVE_CAP:
        raise RangeError(f"pnt_curve needs 2 <= x <= {SIEVE_CAP}")
    primes = primes_up_to(int(max(xs)), progress=progress)
    counts = np.searchsorted(primes, np.floor(xs), side='right')
    return [PrimeStats(x, int(c), li(x)) for x, c in tqdm(zip(xs, counts), total=len(xs), disable=not progress)]


def rh_bound_probe(x_max: float, eps: float, progress: bool = False) -> Tuple[float, float, bool]:
    """
    Smallest C with |li(x) - pi(x)| <= C x^{1/2 + eps} over a geometric grid on [2, x_max]
    :param x_max: at most 1e8
    :param eps: 0 < eps <= 0.5
    :param progress:
    :return: (c_min, x attaining it, whether li - pi > 0 at every grid point)
    """
    if not 2.0 < x_max <= SIEVE_CAP:
        raise RangeError(f"rh_bound_probe needs 2 < x_max <= {SIEVE_CAP}, got {x_max}")
    if not 0.0 < eps <= 0.5:
        raise DomainError(f"eps must lie in (0, 0.5], got {eps}")

    n_points = int(math.ceil(GRID_POINTS_PER_DECADE * math.log10(x_max / 2.0))) + 1
    xs = np.geomspace(2.0, x_max, max(n_points, 2))
    primes = primes_up_to(int(x_max), progress=progress)
    pi_x = np.searchsorted(primes, np.floor(xs), side='right')

    # li accumulated interval by interval along the grid
    li_x = np.empty_like(xs)
    li_x[0] = li(xs[0])
    for i in tqdm(range(1, len(xs)), disable=not progress, desc="li"):
        li_x[i] = li_x[i - 1] + _log_integral(xs[i - 1], xs[i])

    gap = li_x - pi_x
    ratios = np.abs(gap) / xs ** (0.5 + eps)
    worst = int(np.argmax(ratios))
    return float(ratios[worst]), float(xs[worst]), bool(np.all(gap > 0))


def table13(
        k_max: int,
        config: Optional[ScanConfig] = None,
        zeros: Optional[Sequence[ZeroRecord]] = None
) -> List[Tuple[int, int, float]]:
    """
    Join the first k_max zero ordinates with the prime count up to each
    :param k_max:
    :param config: scan settings, used when zeros are not given
    :param zeros: records from an earlier scan
    :return: rows (k, pi(t_k), t_k)
    """
    if zeros is None:
        zeros = scan_zeros(config or ScanConfig())
    if not 1 <= k_max <= len(zeros):
        raise DomainError(f"k_max must lie in [1, {len(zeros)}] (zeros found), got {k_max}")
    zeros = list(zeros)[:k_max]
    primes = primes_up_to(int(math.floor(zeros[-1].t)))
    return [(z.index, int(np.searchsorted(primes, math.floor(z.t), side='right')), z.t) for z in zeros]
