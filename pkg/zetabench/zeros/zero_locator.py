"""
Nontrivial zeros on the critical line from sign changes of the real function
xi(1/2 + it), refined by bisection
"""

import cmath
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect
from tqdm import tqdm

from zetabench.config import *
from zetabench.errors import ConfigError, ConsistencyError, DomainError, RangeError
from zetabench.records import ScanConfig, ZeroRecord
from zetabench.symmetry.functional_symmetry import xi
from zetabench.utils.complex_util import log_gamma, LOG_PI
from zetabench.zeta.zeta_engine import zeta


def xi_line(t: float, tol: float = DEFAULT_TOL) -> float:
    """
    re xi(1/2 + it); xi is real on the critical line
    :param t:
    :param tol:
    :return:
    """
    value = xi(complex(0.5, t), tol=tol).value
    if abs(value.imag) >= XI_LINE_IMAG_TOL:
        raise ConsistencyError(f"xi(1/2 + {t}i) has imaginary part {value.imag:.3g}")
    return value.real


def scaled_xi_line(t: float, tol: float = DEFAULT_TOL) -> float:
    """
    e^{pi |t| / 4} re xi(1/2 + it), same sign as xi_line but free of underflow
    :param t:
    :param tol:
    :return:
    """
    s = complex(0.5, t)
    log_part = log_gamma(0.5 * s) - 0.5 * s * LOG_PI + 0.25 * math.pi * abs(t)
    scale = 0.5 * s * (s - 1.0) * cmath.exp(log_part)
    value = scale * zeta(s, tol).value
    # zeta is O(1) here, so |scale| sets the size of the roundoff in both parts
    if abs(value.imag) >= XI_LINE_IMAG_TOL * max(1.0, abs(scale)):
        raise ConsistencyError(f"xi(1/2 + {t}i) has imaginary part {value.imag:.3g}")
    return value.real


def _scan_grid(config: ScanConfig) -> np.ndarray:
    n_steps = int(math.floor(config.t_max / config.step))
    grid = np.arange(n_steps + 1) * config.step
    if grid[-1] < config.t_max:
        grid = np.append(grid, config.t_max)
    return grid


def scan_zeros(config: ScanConfig) -> List[ZeroRecord]:
    """
    Bracket every sign change of xi on the line over [0, t_max] and bisect it to refine_tol
    :param config: step <= 0.25
    :return: records in increasing t, indexed from 1
    """
    if config.step > MAX_SCAN_STEP:
        raise ConfigError(f"scan step must be at most {MAX_SCAN_STEP}, got {config.step}")

    grid = _scan_grid(config)
    values = [scaled_xi_line(float(t)) for t in tqdm(grid, disable=not config.progress, desc="xi scan")]
    # exact zeros on the grid count as positive
    signs = [1 if v >= 0 else -1 for v in values]

    records = []
    for j in range(len(grid) - 1):
        if signs[j] == signs[j + 1]:
            continue
        lo, hi = float(grid[j]), float(grid[j + 1])
        t = bisect(scaled_xi_line, lo, hi, xtol=config.refine_tol)
        residual = abs(zeta(complex(0.5, t)).value)
        records.append(ZeroRecord(len(records) + 1, t, residual, (lo, hi)))
    return records


def zero_count_estimate(T: float) -> float:
    """(T / 2 pi) ln(T / 2 pi) - T / 2 pi, without the 7/8 constant"""
    if not T > 0:
        raise DomainError(f"zero_count_estimate needs T > 0, got {T}")
    u = T / (2.0 * math.pi)
    return u * math.log(u) - u


def compare_counts(
        T: float,
        config: Optional[ScanConfig] = None,
        zeros: Optional[Sequence[ZeroRecord]] = None
) -> Tuple[int, float, float]:
    """
    Count zeros with 0 < t <= T and compare with the closed-form estimate
    :param T: at most 120
    :param config: scan settings; t_max is replaced by T
    :param zeros: records from an earlier scan reaching at least T, reused instead of rescanning
    :return: (counted, estimated, counted - estimated)
    """
    if T > MAX_COUNT_T:
        raise RangeError(f"zero counting is limited to T <= {MAX_COUNT_T}, got {T}")
    estimated = zero_count_estimate(T)
    if zeros is None:
        config = config or ScanConfig()
        zeros = scan_zeros(config.with_t_max(T))
    counted = sum(1 for record in zeros if record.t <= T)
    return counted, estimated, counted - estimated
