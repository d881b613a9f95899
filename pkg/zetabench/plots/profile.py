"""
Re zeta and Im zeta against t along vertical lines re(s) = x

On re(s) = 1/2 both parts pass through zero at the same t at every zero; on
nearby lines they cross zero at different heights.
"""

from typing import List, Sequence

import numpy as np
from tqdm import tqdm

from zetabench.config import *
from zetabench.errors import ConfigError, ZetaBenchError
from zetabench.records import LineProfile
from zetabench.zeta.zeta_engine import zeta


def line_profile(
        x: float,
        t_min: float = DEFAULT_PROFILE_CONFIG["t_min"],
        t_max: float = DEFAULT_PROFILE_CONFIG["t_max"],
        samples: int = DEFAULT_PROFILE_CONFIG["samples"],
        tol: float = DEFAULT_GRID_CONFIG["tol"]
) -> LineProfile:
    """
    Sample zeta(x + it) at equally spaced t
    :param x: real part of the line
    :param t_min:
    :param t_max: t_max > t_min
    :param samples: at least 2
    :param tol:
    :return: samples near s = 1 are masked
    """
    if samples < 2:
        raise ConfigError(f"a line profile needs at least two samples, got {samples}")
    if not t_max > t_min:
        raise ConfigError(f"t_max must exceed t_min, got [{t_min}, {t_max}]")
    ts = np.linspace(t_min, t_max, samples)
    re_values = np.full(samples, np.nan)
    im_values = np.full(samples, np.nan)
    mask = np.zeros(samples, dtype=bool)
    for k, t in enumerate(ts):
        s = complex(x, t)
        if abs(s - 1.0) < GRID_MASK_RADIUS:
            mask[k] = True
            continue
        try:
            value = zeta(s, tol).value
        except ZetaBenchError:
            mask[k] = True
            continue
        re_values[k] = value.real
        im_values[k] = value.imag
    return LineProfile(x, ts, re_values, im_values, mask)


def line_profiles(
        xs: Sequence[float] = DEFAULT_PROFILE_CONFIG["xs"],
        t_min: float = DEFAULT_PROFILE_CONFIG["t_min"],
        t_max: float = DEFAULT_PROFILE_CONFIG["t_max"],
        samples: int = DEFAULT_PROFILE_CONFIG["samples"],
        tol: float = DEFAULT_GRID_CONFIG["tol"],
        progress: bool = False
) -> List[LineProfile]:
    """
    One profile per abscissa, in the order given
    :param xs:
    :param t_min:
    :param t_max:
    :param samples:
    :param tol:
    :param progress:
    :return:
    """
    return [
        line_profile(x, t_min, t_max, samples, tol)
        for x in tqdm(xs, disable=not progress, desc="profiles")
    ]
