"""
Sampling Re zeta and Im zeta over a rectangle
"""

from typing import Tuple

import numpy as np
from tqdm import tqdm

from zetabench.config import *
from zetabench.errors import ZetaBenchError
from zetabench.records import GridField
from zetabench.zeta.zeta_engine import zeta


def grid_eval(
        region: Tuple[float, float, float, float],
        nx: int = DEFAULT_GRID_CONFIG["nx"],
        ny: int = DEFAULT_GRID_CONFIG["ny"],
        tol: float = DEFAULT_GRID_CONFIG["tol"],
        progress: bool = DEFAULT_GRID_CONFIG["progress"]
) -> GridField:
    """
    Evaluate zeta on an nx by ny lattice, row-major over y
    :param region: (x_min, x_max, y_min, y_max)
    :param nx:
    :param ny:
    :param tol:
    :param progress:
    :return: field with samples near s = 1 and failed samples masked
    """
    x_min, x_max, y_min, y_max = region
    size = nx * ny
    field = GridField(x_min, x_max, y_min, y_max, nx, ny, np.full(size, np.nan), np.full(size, np.nan))
    for j in tqdm(range(ny), disable=not progress, desc="grid"):
        y = field.y_at(j)
        for i in range(nx):
            k = j * nx + i
            s = complex(field.x_at(i), y)
            if abs(s - 1.0) < GRID_MASK_RADIUS:
                field.mask[k] = True
                continue
            try:
                value = zeta(s, tol).value
            except ZetaBenchError:
                field.mask[k] = True
                continue
            field.re_values[k] = value.real
            field.im_values[k] = value.imag
    return field
