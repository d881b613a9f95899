"""
Number formatting shared by every text output: 12 significant digits
"""

import json
from typing import Any

import numpy as np

from zetabench.config import SIG_DIGITS

FLOAT_FORMAT = f'%.{SIG_DIGITS}g'


def format_number(value: Any) -> str:
    """
    Text form of one table cell
    :param value: int, float, str or numpy scalar
    :return:
    """
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value == 0.0:
            value = 0.0
        return FLOAT_FORMAT % value
    return str(value)


def round_sig(value: float) -> float:
    """float rounded to 12 significant digits"""
    return float(FLOAT_FORMAT % value)


def jsonable(obj: Any) -> Any:
    """Copy of obj with every float rounded to 12 significant digits and numpy scalars unwrapped"""
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj)) + 0.0
    if isinstance(obj, complex):
        return {"re": round_sig(obj.real) + 0.0, "im": round_sig(obj.imag) + 0.0}
    return obj


def dump_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=4, sort_keys=False) + '\n'
