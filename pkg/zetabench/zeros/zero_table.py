"""
Reading published zero tables and comparing them with scanned zeros

Table format: one decimal ordinate per line, '#' starts a comment line.
"""

import math
import os
from typing import List, Sequence, Tuple

import requests

from zetabench.errors import ZeroTableParseError, MonotonicityError
from zetabench.records import ZeroRecord


def parse_zero_table(text: str) -> List[float]:
    """
    Parse table text into ordinates
    :param text:
    :return: ordinates in file order, strictly increasing
    """
    ordinates = []
    for line_no, line in enumerate(text.split('\n'), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        try:
            value = float(stripped)
        except ValueError:
            raise ZeroTableParseError(line_no, line)
        if not math.isfinite(value):
            raise ZeroTableParseError(line_no, line)
        if ordinates and value <= ordinates[-1]:
            raise MonotonicityError(line_no, ordinates[-1], value)
        ordinates.append(value)
    return ordinates


def ingest_zero_table(path: str) -> List[float]:
    """
    Load a zero table from a file or an http(s) URL
    :param path:
    :return:
    """
    if path.startswith('http://') or path.startswith('https://'):
        resp = requests.get(path)
        resp.raise_for_status()
        return parse_zero_table(resp.text)
    if not os.path.exists(path):
        raise FileNotFoundError(f"{path} doesn't exist")
    with open(path, 'r') as f:
        return parse_zero_table(f.read())


def cross_check(records: Sequence[ZeroRecord], table: Sequence[float]) -> List[Tuple[int, float, float, float]]:
    """
    Pair scanned zeros with table ordinates by index
    :param records: scan output
    :param table: reference ordinates
    :return: (index, scanned t, table t, |difference|) wherever both exist
    """
    rows = []
    for record, reference in zip(records, table):
        rows.append((record.index, record.t, reference, abs(record.t - reference)))
    return rows
