"""
Segmented sieve of Eratosthenes and the trial-division oracle
"""

import math
from typing import Iterator, Tuple

import numpy as np
from tqdm import tqdm

from zetabench.config import SIEVE_CAP, SIEVE_SEGMENT
from zetabench.errors import RangeError


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segments(limit: int, segment: int = SIEVE_SEGMENT, progress: bool = False) -> Iterator[Tuple[int, np.ndarray]]:
    """
    Yield (low, mask) where mask[i] is True iff low + i is prime, covering [0, limit]
    :param limit:
    :param segment: width of each segment
    :param progress: show a tqdm bar over segments
    :return:
    """
    base = _base_primes(math.isqrt(limit))
    lows = range(0, limit + 1, segment)
    for low in tqdm(lows, disable=not progress, desc="sieve"):
        high = min(low + segment, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        if low == 0:
            mask[:2] = False
        for p in base:
            p = int(p)
            start = max(p * p, ((low + p - 1) // p) * p)
            if start >= high:
                if p * p >= high:
                    break
                continue
            mask[start - low::p] = False
        yield low, mask


def primes_up_to(limit: int, progress: bool = False) -> np.ndarray:
    """
    All primes <= limit in increasing order
    :param limit:
    :param progress:
    :return: int64 array
    """
    limit = int(limit)
    if limit < 2:
        return np.array([], dtype=np.int64)
    if limit > SIEVE_CAP:
        raise RangeError(f"sieve is capped at {SIEVE_CAP}, got {limit}")
    chunks = [low + np.flatnonzero(mask) for low, mask in _segments(limit, progress=progress)]
    return np.concatenate(chunks).astype(np.int64)


def sieve_pi(x: float, progress: bool = False) -> int:
    """
    Exact prime count pi(x) = #{p prime, p <= floor(x)}
    :param x: 2 <= x <= 1e8
    :param progress:
    :return:
    """
    if not 2 <= x <= SIEVE_CAP:
        raise RangeError(f"sieve_pi needs 2 <= x <= {SIEVE_CAP}, got {x}")
    limit = int(math.floor(x))
    return int(sum(int(np.count_nonzero(mask)) for _, mask in _segments(limit, progress=progress)))


def trial_division_pi(x: float) -> int:
    """Count primes <= floor(x) one candidate at a time; slow, for cross-checks only"""
    count = 0
    for n in range(2, int(math.floor(x)) + 1):
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            count += 1
    return count
