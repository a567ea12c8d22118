"""
Exact rational linear algebra on numpy object arrays of Fractions.
"""
import math
from fractions import Fraction
from functools import reduce
from typing import Tuple

import numpy as np

from core.errors import ValidationError


def fraction_array(values) -> np.ndarray:
    """Convert nested numbers to an object array of Fractions."""
    arr = np.array(values, dtype=object)
    flat = arr.reshape(-1)
    for i, v in enumerate(flat):
        flat[i] = Fraction(v)
    return flat.reshape(arr.shape)


def integerize(arr: np.ndarray) -> Tuple[Fraction, np.ndarray]:
    """
    Split a Fraction array into scale * integer array with coprime integer entries.

    Returns:
        (scale, integer object array); scale is 1 for an all-zero array
    """
    flat = [Fraction(v) for v in arr.reshape(-1)]
    nonzero = [v for v in flat if v != 0]
    if not nonzero:
        return Fraction(1), np.zeros(arr.shape, dtype=object)
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in nonzero), 1)
    num = reduce(math.gcd, (abs(v.numerator) * (den // v.denominator) for v in nonzero), 0)
    scale = Fraction(num, den)
    ints = np.empty(len(flat), dtype=object)
    for i, v in enumerate(flat):
        ints[i] = int(v / scale)
    return scale, ints.reshape(arr.shape)


def exact_inverse(m: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse over the rationals."""
    n = m.shape[0]
    work = [[Fraction(m[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("matrix is singular over the rationals")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [v / p for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return fraction_array([row[n:] for row in work])


def exact_rank(m: np.ndarray) -> int:
    rows = [[Fraction(v) for v in row] for row in m]
    if not rows:
        return 0
    rank, cols = 0, len(rows[0])
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
