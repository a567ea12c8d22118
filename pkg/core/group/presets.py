"""
Named preset groups and the short aliases accepted on the command line.
"""
import itertools
import logging
import math
import re
from typing import Callable, List, Sequence, Tuple

import numpy as np

from core.errors import GuardExceeded, ValidationError
from core.settings import get_settings
from .finite_group import FiniteGroup, direct_product

logger = logging.getLogger('core')

PRESETS = ('cyclic', 'dihedral', 'symmetric', 'quaternion8', 'product', 'trivial')

# Unit quaternions 1, i, j, k multiply as (sign, unit)
_QUATERNION_UNITS = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]


def _from_elements(name: str, elements: Sequence, mul: Callable) -> FiniteGroup:
    """Tabulate `mul` over `elements`; elements[0] must be the identity."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[mul(x, y)]
    return FiniteGroup(name=name, cayley=table)


def _check_order(order: int) -> None:
    cap = get_settings().max_group_order
    if order > cap:
        raise GuardExceeded(f"preset order {order} exceeds cap {cap}")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic group needs n >= 1, got {n}")
    _check_order(n)
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(name=f"Z{n}", cayley=table)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; r^k s^f sits at index f*n + k."""
    if n < 1:
        raise ValidationError(f"dihedral group needs n >= 1, got {n}")
    _check_order(2 * n)
    elements = [(k, f) for f in (0, 1) for k in range(n)]

    def mul(x, y):
        (a, f), (b, h) = x, y
        return ((a + (b if f == 0 else -b)) % n, (f + h) % 2)

    return _from_elements(f"D{n}", elements, mul)


def symmetric(n: int) -> FiniteGroup:
    """
    Permutations of n points in lexicographic order, composed right to left:
    (p q)(i) = p(q(i)).
    """
    if n < 1:
        raise ValidationError(f"symmetric group needs n >= 1, got {n}")
    _check_order(math.factorial(n))
    elements = list(itertools.permutations(range(n)))

    def mul(p, q):
        return tuple(p[q[i]] for i in range(n))

    return _from_elements(f"S{n}", elements, mul)


def quaternion8() -> FiniteGroup:
    """Order 8, elements 1, -1, i, -i, j, -j, k, -k."""
    elements = [(s, u) for u in range(4) for s in (1, -1)]

    def mul(x, y):
        (s, u), (t, v) = x, y
        sign, unit = _QUATERNION_UNITS[u][v]
        return (s * t * sign, unit)

    return _from_elements("Q8", elements, mul)


def trivial() -> FiniteGroup:
    return FiniteGroup(name="trivial", cayley=np.zeros((1, 1), dtype=np.int64))


def product(a: int, b: int) -> FiniteGroup:
    """Z/a x Z/b."""
    _check_order(a * b)
    return direct_product(cyclic(a), cyclic(b), name=f"Z{a}xZ{b}")


def build_preset(name: str, params: Sequence[int] = ()) -> FiniteGroup:
    """
    Build a preset group.

    Args:
        name: One of cyclic, dihedral, symmetric, quaternion8, product, trivial
        params: Integer parameters (n, or a and b for product)

    Returns:
        The validated group with deterministic element order
    """
    params = [int(p) for p in params]
    expected = {'cyclic': 1, 'dihedral': 1, 'symmetric': 1, 'quaternion8': 0, 'product': 2, 'trivial': 0}
    if name not in expected:
        raise ValidationError(f"unknown preset '{name}' (known: {', '.join(PRESETS)})")
    if len(params) != expected[name]:
        raise ValidationError(f"preset '{name}' takes {expected[name]} parameter(s), got {len(params)}")
    logger.debug(f"Building preset {name}{tuple(params)}")
    if name == 'cyclic':
        return cyclic(params[0])
    if name == 'dihedral':
        return dihedral(params[0])
    if name == 'symmetric':
        return symmetric(params[0])
    if name == 'quaternion8':
        return quaternion8()
    if name == 'product':
        return product(params[0], params[1])
    return trivial()


_ALIASES: List[Tuple[str, str]] = [
    (r'^(?:Z|C)(\d+)x(?:Z|C)(\d+)$', 'product'),
    (r'^(?:Z|C)(\d+)$', 'cyclic'),
    (r'^D(\d+)$', 'dihedral'),
    (r'^S(\d+)$', 'symmetric'),
    (r'^Q8$', 'quaternion8'),
    (r'^(?:trivial|1)$', 'trivial'),
]


def group_from_alias(text: str) -> FiniteGroup:
    """
    Resolve a short alias (Z2, D4, S3, Q8, trivial, Z2xZ2) or an explicit
    "name:p1,p2" preset reference such as "symmetric:4".
    """
    text = text.strip()
    if ':' in text:
        name, _, raw = text.partition(':')
        try:
            params = [int(p) for p in raw.split(',') if p.strip()]
        except ValueError:
            raise ValidationError(f"malformed preset parameters in '{text}'")
        return build_preset(name.strip(), params)
    if text in PRESETS:
        return build_preset(text, [])
    compact = text.replace('/', '').replace(' ', '')
    for pattern, name in _ALIASES:
        match = re.match(pattern, compact)
        if match:
            return build_preset(name, [int(g) for g in match.groups()])
    raise ValidationError(f"unknown group alias '{text}'")
