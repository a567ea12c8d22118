"""
Constructors for the standard Frobenius algebras.

Each constructor states which trace normalization it uses.
"""
import logging
from fractions import Fraction
from typing import Sequence

import numpy as np

from core.errors import ValidationError
from core.group import FiniteGroup, class_structure_constants
from .algebra import FrobeniusAlgebra, build_algebra

logger = logging.getLogger('core')

NORMALIZATIONS = ('lattice', 'principal')


def semisimple_algebra(traces: Sequence[complex]) -> FrobeniusAlgebra:
    """Idempotent basis, e_i e_j = delta_ij e_i, eps(e_i) = traces[i]."""
    traces = np.asarray(traces, dtype=complex)
    if traces.ndim != 1 or len(traces) == 0:
        raise ValidationError("semisimple algebra needs at least one trace")
    if np.any(traces == 0):
        raise ValidationError("semisimple algebra traces must be nonzero")
    n = len(traces)
    mu = np.zeros((n, n, n), dtype=complex)
    mu[np.arange(n), np.arange(n), np.arange(n)] = 1
    return build_algebra(mu, np.ones(n), traces, labels=[f"p{i}" for i in range(n)],
                         name=f"semisimple{n}")


def class_function_algebra(G: FiniteGroup) -> FrobeniusAlgebra:
    """
    Center of C[G] on class sums e_a, with the principal-bundle trace
    eps(e_a) = delta_{a,1} / |G|.
    """
    N = class_structure_constants(G)
    r = N.shape[0]
    unit = np.zeros(r)
    unit[0] = 1
    trace = np.zeros(r)
    trace[0] = 1.0 / G.order
    exact = {
        "mu": N,
        "trace": [Fraction(1, G.order)] + [Fraction(0)] * (r - 1),
        "unit": [1] + [0] * (r - 1),
    }
    labels = [f"C{c.representative}" for c in G.classes]
    return build_algebra(N, unit, trace, labels=labels, name=f"Z(C[{G.name}])", exact=exact)


def group_algebra(G: FiniteGroup, normalization: str = 'lattice') -> FrobeniusAlgebra:
    """
    C[G] on group elements.

    Args:
        G: The group
        normalization: 'lattice' for the regular-representation trace
            eps(e_g) = |G| delta_{g,e}, 'principal' for delta_{g,e} / |G|
    """
    if normalization not in NORMALIZATIONS:
        raise ValidationError(f"unknown normalization '{normalization}'")
    n = G.order
    mu = np.zeros((n, n, n))
    idx = np.arange(n)
    mu[idx[:, None], idx[None, :], G.cayley] = 1
    unit = np.zeros(n)
    unit[0] = 1
    scale = Fraction(n) if normalization == 'lattice' else Fraction(1, n)
    trace = np.zeros(n)
    trace[0] = float(scale)
    exact = {"trace": [scale] + [Fraction(0)] * (n - 1)}
    return build_algebra(mu, unit, trace, labels=[f"g{i}" for i in range(n)],
                         name=f"C[{G.name}]/{normalization}", exact=exact)


def matrix_algebra(n: int, scale: complex = 1.0) -> FrobeniusAlgebra:
    """Mat_n(C) on matrix units E_pq (index p*n + q), trace scale * Tr."""
    if n < 1:
        raise ValidationError(f"matrix size must be positive, got {n}")
    if scale == 0:
        raise ValidationError("matrix algebra trace scale must be nonzero")
    d = n * n
    mu = np.zeros((d, d, d), dtype=complex)
    for p in range(n):
        for q in range(n):
            for s in range(n):
                mu[p * n + q, q * n + s, p * n + s] = 1
    unit = np.zeros(d, dtype=complex)
    trace = np.zeros(d, dtype=complex)
    for p in range(n):
        unit[p * n + p] = 1
        trace[p * n + p] = scale
    labels = [f"E{p}{q}" for p in range(n) for q in range(n)]
    return build_algebra(mu, unit, trace, labels=labels, name=f"Mat{n}")


def dual_numbers(trace_one: complex = 0.0, trace_x: complex = 1.0) -> FrobeniusAlgebra:
    """C[x]/(x^2): nondegenerate iff trace_x != 0, never semisimple."""
    mu = np.zeros((2, 2, 2))
    mu[0, 0, 0] = 1
    mu[0, 1, 1] = 1
    mu[1, 0, 1] = 1
    return build_algebra(mu, [1, 0], [trace_one, trace_x], labels=["1", "x"], name="C[x]/(x^2)")
