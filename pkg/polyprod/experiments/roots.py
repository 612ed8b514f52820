"""Spread of the complex roots of f_n for the binomial P = x^d - a."""

import logging
from cmath import exp
from cmath import phase
from itertools import combinations
from math import pi
from math import sqrt
from typing import List

from polyprod.experiments.reports import RootDistanceReport
from polyprod.polynomials.intpoly import ROOT_MAX_ITERATIONS
from polyprod.polynomials.intpoly import ROOT_TOLERANCE
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.intpoly import binomial
from polyprod.polynomials.intpoly import complex_roots
from polyprod.polynomials.intpoly import squarefree_part
from polyprod.products import shifted_product_minus_one


logger = logging.getLogger(__name__)

MATCH_TOLERANCE = 1e-6


def expected_product_roots(d: int, a: int, n: int) -> List[complex]:
    """-k + zeta a^(1/d) for 0 <= k < n, zeta over the d-th roots of unity."""
    r = abs(a) ** (1 / d)
    base = phase(complex(a))
    return [
        -k + r * exp(1j * (base + 2 * pi * m) / d) for k in range(n) for m in range(d)
    ]


def _all_matched(expected: List[complex], found: List[complex]) -> bool:
    remaining = list(found)
    for z in expected:
        best = min(range(len(remaining)), key=lambda i: abs(remaining[i] - z))
        if abs(remaining[best] - z) > MATCH_TOLERANCE * (1 + abs(z)):
            return False
        remaining.pop(best)
    return True


def root_distance_check(
    d: int,
    a: int,
    n: int,
    tol: float = ROOT_TOLERANCE,
    max_iterations: int = ROOT_MAX_ITERATIONS,
) -> RootDistanceReport:
    """Roots of f_n for x^d - a, their diameter and the ball |z| < 3(n + sqrt|a|).

    Repeated roots of f_n are listed once; repeated_roots records that they
    occurred.

    Raises:
        ValueError: If d < 1, a = 0 or n < 1.
        RootFindingError: If the root iteration does not converge.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if a == 0:
        raise ValueError("a must be nonzero")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    poly = binomial(d, a)
    f_n = shifted_product_minus_one(poly, n)
    distinct = squarefree_part(f_n)
    roots = complex_roots(distinct, tol, max_iterations)
    max_distance = max((abs(u - v) for u, v in combinations(roots, 2)), default=0.0)
    radius = 3 * (n + sqrt(abs(a)))
    within = all(abs(z) < radius for z in roots)
    if not within:
        logger.warning(f"Root of f_{n} outside |z| < {radius:.3f} for x^{d} - {a}")

    g_match = None
    try:
        product_roots = complex_roots(f_n + IntPoly((1,)), tol, max_iterations)
    except ValueError as e:
        logger.info(f"Skipping the product-root check: {e}")
    else:
        g_match = _all_matched(expected_product_roots(d, a, n), product_roots)

    return RootDistanceReport(
        d=d,
        a=a,
        n=n,
        roots=[(z.real, z.imag) for z in roots],
        repeated_roots=distinct.degree < f_n.degree,
        max_distance=max_distance,
        distance_ratio=max_distance / n,
        ball_radius=radius,
        within_ball=within,
        g_roots_match=g_match,
    )
