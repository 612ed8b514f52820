"""Character sums of P(n) against the Jacobi symbol modulo lp.

The sum is compared with D^2 (N/(lp) + 1) (lp)^(1/2) log(lp), taking the
implied constant to be 1. Ratios above 1 are flagged, not raised.
"""

import logging
from itertools import combinations
from math import log
from math import sqrt
from typing import Iterable
from typing import Optional

import numpy as np

from polyprod.core.arith import is_prime
from polyprod.core.arith import legendre_table
from polyprod.experiments.reports import WeilGridReport
from polyprod.experiments.reports import WeilReport
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import is_square_poly_mod


logger = logging.getLogger(__name__)


def weil_bound(degree: int, l: int, p: int, N: int) -> float:  # noqa: E741
    m = l * p
    return degree**2 * (N / m + 1) * sqrt(m) * log(m)


def _symbols(poly: IntPoly, q: int, n: np.ndarray) -> np.ndarray:
    reduced = poly.reduce(q)
    if is_square_poly_mod(reduced):
        raise ValueError(f"P is a square modulo {q}")
    return legendre_table(q)[reduced.evaluate_all()[n % q]].astype(np.int64)


def weil_ratio(
    poly: IntPoly,
    l: int,  # noqa: E741
    p: int,
    M: int,
    N: int,
) -> WeilReport:
    """Exact sum of (P(n) / lp) for n in (M, M + N] against the Weil bound.

    The Jacobi symbol modulo lp is the product of the Legendre symbols
    modulo l and p, so both are read from per-prime tables.

    Raises:
        ValueError: If l or p is not an odd prime, l = p, N < 1, or P is a
            square polynomial modulo l or p.
    """
    for q in (l, p):
        if q == 2 or not is_prime(q):
            raise ValueError(f"{q} is not an odd prime")
    if l == p:
        raise ValueError("l and p must be distinct")
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    n = np.arange(M + 1, M + N + 1, dtype=np.int64)
    total = int(np.dot(_symbols(poly, l, n), _symbols(poly, p, n)))
    bound = weil_bound(max(poly.degree, 1), l, p, N)
    ratio = abs(total) / bound
    if ratio > 1:
        logger.warning(f"Weil ratio {ratio:.3f} > 1 for l={l}, p={p}, N={N}")
    return WeilReport(
        poly=str(poly),
        l=l,
        p=p,
        M=M,
        N=N,
        sum=total,
        bound=bound,
        ratio=ratio,
        flagged=ratio > 1,
    )


def weil_grid(
    poly: IntPoly, primes: Iterable[int], M: int = 0, N: Optional[int] = None
) -> WeilGridReport:
    """weil_ratio over every pair l < p of the given odd primes.

    N defaults to the full period lp of each pair. Pairs where P is a square
    modulo either prime are skipped.
    """
    rows = []
    for l, p in combinations(sorted(primes), 2):  # noqa: E741
        try:
            rows.append(weil_ratio(poly, l, p, M, N if N is not None else l * p))
        except ValueError as e:
            logger.debug(f"Skipping ({l}, {p}): {e}")
    return WeilGridReport(
        poly=str(poly),
        rows=rows,
        max_ratio=max((r.ratio for r in rows), default=0.0),
        flagged=sum(r.flagged for r in rows),
    )
