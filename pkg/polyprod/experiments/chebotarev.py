"""Empirical density of primes in [z, 2z] at which P has no root."""

import logging
from functools import partial
from math import factorial
from typing import Optional

from polyprod.core.arith import iter_primes
from polyprod.errors import DegenerateReductionError
from polyprod.experiments.reports import DensityReport
from polyprod.parallel import map_ordered
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import count_roots_mod


logger = logging.getLogger(__name__)

MIN_Z = 10


def kappa_bound(degree: int) -> Optional[float]:
    """D! / (D - 1), the upper bound for kappa; None for D = 1."""
    if degree < 2:
        return None
    return factorial(degree) / (degree - 1)


def _is_rootless(p: int, poly: IntPoly) -> bool:
    try:
        return count_roots_mod(poly.reduce(p)) == 0
    except DegenerateReductionError:
        return False


def chebotarev_census(poly: IntPoly, z: int, *, threads: int = 1) -> DensityReport:
    """Count the rootless primes in [z, 2z] and estimate kappa = total / rootless.

    Raises:
        ValueError: If z < 10 or the interval holds no prime.
    """
    if z < MIN_Z:
        raise ValueError(f"z must be at least {MIN_Z}, got {z}")
    primes = list(iter_primes(z, 2 * z))
    if not primes:
        raise ValueError(f"no primes in [{z}, {2 * z}]")
    flags = map_ordered(partial(_is_rootless, poly=poly), primes, threads)
    rootless = sum(flags)
    total = len(primes)
    logger.info(f"{rootless} of {total} primes in [{z}, {2 * z}] are rootless")
    return DensityReport(
        poly=str(poly),
        z=z,
        primes_total=total,
        rootless=rootless,
        rootless_fraction=rootless / total,
        kappa_hat=total / rootless if rootless else None,
        kappa_bound=kappa_bound(poly.degree),
    )
