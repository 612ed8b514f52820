"""Primes p at which some F_h, 0 < h <= H, is a square polynomial mod p."""

import logging
from math import log
from typing import List
from typing import Optional

from polyprod.core.arith import iter_primes
from polyprod.errors import DegenerateReductionError
from polyprod.experiments.reports import ExceptionalPair
from polyprod.experiments.reports import ExceptionalReport
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import is_square_poly_mod
from polyprod.products import shifted_product


logger = logging.getLogger(__name__)


def comparison_value(H: int) -> Optional[float]:
    """H log H / log log H, or None when log log H <= 0 (H <= 2)."""
    if H <= 2:
        return None
    return H * log(H) / log(log(H))


def exceptional_prime_census(poly: IntPoly, H: int, x: int) -> ExceptionalReport:
    """All (p, h) with p <= x odd and F_h a square modulo p.

    Primes dividing every coefficient of P are skipped.

    Raises:
        ValueError: If H < 1 or x < 3.
    """
    if H < 1:
        raise ValueError(f"H must be at least 1, got {H}")
    if x < 3:
        raise ValueError(f"x must be at least 3, got {x}")
    shifted = [shifted_product(poly, h) for h in range(1, H + 1)]
    pairs: List[ExceptionalPair] = []
    primes: List[int] = []
    for p in iter_primes(3, x):
        try:
            hits = [
                h
                for h, f_h in enumerate(shifted, start=1)
                if is_square_poly_mod(f_h.reduce(p))
            ]
        except DegenerateReductionError:
            logger.warning(f"Skipping p={p}: it divides every coefficient of P")
            continue
        if hits:
            primes.append(p)
            pairs.extend(ExceptionalPair(p=p, h=h) for h in hits)
    logger.info(f"{len(primes)} exceptional primes <= {x} for H={H}")
    return ExceptionalReport(
        poly=str(poly),
        H=H,
        x=x,
        pairs=pairs,
        primes=primes,
        count=len(primes),
        comparison_value=comparison_value(H),
    )
