"""Discriminants of the shifted products f_kq for P = x^d - a, modulo q.

With q the smallest prime factor of a and gcd(dk, q) = 1, f_kq reduced
mod q is squarefree, so Res(f_kq, f_kq') is nonzero in the field of q.
"""

import logging
from math import gcd
from typing import Iterable
from typing import List

from polyprod.dynamics import check_binomial_hypotheses
from polyprod.experiments.reports import BinomialCheckReport
from polyprod.experiments.reports import BinomialShiftResult
from polyprod.polynomials.intpoly import binomial
from polyprod.polynomials.intpoly import binomial_irreducible_over_Q
from polyprod.products import shifted_product_minus_one


logger = logging.getLogger(__name__)


def _check_shift(d: int, a: int, q: int, k: int) -> BinomialShiftResult:
    if k < 1:
        return BinomialShiftResult(k=k, accepted=False, reason="k must be positive")
    g = gcd(d * k, q)
    if g != 1:
        return BinomialShiftResult(
            k=k, accepted=False, reason=f"gcd(dk, q) = {g}, need 1"
        )
    length = k * q
    f = shifted_product_minus_one(binomial(d, a), length).reduce(q)
    res = f.resultant(f.derivative())
    if res == 0:
        logger.warning(f"Res(f_{length}, f_{length}') = 0 mod {q} for x^{d} - {a}")
    return BinomialShiftResult(
        k=k, length=length, accepted=True, resultant_mod_q=res, nonzero=res != 0
    )


def binomial_shift_check(d: int, a: int, k_list: Iterable[int]) -> BinomialCheckReport:
    """Check Res(f_kq, f_kq') mod q != 0 for each k in k_list.

    Values of k violating gcd(dk, q) = 1 are reported as rejected, not raised.

    Raises:
        ValueError: If (d, a) violates the binomial hypotheses.
    """
    q = check_binomial_hypotheses(d, a)
    results: List[BinomialShiftResult] = [_check_shift(d, a, q, k) for k in k_list]
    return BinomialCheckReport(
        d=d,
        a=a,
        q=q,
        irreducible_over_q=binomial_irreducible_over_Q(d, a),
        results=results,
    )
