"""The square sieve for S_d(M, N), run as an instrumented computation.

Solutions n of F_P(n) = d t^2 are split into S_1 (no other solution within
distance H) and S_2. If n and n + h are both solutions then
F_h(n) = F_P(n + h) / F_P(n) is a perfect square, so its Legendre symbol is
+1 at every sieve prime. The sieve primes are the rootless primes l in
[z, 2z] at which no F_h with h <= H is a square polynomial.
"""

import logging
from math import log
from math import sqrt
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from polyprod.core.arith import TRIAL_DIVISION_BOUND
from polyprod.core.arith import is_squarefree
from polyprod.core.arith import iter_primes
from polyprod.core.arith import jacobi
from polyprod.core.arith import legendre_table
from polyprod.errors import DegenerateReductionError
from polyprod.errors import InternalConsistencyError
from polyprod.experiments.powers import theorem_bound
from polyprod.experiments.reports import SieveReport
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import count_roots_mod
from polyprod.polynomials.modpoly import is_square_poly_mod
from polyprod.products import iter_kernels
from polyprod.products import shifted_product


logger = logging.getLogger(__name__)

MIN_WINDOW = 16


def default_parameters(N: int) -> Tuple[int, int]:
    """(H, z) = (N^(1/8) / (log N)^(1/4), sqrt N), rounded, each at least 1."""
    H = max(1, round(N ** (1 / 8) / log(N) ** (1 / 4)))
    z = max(1, round(sqrt(N)))
    return H, z


def split_by_gaps(solutions: List[int], H: int) -> Tuple[List[int], List[int]]:
    """Split sorted solutions into isolated ones (gap > H both sides) and the rest."""
    s1, s2 = [], []
    for i, n in enumerate(solutions):
        near_below = i > 0 and n - solutions[i - 1] <= H
        near_above = i + 1 < len(solutions) and solutions[i + 1] - n <= H
        (s2 if near_below or near_above else s1).append(n)
    return s1, s2


def rootless_primes(poly: IntPoly, z: int) -> Tuple[List[int], int]:
    """Odd primes l in [z, 2z] with no root of P mod l, and the prime count."""
    primes = list(iter_primes(z, 2 * z))
    rootless = []
    for ell in primes:
        if ell == 2:
            continue
        try:
            reduced = poly.reduce(ell)
        except DegenerateReductionError:
            continue
        if count_roots_mod(reduced) == 0:
            rootless.append(ell)
    return rootless, len(primes)


def sieve_primes(rootless: List[int], shifted: List[IntPoly]) -> List[int]:
    """Members of rootless at which no F_h is a square modulo l."""
    return [
        ell
        for ell in rootless
        if not any(is_square_poly_mod(f_h.reduce(ell)) for f_h in shifted)
    ]


def _character_sums(
    poly: IntPoly, primes: List[int], M: int, N: int, H: int
) -> np.ndarray:
    """sums[h - 1, i] = sum over l of (F_h(M + 1 + i) / l)."""
    sums = np.zeros((H, N), dtype=np.int64)
    n = np.arange(M + 1, M + N + H + 1, dtype=np.int64)
    for ell in primes:
        table = poly.reduce(ell).evaluate_all()
        values = table[n % ell]
        symbols = legendre_table(ell)
        window = np.ones(N, dtype=np.int64)
        for h in range(1, H + 1):
            window = window * values[h : h + N] % ell
            sums[h - 1] += symbols[window]
    return sums


def square_sieve(
    poly: IntPoly,
    d: int,
    M: int,
    N: int,
    H: Optional[int] = None,
    z: Optional[int] = None,
    *,
    threads: int = 1,
    trial_bound: int = TRIAL_DIVISION_BOUND,
) -> SieveReport:
    """Run the square sieve pipeline and report every intermediate set.

    Raises:
        ValueError: If N < 16, d is not squarefree, or no sieve prime exists
            in [z, 2z].
        InternalConsistencyError: If a member of S_2 fails the full-sum
            identity.
    """
    if N < MIN_WINDOW:
        raise ValueError(f"N must be at least {MIN_WINDOW}, got {N}")
    if not is_squarefree(d):
        raise ValueError(f"d must be squarefree, got {d}")
    default_H, default_z = default_parameters(N)
    H = default_H if H is None else H
    z = default_z if z is None else z
    if H < 1 or z < 2:
        raise ValueError(f"need H >= 1 and z >= 2, got H={H}, z={z}")

    solutions = [
        n
        for n, kernel, _ in iter_kernels(
            poly, N, M, threads=threads, trial_bound=trial_bound
        )
        if kernel == d
    ]
    s1, s2 = split_by_gaps(solutions, H)
    logger.info(f"S_d has {len(solutions)} members: |S_1|={len(s1)}, |S_2|={len(s2)}")

    shifted = [shifted_product(poly, h) for h in range(1, H + 1)]
    rootless, interval_primes = rootless_primes(poly, z)
    primes = sieve_primes(rootless, shifted)
    if not primes:
        raise ValueError(
            f"no sieve primes in [{z}, {2 * z}] (|L_z|={len(rootless)}); "
            "increase z"
        )

    members = set(solutions)
    pairs = [(n, h) for n in solutions for h in range(1, H + 1) if n + h in members]
    checked = 0
    for n in s2:
        start, h = next((a, g) for a, g in pairs if n in (a, a + g))
        value = shifted[h - 1].evaluate(start)
        total = sum(jacobi(value, ell) for ell in primes)
        if total != len(primes):
            raise InternalConsistencyError(
                f"character sum {total} != {len(primes)} for n={n}, h={h}"
            )
        checked += 1

    sums = _character_sums(poly, primes, M, N, H)
    second_moment = int((sums * sums).sum())
    sieve_bound = 2 * second_moment / len(primes) ** 2
    if sieve_bound < len(s2):
        logger.warning(f"Sieve bound {sieve_bound:.2f} below |S_2|={len(s2)}")
    return SieveReport(
        poly=str(poly),
        d=d,
        M=M,
        N=N,
        H=H,
        z=z,
        solutions=solutions,
        s1=s1,
        s2=s2,
        s1_count=len(s1),
        s2_count=len(s2),
        curly_l_size=len(rootless),
        curly_p_size=len(primes),
        interval_primes=interval_primes,
        identity_checked=checked,
        pair_count=len(pairs),
        second_moment=second_moment,
        diagonal_term=N * H * len(primes),
        sieve_bound=sieve_bound,
        sieve_bound_holds=sieve_bound >= len(s2),
        bound_value=theorem_bound(N) or 0.0,
    )
