"""Perfect-power solutions F_P(n) = m^k and the kernel census of a window."""

import hashlib
import logging
from collections import Counter
from math import log
from typing import Dict
from typing import List
from typing import Optional

from polyprod.core.arith import RHO_MAX_STEPS
from polyprod.core.arith import RHO_RESTARTS
from polyprod.core.arith import TRIAL_DIVISION_BOUND
from polyprod.core.arith import FactorMap
from polyprod.experiments.reports import CensusReport
from polyprod.experiments.reports import KernelClass
from polyprod.experiments.reports import PowerReport
from polyprod.experiments.reports import PowerSolution
from polyprod.polynomials.intpoly import IntPoly
from polyprod.products import factor_values
from polyprod.products import iter_kernels


logger = logging.getLogger(__name__)

KERNEL_DIGITS_LIMIT = 64


def theorem_bound(N: int) -> Optional[float]:
    """N^(7/8) (log N)^(1/4), or None when N < 2."""
    if N < 2:
        return None
    return N ** (7 / 8) * log(N) ** (1 / 4)


def find_power_solutions(
    poly: IntPoly,
    k: int,
    N: int,
    *,
    threads: int = 1,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_restarts: int = RHO_RESTARTS,
    rho_max_steps: int = RHO_MAX_STEPS,
) -> PowerReport:
    """All n <= N with F_P(n) a perfect k-th power, with m in factored form.

    Exponents are tracked in full; a counter of exponents not divisible by k
    makes each step O(number of primes of P(n)).

    Raises:
        ValueError: If k < 2.
        ZeroValueError: If P(i) = 0 for some i <= N.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    exponents: Counter = Counter()
    off = 0
    sign = 1
    solutions: List[PowerSolution] = []
    for n, factored in factor_values(
        poly, 1, N, threads, trial_bound, rho_restarts, rho_max_steps
    ):
        sign *= factored.sign
        for p, e in factored.entries:
            before = exponents[p] % k
            exponents[p] += e
            after = exponents[p] % k
            off += (after != 0) - (before != 0)
        if off == 0 and (sign > 0 or k % 2):
            root = FactorMap.from_dict({p: e // k for p, e in exponents.items()}, sign)
            solutions.append(
                PowerSolution(n=n, root=root.value(), root_factors=list(root.entries))
            )
    logger.info(f"{len(solutions)} perfect {k}-th powers among F_P(1..{N})")
    return PowerReport(poly=str(poly), k=k, N=N, solutions=solutions)


def kernel_digest(d: int) -> str:
    """BLAKE2b digest of a signed integer, linear in its size."""
    raw = d.to_bytes((d.bit_length() + 8) // 8, "big", signed=True)
    return hashlib.blake2b(raw, digest_size=16).hexdigest()


def s_d_census(
    poly: IntPoly,
    M: int,
    N: int,
    *,
    threads: int = 1,
    kernel_digits_limit: int = KERNEL_DIGITS_LIMIT,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_restarts: int = RHO_RESTARTS,
    rho_max_steps: int = RHO_MAX_STEPS,
) -> CensusReport:
    """Group n in (M, M+N] by the absolute squarefree kernel of F_P(n).

    Kernels are grouped by digest so that only one copy of each long kernel's
    hash is held. Kernels with more than kernel_digits_limit decimal digits
    are reported by digest and bit length alone.

    Raises:
        ZeroValueError: If P(i) = 0 for some i <= M + N.
    """
    printable = 10**kernel_digits_limit
    classes: Dict[str, KernelClass] = {}
    for n, d, _ in iter_kernels(
        poly,
        N,
        M,
        threads=threads,
        trial_bound=trial_bound,
        rho_restarts=rho_restarts,
        rho_max_steps=rho_max_steps,
    ):
        key = kernel_digest(d)
        entry = classes.get(key)
        if entry is None:
            classes[key] = KernelClass(
                kernel=d if abs(d) < printable else None,
                digest=key,
                bit_length=abs(d).bit_length(),
                sign=-1 if d < 0 else 1,
                indices=[n],
            )
        else:
            entry.indices.append(n)
    ordered = sorted(classes.values(), key=lambda c: c.indices[0])
    largest = max((len(c.indices) for c in ordered), default=0)
    bound = theorem_bound(N)
    logger.info(f"{len(ordered)} distinct kernels for n in ({M}, {M + N}]")
    return CensusReport(
        poly=str(poly),
        M=M,
        N=N,
        distinct_fields=len(ordered),
        classes=ordered,
        max_class_size=largest,
        theorem_bound=bound,
        comparison_ratio=largest / bound if bound else None,
    )
