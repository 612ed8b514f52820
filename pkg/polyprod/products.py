"""Product objects built from a polynomial P.

* F_P(n) = P(1) P(2) ... P(n), reduced mod p (orbit_mod) or tracked through
  the parity of its prime exponents over the integers (kernel_trace).
* F_h(x) = P(x+1) ... P(x+h), shifts starting at 1 (shifted_product).
* f_n(x) = P(x) P(x+1) ... P(x+n-1) - 1, shifts starting at 0
  (shifted_product_minus_one). The collision identity relies on this offset.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from functools import partial
from typing import Dict
from typing import Iterator
from typing import Optional
from typing import Tuple

import numpy as np

from polyprod.core.arith import RHO_MAX_STEPS
from polyprod.core.arith import RHO_RESTARTS
from polyprod.core.arith import TRIAL_DIVISION_BOUND
from polyprod.core.arith import FactorMap
from polyprod.core.arith import factorize
from polyprod.core.arith import is_prime
from polyprod.errors import ZeroValueError
from polyprod.parallel import map_ordered
from polyprod.polynomials.intpoly import IntPoly


logger = logging.getLogger(__name__)

# Indices factored per batch when streaming kernels.
FACTOR_BATCH = 4096


@dataclass(frozen=True)
class ProductOrbit:
    """The residues F_P(1), ..., F_P(p) modulo p.

    values[n - 1] holds F_P(n) mod p; value_at(0) is the empty product 1.
    """

    poly: IntPoly
    modulus: int
    values: np.ndarray = field(repr=False)

    def value_at(self, n: int) -> int:
        if n == 0:
            return 1
        return int(self.values[n - 1])

    def first_zero(self) -> Optional[int]:
        """Smallest n with F_P(n) = 0 mod p, or None."""
        zeros = np.flatnonzero(self.values == 0)
        return int(zeros[0]) + 1 if zeros.size else None


def orbit_mod(poly: IntPoly, p: int) -> ProductOrbit:
    """Compute F_P(1..p) mod p in one linear scan.

    Raises:
        ValueError: If p is not an odd prime.
        DegenerateReductionError: If p divides every coefficient of P.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    reduced = poly.reduce(p)
    table = reduced.evaluate_all()
    # Index n runs 1..p, so residue 0 is visited last.
    factors = np.concatenate([table[1:], table[:1]]).tolist()
    values = [0] * p
    acc = 1
    for i, v in enumerate(factors):
        acc = acc * v % p
        if acc == 0:
            break
        values[i] = acc
    return ProductOrbit(poly=poly, modulus=p, values=np.array(values, dtype=np.int64))


def shifted_product(poly: IntPoly, h: int) -> IntPoly:
    """F_h(x) = prod_{n=1..h} P(x + n).

    Raises:
        ValueError: If h < 1.
    """
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    result = IntPoly((1,))
    for n in range(1, h + 1):
        result = result * poly.shift(n)
    return result


def shifted_product_minus_one(poly: IntPoly, n: int) -> IntPoly:
    """f_n(x) = prod_{j=0..n-1} P(x + j) - 1.

    Raises:
        ValueError: If n < 1.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    result = IntPoly((1,))
    for j in range(n):
        result = result * poly.shift(j)
    return result - IntPoly((1,))


class ParityAccumulator:
    """Exponent parities of a running product of factored integers.

    kernel is the signed product of the primes currently at odd exponent; it
    is updated by one multiplication or division per flipped prime.
    """

    def __init__(self) -> None:
        self.odd: set = set()
        self.sign = 1
        self.magnitude = 1

    @property
    def kernel(self) -> int:
        return self.sign * self.magnitude

    def absorb(self, factored: FactorMap) -> None:
        self.sign *= factored.sign
        for p, e in factored.entries:
            if e % 2 == 0:
                continue
            if p in self.odd:
                self.odd.remove(p)
                self.magnitude //= p
            else:
                self.odd.add(p)
                self.magnitude *= p

    def state(self) -> FactorMap:
        odd = tuple((p, 1) for p in sorted(self.odd))
        return FactorMap(entries=odd, sign=self.sign)


@dataclass
class KernelTrace:
    """Squarefree kernels d(n) of F_P(n) for n in (lower, lower + upper].

    Attributes:
        poly: The polynomial P.
        upper: Window length N.
        lower: Window offset M.
        relative: True when kernels are of F_P(n) / F_P(M).
        kernels: n -> signed squarefree d(n).
        parity: Primes with odd exponent (and the sign) after the last step.
    """

    poly: IntPoly
    upper: int
    lower: int = 0
    relative: bool = False
    kernels: Dict[int, int] = field(default_factory=dict)
    parity: FactorMap = field(default_factory=FactorMap)

    def kernel(self, n: int) -> int:
        return self.kernels[n]


def factor_values(
    poly: IntPoly,
    start: int,
    stop: int,
    threads: int,
    trial_bound: int,
    rho_restarts: int,
    rho_max_steps: int,
) -> Iterator[Tuple[int, FactorMap]]:
    """Yield (i, factorization of P(i)) for start <= i <= stop, in order.

    Raises:
        ZeroValueError: If P(i) = 0.
    """
    factor = partial(
        factorize,
        trial_bound=trial_bound,
        rho_restarts=rho_restarts,
        rho_max_steps=rho_max_steps,
    )
    for batch_start in range(start, stop + 1, FACTOR_BATCH):
        indices = range(batch_start, min(batch_start + FACTOR_BATCH, stop + 1))
        values = []
        for i in indices:
            v = poly.evaluate(i)
            if v == 0:
                raise ZeroValueError(i)
            values.append(v)
        yield from zip(indices, map_ordered(factor, values, threads))


def iter_kernels(
    poly: IntPoly,
    upper: int,
    lower: int = 0,
    *,
    relative: bool = False,
    threads: int = 1,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_restarts: int = RHO_RESTARTS,
    rho_max_steps: int = RHO_MAX_STEPS,
    accumulator: Optional[ParityAccumulator] = None,
) -> Iterator[Tuple[int, int, FactorMap]]:
    """Stream (n, d(n), factorization of P(n)) for n = lower+1 .. lower+upper.

    Each P(i) is factored once and its odd exponents flip the parity state;
    F_P(n) itself is never formed. In absolute mode the scan starts at i = 1
    even when lower > 0.

    Raises:
        ZeroValueError: If P(i) = 0 for a scanned index.
    """
    if upper < 0 or lower < 0:
        raise ValueError("window bounds must be nonnegative")
    parity = accumulator if accumulator is not None else ParityAccumulator()
    start = lower + 1 if relative else 1
    for i, factored in factor_values(
        poly, start, lower + upper, threads, trial_bound, rho_restarts, rho_max_steps
    ):
        parity.absorb(factored)
        if i > lower:
            yield i, parity.kernel, factored


def kernel_trace(
    poly: IntPoly,
    upper: int,
    lower: int = 0,
    *,
    relative: bool = False,
    threads: int = 1,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_restarts: int = RHO_RESTARTS,
    rho_max_steps: int = RHO_MAX_STEPS,
) -> KernelTrace:
    """Materialize the kernels d(n) of F_P(n) over (lower, lower + upper].

    Raises:
        ZeroValueError: If P(i) = 0 for a scanned index.
    """
    trace = KernelTrace(poly=poly, upper=upper, lower=lower, relative=relative)
    parity = ParityAccumulator()
    for n, d, _ in iter_kernels(
        poly,
        upper,
        lower,
        relative=relative,
        threads=threads,
        trial_bound=trial_bound,
        rho_restarts=rho_restarts,
        rho_max_steps=rho_max_steps,
        accumulator=parity,
    ):
        trace.kernels[n] = d
    trace.parity = parity.state()
    logger.debug(f"Traced {len(trace.kernels)} kernels of {poly}")
    return trace


def largest_prime_factor_of_F(
    poly: IntPoly, n: int, *, threads: int = 1
) -> Optional[int]:
    """Largest prime dividing F_P(n), or None when every |P(i)| = 1.

    Raises:
        ZeroValueError: If P(i) = 0 for some i <= n.
    """
    largest: Optional[int] = None
    for _, factored in factor_values(
        poly, 1, n, threads, TRIAL_DIVISION_BOUND, RHO_RESTARTS, RHO_MAX_STEPS
    ):
        top = factored.largest_prime()
        if top is not None and (largest is None or top > largest):
            largest = top
    return largest

