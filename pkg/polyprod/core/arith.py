"""Integer primitives: primality, prime enumeration, quadratic symbols,
factorization, squarefree kernels and perfect-power tests.

Everything here is a pure function of its arguments. The sieve allocates a
fresh buffer per call, so the module is safe to use from worker processes.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Dict
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Optional
from typing import Tuple

import gmpy2
import numpy as np

from polyprod.errors import FactorizationError


logger = logging.getLogger(__name__)

# Miller-Rabin with these bases is exact for every n < 3.18 * 10^23 > 2^64.
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Above 2^64: strong probable-prime test to the first 40 prime bases.
PROBABILISTIC_BASES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173,
)  # fmt: skip
DETERMINISTIC_LIMIT = 1 << 64

TRIAL_DIVISION_BOUND = 1_000_000
RHO_RESTARTS = 20
RHO_MAX_STEPS = 1_000_000
SEGMENT_SIZE = 1 << 18


@dataclass(frozen=True)
class FactorMap:
    """A signed factorization sign * prod(p ** e).

    Attributes:
        entries: (prime, exponent) pairs with strictly increasing primes and
            exponents >= 1.
        sign: +1 or -1.
    """

    entries: Tuple[Tuple[int, int], ...] = ()
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        previous = 1
        for p, e in self.entries:
            if p <= previous or e < 1:
                raise ValueError(f"invalid factor entry ({p}, {e})")
            previous = p

    @classmethod
    def from_dict(cls, exponents: Mapping[int, int], sign: int = 1) -> "FactorMap":
        """Build from a prime -> exponent mapping, dropping zero exponents."""
        return cls(
            entries=tuple((p, e) for p, e in sorted(exponents.items()) if e),
            sign=sign,
        )

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.entries]

    def value(self) -> int:
        """Reassemble the factored integer."""
        product = gmpy2.mpz(self.sign)
        for p, e in self.entries:
            product *= gmpy2.mpz(p) ** e
        return int(product)

    def merge(self, other: "FactorMap") -> "FactorMap":
        """Factorization of the product of the two factored integers."""
        exponents = Counter(self.as_dict())
        exponents.update(other.as_dict())
        return FactorMap.from_dict(exponents, self.sign * other.sign)

    def largest_prime(self) -> Optional[int]:
        return self.entries[-1][0] if self.entries else None


def _strong_probable_prime(n: int, d: int, s: int, base: int) -> bool:
    x = gmpy2.powmod(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Return True iff n is prime.

    Exact for n < 2^64. Larger n run a strong probable-prime test to the 40
    fixed bases in PROBABILISTIC_BASES, so repeated runs agree.
    """
    if n < 2:
        return False
    for p in PROBABILISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = DETERMINISTIC_BASES if n < DETERMINISTIC_LIMIT else PROBABILISTIC_BASES
    return all(_strong_probable_prime(n, d, s, a) for a in bases)


@lru_cache(maxsize=8)
def _sieve_upto(limit: int) -> Tuple[int, ...]:
    if limit < 2:
        return ()
    mark = np.ones(limit + 1, dtype=bool)
    mark[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if mark[i]:
            mark[i * i :: i] = False
    return tuple(np.flatnonzero(mark).tolist())


def iter_primes(lo: int, hi: int, segment_size: int = SEGMENT_SIZE) -> Iterator[int]:
    """Yield the primes in [lo, hi] in ascending order, one segment at a time."""
    lo = max(lo, 2)
    if lo > hi:
        return
    base = _sieve_upto(isqrt(hi))
    for seg_lo in range(lo, hi + 1, segment_size):
        seg_hi = min(seg_lo + segment_size - 1, hi)
        mark = np.ones(seg_hi - seg_lo + 1, dtype=bool)
        for p in base:
            if p * p > seg_hi:
                break
            start = max(p * p, -(-seg_lo // p) * p)
            mark[start - seg_lo :: p] = False
        yield from (np.flatnonzero(mark) + seg_lo).tolist()


def primes_in(lo: int, hi: int) -> List[int]:
    """Return the primes p with lo <= p <= hi, ascending (empty if lo > hi)."""
    return list(iter_primes(lo, hi))


def prime_pi(x: int) -> int:
    """Number of primes <= x."""
    return sum(1 for _ in iter_primes(2, x))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) by binary reciprocity.

    Raises:
        ValueError: If n is even or not positive.
    """
    if n % 2 == 0:
        raise ValueError("modulus must be odd")
    if n < 1:
        raise ValueError("modulus must be positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_table(p: int) -> np.ndarray:
    """Legendre symbols (r/p) for r = 0..p-1 as an int8 array (p odd prime)."""
    table = np.full(p, -1, dtype=np.int8)
    table[0] = 0
    r = np.arange(1, p, dtype=np.int64)
    table[(r * r) % p] = 1
    return table


@lru_cache(maxsize=4)
def small_primes(bound: int) -> Tuple[int, ...]:
    return _sieve_upto(bound)


def _brent_rho(n: int, restarts: int, max_steps: int) -> Optional[int]:
    """Find a nontrivial factor of the odd composite n, or None.

    Seeds are fixed: x0 = 2 and c = 1, 2, ..., restarts.
    """
    mn = gmpy2.mpz(n)
    batch = 128
    for c in range(1, restarts + 1):
        y, r, q, g = gmpy2.mpz(2), 1, gmpy2.mpz(1), gmpy2.mpz(1)
        x = ys = y
        steps = 0
        while g == 1 and steps <= max_steps:
            x = y
            for _ in range(r):
                y = (y * y + c) % mn
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % mn
                    q = q * abs(x - y) % mn
                g = gmpy2.gcd(q, mn)
                k += batch
            steps += 2 * r
            r *= 2
        if g == 1:
            continue
        if g == mn:
            while True:
                ys = (ys * ys + c) % mn
                g = gmpy2.gcd(abs(x - ys), mn)
                if g > 1:
                    break
        if 1 < g < mn:
            logger.debug(f"rho seed c={c} split {n}")
            return int(g)
    return None


def factorize(
    n: int,
    *,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_restarts: int = RHO_RESTARTS,
    rho_max_steps: int = RHO_MAX_STEPS,
) -> FactorMap:
    """Completely factor a nonzero integer.

    Trial division by primes up to trial_bound, then Brent-Pollard rho with
    primality-certified cofactors.

    Raises:
        ValueError: If n is zero.
        FactorizationError: If a cofactor resists every rho seed.
    """
    if n == 0:
        raise ValueError("zero has no factorization")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: Counter = Counter()
    exhausted = True
    for i, p in enumerate(small_primes(trial_bound)):
        if p * p > m:
            exhausted = False
            break
        if m % p == 0:
            while m % p == 0:
                m //= p
                found[p] += 1
        elif i % 512 == 511:
            if is_prime(m):
                exhausted = False
                break
            if p**3 > m:
                # Every prime factor exceeds p, so m is a product of two primes.
                break
    if m > 1 and not exhausted:
        found[m] += 1
    elif m > 1:
        pending = [m]
        while pending:
            c = pending.pop()
            if is_prime(c):
                found[c] += 1
                continue
            root, exact = gmpy2.iroot(gmpy2.mpz(c), 2)
            if exact:
                pending.extend([int(root), int(root)])
                continue
            d = _brent_rho(c, rho_restarts, rho_max_steps)
            if d is None:
                raise FactorizationError(n, FactorMap.from_dict(found, sign), c)
            pending.extend([d, c // d])
    return FactorMap.from_dict(found, sign)


def squarefree_kernel(f: FactorMap) -> int:
    """Signed product of the primes with odd exponent.

    The quotient of the factored integer by the kernel is a positive square.
    """
    d = gmpy2.mpz(f.sign)
    for p, e in f.entries:
        if e % 2:
            d *= p
    return int(d)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).entries)


def is_perfect_kth_power(a: int, k: int) -> Optional[int]:
    """Return m with m ** k == a, or None when no integer root exists.

    Raises:
        ValueError: If k < 2.
    """
    if k < 2:
        raise ValueError(f"exponent must be at least 2, got {k}")
    if a == 0:
        return 0
    if a < 0:
        if k % 2 == 0:
            return None
        root = is_perfect_kth_power(-a, k)
        return None if root is None else -root
    root, exact = gmpy2.iroot(gmpy2.mpz(a), k)
    return int(root) if exact else None
