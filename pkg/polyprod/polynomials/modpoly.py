"""Polynomials over the prime field with p elements.

Coefficients are stored ascending, c0 first, as residues in [0, p). The zero
polynomial has an empty coefficient tuple and degree -1.
"""

import logging
from dataclasses import dataclass
from typing import Iterable
from typing import List
from typing import Tuple

import numpy as np

from polyprod.core.arith import jacobi


logger = logging.getLogger(__name__)

BRUTE_FORCE_THRESHOLD = 100_000
# p * p must fit in int64 for the vectorized evaluation table.
INT64_SAFE_MODULUS = 3_037_000_499


def _strip(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class ModPoly:
    """Immutable polynomial with coefficients reduced modulo a prime.

    Attributes:
        coeffs: Ascending residues, trailing zeros stripped on construction.
        modulus: The prime p.
    """

    coeffs: Tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be a prime, got {self.modulus}")
        p = self.modulus
        object.__setattr__(self, "coeffs", _strip([int(c) % p for c in self.coeffs]))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int) -> "ModPoly":
        return cls(tuple(coeffs), p)

    @classmethod
    def x(cls, p: int) -> "ModPoly":
        return cls((0, 1), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "ModPoly":
        return cls((c,), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __repr__(self) -> str:
        return f"ModPoly({list(self.coeffs)}, p={self.modulus})"

    def _like(self, coeffs: Iterable[int]) -> "ModPoly":
        return ModPoly(tuple(coeffs), self.modulus)

    def _check(self, other: "ModPoly") -> None:
        if other.modulus != self.modulus:
            raise ValueError(
                f"moduli differ: {self.modulus} and {other.modulus}"
            )

    def evaluate(self, x: int) -> int:
        """Horner evaluation at x, returning a residue."""
        p = self.modulus
        x %= p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    __call__ = evaluate

    def evaluate_all(self) -> np.ndarray:
        """Values f(0), f(1), ..., f(p-1) as one vectorized Horner pass."""
        p = self.modulus
        dtype = np.int64 if p <= INT64_SAFE_MODULUS else object
        xs = np.arange(p, dtype=np.int64).astype(dtype)
        acc = np.zeros(p, dtype=dtype)
        for c in reversed(self.coeffs):
            acc = (acc * xs + c) % p
        return acc

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return self._like(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        )

    def __neg__(self) -> "ModPoly":
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like(())
        p = self.modulus
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return self._like(c % p for c in out)

    def scale(self, k: int) -> "ModPoly":
        return self._like(c * k for c in self.coeffs)

    def monic(self) -> "ModPoly":
        if self.is_zero:
            return self
        return self.scale(pow(self.lc, -1, self.modulus))

    def __divmod__(self, other: "ModPoly") -> Tuple["ModPoly", "ModPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.modulus
        rem = list(self.coeffs)
        db = other.degree
        inv = pow(other.lc, -1, p)
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - db - 1, -1, -1):
            c = rem[shift + db] * inv % p
            quot[shift] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * bj) % p
        return self._like(quot), self._like(rem[:db] if db > 0 else [])

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "ModPoly":
        return self._like(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "ModPoly") -> "ModPoly":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        """self ** e reduced modulo the polynomial modulus."""
        result = self._like((1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            e >>= 1
            if e:
                base = base * base % modulus
        return result

    def resultant(self, other: "ModPoly") -> int:
        """Resultant in the prime field by the Euclidean recurrence.

        Uses Res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * Res(b, r)
        with r = a mod b. Valid for p = 2 as well.
        """
        self._check(other)
        p = self.modulus
        a, b = self, other
        if a.is_zero or b.is_zero:
            return 0
        result = 1
        while True:
            da, db = a.degree, b.degree
            if db == 0:
                return result * pow(b.lc, da, p) % p
            r = a % b
            if r.is_zero:
                return 0
            if (da * db) % 2:
                result = -result
            result = result * pow(b.lc, da - r.degree, p) % p
            a, b = b, r

    def pth_root(self) -> "ModPoly":
        """g with g(x^p) = self, assuming self has zero derivative."""
        p = self.modulus
        return self._like(self.coeffs[::p])


def _require_nonzero(f: ModPoly) -> None:
    if f.is_zero:
        raise ValueError("zero polynomial")


def distinct_root_part(f: ModPoly) -> ModPoly:
    """gcd(x^p - x, f): the monic product of (x - r) over the roots r of f."""
    _require_nonzero(f)
    if f.degree < 1:
        return f._like((1,))
    x = ModPoly.x(f.modulus)
    xp = x.powmod(f.modulus, f)
    return (xp - x).gcd(f)


def count_roots_mod(f: ModPoly) -> int:
    """Number of distinct roots of f in the prime field.

    Raises:
        ValueError: If f is the zero polynomial.
    """
    return distinct_root_part(f).degree


def _split_roots(g: ModPoly) -> List[int]:
    # g is monic and a product of distinct linear factors.
    p = g.modulus
    if g.degree == 0:
        return []
    if g.degree == 1:
        return [(-g.coeffs[0]) % p]
    half = (p - 1) // 2
    delta = 0
    while True:
        splitter = ModPoly((delta, 1), p).powmod(half, g) - ModPoly.constant(1, p)
        h = splitter.gcd(g)
        if 0 < h.degree < g.degree:
            return _split_roots(h) + _split_roots(g // h)
        delta += 1


def roots_mod(f: ModPoly, brute_threshold: int = BRUTE_FORCE_THRESHOLD) -> List[int]:
    """Sorted distinct roots of f in [0, p).

    Below brute_threshold the roots come from a vectorized scan of every
    residue; above it from equal-degree splitting of gcd(x^p - x, f) with the
    deterministic shift sequence (x + 0), (x + 1), ...

    Raises:
        ValueError: If f is the zero polynomial.
    """
    _require_nonzero(f)
    p = f.modulus
    if p < brute_threshold or p == 2:
        return np.flatnonzero(f.evaluate_all() == 0).tolist()
    return sorted(_split_roots(distinct_root_part(f)))


def squarefree_decomposition(f: ModPoly) -> List[Tuple[ModPoly, int]]:
    """Monic squarefree factors with multiplicities.

    Returns pairs (g, m), the g pairwise coprime and squarefree, such that
    f = lc(f) * prod(g ** m). Parts whose derivative vanishes are handled by
    taking p-th roots.

    Raises:
        ValueError: If f is the zero polynomial.
    """
    _require_nonzero(f)
    result: List[Tuple[ModPoly, int]] = []
    _yun(f.monic(), 1, result)
    return sorted(result, key=lambda item: (item[1], item[0].coeffs))


def _yun(f: ModPoly, multiplier: int, out: List[Tuple[ModPoly, int]]) -> None:
    if f.degree < 1:
        return
    p = f.modulus
    fp = f.derivative()
    if fp.is_zero:
        _yun(f.pth_root(), multiplier * p, out)
        return
    c = f.gcd(fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i * multiplier))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        _yun(c.pth_root(), multiplier * p, out)


def is_square_poly_mod(f: ModPoly) -> bool:
    """True iff f = g^2 for some g over the prime field.

    Raises:
        ValueError: If f is zero or the modulus is 2.
    """
    _require_nonzero(f)
    if f.modulus == 2:
        raise ValueError("modulus must be odd")
    if jacobi(f.lc, f.modulus) != 1:
        return False
    return all(m % 2 == 0 for _, m in squarefree_decomposition(f))


def value_set_size(f: ModPoly) -> int:
    """Number of distinct values f(n) mod p over n in [0, p)."""
    return int(np.unique(f.evaluate_all()).size)
