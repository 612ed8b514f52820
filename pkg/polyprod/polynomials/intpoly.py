"""Integer polynomials: exact arithmetic, resultants, discriminants, the
binomial irreducibility criterion and numeric complex roots.

Coefficients are ascending (c0, c1, ..., cd) Python integers. The zero
polynomial has no coefficients and degree -1.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from math import comb
from math import gcd
from math import pi
from typing import Iterable
from typing import List
from typing import Tuple
from typing import Union

import numpy as np

from polyprod.core.arith import factorize
from polyprod.core.arith import is_perfect_kth_power
from polyprod.errors import DegenerateReductionError
from polyprod.errors import RootFindingError
from polyprod.polynomials.modpoly import ModPoly


logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-10
ROOT_MAX_ITERATIONS = 1000


def _strip(coeffs: List[int]) -> Tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip([int(c) for c in self.coeffs]))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

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
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        from polyprod.polynomials.parser import format_polynomial

        return format_polynomial(self)

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(tuple(out))

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(tuple(c * k for c in self.coeffs))

    def exact_div_scalar(self, k: int) -> "IntPoly":
        return IntPoly(tuple(c // k for c in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        """Gcd of the coefficients, signed like the leading coefficient."""
        g = reduce(gcd, self.coeffs, 0)
        return -g if self.lc < 0 else g

    def shift(self, k: int) -> "IntPoly":
        """The Taylor shift P(x + k), by binomial rebasing of each power."""
        n = len(self.coeffs)
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            if c:
                for j in range(i + 1):
                    out[j] += c * comb(i, j) * k ** (i - j)
        return IntPoly(tuple(out))

    def reduce(self, p: int) -> ModPoly:
        """Reduction modulo the prime p.

        Raises:
            DegenerateReductionError: If p divides every coefficient.
        """
        reduced = ModPoly(self.coeffs, p)
        if reduced.is_zero:
            raise DegenerateReductionError(p)
        return reduced


def evaluate(f: Union[IntPoly, ModPoly], x: int) -> int:
    """Horner evaluation: exact for IntPoly, a residue for ModPoly."""
    return f.evaluate(x)


def binomial(d: int, a: int) -> IntPoly:
    """The binomial x^d - a."""
    return IntPoly((-a,) + (0,) * (d - 1) + (1,))


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    # lc(b)^(deg a - deg b + 1) * a = q * b + r
    lb, db = b.lc, b.degree
    r = a
    e = a.degree - db + 1
    while not r.is_zero and r.degree >= db:
        term = IntPoly((0,) * (r.degree - db) + (r.lc,))
        r = r.scale(lb) - term * b
        e -= 1
    return r.scale(lb**e)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Exact resultant over the integers by the subresultant PRS.

    A constant argument c gives Res(f, c) = c^deg(f).
    """
    if a.is_zero or b.is_zero:
        return 0
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if (a.degree * b.degree) % 2:
            sign = -sign
    if b.degree == 0:
        return sign * b.lc**a.degree
    ca, cb = a.content(), b.content()
    a, b = a.exact_div_scalar(ca), b.exact_div_scalar(cb)
    t = ca**b.degree * cb**a.degree
    g = h = 1
    while True:
        delta = a.degree - b.degree
        if (a.degree * b.degree) % 2:
            sign = -sign
        r = _pseudo_remainder(a, b)
        a, b = b, r.exact_div_scalar(g * h**delta)
        g = a.lc
        if delta:
            h = g**delta // h ** (delta - 1)
        if b.degree <= 0:
            break
    if b.is_zero:
        return 0
    h = b.lc**a.degree // h ** (a.degree - 1)
    return sign * t * h


def exact_divide(a: IntPoly, b: IntPoly) -> IntPoly:
    """The quotient a / b when b divides a over the integers.

    Raises:
        ValueError: If b is zero or does not divide a.
    """
    if b.is_zero:
        raise ValueError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    quot = [0] * max(len(rem) - db, 0)
    for shift in range(len(rem) - db - 1, -1, -1):
        c, r = divmod(rem[shift + db], b.lc)
        if r:
            raise ValueError(f"{b!r} does not divide {a!r}")
        quot[shift] = c
        for j, bj in enumerate(b.coeffs):
            rem[shift + j] -= c * bj
    if any(rem):
        raise ValueError(f"{b!r} does not divide {a!r}")
    return IntPoly(tuple(quot))


def _primitive(f: IntPoly) -> IntPoly:
    return f.exact_div_scalar(f.content()) if not f.is_zero else f


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.degree < b.degree:
        a, b = b, a
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero:
        a, b = b, _primitive(_pseudo_remainder(a, b))
    return a


def squarefree_part(f: IntPoly) -> IntPoly:
    """f divided by gcd(f, f'): the same roots, each with multiplicity one."""
    if f.degree < 1:
        return f
    return exact_divide(f, poly_gcd(f, f.derivative()))


def discriminant(f: IntPoly) -> int:
    """(-1)^(d(d-1)/2) * Res(f, f') / lc(f), computed exactly.

    Raises:
        ValueError: If deg f < 1.
    """
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree at least 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) // f.lc


def trinomial_discriminant(d: int, a: int, b: int) -> int:
    """Closed form for disc(x^d + a x + b)."""
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * ((1 - d) ** (d - 1) * a**d + d**d * b ** (d - 1))


def binomial_irreducible_over_Q(d: int, a: int) -> bool:
    """Irreducibility of x^d - a over the rationals.

    x^d - a is irreducible iff a is not an l-th power for any prime l | d and,
    when 4 | d, a is not of the form -4 m^4. For integer a the rational roots
    in both tests are integers.

    Raises:
        ValueError: If d < 2 or a = 0.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    if a == 0:
        raise ValueError("a must be nonzero")
    for ell in factorize(d).primes:
        if is_perfect_kth_power(a, ell) is not None:
            return False
    if d % 4 == 0 and a % 4 == 0 and is_perfect_kth_power(-a // 4, 4) is not None:
        return False
    return True


def complex_roots(
    f: IntPoly,
    tol: float = ROOT_TOLERANCE,
    max_iterations: int = ROOT_MAX_ITERATIONS,
) -> List[complex]:
    """All complex roots of a squarefree f by Aberth's simultaneous iteration.

    Start points lie on the circle of radius 1 + max|c_i / c_d|. A root is
    accepted once |f(z)| < tol * max(max|c_i|, sum |c_i| |z|^i). This replaces
    the plain |f(z)| < tol * max|c_i| test: evaluating f in double precision
    at |z| > 1 carries a rounding error proportional to sum |c_i| |z|^i, so the
    plain test cannot be met for the roots of f_n once n grows.

    Raises:
        ValueError: If deg f < 1, or "repeated roots" when disc f = 0.
        RootFindingError: If the iteration does not converge.
    """
    n = f.degree
    if n < 1:
        raise ValueError("complex roots need degree at least 1")
    if discriminant(f) == 0:
        raise ValueError("repeated roots")
    desc = np.array([float(c) for c in reversed(f.coeffs)], dtype=complex)
    ddesc = np.polyder(desc)
    abs_desc = np.abs(desc)
    radius = 1 + float(np.max(np.abs(desc[1:] / desc[0])))
    angles = 2 * pi * np.arange(n) / n + 0.4
    z = radius * np.exp(1j * angles)
    scale = float(np.max(abs_desc))
    residual = np.inf
    for iteration in range(1, max_iterations + 1):
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.polyval(desc, z) / np.polyval(ddesc, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1)
            inverse = 1 / diff
            np.fill_diagonal(inverse, 0)
            step = ratio / (1 - ratio * inverse.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0)
        z = z - step
        values = np.abs(np.polyval(desc, z))
        magnitude = np.maximum(scale, np.polyval(abs_desc, np.abs(z)))
        residual = float(np.max(values / magnitude))
        if residual < tol:
            logger.debug(f"Aberth converged for degree {n} in {iteration} steps")
            return sorted(z.tolist(), key=lambda w: (round(w.real, 9), w.imag))
    raise RootFindingError(z.tolist(), residual, max_iterations)
