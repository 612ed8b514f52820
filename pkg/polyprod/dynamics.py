"""Per-prime dynamics of n -> F_P(n) mod p.

A prime is good for P when P has no root modulo p; the orbit then never
reaches 0 and residue 0 is always missing. At a bad prime the orbit is 0
from the index n0 of the first root onwards, where a root at residue 0 is
indexed by p because n runs over 1..p.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from functools import partial
from math import e
from math import gcd
from math import sqrt
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np
from pydantic import BaseModel
from pydantic import Field

from polyprod.core.arith import factorize
from polyprod.core.arith import is_prime
from polyprod.core.arith import is_squarefree
from polyprod.core.arith import iter_primes
from polyprod.core.arith import prime_pi
from polyprod.errors import DegenerateReductionError
from polyprod.errors import InternalConsistencyError
from polyprod.parallel import map_ordered
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import BRUTE_FORCE_THRESHOLD
from polyprod.polynomials.modpoly import INT64_SAFE_MODULUS
from polyprod.polynomials.modpoly import ModPoly
from polyprod.polynomials.modpoly import count_roots_mod
from polyprod.polynomials.modpoly import roots_mod
from polyprod.polynomials.modpoly import value_set_size
from polyprod.products import ProductOrbit
from polyprod.products import orbit_mod


logger = logging.getLogger(__name__)

RANDOM_MODEL_CONSTANT = 1 - 1 / e


@dataclass(frozen=True)
class PrimeClassification:
    """Good/bad status of a prime for P; n0 is set only for bad primes."""

    p: int
    good: bool
    n0: Optional[int] = None
    small_prime: bool = False


class CollisionWitness(BaseModel):
    n: int = Field(description="Shift length of f_n.")
    t0: int = Field(description="Root of f_n modulo p, 1 <= t0 <= p - n.")
    lhs_index: int = Field(description="t0 + n - 1")
    rhs_index: int = Field(description="t0 - 1 (F_P(0) is the empty product 1)")


class ImageStats(BaseModel):
    """Image of the orbit F_P(1..p) modulo one prime."""

    p: int = Field(description="The prime modulus.")
    good: bool = Field(description="True when P has no root modulo p.")
    n0: Optional[int] = Field(
        default=None, description="Smallest index in [1, p] with P(n0) = 0 mod p."
    )
    image_size: int = Field(description="G_P(p), the number of attained residues.")
    missing: List[int] = Field(description="Residues never attained by the orbit.")
    lower_bound: float = Field(description="sqrt(p / deg P)")
    lower_bound_holds: Optional[bool] = Field(
        default=None, description="G_P(p) >= lower_bound, checked at good primes."
    )
    n0_bound_holds: Optional[bool] = Field(
        default=None, description="G_P(p) <= n0, checked at bad primes."
    )
    value_set_size: int = Field(description="Number of distinct values P(n) mod p.")
    small_prime: bool = Field(
        default=False, description="p <= deg P, outside the usual hypotheses."
    )
    collisions: List[CollisionWitness] = Field(default_factory=list)


class PerShiftTerm(BaseModel):
    n: int
    rho_sum: int = Field(description="Sum of rho_n(p) over good primes p <= x.")
    normalized: float = Field(description="rho_sum / pi(x)")


class BadPrimeSummary(BaseModel):
    count: int
    mean_missing: Optional[float] = Field(
        default=None, description="Mean of p - G_P(p) over bad primes."
    )
    all_within_n0: bool = Field(description="G_P(p) <= n0 at every bad prime.")


class MissingAverageReport(BaseModel):
    """Both sides of the averaged missing-value inequality at finite x."""

    poly: str
    x: int
    shift_lengths: List[int]
    prime_count: int = Field(description="pi(x), including the prime 2.")
    good_primes: int
    lhs: float = Field(description="(1/pi(x)) * sum over good p of (p - G_P(p))")
    rhs: float = Field(description="sum over n of (1/pi(x)) * sum of rho_n(p)")
    ratio: Optional[float] = Field(default=None, description="lhs / rhs")
    violation: bool = Field(description="True when lhs < rhs at this x.")
    per_n: List[PerShiftTerm]
    predicted_main_term: float = Field(description="sum_{n <= N} 1 / (4n)")
    mean_image_fraction: Optional[float] = Field(
        default=None, description="Mean of G_P(p) / p over good primes."
    )
    random_model_ratio: Optional[float] = Field(
        default=None, description="mean_image_fraction / (1 - 1/e)"
    )
    bad: BadPrimeSummary
    degenerate_primes: List[int] = Field(default_factory=list)


def _classification_from_orbit(orbit: ProductOrbit, degree: int) -> PrimeClassification:
    n0 = orbit.first_zero()
    return PrimeClassification(
        p=orbit.modulus,
        good=n0 is None,
        n0=n0,
        small_prime=orbit.modulus <= degree,
    )


def classify_prime(
    poly: IntPoly, p: int, *, brute_threshold: int = BRUTE_FORCE_THRESHOLD
) -> PrimeClassification:
    """Good when P mod p has no root; otherwise bad with the smallest index n0.

    Raises:
        ValueError: If p is not an odd prime.
        DegenerateReductionError: If p divides every coefficient of P.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    roots = roots_mod(poly.reduce(p), brute_threshold)
    small = p <= poly.degree
    if small:
        logger.warning(f"p={p} does not exceed deg P={poly.degree}")
    if not roots:
        return PrimeClassification(p=p, good=True, small_prime=small)
    n0 = min(r if r else p for r in roots)
    return PrimeClassification(p=p, good=False, n0=n0, small_prime=small)


def _attained(orbit: ProductOrbit) -> np.ndarray:
    attained = np.zeros(orbit.modulus, dtype=bool)
    attained[orbit.values] = True
    return attained


def image_stats(
    poly: IntPoly, p: int, *, orbit: Optional[ProductOrbit] = None
) -> ImageStats:
    """Orbit image, missing residues and the bound checks for one prime.

    Raises:
        DegenerateReductionError: If p divides every coefficient of P.
    """
    orbit = orbit if orbit is not None else orbit_mod(poly, p)
    status = _classification_from_orbit(orbit, poly.degree)
    attained = _attained(orbit)
    image_size = int(attained.sum())
    lower_bound = sqrt(p / max(poly.degree, 1))
    stats = ImageStats(
        p=p,
        good=status.good,
        n0=status.n0,
        image_size=image_size,
        missing=np.flatnonzero(~attained).tolist(),
        lower_bound=lower_bound,
        lower_bound_holds=image_size >= lower_bound if status.good else None,
        n0_bound_holds=None if status.good else image_size <= status.n0,
        value_set_size=value_set_size(poly.reduce(p)),
        small_prime=status.small_prime,
    )
    if stats.lower_bound_holds is False or stats.n0_bound_holds is False:
        logger.warning(f"Image bound fails for {poly} at p={p}: G={image_size}")
    return stats


def collision_witnesses(
    poly: IntPoly,
    p: int,
    N: int,
    *,
    orbit: Optional[ProductOrbit] = None,
    brute_threshold: int = BRUTE_FORCE_THRESHOLD,
) -> List[CollisionWitness]:
    """Orbit collisions F_P(t0 + n - 1) = F_P(t0 - 1) forced by roots of f_n.

    Only roots with 1 <= t0 <= p - n are kept so that both indices lie in
    [0, p]. Each witness is checked against the orbit before it is returned.

    Raises:
        ValueError: If p is bad for P or N >= p.
        InternalConsistencyError: If a witness disagrees with the orbit.
    """
    if N < 0 or N >= p:
        raise ValueError(f"N must satisfy 0 <= N < p, got N={N}, p={p}")
    if N == 0:
        return []
    orbit = orbit if orbit is not None else orbit_mod(poly, p)
    if orbit.first_zero() is not None:
        raise ValueError(f"{p} is not a good prime for {poly}")
    witnesses = []
    product = ModPoly.constant(1, p)
    one = ModPoly.constant(1, p)
    for n in range(1, N + 1):
        product = product * poly.shift(n - 1).reduce(p)
        f_n = product - one
        roots = list(range(p)) if f_n.is_zero else roots_mod(f_n, brute_threshold)
        for t0 in roots:
            if not 1 <= t0 <= p - n:
                continue
            witness = CollisionWitness(
                n=n, t0=t0, lhs_index=t0 + n - 1, rhs_index=t0 - 1
            )
            if orbit.value_at(witness.lhs_index) != orbit.value_at(witness.rhs_index):
                raise InternalConsistencyError(
                    f"collision (n={n}, t0={t0}) fails on the orbit mod {p}"
                )
            witnesses.append(witness)
    return witnesses


def rho_profile(
    poly: IntPoly,
    p: int,
    shift_lengths: Iterable[int],
    *,
    brute_threshold: int = BRUTE_FORCE_THRESHOLD,
) -> Dict[int, int]:
    """rho_n(p), the number of distinct roots of f_n mod p, for each n.

    Below brute_threshold all windows prod_{j<n} P(t + j) are formed at once
    for every residue t and compared with 1. Above it each f_n mod p is built
    and its roots counted. An f_n vanishing identically mod p has p roots.
    """
    lengths = sorted(set(shift_lengths))
    if not lengths:
        return {}
    if lengths[0] < 1:
        raise ValueError("shift lengths must be positive")
    wanted = set(lengths)
    profile: Dict[int, int] = {}
    if p < brute_threshold and p <= INT64_SAFE_MODULUS:
        table = poly.reduce(p).evaluate_all().astype(np.int64)
        window = np.ones(p, dtype=np.int64)
        for n in range(1, lengths[-1] + 1):
            window = window * np.roll(table, -(n - 1)) % p
            if n in wanted:
                profile[n] = int(np.count_nonzero(window == 1))
        return profile
    product = ModPoly.constant(1, p)
    one = ModPoly.constant(1, p)
    for n in range(1, lengths[-1] + 1):
        product = product * poly.shift(n - 1).reduce(p)
        if n in wanted:
            f_n = product - one
            profile[n] = p if f_n.is_zero else count_roots_mod(f_n)
    return profile


def check_binomial_hypotheses(d: int, a: int) -> int:
    """Validate x^d - a for the shifted-binomial family and return q.

    q is the smallest prime factor of a.

    Raises:
        ValueError: Naming the first violated hypothesis.
    """
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if a in (0, 1, -1):
        raise ValueError(f"a must not be 0 or +-1, got {a}")
    if gcd(d, a) != 1:
        raise ValueError(f"d and a must be coprime, gcd({d}, {a}) = {gcd(d, a)}")
    if not is_squarefree(a):
        raise ValueError(f"a must be squarefree, got {a}")
    return factorize(a).primes[0]


def binomial_shift_lengths(d: int, a: int, N: int) -> List[int]:
    """Lengths k*q for 1 <= k <= N with gcd(k, q) = 1, q the least prime of a."""
    q = check_binomial_hypotheses(d, a)
    return [k * q for k in range(1, N + 1) if gcd(k, q) == 1]


@dataclass(frozen=True)
class _PrimeSummary:
    p: int
    status: str  # "good", "bad" or "degenerate"
    image_size: int = 0
    n0: Optional[int] = None
    profile: Dict[int, int] = field(default_factory=dict)


def _prime_summary(
    p: int, poly: IntPoly, lengths: Tuple[int, ...], brute_threshold: int
) -> _PrimeSummary:
    try:
        orbit = orbit_mod(poly, p)
    except DegenerateReductionError:
        return _PrimeSummary(p=p, status="degenerate")
    n0 = orbit.first_zero()
    image_size = int(_attained(orbit).sum())
    if n0 is not None:
        return _PrimeSummary(p=p, status="bad", image_size=image_size, n0=n0)
    profile = rho_profile(poly, p, lengths, brute_threshold=brute_threshold)
    return _PrimeSummary(p=p, status="good", image_size=image_size, profile=profile)


def missing_average(
    poly: IntPoly,
    x: int,
    N: int,
    *,
    shift_lengths: Optional[Iterable[int]] = None,
    threads: int = 1,
    brute_threshold: int = BRUTE_FORCE_THRESHOLD,
) -> MissingAverageReport:
    """Compute both sides of the averaged missing-value inequality.

    LHS = (1/pi(x)) * sum_{good p <= x} (p - G_P(p)) and
    RHS = sum_{n} (1/pi(x)) * sum_{good p <= x} rho_n(p), with n over
    1..N unless explicit shift_lengths are given. Odd primes are scanned;
    pi(x) counts 2 as well. Nothing is asserted: a finite-x violation is
    flagged and logged.
    """
    if N < 1 and shift_lengths is None:
        raise ValueError(f"N must be at least 1, got {N}")
    if shift_lengths is None:
        lengths = tuple(range(1, N + 1))
    else:
        lengths = tuple(sorted(set(shift_lengths)))
    primes = list(iter_primes(3, x))
    pi_x = prime_pi(x)
    logger.info(f"missing_average over {len(primes)} odd primes <= {x}")
    worker = partial(
        _prime_summary, poly=poly, lengths=lengths, brute_threshold=brute_threshold
    )
    summaries = map_ordered(worker, primes, threads)

    missing_total = 0
    fraction_total = 0.0
    rho_sums = {n: 0 for n in lengths}
    good_count = 0
    bad_missing: List[int] = []
    bad_within = True
    degenerate: List[int] = []
    for s in summaries:
        if s.status == "degenerate":
            degenerate.append(s.p)
        elif s.status == "good":
            good_count += 1
            missing_total += s.p - s.image_size
            fraction_total += s.image_size / s.p
            for n, rho in s.profile.items():
                rho_sums[n] += rho
        else:
            bad_missing.append(s.p - s.image_size)
            bad_within = bad_within and s.image_size <= (s.n0 or 0)

    def normalize(total: int) -> float:
        return total / pi_x if pi_x else 0.0

    lhs = normalize(missing_total)
    per_n = [
        PerShiftTerm(n=n, rho_sum=rho_sums[n], normalized=normalize(rho_sums[n]))
        for n in lengths
    ]
    rhs = sum(term.normalized for term in per_n)
    mean_fraction = fraction_total / good_count if good_count else None
    report = MissingAverageReport(
        poly=str(poly),
        x=x,
        shift_lengths=list(lengths),
        prime_count=pi_x,
        good_primes=good_count,
        lhs=lhs,
        rhs=rhs,
        ratio=lhs / rhs if rhs else None,
        violation=missing_total < sum(rho_sums.values()),
        per_n=per_n,
        predicted_main_term=sum(1 / (4 * n) for n in range(1, N + 1)),
        mean_image_fraction=mean_fraction,
        random_model_ratio=(
            mean_fraction / RANDOM_MODEL_CONSTANT if mean_fraction is not None else None
        ),
        bad=BadPrimeSummary(
            count=len(bad_missing),
            mean_missing=sum(bad_missing) / len(bad_missing) if bad_missing else None,
            all_within_n0=bad_within,
        ),
        degenerate_primes=degenerate,
    )
    if report.violation:
        logger.warning(f"Finite-x violation for {poly}: lhs={lhs:.4f} < rhs={rhs:.4f}")
    return report
