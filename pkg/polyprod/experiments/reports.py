"""Result models returned by the experiment procedures."""

from typing import List
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import Field


class PowerSolution(BaseModel):
    n: int = Field(description="Index with F_P(n) = m^k.")
    root: int = Field(description="The integer m.")
    root_factors: List[Tuple[int, int]] = Field(
        description="(prime, exponent) pairs of |m|, primes ascending."
    )


class PowerReport(BaseModel):
    poly: str
    k: int
    N: int
    solutions: List[PowerSolution]


class KernelClass(BaseModel):
    """The indices n sharing one squarefree kernel d."""

    kernel: Optional[int] = Field(
        default=None, description="d itself, omitted when too long to print."
    )
    digest: str = Field(description="BLAKE2b digest of d, the grouping key.")
    bit_length: int = Field(description="Bit length of |d|.")
    sign: int
    indices: List[int]


class CensusReport(BaseModel):
    poly: str
    M: int
    N: int
    distinct_fields: int = Field(
        description="Distinct kernels, i.e. quadratic fields Q(sqrt(F_P(n)))."
    )
    classes: List[KernelClass]
    max_class_size: int
    theorem_bound: Optional[float] = Field(
        default=None, description="N^(7/8) (log N)^(1/4)"
    )
    comparison_ratio: Optional[float] = Field(
        default=None, description="max_class_size / theorem_bound"
    )


class SieveReport(BaseModel):
    """Instrumented run of the square sieve over one kernel class."""

    poly: str
    d: int
    M: int
    N: int
    H: int
    z: int
    solutions: List[int] = Field(description="S_d(M, N) from the kernel census.")
    s1: List[int] = Field(description="Solutions with no other solution within H.")
    s2: List[int] = Field(description="Solutions with a partner at distance <= H.")
    s1_count: int
    s2_count: int
    curly_l_size: int = Field(description="Rootless primes in [z, 2z].")
    curly_p_size: int = Field(
        description="Members of the rootless set where no F_h, h <= H, is a square."
    )
    interval_primes: int = Field(description="Primes in [z, 2z].")
    identity_checked: int = Field(
        description="Members of S_2 whose character sum equals |curly_p|."
    )
    pair_count: int = Field(
        description="Pairs (n, h), h <= H, with n and n + h both in S_d."
    )
    second_moment: int = Field(
        description="sum_n sum_{h<=H} (sum_l (F_h(n)/l))^2 over the window."
    )
    diagonal_term: int = Field(description="N * H * |curly_p|")
    sieve_bound: float = Field(description="2 * second_moment / |curly_p|^2")
    sieve_bound_holds: bool = Field(description="sieve_bound >= s2_count")
    bound_value: float = Field(description="N^(7/8) (log N)^(1/4)")


class WeilReport(BaseModel):
    poly: str
    l: int  # noqa: E741
    p: int
    M: int
    N: int
    sum: int = Field(description="sum_{n=M+1}^{M+N} (P(n) / lp)")
    bound: float = Field(
        description="D^2 (N/(lp) + 1) (lp)^(1/2) log(lp), implied constant 1"
    )
    ratio: float = Field(description="|sum| / bound")
    flagged: bool = Field(description="ratio > 1")


class WeilGridReport(BaseModel):
    poly: str
    rows: List[WeilReport]
    max_ratio: float
    flagged: int


class DensityReport(BaseModel):
    poly: str
    z: int
    primes_total: int
    rootless: int
    rootless_fraction: float
    kappa_hat: Optional[float] = Field(
        default=None, description="primes_total / rootless"
    )
    kappa_bound: Optional[float] = Field(
        default=None, description="D! / (D - 1), absent for D = 1"
    )


class ExceptionalPair(BaseModel):
    p: int
    h: int


class ExceptionalReport(BaseModel):
    poly: str
    H: int
    x: int
    pairs: List[ExceptionalPair]
    primes: List[int] = Field(description="Distinct exceptional primes.")
    count: int = Field(description="Number of distinct exceptional primes.")
    comparison_value: Optional[float] = Field(
        default=None, description="H log H / log log H, absent for H <= 2"
    )


class RandomModelReport(BaseModel):
    p: int
    trials: int
    seed: int
    generator: str = Field(description="numpy bit generator used for the draws.")
    mean_image_fraction: float
    stddev: float
    target: float = Field(description="1 - 1/e")


class BinomialShiftResult(BaseModel):
    k: int
    length: Optional[int] = Field(default=None, description="k * q")
    accepted: bool
    reason: Optional[str] = None
    resultant_mod_q: Optional[int] = Field(
        default=None, description="Res(f_kq, f_kq') computed in the field of q"
    )
    nonzero: Optional[bool] = None


class BinomialCheckReport(BaseModel):
    d: int
    a: int
    q: int
    irreducible_over_q: bool = Field(description="x^d - a irreducible over Q.")
    results: List[BinomialShiftResult]


class RootDistanceReport(BaseModel):
    d: int
    a: int
    n: int
    roots: List[Tuple[float, float]] = Field(
        description="Distinct roots of f_n as (re, im)."
    )
    repeated_roots: bool = Field(description="f_n has a root of multiplicity > 1.")
    max_distance: float
    distance_ratio: float = Field(description="max_distance / n")
    ball_radius: float = Field(description="3 (n + sqrt|a|)")
    within_ball: bool
    g_roots_match: Optional[bool] = Field(
        default=None,
        description=(
            "Roots of f_n + 1 equal -k + zeta a^(1/d), 0 <= k < n; "
            "absent when f_n + 1 has repeated roots."
        ),
    )
