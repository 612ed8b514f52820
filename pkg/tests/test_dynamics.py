"""Test module for per-prime dynamics and the averaged missing-value check."""

from math import prod
from math import sqrt
from typing import List
from typing import Tuple

import pytest
from _pytest.logging import LogCaptureFixture

from polyprod.core.arith import iter_primes
from polyprod.dynamics import binomial_shift_lengths
from polyprod.dynamics import check_binomial_hypotheses
from polyprod.dynamics import classify_prime
from polyprod.dynamics import collision_witnesses
from polyprod.dynamics import image_stats
from polyprod.dynamics import missing_average
from polyprod.dynamics import rho_profile
from polyprod.errors import DegenerateReductionError
from polyprod.polynomials.intpoly import IntPoly


def _brute_rho(poly: IntPoly, p: int, n: int) -> int:
    return sum(1 for t in range(p) if prod(poly(t + j) for j in range(n)) % p == 1)


def test_classify_prime(x_squared_plus_one: IntPoly, identity_poly: IntPoly) -> None:
    """Test good and bad primes and the index of the first root."""
    assert classify_prime(x_squared_plus_one, 7).good
    bad = classify_prime(x_squared_plus_one, 13)
    assert not bad.good
    assert bad.n0 == 5
    assert classify_prime(x_squared_plus_one, 5).n0 == 2
    assert classify_prime(identity_poly, 7).n0 == 7


def test_classify_small_prime_warns(
    x_cubed_minus_two: IntPoly, caplog: LogCaptureFixture
) -> None:
    """Test that p <= deg P is flagged and logged."""
    status = classify_prime(x_cubed_minus_two, 3)
    assert status.small_prime
    assert "does not exceed deg P" in caplog.text


def test_classify_degenerate() -> None:
    """Test that p dividing all coefficients is an error."""
    with pytest.raises(DegenerateReductionError):
        classify_prime(IntPoly((7, 14)), 7)


@pytest.mark.parametrize("p", [2, 9, 15])
def test_classify_rejects_non_odd_prime(x_squared_plus_one: IntPoly, p: int) -> None:
    """Test that a composite or even modulus is refused."""
    with pytest.raises(ValueError, match="not an odd prime"):
        classify_prime(x_squared_plus_one, p)
    with pytest.raises(ValueError, match="not an odd prime"):
        image_stats(x_squared_plus_one, p)


def test_image_stats_good_prime(x_squared_plus_one: IntPoly) -> None:
    """Test G = 4 and missing residues {0, 1, 5} modulo 7."""
    stats = image_stats(x_squared_plus_one, 7)
    assert stats.good
    assert stats.image_size == 4
    assert stats.missing == [0, 1, 5]
    assert stats.lower_bound == pytest.approx(sqrt(3.5))
    assert stats.lower_bound_holds
    assert stats.n0_bound_holds is None
    assert stats.value_set_size == 4


def test_image_stats_bad_prime(x_squared_plus_one: IntPoly) -> None:
    """Test the bad prime 5, where the orbit is [2, 0, 0, 0, 0]."""
    stats = image_stats(x_squared_plus_one, 5)
    assert not stats.good
    assert stats.n0 == 2
    assert stats.image_size == 2
    assert stats.missing == [1, 3, 4]
    assert stats.n0_bound_holds
    assert stats.lower_bound_holds is None


def test_image_size_never_exceeds_n0(x_cubed_minus_two: IntPoly) -> None:
    """Test G_P(p) <= n0 at every bad prime below 500."""
    for p in iter_primes(5, 500):
        stats = image_stats(x_cubed_minus_two, p)
        if not stats.good:
            assert stats.image_size <= stats.n0, p


@pytest.mark.slow
@pytest.mark.parametrize(
    "coeffs", [(1, 0, 1), (1, 1, 1), (-2, 0, 0, 1)], ids=["x2+1", "x2+x+1", "x3-2"]
)
def test_image_bounds_up_to_ten_thousand(coeffs: Tuple[int, ...]) -> None:
    """Test G >= sqrt(p / D) at good primes and G <= n0 at bad ones, p <= 10^4."""
    poly = IntPoly(coeffs)
    for p in iter_primes(3, 10_000):
        stats = image_stats(poly, p)
        if stats.good:
            assert stats.image_size >= sqrt(p / poly.degree), p
            assert stats.lower_bound_holds, p
        else:
            assert stats.n0 is not None
            assert stats.image_size <= stats.n0, p
            assert stats.n0_bound_holds, p


def test_collision_witnesses(x_squared_plus_one: IntPoly) -> None:
    """Test the collisions forced by f_2 = (x^2 + x + 1)^2 modulo 7."""
    witnesses = collision_witnesses(x_squared_plus_one, 7, 2)
    pairs = {(w.n, w.t0) for w in witnesses}
    assert (2, 2) in pairs
    assert pairs == {(2, 2), (2, 4)}
    first = next(w for w in witnesses if w.t0 == 2)
    assert (first.lhs_index, first.rhs_index) == (3, 1)
    assert collision_witnesses(x_squared_plus_one, 3, 1) == []
    assert collision_witnesses(x_squared_plus_one, 7, 0) == []


@pytest.mark.slow
def test_collision_witnesses_sweep(x_squared_plus_one: IntPoly) -> None:
    """Test all witnesses for n <= 20 at good p <= 10^3 against direct products."""
    checked = 0
    for p in iter_primes(3, 1_000):
        if not classify_prime(x_squared_plus_one, p).good:
            continue
        N = min(20, p - 1)
        found = {(w.n, w.t0) for w in collision_witnesses(x_squared_plus_one, p, N)}
        values = [x_squared_plus_one(i) % p for i in range(p + N + 1)]
        expected = set()
        for t0 in range(1, p):
            window = 1
            for n in range(1, min(N, p - t0) + 1):
                window = window * values[t0 + n - 1] % p
                if window == 1:
                    expected.add((n, t0))
        assert found == expected, p
        checked += len(found)
    assert checked > 0


def test_collision_witnesses_rejects_bad_input(x_squared_plus_one: IntPoly) -> None:
    """Test N >= p and bad primes."""
    with pytest.raises(ValueError, match="0 <= N < p"):
        collision_witnesses(x_squared_plus_one, 7, 7)
    with pytest.raises(ValueError, match="not a good prime"):
        collision_witnesses(x_squared_plus_one, 13, 3)


@pytest.mark.parametrize("threshold", [2, 100_000], ids=["polynomial", "table"])
def test_rho_profile_matches_brute_force(
    x_squared_plus_one: IntPoly,
    odd_primes_below_200: List[int],
    threshold: int,
) -> None:
    """Test both counting paths against direct enumeration of windows."""
    for p in odd_primes_below_200[:20]:
        profile = rho_profile(
            x_squared_plus_one, p, [1, 2, 3, 5], brute_threshold=threshold
        )
        for n, rho in profile.items():
            assert rho == _brute_rho(x_squared_plus_one, p, n), (p, n)


def test_rho_profile_edge_cases(x_squared_plus_one: IntPoly) -> None:
    """Test empty and nonpositive shift lengths."""
    assert rho_profile(x_squared_plus_one, 7, []) == {}
    with pytest.raises(ValueError):
        rho_profile(x_squared_plus_one, 7, [0, 1])


def test_missing_average_below_three(x_squared_plus_one: IntPoly) -> None:
    """Test that x < 3 has no odd primes and both sides vanish."""
    report = missing_average(x_squared_plus_one, 2, 3)
    assert report.lhs == 0
    assert report.rhs == 0
    assert report.ratio is None
    assert not report.violation


def test_missing_average_matches_direct_sums(x_squared_plus_one: IntPoly) -> None:
    """Test both sides at x = 100 against per-prime image and root counts."""
    report = missing_average(x_squared_plus_one, 100, 3)
    assert report.prime_count == 25
    good = [
        p for p in iter_primes(3, 100) if classify_prime(x_squared_plus_one, p).good
    ]
    assert report.good_primes == len(good)
    missing = sum(p - image_stats(x_squared_plus_one, p).image_size for p in good)
    assert report.lhs == pytest.approx(missing / 25)
    rho = {
        n: sum(_brute_rho(x_squared_plus_one, p, n) for p in good) for n in (1, 2, 3)
    }
    assert [t.rho_sum for t in report.per_n] == [rho[1], rho[2], rho[3]]
    assert report.rhs == pytest.approx(sum(rho.values()) / 25)
    assert report.predicted_main_term == pytest.approx(0.25 + 0.125 + 1 / 12)
    assert report.bad.all_within_n0
    assert report.degenerate_primes == []


def test_missing_average_explicit_lengths(x_squared_plus_one: IntPoly) -> None:
    """Test that explicit shift lengths replace 1..N."""
    report = missing_average(x_squared_plus_one, 60, 2, shift_lengths=[4, 2, 4])
    assert report.shift_lengths == [2, 4]
    assert [t.n for t in report.per_n] == [2, 4]


def test_missing_average_same_for_any_thread_count(x_cubed_minus_two: IntPoly) -> None:
    """Test that worker processes do not change the result."""
    single = missing_average(x_cubed_minus_two, 700, 2, threads=1)
    pooled = missing_average(x_cubed_minus_two, 700, 2, threads=2)
    assert single == pooled


def test_binomial_shift_lengths() -> None:
    """Test the lengths k q with gcd(k, q) = 1."""
    assert check_binomial_hypotheses(3, 2) == 2
    assert check_binomial_hypotheses(2, -15) == 3
    assert binomial_shift_lengths(3, 2, 5) == [2, 6, 10]
    assert binomial_shift_lengths(2, 3, 4) == [3, 6, 12]


@pytest.mark.parametrize(
    ("d", "a", "message"),
    [
        (1, 2, "at least 2"),
        (3, 1, "not be 0"),
        (2, 6, "coprime"),
        (3, 4, "squarefree"),
    ],
)
def test_binomial_hypotheses_rejected(d: int, a: int, message: str) -> None:
    """Test that each violated hypothesis is named."""
    with pytest.raises(ValueError, match=message):
        check_binomial_hypotheses(d, a)
