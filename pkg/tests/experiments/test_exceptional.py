"""Test module for primes where a shifted product is a square polynomial."""

from itertools import product
from math import log

import pytest
import sympy
from _pytest.logging import LogCaptureFixture

from polyprod.core.arith import primes_in
from polyprod.experiments.exceptional import comparison_value
from polyprod.experiments.exceptional import exceptional_prime_census
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.modpoly import ModPoly
from polyprod.products import shifted_product


X = sympy.symbols("x")


def _is_square_by_search(f: ModPoly) -> bool:
    """Search every g of degree deg(f) / 2 for g^2 = f."""
    if f.degree % 2:
        return False
    p = f.modulus
    half = f.degree // 2
    for lead in range(1, p):
        for low in product(range(p), repeat=half):
            g = ModPoly(tuple(low) + (lead,), p)
            if (g * g).coeffs == f.coeffs:
                return True
    return False


def test_no_exceptional_primes(x_squared_plus_one: IntPoly) -> None:
    """Test that (x + 1)^2 + 1 is never a square modulo an odd prime."""
    report = exceptional_prime_census(x_squared_plus_one, 1, 50)
    assert report.pairs == []
    assert report.count == 0
    assert report.comparison_value is None


def test_every_prime_is_exceptional_for_a_square() -> None:
    """Test that P = x^2 gives a square F_1 at every odd prime."""
    report = exceptional_prime_census(IntPoly((0, 0, 1)), 1, 50)
    odd = [p for p in range(3, 51) if all(p % q for q in range(2, p))]
    assert report.primes == odd
    assert [(e.p, e.h) for e in report.pairs] == [(p, 1) for p in odd]


def test_census_matches_exhaustive_search() -> None:
    """Test x^2 + 15, whose shifted products are squares only mod 3 and 5."""
    poly = IntPoly((15, 0, 1))
    report = exceptional_prime_census(poly, 2, 13)
    assert [(e.p, e.h) for e in report.pairs] == [(3, 1), (3, 2), (5, 1), (5, 2)]
    for p in [3, 5, 7, 11, 13]:
        for h in (1, 2):
            expected = _is_square_by_search(shifted_product(poly, h).reduce(p))
            assert ((p, h) in {(e.p, e.h) for e in report.pairs}) == expected


def test_degenerate_primes_are_skipped(caplog: LogCaptureFixture) -> None:
    """Test that a prime dividing every coefficient is logged and skipped."""
    report = exceptional_prime_census(IntPoly((3, 0, 3)), 1, 10)
    assert 3 not in report.primes
    assert "Skipping p=3" in caplog.text


def test_comparison_value_and_errors(x_squared_plus_one: IntPoly) -> None:
    """Test H log H / log log H and rejected arguments."""
    assert comparison_value(2) is None
    assert comparison_value(10) == pytest.approx(10 * log(10) / log(log(10)))
    with pytest.raises(ValueError):
        exceptional_prime_census(x_squared_plus_one, 0, 50)
    with pytest.raises(ValueError):
        exceptional_prime_census(x_squared_plus_one, 1, 2)


def _is_square_by_factoring(f: ModPoly) -> bool:
    """Square-free factorization by sympy: even multiplicities, residue lead."""
    p = f.modulus
    lead, factors = sympy.Poly(list(reversed(f.coeffs)), X, modulus=p).sqf_list()
    lead_is_residue = pow(int(lead) % p, (p - 1) // 2, p) == 1
    return all(e % 2 == 0 for _, e in factors) and lead_is_residue


@pytest.mark.slow
def test_census_up_to_one_thousand(x_squared_plus_one: IntPoly) -> None:
    """Test H = 3 and x = 10^3 pair by pair against independent square tests."""
    report = exceptional_prime_census(x_squared_plus_one, 3, 1_000)
    flagged = {(e.p, e.h) for e in report.pairs}
    assert report.count == len({p for p, _ in flagged})
    for p, h in flagged:
        assert _is_square_by_search(shifted_product(x_squared_plus_one, h).reduce(p))
    for p in primes_in(3, 1_000):
        for h in (1, 2, 3):
            f_h = shifted_product(x_squared_plus_one, h).reduce(p)
            assert ((p, h) in flagged) == _is_square_by_factoring(f_h), (p, h)
            if p <= 13:
                assert ((p, h) in flagged) == _is_square_by_search(f_h), (p, h)
