"""Test module for polynomials over prime fields."""

import itertools
import random

import pytest
import sympy

from polyprod.core.arith import jacobi
from polyprod.polynomials.modpoly import ModPoly
from polyprod.polynomials.modpoly import count_roots_mod
from polyprod.polynomials.modpoly import is_square_poly_mod
from polyprod.polynomials.modpoly import roots_mod
from polyprod.polynomials.modpoly import squarefree_decomposition
from polyprod.polynomials.modpoly import value_set_size


def test_normalization_and_degree() -> None:
    """Test reduction of coefficients and stripping of zeros."""
    f = ModPoly((8, -1, 7, 0), 7)
    assert f.coeffs == (1, 6)
    assert f.degree == 1
    assert ModPoly((7, 14), 7).is_zero
    assert ModPoly((), 7).degree == -1


def test_evaluate_all_matches_evaluate() -> None:
    """Test the vectorized table against Horner evaluation."""
    f = ModPoly((3, 0, 5, 1), 11)
    assert f.evaluate_all().tolist() == [f(x) for x in range(11)]


def test_divmod_identity() -> None:
    """Test a = q * b + r with deg r < deg b."""
    rng = random.Random(7)
    p = 13
    for _ in range(50):
        a = ModPoly(tuple(rng.randrange(p) for _ in range(8)), p)
        b = ModPoly(tuple(rng.randrange(p) for _ in range(4)) + (1,), p)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_division_by_zero_polynomial() -> None:
    """Test that dividing by zero raises."""
    with pytest.raises(ZeroDivisionError):
        divmod(ModPoly((1, 1), 5), ModPoly((), 5))


def test_mixed_moduli_rejected() -> None:
    """Test that arithmetic across moduli raises."""
    with pytest.raises(ValueError, match="moduli differ"):
        ModPoly((1,), 5) + ModPoly((1,), 7)


def test_count_roots_examples() -> None:
    """Test root counts of x^2 + 1 and x^2."""
    assert count_roots_mod(ModPoly((1, 0, 1), 5)) == 2
    assert count_roots_mod(ModPoly((1, 0, 1), 7)) == 0
    assert count_roots_mod(ModPoly((0, 0, 1), 7)) == 1


def test_count_roots_zero_polynomial() -> None:
    """Test that the zero polynomial is rejected."""
    with pytest.raises(ValueError, match="zero polynomial"):
        count_roots_mod(ModPoly((), 5))
    with pytest.raises(ValueError, match="zero polynomial"):
        roots_mod(ModPoly((0,), 5))


def test_roots_match_brute_scan() -> None:
    """Test both root paths against a scan of all residues for p < 500."""
    rng = random.Random(2024)
    for p in sympy.primerange(2, 500):
        for _ in range(3):
            degree = rng.randrange(1, 7)
            coeffs = [rng.randrange(p) for _ in range(degree)] + [1]
            f = ModPoly(tuple(coeffs), p)
            expected = [x for x in range(p) if f(x) == 0]
            assert roots_mod(f) == expected
            assert roots_mod(f, brute_threshold=2) == expected
            assert count_roots_mod(f) == len(expected)


def test_roots_of_split_polynomial_above_threshold() -> None:
    """Test equal-degree splitting on a product of known linear factors."""
    p = 1_000_003
    roots = [5, 17, 999_999, 123_456]
    f = ModPoly((1,), p)
    for r in roots:
        f = f * ModPoly((-r, 1), p)
    assert roots_mod(f) == sorted(roots)


def test_is_square_examples() -> None:
    """Test the documented square detection cases modulo 5."""
    g = ModPoly((1, 0, 1), 5)
    assert is_square_poly_mod(g * g)
    assert not is_square_poly_mod(g)
    assert not is_square_poly_mod(ModPoly((2, 4, 2), 5))


def test_is_square_rejects_modulus_two() -> None:
    """Test that characteristic 2 is rejected."""
    with pytest.raises(ValueError, match="modulus must be odd"):
        is_square_poly_mod(ModPoly((1, 0, 1), 2))


@pytest.mark.parametrize(("p", "degree"), [(5, 2), (3, 4), (7, 2)])
def test_is_square_matches_enumeration(p: int, degree: int) -> None:
    """Test square detection against every square of half degree."""
    half = degree // 2
    squares = set()
    for tail in itertools.product(range(p), repeat=half):
        for lead in range(1, p):
            h = ModPoly(tail + (lead,), p)
            squares.add((h * h).coeffs)
    for tail in itertools.product(range(p), repeat=degree):
        for lead in range(1, p):
            f = ModPoly(tail + (lead,), p)
            assert is_square_poly_mod(f) == (f.coeffs in squares), f


def test_is_square_scalar_multiples() -> None:
    """Test that u * g^2 is a square iff u is a residue."""
    rng = random.Random(11)
    for p in [3, 5, 7, 11, 13, 97]:
        for _ in range(10):
            g = ModPoly(tuple(rng.randrange(p) for _ in range(3)) + (1,), p)
            u = rng.randrange(1, p)
            f = (g * g).scale(u)
            assert is_square_poly_mod(f) == (jacobi(u, p) == 1)


def test_squarefree_decomposition_with_pth_powers() -> None:
    """Test factors whose multiplicity is a multiple of p."""
    p = 3
    x_plus_one = ModPoly((1, 1), p)
    cube = x_plus_one * x_plus_one * x_plus_one
    assert squarefree_decomposition(cube) == [(x_plus_one, 3)]
    assert not is_square_poly_mod(cube)
    assert is_square_poly_mod(cube * cube)
    f = ModPoly((0, 1), p) * cube
    assert squarefree_decomposition(f) == [(ModPoly((0, 1), p), 1), (x_plus_one, 3)]


def test_squarefree_decomposition_reassembles() -> None:
    """Test that lc * prod(g^m) gives back f."""
    rng = random.Random(5)
    for p in [3, 5, 7]:
        for _ in range(20):
            f = ModPoly(tuple(rng.randrange(p) for _ in range(6)) + (2,), p)
            product = ModPoly.constant(f.lc, p)
            for g, m in squarefree_decomposition(f):
                for _ in range(m):
                    product = product * g
            assert product == f


def test_resultant_matches_sympy() -> None:
    """Test the field resultant against sympy reduced mod p."""
    x = sympy.symbols("x")
    rng = random.Random(3)
    for p in [2, 3, 5, 13]:
        for _ in range(20):
            a = [rng.randrange(p) for _ in range(4)] + [1]
            b = [rng.randrange(p) for _ in range(3)] + [1]
            expected = sympy.resultant(
                sympy.Poly(list(reversed(a)), x), sympy.Poly(list(reversed(b)), x)
            )
            assert ModPoly(tuple(a), p).resultant(ModPoly(tuple(b), p)) == (
                int(expected) % p
            )


def test_value_set_size() -> None:
    """Test the number of values of x^2 and x modulo 7."""
    assert value_set_size(ModPoly((0, 0, 1), 7)) == 4
    assert value_set_size(ModPoly((0, 1), 7)) == 7
