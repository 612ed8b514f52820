"""Test configuration module."""

import os
from typing import List

import pytest

from polyprod.configuration import Configuration
from polyprod.polynomials.intpoly import IntPoly


@pytest.fixture
def x_squared_plus_one() -> IntPoly:
    """Create x^2 + 1."""
    return IntPoly((1, 0, 1))


@pytest.fixture
def x_cubed_minus_two() -> IntPoly:
    """Create x^3 - 2."""
    return IntPoly((-2, 0, 0, 1))


@pytest.fixture
def identity_poly() -> IntPoly:
    """Create P(x) = x, for which F_P(n) = n!."""
    return IntPoly((0, 1))


@pytest.fixture
def odd_primes_below_200() -> List[int]:
    """Create the odd primes below 200 by trial division."""
    return [p for p in range(3, 200) if all(p % q for q in range(2, p))]


@pytest.fixture
def settings() -> Configuration:
    """Create a single-process Configuration with default tunables."""
    return Configuration(threads=1)


@pytest.fixture(autouse=True)
def clear_polyprod_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep POLYPROD_* variables from the shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("POLYPROD_"):
            monkeypatch.delenv(name)
