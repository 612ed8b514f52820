"""Test module for the root spread of shifted binomial products."""

from math import sqrt

import pytest
from pytest_mock import MockerFixture

from polyprod.errors import RootFindingError
from polyprod.experiments.roots import expected_product_roots
from polyprod.experiments.roots import root_distance_check


def test_repeated_roots_of_x_squared_plus_one() -> None:
    """Test f_2 = (x^2 + x + 1)^2 for x^2 + 1, written as x^2 - (-1)."""
    report = root_distance_check(2, -1, 2)
    assert report.repeated_roots
    assert len(report.roots) == 2
    assert report.max_distance == pytest.approx(sqrt(3))
    assert report.distance_ratio == pytest.approx(sqrt(3) / 2)
    assert report.ball_radius == 9
    assert report.within_ball
    assert report.g_roots_match


def test_linear_binomial() -> None:
    """Test x - 3, where f_2 = x^2 - 5x + 5."""
    report = root_distance_check(1, 3, 2)
    assert not report.repeated_roots
    assert sorted(re for re, _ in report.roots) == pytest.approx(
        [(5 - sqrt(5)) / 2, (5 + sqrt(5)) / 2]
    )
    assert report.max_distance == pytest.approx(sqrt(5))
    assert report.g_roots_match


@pytest.mark.parametrize(("d", "a", "n"), [(3, 2, 3), (2, 3, 4), (5, 2, 2)])
def test_roots_stay_in_ball(d: int, a: int, n: int) -> None:
    """Test that every root lies in |z| < 3 (n + sqrt|a|)."""
    report = root_distance_check(d, a, n)
    assert report.within_ball
    assert all(
        abs(complex(re, im)) < report.ball_radius for re, im in report.roots
    )
    assert report.g_roots_match


def test_expected_product_roots() -> None:
    """Test -k + zeta a^(1/d) for d = 2, a = -1."""
    roots = expected_product_roots(2, -1, 2)
    targets = [1j, -1j, -1 + 1j, -1 - 1j]
    for t in targets:
        assert min(abs(r - t) for r in roots) < 1e-12


@pytest.mark.parametrize(("d", "a", "n"), [(0, 2, 1), (2, 0, 1), (2, 3, 0)])
def test_rejected_arguments(d: int, a: int, n: int) -> None:
    """Test d < 1, a = 0 and n < 1."""
    with pytest.raises(ValueError):
        root_distance_check(d, a, n)


def test_non_convergence_propagates(mocker: MockerFixture) -> None:
    """Test that a failed root iteration surfaces as RootFindingError."""
    mocker.patch(
        "polyprod.experiments.roots.complex_roots",
        side_effect=RootFindingError([0j], 1.0, 1),
    )
    with pytest.raises(RootFindingError):
        root_distance_check(3, 2, 2)
