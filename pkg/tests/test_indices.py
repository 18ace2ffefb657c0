import numpy as np
import pytest

from helpers import random_apparent_germ, random_germ
from parabolic.catalog import (apparent, cube_roots, degenerate_fuchsian, diagonal_quadratic,
                               irregular, irregular_degenerate)
from parabolic.directions import characteristic_directions
from parabolic.errors import DegenerateDirection, WrongClass
from parabolic.indices import (abate_contour, abate_index, hakim_index, index_report,
                               rho_regularity)


def test_diagonal_hakim_indices():
    F = diagonal_quadratic()
    assert hakim_index(F, (1, 0)) == pytest.approx(-1)
    assert hakim_index(F, (1, 1)) == pytest.approx(1)
    assert hakim_index(F, (0, 1)) == pytest.approx(-1)


def test_cube_roots_indices():
    F = cube_roots()
    for d in characteristic_directions(F).directions:
        assert abs(hakim_index(F, d) + 3) < 1e-10
        assert abs(abate_index(F, d) + 1 / 3) < 1e-10


def test_degenerate_fuchsian_index_three():
    F = degenerate_fuchsian()
    assert abs(abate_index(F, (1, 0)) - 3) < 1e-12
    with pytest.raises(DegenerateDirection):
        hakim_index(F, (1, 0))


def test_irregular_and_apparent_index_zero():
    assert abs(abate_index(irregular(), (1, 0))) < 1e-12
    assert hakim_index(irregular(), (1, 0)) == 0
    assert abs(abate_index(apparent(), (1, 0))) < 1e-12


def test_irregular_degenerate_index():
    # p = u^2 - u and r = -u^3 at [1:0]: p/r = 1/u^2 - 1/u
    assert abs(abate_index(irregular_degenerate(), (1, 0)) + 1) < 1e-12


def test_rho_values():
    rho, reg = rho_regularity(degenerate_fuchsian(), (1, 0))
    assert rho == 0 and reg is False
    rho, reg = rho_regularity(degenerate_fuchsian(0.7), (1, 0))
    assert abs(rho - 0.7) < 1e-12 and reg is True
    with pytest.raises(WrongClass):
        rho_regularity(diagonal_quadratic(), (1, 1))


def test_index_report_fields():
    rep = index_report(degenerate_fuchsian(0.7), (1, 0))
    assert rep.hakim is None and rep.regular is True
    assert abs(rep.abate - rep.abate_contour) < 1e-9
    rep = index_report(diagonal_quadratic(), (1, 1))
    assert rep.rho is None and rep.regular is None


def test_series_and_contour_agree_random():
    rng = np.random.default_rng(21)
    for _ in range(40):
        F = random_germ(rng, int(rng.integers(2, 4)))
        for d in characteristic_directions(F).directions:
            assert abs(abate_index(F, d) - abate_contour(F, d)) < 1e-9


def test_reciprocity_random():
    rng = np.random.default_rng(22)
    for _ in range(40):
        F = random_germ(rng, int(rng.integers(2, 4)))
        for d in characteristic_directions(F).directions:
            if d.n == 1 and not d.degenerate:
                assert abs(abate_index(F, d) * hakim_index(F, d) - 1) < 1e-9


def test_index_sum_is_self_intersection():
    # the indices along the exceptional divisor add up to its self-intersection, -1
    rng = np.random.default_rng(23)
    for _ in range(20):
        F = random_germ(rng, int(rng.integers(2, 5)))
        total = sum(abate_index(F, d) for d in characteristic_directions(F).directions)
        assert abs(total + 1) < 1e-8


def test_apparent_random_index_zero():
    rng = np.random.default_rng(24)
    for _ in range(50):
        F, _, _ = random_apparent_germ(rng, int(rng.integers(2, 5)))
        assert abs(abate_index(F, (1, 0))) < 1e-12
