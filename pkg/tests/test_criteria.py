import numpy as np
import pytest

from helpers import crandn, germ_from_chart, random_linear
from parabolic.algebra import BiPoly
from parabolic.catalog import (apparent, degenerate_fuchsian, diagonal_quadratic, dicritical,
                               irregular, irregular_degenerate)
from parabolic.criteria import (RegionR, RegionS, eigenvalue_condition, in_region_R, in_region_S,
                                lemma1_condition, lemma1_diagonal, verdict)
from parabolic.directions import characteristic_directions
from parabolic.errors import LiftUndefinedError
from parabolic.germ import Germ

z, _ = BiPoly.variables()


def test_region_R_examples():
    assert in_region_R(3, 1, 2)
    assert not in_region_R(0.5, 1, 2)
    R = RegionR(1, 2)
    assert (R.half_plane_bound, R.circle_center, R.circle_radius) == (-1, 0.5, 1.5)


def test_region_boundaries_reported():
    assert RegionR(1, 2).status(2) == "boundary"
    assert RegionR(1, 2).status(-1 + 5j) == "boundary"
    assert RegionS(0).status(1) == "boundary"
    assert RegionS(0).status(0.5) == "inside"


def test_region_argument_validation():
    with pytest.raises(ValueError):
        RegionR(0, 1)
    with pytest.raises(ValueError):
        RegionR(-1, 2)


@pytest.mark.parametrize("m,k", [(0, 2), (1, 2), (2, 3), (3, 5)])
def test_R_and_S_disjoint_on_grid(m, k):
    xs = np.linspace(-3, 5, 200)
    ys = np.linspace(-4, 4, 200)
    for x in xs:
        for y in ys:
            zeta = complex(x, y)
            assert not (in_region_R(zeta, m, k) and in_region_S(zeta, m))


def test_m0_regions_tile_right_half_plane():
    # at m = 0, R is {Re z > 0, Re(1/z) < 1} and S is {Re(1/z) > 1}
    rng = np.random.default_rng(31)
    for zeta in 3 * crandn(rng, 2000):
        if abs(zeta) < 1e-6:
            continue
        inv = (1 / zeta).real
        for k in (2, 3):
            r, s = RegionR(0, k).status(zeta), RegionS(0).status(zeta)
            if r == "boundary" or s == "boundary":
                continue
            assert (r == "inside") == (zeta.real > 0 and inv < 1)
            assert (s == "inside") == (inv > 1)
            assert (r == "inside" or s == "inside") == (zeta.real > 0)


def test_lemma1_examples():
    assert lemma1_condition(1 / 3, 1 / 3, 1, 2)
    assert lemma1_condition(1 / 3, 1 / 3, 1, 3)
    assert lemma1_diagonal(1 / 3, 1 / 3, 1, 2) == pytest.approx((1 / 3, 1 / 3))
    assert not lemma1_condition(-1, 1, 1, 2)  # c/d = -1 lies in the excluded disc
    with pytest.raises(ValueError):
        lemma1_condition(1, 0, 1, 2)
    with pytest.raises(LiftUndefinedError):
        lemma1_diagonal(-2, 1, 1, 2)


def test_lemma1_equals_eigenvalue_condition():
    rng = np.random.default_rng(32)
    for _ in range(2000):
        a = int(rng.integers(1, 5))
        b = int(rng.integers(1, 12))
        c, d = 2 * crandn(rng, 2)
        if abs(a * c + b * d) < 1e-9:
            continue
        assert lemma1_condition(c, d, a, b) == eigenvalue_condition(lemma1_diagonal(c, d, a, b))


def test_eigenvalue_condition_requires_input():
    with pytest.raises(ValueError):
        eigenvalue_condition([])
    assert eigenvalue_condition([1, 2 + 5j])
    assert not eigenvalue_condition([1, -0.1j - 0.1])


@pytest.mark.parametrize("make, direction, conclusion, why", [
    (diagonal_quadratic, (1, 1), "BasinExists", "HakimTheorem"),
    (diagonal_quadratic, (1, 0), "NoBasinAlongDirection", "NegativeHakimRemark"),
    (irregular, (1, 0), "BasinExists", "Theorem1_Irregular"),
    (irregular_degenerate, (1, 0), "BasinExists", "Theorem1_Irregular"),
    (degenerate_fuchsian, (1, 0), "BasinExists", "Theorem2_FuchsianR"),
    (apparent, (1, 0), "Unknown", "ApparentUndecided"),
    (dicritical, (1, 0), "Unknown", "DicriticalOutOfScope"),
])
def test_verdict_fixtures(make, direction, conclusion, why):
    v = verdict(make(), direction)
    assert (v.conclusion, v.justification) == (conclusion, why)


def test_verdict_tested_value_is_index():
    v = verdict(degenerate_fuchsian(), (1, 0))
    assert abs(v.tested_value - 3) < 1e-12


def _fuchsian_m1(ind, rho=0.0):
    # k = 2, p = u, r = u^2 / ind: a degenerate Fuchsian [1:0] with index ind
    F = germ_from_chart([0, 1, 0], [0, 0, 1 / ind, 0], 2)
    if rho:
        F = Germ(F.f1, F.f2 + z ** 3 * rho)
    return F


def test_verdict_regular_case_S():
    assert verdict(_fuchsian_m1(0.25, rho=1.0), (1, 0)).justification == "RegularCaseS"
    assert verdict(_fuchsian_m1(0.25), (1, 0)).justification == "NoCriterionApplies"


def test_verdict_no_criterion_and_boundary():
    v = verdict(_fuchsian_m1(0.4 + 0.5j, rho=1.0), (1, 0))
    assert (v.conclusion, v.justification) == ("Unknown", "NoCriterionApplies")
    v = verdict(_fuchsian_m1(2.0), (1, 0))  # on the circle |z - 1/2| = 3/2
    assert v.justification == "BoundaryInconclusive"


def test_verdict_hakim_boundary():
    F = germ_from_chart([1, 0, 0], [0, 1j, 0, 0], 2)
    v = verdict(F, (1, 0))
    assert (v.conclusion, v.justification) == ("Unknown", "BoundaryInconclusive")


def test_verdict_stable_under_conjugation():
    rng = np.random.default_rng(33)
    for make in (diagonal_quadratic, irregular, degenerate_fuchsian, apparent):
        F = make()
        base = sorted((verdict(F, d).conclusion, verdict(F, d).justification)
                      for d in characteristic_directions(F).directions)
        for _ in range(5):
            G = F.conjugate_linear(random_linear(rng))
            got = sorted((verdict(G, d).conclusion, verdict(G, d).justification)
                         for d in characteristic_directions(G).directions)
            assert got == base


def test_lemma1_without_w_exponent_is_half_plane():
    assert lemma1_condition(1, 1, 1, 0)
    assert not lemma1_condition(-1, 1, 1, 0)
    assert lemma1_diagonal(1, 1, 1, 2) == pytest.approx((1 / 3, 1 / 3))


def test_region_S_examples():
    assert in_region_S(0.25, 0)
    assert not in_region_S(1.5, 0)
