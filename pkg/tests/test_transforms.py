import numpy as np
import pytest

from parabolic.algebra import BiPoly
from parabolic.catalog import (degenerate_fuchsian, diagonal_quadratic, irregular,
                               irregular_degenerate, irregular_normalized)
from parabolic.dynamics.normal_form import NormalFormMap, SectorRegion, irregular_error_terms
from parabolic.dynamics.transforms import (FuchsianCoordinates, IrregularCoordinates, LocalChart,
                                           direction_data, transform_a2, transform_a2_inverse,
                                           transform_b1, transform_b2)
from parabolic.errors import TransformDomainError, WrongClass
from parabolic.germ import Germ

V50 = SectorRegion(50.0, 2.0, np.pi / 8)


def test_b1_example():
    x, y = transform_b1(irregular_normalized(), (1, 0), (0.01, 0.1))
    assert abs(x - 100) < 1e-12 and abs(y - 10) < 1e-12
    z, u = transform_b1(irregular_normalized(), (1, 0), (100, 10), inverse=True)
    assert abs(z - 0.01) < 1e-15 and abs(u - 0.1) < 1e-15


def test_b2_example():
    x, y = transform_b2(irregular_degenerate(), (1, 0), (0.1, 0.1))
    assert abs(x - 100) < 1e-12 and abs(y - 10) < 1e-12


def test_case_guards():
    with pytest.raises(WrongClass):
        transform_b2(irregular_normalized(), (1, 0), (0.1, 0.1))
    with pytest.raises(WrongClass):
        transform_b1(irregular_degenerate(), (1, 0), (0.1, 0.1))
    with pytest.raises(WrongClass):
        IrregularCoordinates(direction_data(diagonal_quadratic(), (1, 1)))
    with pytest.raises(WrongClass):
        FuchsianCoordinates(direction_data(irregular(), (1, 0)))


def test_domain_errors():
    c = IrregularCoordinates(direction_data(irregular_normalized(), (1, 0)))
    with pytest.raises(TransformDomainError):
        c.forward(0.0, 0.1)
    with pytest.raises(TransformDomainError):
        c.inverse(-5.0, 3.0)
    with pytest.raises(TransformDomainError):
        transform_a2((0.1, 0.0), 1)
    with pytest.raises(TransformDomainError):
        LocalChart("U", 0).to_local(0.0, 1.0)


def test_b2_conjugate_closed_form():
    # for (z - zw + w^2, w - w^2) the coordinates x = 1/(zu), y = 1/u turn F into
    # (x + 1 + 1/(x-1), y + 1/(x-1)) exactly
    F = irregular_degenerate()
    G = IrregularCoordinates(direction_data(F, (1, 0))).conjugate(F)
    x, y = V50.sample(200, np.random.default_rng(41))
    x1, y1 = G(x, y)
    assert np.allclose(x1, x + 1 + 1 / (x - 1), rtol=1e-12)
    assert np.allclose(y1, y + 1 / (x - 1), rtol=1e-12)


@pytest.mark.parametrize("make", [irregular_normalized, irregular_degenerate,
                                  lambda: irregular(1 + 1j)])
def test_round_trip(make):
    c = IrregularCoordinates(direction_data(make(), (1, 0)))
    rng = np.random.default_rng(42)
    x, y = V50.sample(1000, rng)
    x2, y2 = c.from_ambient(*c.to_ambient(x, y))
    assert np.max(np.abs(x2 - x) / np.abs(x)) <= 1e-12
    assert np.max(np.abs(y2 - y) / np.abs(y)) <= 1e-12


def test_normalisation_constants():
    c = IrregularCoordinates(direction_data(irregular(), (1, 0)))
    d = c.data
    # mu^(n-m-1) = c_n / a_m and alpha^(k-1) = -a_m mu^(-m)
    assert abs(c.mu ** c.p - d.c_n / d.a_m) < 1e-14
    assert abs(c.alpha ** (d.k - 1) + d.a_m * c.mu ** (-d.m)) < 1e-14


def test_b1_normal_form_constant():
    F = irregular_normalized()
    c = IrregularCoordinates(direction_data(F, (1, 0)))
    e1, e2 = irregular_error_terms(2, 0, 2)
    G = NormalFormMap(c.conjugate(F), e1, e2)
    x, y = V50.sample(10_000, np.random.default_rng(43))
    assert G.fit_constant(x, y) <= 10


def test_a2_round_trip_and_lemma1_data():
    rng = np.random.default_rng(44)
    z = 0.01 * (rng.normal(size=50) + 1j * rng.normal(size=50))
    u = 0.3 + 0.1j * rng.normal(size=50)
    x, uu = transform_a2((z, u), 1)
    z2, u2 = transform_a2_inverse((x, uu), 1)
    assert np.allclose(z2, z, rtol=1e-14) and np.array_equal(u2, u)
    fc = FuchsianCoordinates(direction_data(degenerate_fuchsian(), (1, 0)))
    a, b, c, d = fc.lemma1_data()
    assert (a, b) == (1, 3)
    assert abs(c - 1 / 3) < 1e-14 and abs(d - 1 / 3) < 1e-14


def test_fuchsian_conjugate_leading_terms():
    # x1 = x (1 + c x^a u^b + ...), u1 = u (1 + d x^a u^b + ...)
    F = degenerate_fuchsian()
    fc = FuchsianCoordinates(direction_data(F, (1, 0)))
    a, b, c, d = fc.lemma1_data()
    G = fc.conjugate(F)
    x, u = 1e-2, 1e-2 + 0j
    x1, u1 = G(x, u)
    t = x ** a * u ** b
    assert abs((x1 / x - 1) / t - c) < 1e-2
    assert abs((u1 / u - 1) / t - d) < 1e-2


def test_local_chart_round_trip():
    ch = LocalChart("V", 0.5)
    z, u = ch.to_local(0.1 + 0.2j, 0.3)
    w1, z1 = ch.to_ambient(z, u)
    assert abs(w1 - (0.1 + 0.2j)) < 1e-15 and abs(z1 - 0.3) < 1e-15


def test_a2_example():
    x, u = transform_a2((0.001, 0.1), 1)
    assert abs(x - 0.1) < 1e-15 and u == 0.1


def test_unit_steps_for_higher_order():
    # k = 3 with a triple root at [1:0]: the coordinates still produce x + 1 and y + 1/x
    z, w = BiPoly.variables()
    F = Germ(z - z ** 3, w - z * z * w - w ** 3)
    c = IrregularCoordinates(direction_data(F, (1, 0)))
    assert (c.data.k, c.data.m, c.data.n) == (3, 0, 3)
    x, y = V50.sample(200, np.random.default_rng(45))
    x1, y1 = c.conjugate(F)(x, y)
    assert np.max(np.abs(x1 - x - 1)) < 0.05
    assert np.max(np.abs((y1 - y) * x - 1)) < 0.05
