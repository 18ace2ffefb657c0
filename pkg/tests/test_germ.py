import numpy as np
import pytest

from helpers import crandn, random_germ, random_linear
from parabolic.algebra import BiPoly, UniPoly
from parabolic.catalog import NAMED, cube_roots, diagonal_quadratic
from parabolic.errors import GermError, IsIdentity, NotFixingOrigin, NotTangentToIdentity
from parabolic.germ import Germ, blowup_expand, order, validate

z, w = BiPoly.variables()


def test_validate_rejects_constant_term():
    with pytest.raises(NotFixingOrigin):
        validate(z + 1, w + z * z)


def test_validate_rejects_wrong_linear_part():
    with pytest.raises(NotTangentToIdentity):
        validate(z * 2 + z * z, w)
    with pytest.raises(NotTangentToIdentity):
        validate(z + w, w + z * z)


def test_validate_rejects_identity():
    with pytest.raises(IsIdentity):
        validate(z, w)


def test_germ_errors_are_value_errors():
    with pytest.raises(ValueError):
        Germ(z, w)
    assert issubclass(NotTangentToIdentity, GermError)


def test_order_examples():
    assert order(diagonal_quadratic()) == 2
    assert order(Germ(z + z ** 3, w + w ** 5)) == 3
    assert order(Germ(z, w + z ** 4 + w ** 7)) == 4
    assert order(cube_roots()) == 2


def test_from_terms_matches_operators():
    F = Germ.from_terms({(1, 0): 1, (2, 0): -1}, {(0, 1): 1, (0, 2): -1})
    assert F.f1 == diagonal_quadratic().f1 and F.f2 == diagonal_quadratic().f2


def test_evaluation_matches_components():
    F = diagonal_quadratic()
    assert F(0.5, 0.25) == (0.25, 0.25 - 0.0625)


def test_order_invariant_under_linear_conjugation():
    rng = np.random.default_rng(3)
    for name, make in NAMED.items():
        F = make()
        for _ in range(20):
            G = F.conjugate_linear(random_linear(rng))
            assert G.order == F.order, name


def test_conjugation_is_exact_on_points():
    rng = np.random.default_rng(4)
    F = random_germ(rng, 2, with_higher=False)
    L = random_linear(rng)
    G = F.conjugate_linear(L, max_degree=F.degree)
    Li = np.linalg.inv(L)
    for _ in range(10):
        p = 0.1 * crandn(rng, 2)
        lhs = np.array(G(*p))
        q = L @ p
        rhs = Li @ np.array(F(*q))
        assert np.allclose(lhs, rhs, atol=1e-13)


def test_conjugate_rejects_singular():
    with pytest.raises(ValueError):
        diagonal_quadratic().conjugate_linear([[1, 1], [1, 1]])


def test_swapped_twice_is_identity():
    F = cube_roots()
    G = F.swapped().swapped()
    assert G.f1 == F.f1 and G.f2 == F.f2


def test_chart_polys_diagonal():
    p, r = diagonal_quadratic().chart_polys("U")
    assert p == UniPoly([-1])
    assert r == UniPoly([0, 1, -1])


def test_blowup_example_diagonal():
    E = blowup_expand(diagonal_quadratic(), "U", 0)
    assert E.comp1[0] == UniPoly([-1])
    assert E.comp2[0] == UniPoly([0, 1, -1])


def test_blowup_first_term_is_r():
    rng = np.random.default_rng(5)
    for _ in range(20):
        F = random_germ(rng, int(rng.integers(2, 4)))
        for chart in ("U", "V"):
            E = blowup_expand(F, chart, 2)
            _, r = F.chart_polys(chart)
            assert E.comp2[0].allclose(r)


def test_blowup_matches_direct_quotient():
    rng = np.random.default_rng(6)
    F = random_germ(rng, 2)
    E = blowup_expand(F, "U", 6)
    for zz in (1e-2, 3e-3):
        u = 0.3 - 0.2j
        x1, x2 = E.evaluate(zz, u)
        f1, f2 = F(zz, zz * u)
        assert abs(x1 - f1) < 1e-14
        # truncation leaves an O(z^(k+K)) = O(z^8) error in the second component
        assert abs(x2 - f2 / f1) < 10 * abs(zz) ** 8 + 1e-13


def test_blowup_charts_agree_through_inversion():
    # the chart V coordinate of a point is v = 1/u; both blow-ups must describe the same map
    rng = np.random.default_rng(8)
    F = random_germ(rng, 2)
    EU = blowup_expand(F, "U", 8)
    EV = blowup_expand(F, "V", 8)
    zz, u = 2e-3, 0.7 + 0.4j
    w_ = zz * u
    z1, u1 = EU.evaluate(zz, u)
    w1, v1 = EV.evaluate(w_, 1 / u)
    assert abs(z1 * u1 - w1) < 1e-12 * abs(w1)
    assert abs(u1 * v1 - 1) < 1e-12


def test_blowup_shift_moves_root_to_zero():
    E = blowup_expand(cube_roots(), "U", 1)
    u0 = np.exp(2j * np.pi / 3)
    S = E.shifted(u0)
    assert abs(S.comp2[0](0)) < 1e-12


def test_blowup_rejects_bad_arguments():
    with pytest.raises(ValueError):
        blowup_expand(diagonal_quadratic(), "W")
    with pytest.raises(ValueError):
        blowup_expand(diagonal_quadratic(), "U", -1)


def test_arrays_roundtrip():
    F = cube_roots()
    i1, j1, c1, i2, j2, c2 = F.arrays
    rebuilt = BiPoly({(int(a), int(b)): c for a, b, c in zip(i2, j2, c2)})
    assert rebuilt == F.f2 and len(i1) == len(c1)
