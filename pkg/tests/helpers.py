"""Random germ generators shared by the test modules."""
from __future__ import annotations

import numpy as np

from parabolic.algebra import BiPoly
from parabolic.germ import Germ


def crandn(rng: np.random.Generator, size=None):
    return rng.normal(size=size) + 1j * rng.normal(size=size)


def homogeneous(coeffs_u, degree: int) -> BiPoly:
    """``sum c_i z^(d-i) w^i`` from chart-U coefficients ``c_i``."""
    return BiPoly({(degree - i, i): c for i, c in enumerate(coeffs_u) if c != 0})


def germ_from_chart(p_u, r_u, k: int, higher=None) -> Germ:
    """Germ whose ``p_k(1,u)`` and ``r(u)`` are the given coefficient lists.

    ``r`` must have degree at most ``k+1`` with ``r_(k+1) = -p_k``; then
    ``q_k(1,u) = r + u p`` has degree at most ``k``.
    """
    p = np.zeros(k + 1, dtype=complex)
    p[: len(p_u)] = p_u
    r = np.zeros(k + 2, dtype=complex)
    r[: len(r_u)] = r_u
    q = r.copy()
    q[1:] += p
    assert abs(q[k + 1]) < 1e-12 * (1 + abs(p[k])), "r_(k+1) must equal -p_k"
    z, w = BiPoly.variables()
    f1 = z + homogeneous(p, k)
    f2 = w + homogeneous(q[: k + 1], k)
    if higher is not None:
        f1 = f1 + higher[0]
        f2 = f2 + higher[1]
    return Germ(f1, f2)


def random_higher(rng, degree: int, scale: float = 0.5) -> tuple[BiPoly, BiPoly]:
    return (homogeneous(scale * crandn(rng, degree + 1), degree),
            homogeneous(scale * crandn(rng, degree + 1), degree))


def random_germ(rng: np.random.Generator, k: int, with_higher: bool = True) -> Germ:
    """Dense random homogeneous part of degree ``k`` (plus one higher part)."""
    z, w = BiPoly.variables()
    f1 = z + homogeneous(crandn(rng, k + 1), k)
    f2 = w + homogeneous(crandn(rng, k + 1), k)
    if with_higher:
        h = random_higher(rng, k + 1)
        f1, f2 = f1 + h[0], f2 + h[1]
    return Germ(f1, f2)


def random_structured_germ(rng: np.random.Generator, k: int) -> Germ:
    """Random germ with a prescribed root structure of ``r``.

    Mixes simple roots, a multiple root, and the direction ``[0:1]``
    (``deg r < k+1``) so multiplicity bookkeeping is exercised.
    """
    kind = rng.integers(3)
    p = crandn(rng, k + 1)
    if kind == 0:  # [0:1] characteristic with multiplicity k+1-deg r
        drop = int(rng.integers(1, k + 1))
        roots = crandn(rng, k + 1 - drop)
        r = np.poly(roots)[::-1] * crandn(rng)
        p[k] = 0
    elif kind == 1:  # one double root at a random place
        root = crandn(rng)
        roots = np.concatenate([[root, root], crandn(rng, k - 1)])
        r = np.poly(roots)[::-1]
        r = r * (-p[k] / r[-1])
    else:
        roots = crandn(rng, k + 1)
        r = np.poly(roots)[::-1]
        r = r * (-p[k] / r[-1])
    return germ_from_chart(p, r, k, random_higher(rng, k + 1))


def random_apparent_germ(rng: np.random.Generator, k: int) -> tuple[Germ, int, int]:
    """Germ with an apparent direction ``[1:0]``: ``1 <= n <= m <= k``.

    Returns the germ and the designed ``(m, n)``.
    """
    m = int(rng.integers(1, k + 1))
    n = int(rng.integers(1, m + 1))
    p = np.zeros(k + 1, dtype=complex)
    p[m:] = crandn(rng, k + 1 - m)
    r = np.zeros(k + 2, dtype=complex)
    r[n:k + 1] = crandn(rng, k + 1 - n)
    r[k + 1] = -p[k]
    return germ_from_chart(p, r, k, random_higher(rng, k + 1)), m, n


def random_linear(rng: np.random.Generator, max_cond: float = 10.0) -> np.ndarray:
    while True:
        L = crandn(rng, (2, 2))
        if np.linalg.cond(L) <= max_cond:
            return L
