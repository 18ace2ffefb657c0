"""Polynomial germs tangent to the identity and their blow-up expansions."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from .algebra import BiPoly, UniPoly, homogeneous_parts, restrict_chart
from .errors import IsIdentity, NotFixingOrigin, NotTangentToIdentity

Chart = Literal["U", "V"]


@dataclass(frozen=True)
class Germ:
    """A polynomial map ``F = (f1, f2)`` with ``F(0) = 0`` and ``DF(0) = Id``.

    Construction validates the three defining conditions and raises the
    matching :class:`~parabolic.errors.GermError` subclass otherwise.
    """

    f1: BiPoly
    f2: BiPoly

    def __post_init__(self):
        if self.f1.coeff(0, 0) != 0 or self.f2.coeff(0, 0) != 0:
            raise NotFixingOrigin("F(0) != 0: a component has a constant term")
        linear = (self.f1.coeff(1, 0), self.f1.coeff(0, 1),
                  self.f2.coeff(1, 0), self.f2.coeff(0, 1))
        if linear != (1, 0, 0, 1):
            raise NotTangentToIdentity(
                f"linear part is [[{linear[0]}, {linear[1]}], [{linear[2]}, {linear[3]}]],"
                " not the identity"
            )
        if self.f1.degree < 2 and self.f2.degree < 2:
            raise IsIdentity("F has no term of degree >= 2")

    @classmethod
    def from_terms(cls, terms1: dict, terms2: dict) -> "Germ":
        """Build from plain ``{(i, j): coeff}`` dictionaries."""
        return cls(BiPoly(terms1), BiPoly(terms2))

    # structure ------------------------------------------------------------
    @cached_property
    def order(self) -> int:
        degrees = {d for d, _ in homogeneous_parts(self.f1)} | {
            d for d, _ in homogeneous_parts(self.f2)}
        return min(d for d in degrees if d >= 2)

    @property
    def k(self) -> int:
        return self.order

    @property
    def degree(self) -> int:
        return max(self.f1.degree, self.f2.degree)

    def parts(self, d: int) -> tuple[BiPoly, BiPoly]:
        """The homogeneous part ``P_d = (p_d, q_d)`` of ``F`` (``d >= 2``)."""
        return self.f1.homogeneous_part(d), self.f2.homogeneous_part(d)

    def chart_polys(self, chart: Chart = "U") -> tuple[UniPoly, UniPoly]:
        """``(p_k, r)`` restricted to the chart: ``p_k(1,u)`` and ``q_k(1,u) - u p_k(1,u)``."""
        g = self if chart == "U" else self.swapped()
        p, q = g.parts(g.order)
        pu = restrict_chart(p, "U")
        qu = restrict_chart(q, "U")
        return pu, qu - UniPoly([0, 1]) * pu

    # evaluation -----------------------------------------------------------
    def __call__(self, z, w):
        return self.f1(z, w), self.f2(z, w)

    def swapped(self) -> "Germ":
        """``swap o F o swap``, i.e. the same map with the roles of ``z`` and ``w`` exchanged."""
        return Germ(self.f2.swap(), self.f1.swap())

    def conjugate_linear(self, L, max_degree: int | None = None) -> "Germ":
        """Return ``L^-1 o F o L`` truncated at total degree ``max_degree`` (default ``2k``).

        The identity linear part is kept exact by conjugating only the
        nonlinear remainder.
        """
        L = np.asarray(L, dtype=complex)
        if L.shape != (2, 2) or abs(np.linalg.det(L)) == 0:
            raise ValueError("L must be an invertible 2x2 matrix")
        Li = np.linalg.inv(L)
        top = 2 * self.order if max_degree is None else max_degree
        z, w = BiPoly.variables()
        lz = z * L[0, 0] + w * L[0, 1]
        lw = z * L[1, 0] + w * L[1, 1]
        n1 = self.f1 - z
        n2 = self.f2 - w
        m1 = n1.truncate(top).compose(lz, lw, top)
        m2 = n2.truncate(top).compose(lz, lw, top)
        g1 = z + m1 * Li[0, 0] + m2 * Li[0, 1]
        g2 = w + m1 * Li[1, 0] + m2 * Li[1, 1]
        return Germ(g1, g2)

    @cached_property
    def arrays(self) -> tuple[np.ndarray, ...]:
        """Flat exponent/coefficient arrays ``(i1, j1, c1, i2, j2, c2)`` for compiled kernels."""
        out = []
        for f in (self.f1, self.f2):
            items = list(f.items())
            out.append(np.array([e[0] for e, _ in items], dtype=np.int64))
            out.append(np.array([e[1] for e, _ in items], dtype=np.int64))
            out.append(np.array([v for _, v in items], dtype=np.complex128))
        return tuple(out)

    def __repr__(self):
        return f"Germ(f1={self.f1!r}, f2={self.f2!r})"


def validate(f1: BiPoly, f2: BiPoly) -> Germ:
    """Check the germ conditions on ``(f1, f2)`` and return the validated :class:`Germ`."""
    return Germ(f1, f2)


def order(F: Germ) -> int:
    return F.order


@dataclass(frozen=True)
class BlowupExpansion:
    """Blow-up ``F~`` in one chart, as series in the divisor variable ``z``.

    ``comp1[i]`` is the coefficient of ``z**(k+i)`` in ``F~1 - z`` and
    ``comp2[i]`` the coefficient of ``z**(k-1+i)`` in ``F~2 - u``, for
    ``i = 0..K``.
    """

    chart: Chart
    k: int
    K: int
    comp1: tuple[UniPoly, ...]
    comp2: tuple[UniPoly, ...] = field(repr=False)

    def evaluate(self, z, u):
        """Evaluate the truncated ``(F~1, F~2)`` at ``(z, u)``."""
        z = np.asarray(z, dtype=complex)
        u = np.asarray(u, dtype=complex)
        x1 = z + sum(z ** (self.k + i) * c(u) for i, c in enumerate(self.comp1))
        x2 = u + sum(z ** (self.k - 1 + i) * c(u) for i, c in enumerate(self.comp2))
        return x1, x2

    def shifted(self, u0: complex) -> "BlowupExpansion":
        """Same expansion in the translated chart coordinate ``u - u0``."""
        return BlowupExpansion(self.chart, self.k, self.K,
                               tuple(c.shift(u0) for c in self.comp1),
                               tuple(c.shift(u0) for c in self.comp2))


def blowup_expand(F: Germ, chart: Chart = "U", K: int = 0) -> BlowupExpansion:
    """Expand the blow-up of ``F`` in ``chart`` to depth ``K``.

    In chart U, ``F~1 = z + sum_j z^j p_j(1,u)`` exactly, and
    ``F~2 - u = N(z) / (1 + A(z))`` with ``N = sum_j z^(j-1) (q_j - u p_j)(1,u)``
    and ``A = sum_j z^(j-1) p_j(1,u)``; the quotient is expanded as a
    geometric series in ``z``.  Chart V reuses chart U on the swapped germ.
    """
    if chart not in ("U", "V"):
        raise ValueError(f"unknown chart {chart!r}")
    if K < 0:
        raise ValueError("depth must be nonnegative")
    G = F if chart == "U" else F.swapped()
    k = G.order
    top = k + K  # highest homogeneous degree that can contribute
    u = UniPoly([0, 1])
    pj = {}
    nj = {}
    for j in range(k, top + 1):
        p, q = G.parts(j)
        pj[j] = restrict_chart(p, "U")
        nj[j] = restrict_chart(q, "U") - u * pj[j]

    comp1 = tuple(pj[k + i] for i in range(K + 1))

    # A as a series in z: A[e] = p_{e+1}(1,u); only e >= k-1 >= 1 are nonzero
    order_needed = K
    A = [UniPoly() for _ in range(order_needed + 1)]
    for e in range(1, order_needed + 1):
        if e + 1 in pj:
            A[e] = pj[e + 1]
    inv = [UniPoly([1])]
    for t in range(1, order_needed + 1):
        acc = UniPoly()
        for s in range(1, t + 1):
            acc = acc + A[s] * inv[t - s]
        inv.append(-acc)
    comp2 = []
    for i in range(K + 1):
        acc = UniPoly()
        for s in range(i + 1):
            acc = acc + nj[k + s] * inv[i - s]
        comp2.append(acc)
    return BlowupExpansion(chart, k, K, comp1, tuple(comp2))
