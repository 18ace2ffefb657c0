"""Explicit coordinate changes near a characteristic direction.

A direction is first moved to ``u = 0`` of a blow-up chart (:class:`LocalChart`).
The blow-up then reads

    z1 = z + z^k [a_m u^m + ...],    u1 = u + z^(k-1) [c_n u^n + ...],

and a diagonal rescaling ``Z = alpha z``, ``U = mu u`` makes both leading
coefficients ``-1``.  The irregular coordinates turn this into
``x1 = x + 1 + ...``, ``y1 = y + 1/x + ...``.  Fractional powers use the
principal branch throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..directions import DirectionLike, LocalData, local_data
from ..errors import TransformDomainError, WrongClass
from ..germ import Chart, Germ

Evaluator = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class LocalChart:
    """Ambient ``(z, w)`` versus blow-up coordinates ``(z, u)`` with the direction at ``u = 0``."""

    chart: Chart
    u0: complex

    def to_local(self, z, w):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        if self.chart == "V":
            z, w = w, z
        if np.any(z == 0):
            raise TransformDomainError("point on the exceptional line of the chart")
        return z, w / z - self.u0

    def to_ambient(self, z, u):
        z = np.asarray(z, dtype=complex)
        u = np.asarray(u, dtype=complex)
        w = z * (u + self.u0)
        return (w, z) if self.chart == "V" else (z, w)

    def blowup_map(self, F: Germ) -> Evaluator:
        """Exact ``F~`` in the local coordinates, computed through ``F`` itself."""

        def g(z, u):
            return self.to_local(*F(*self.to_ambient(z, u)))

        return g


def _root(x, p: int):
    """Principal ``p``-th root (``p`` a positive integer)."""
    return np.asarray(x, dtype=complex) ** (1.0 / p) if p != 1 else np.asarray(x, dtype=complex)


def _require_nonzero(*arrs):
    for a in arrs:
        if np.any(np.asarray(a) == 0):
            raise TransformDomainError("point on a coordinate axis")


def _require_right(*arrs):
    for a in arrs:
        if np.any(np.real(a) <= 0):
            raise TransformDomainError("point off the principal branch sector (Re <= 0)")


@dataclass(frozen=True)
class DirectionData:
    """Leading coefficients of the blow-up at a direction moved to ``u = 0``."""

    chart: LocalChart
    k: int
    m: float
    n: int
    a_m: complex
    c_n: complex
    c_next: complex  # coefficient of u^(m+1) in r (the Fuchsian c_{m+1})

    @classmethod
    def from_local(cls, ld: LocalData) -> "DirectionData":
        m = ld.m
        a_m = ld.p.coeff(int(m)) if m != math.inf else 0j
        c_next = ld.r.coeff(int(m) + 1) if m != math.inf else 0j
        return cls(LocalChart(ld.chart, ld.u0), ld.k, m, ld.n, a_m, ld.r.coeff(ld.n), c_next)


def direction_data(F: Germ, direction: DirectionLike) -> DirectionData:
    return DirectionData.from_local(local_data(F, direction))


@dataclass(frozen=True)
class IrregularCoordinates:
    """``x = 1/((k-1) Z^(k-1) U^m)``, ``y = (k-1)/((n-m-1) U^(n-m-1))``.

    With ``m = 0`` this is the first irregular case, with ``m > 0`` the second.
    """

    data: DirectionData

    def __post_init__(self):
        d = self.data
        if not (d.m != math.inf and d.n > d.m + 1):
            raise WrongClass("irregular coordinates need n > m + 1")

    @property
    def p(self) -> int:
        return int(self.data.n - self.data.m - 1)

    @property
    def mu(self) -> complex:
        d = self.data
        return complex(_root(d.c_n / d.a_m, self.p))

    @property
    def alpha(self) -> complex:
        d = self.data
        return complex(_root(-d.a_m * self.mu ** (-d.m), d.k - 1))

    def forward(self, z, u):
        _require_nonzero(z, u)
        d = self.data
        Z = self.alpha * np.asarray(z, dtype=complex)
        U = self.mu * np.asarray(u, dtype=complex)
        x = 1.0 / ((d.k - 1) * Z ** (d.k - 1) * U ** int(d.m))
        y = (d.k - 1) / (self.p * U ** self.p)
        return x, y

    def inverse(self, x, y):
        _require_nonzero(x, y)
        _require_right(x, y)
        d = self.data
        U = _root((d.k - 1) / (self.p * np.asarray(y, dtype=complex)), self.p)
        Z = _root(1.0 / ((d.k - 1) * np.asarray(x, dtype=complex) * U ** int(d.m)), d.k - 1)
        return Z / self.alpha, U / self.mu

    def to_ambient(self, x, y):
        return self.data.chart.to_ambient(*self.inverse(x, y))

    def from_ambient(self, z, w):
        return self.forward(*self.data.chart.to_local(z, w))

    def conjugate(self, F: Germ) -> Evaluator:
        """The map ``(x, y) -> (x1, y1)`` induced by ``F``."""

        def g(x, y):
            return self.from_ambient(*F(*self.to_ambient(x, y)))

        return g


@dataclass(frozen=True)
class HakimCoordinates:
    """``x = -1/((k-1) lambda z^(k-1))``, ``y = 1/u`` at a nondegenerate direction.

    Only used to seed orbits: the first coordinate is the one-dimensional
    Fatou coordinate of the restriction and ``u`` is kept small.
    """

    data: DirectionData

    def __post_init__(self):
        if self.data.m != 0:
            raise WrongClass("needs a nondegenerate direction")

    def forward(self, z, u):
        _require_nonzero(z, u)
        d = self.data
        x = -1.0 / ((d.k - 1) * d.a_m * np.asarray(z, dtype=complex) ** (d.k - 1))
        return x, 1.0 / np.asarray(u, dtype=complex)

    def inverse(self, x, y):
        _require_nonzero(x, y)
        _require_right(x)
        d = self.data
        z = _root(-1.0 / ((d.k - 1) * d.a_m * np.asarray(x, dtype=complex)), d.k - 1)
        return z, 1.0 / np.asarray(y, dtype=complex)

    def to_ambient(self, x, y):
        return self.data.chart.to_ambient(*self.inverse(x, y))


def transform_b1(F: Germ, direction: DirectionLike, point, inverse: bool = False):
    """Irregular coordinates at a nondegenerate irregular direction (``m = 0``)."""
    coords = IrregularCoordinates(direction_data(F, direction))
    if coords.data.m != 0:
        raise WrongClass("first irregular case needs m = 0")
    return coords.inverse(*point) if inverse else coords.forward(*point)


def transform_b2(F: Germ, direction: DirectionLike, point, inverse: bool = False):
    """Irregular coordinates at a degenerate irregular direction (``m > 0``)."""
    coords = IrregularCoordinates(direction_data(F, direction))
    if coords.data.m == 0:
        raise WrongClass("second irregular case needs m > 0")
    return coords.inverse(*point) if inverse else coords.forward(*point)


def transform_a2(point, m: int):
    """``(z, u) -> (z / u^(m+1), u)``."""
    z, u = (np.asarray(c, dtype=complex) for c in point)
    _require_nonzero(u)
    return z / u ** (m + 1), u


def transform_a2_inverse(point, m: int):
    x, u = (np.asarray(c, dtype=complex) for c in point)
    return x * u ** (m + 1), u


@dataclass(frozen=True)
class FuchsianCoordinates:
    """The ``x = z/u^(m+1)`` change at a degenerate Fuchsian direction.

    ``lemma1_data`` gives the exponents and leading coefficients of

        x1 = x (1 + c x^a u^b + ...),    u1 = u (1 + d x^a u^b + ...)

    namely ``a = k-1``, ``b = mk+k-1``, ``c = a_m - (m+1) c_(m+1)`` and
    ``d = c_(m+1)``.
    """

    data: DirectionData

    def __post_init__(self):
        d = self.data
        if not (d.m != math.inf and d.m >= 1 and d.n == d.m + 1):
            raise WrongClass("needs a degenerate Fuchsian direction")

    @property
    def m(self) -> int:
        return int(self.data.m)

    @property
    def beta(self) -> complex:
        return self.data.c_next / self.data.a_m

    def lemma1_data(self) -> tuple[int, int, complex, complex]:
        d = self.data
        k, m = d.k, self.m
        return k - 1, m * k + k - 1, d.a_m - (m + 1) * d.c_next, d.c_next

    def forward(self, z, u):
        return transform_a2((z, u), self.m)

    def inverse(self, x, u):
        return transform_a2_inverse((x, u), self.m)

    def to_ambient(self, x, u):
        return self.data.chart.to_ambient(*self.inverse(x, u))

    def from_ambient(self, z, w):
        return self.forward(*self.data.chart.to_local(z, w))

    def conjugate(self, F: Germ) -> Evaluator:
        def g(x, u):
            return self.from_ambient(*F(*self.to_ambient(x, u)))

        return g

