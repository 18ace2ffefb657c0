"""Characteristic directions, their vanishing orders and classification."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence, Union

from .algebra import UniPoly, roots_with_multiplicity
from .errors import Dicritical, DirectionNotCharacteristic
from .germ import Chart, Germ

Kind = Literal["Fuchsian", "Irregular", "Apparent"]

# chordal distance under which a projective point is identified with a root
MATCH_TOL = 1e-7


def classify(m: float, n: int) -> Kind:
    """Trichotomy from the vanishing orders ``m`` (may be ``inf``) and ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if m == math.inf or 1 + m > n:
        return "Apparent"
    if 1 + m == n:
        return "Fuchsian"
    return "Irregular"


@dataclass(frozen=True)
class CharDirection:
    """A characteristic direction ``[1:u0]`` (chart U) or ``[u0:1]`` (chart V)."""

    chart: Chart
    u0: complex
    multiplicity: int
    lam: complex
    degenerate: bool
    m: float
    n: int
    kind: Kind

    @property
    def projective(self) -> tuple[complex, complex]:
        return (1 + 0j, self.u0) if self.chart == "U" else (self.u0, 1 + 0j)

    @property
    def label(self) -> str:
        a, b = self.projective
        return f"[{_fmt(a)}:{_fmt(b)}]"


def _fmt(c: complex) -> str:
    c = complex(round(c.real, 6) + 0.0, round(c.imag, 6) + 0.0)
    if c.imag == 0:
        return f"{c.real:g}"
    return f"{c.real:g}{c.imag:+g}i"


@dataclass(frozen=True)
class DirectionReport:
    dicritical: bool
    directions: tuple[CharDirection, ...]
    k: int

    @property
    def total_multiplicity(self) -> int:
        return sum(d.multiplicity for d in self.directions)


@dataclass(frozen=True)
class LocalData:
    """A direction moved to ``u = 0`` in a chart: shifted ``p_k(1,u)`` and ``r(u)``."""

    germ: Germ  # the germ whose chart U is the requested chart
    chart: Chart
    u0: complex
    k: int
    p: UniPoly  # p_k(1, u + u0)
    r: UniPoly  # r(u + u0)
    m: float
    n: int


def _is_dicritical(r: UniPoly, p: UniPoly) -> bool:
    # scale against both polynomials so an all-noise r is recognised
    scale = max([abs(c) for c in p.coeffs] + [abs(c) for c in r.coeffs] + [0.0])
    return all(abs(c) <= 1e-10 * (1 + scale) for c in r.coeffs)


def _chart_roots(G: Germ) -> tuple[UniPoly, UniPoly, list[tuple[complex, int]]]:
    p, r = G.chart_polys("U")
    if _is_dicritical(r, p):
        raise Dicritical("r(u) vanishes identically: every direction is characteristic")
    rt = r.trimmed()
    roots = roots_with_multiplicity(rt) if rt.degree >= 1 else []
    return p, rt, roots


def _local(G: Germ, chart: Chart, u0: complex, n: int, p: UniPoly, r: UniPoly) -> LocalData:
    ps = p.shift(u0)
    rs = r.shift(u0)
    m = ps.order_at_zero() if not p.is_negligible() else math.inf
    if m != math.inf:
        # the shifted value at the root is a rounding residue: threshold on p's own scale
        tol = 1e-10 * (1 + max(abs(c) for c in p.coeffs))
        m = next((i for i, c in enumerate(ps.coeffs) if abs(c) > tol), math.inf)
    return LocalData(G, chart, u0, G.order, ps, rs, m, n)


def characteristic_directions(F: Germ) -> DirectionReport:
    """All characteristic directions of ``F`` with multiplicities.

    Finite directions come from the roots of ``r`` in chart U.  The direction
    ``[0:1]`` is characteristic exactly when ``deg r < k+1``; its multiplicity
    is ``k+1 - deg r`` and its local data are computed in chart V.
    """
    k = F.order
    try:
        p, r, roots = _chart_roots(F)
    except Dicritical:
        return DirectionReport(True, (), k)
    dirs = [_make(_local(F, "U", u0, mult, p, r)) for u0, mult in roots]
    if r.degree < k + 1:
        G = F.swapped()
        pv, rv = G.chart_polys("U")
        rv = rv.trimmed()
        n_inf = k + 1 - r.degree
        dirs.append(_make(_local(G, "V", 0j, n_inf, pv, rv)))
    dirs.sort(key=lambda d: (d.chart, d.u0.real, d.u0.imag))
    return DirectionReport(False, tuple(dirs), k)


def _make(ld: LocalData) -> CharDirection:
    degenerate = ld.m >= 1
    lam = 0j if degenerate else ld.p.coeff(0)
    return CharDirection(ld.chart, complex(ld.u0), ld.n, lam, degenerate, ld.m, ld.n,
                         classify(ld.m, ld.n))


DirectionLike = Union[CharDirection, Sequence[complex]]


def _chordal(a: tuple[complex, complex], b: tuple[complex, complex]) -> float:
    num = abs(a[0] * b[1] - a[1] * b[0])
    return num / (math.hypot(abs(a[0]), abs(a[1])) * math.hypot(abs(b[0]), abs(b[1])))


def local_data(F: Germ, direction: DirectionLike, chart: Chart | None = None) -> LocalData:
    """Locate ``direction`` among the characteristic directions and shift it to ``u = 0``.

    ``direction`` may be a :class:`CharDirection` or a projective pair
    ``(a, b)`` meaning ``[a:b]``.  ``chart`` forces the chart of analysis
    (``None`` keeps the direction's natural chart; ``[0:1]`` only exists in V
    and ``[1:0]`` only in U).
    """
    report = characteristic_directions(F)
    if report.dicritical:
        raise Dicritical("r(u) vanishes identically: every direction is characteristic")
    if isinstance(direction, CharDirection):
        proj = direction.projective
    else:
        a, b = (complex(x) for x in direction)
        if a == 0 and b == 0:
            raise ValueError("[0:0] is not a projective point")
        proj = (a, b)
    best = min(report.directions, key=lambda d: _chordal(d.projective, proj))
    if _chordal(best.projective, proj) > MATCH_TOL:
        raise DirectionNotCharacteristic(f"[{proj[0]}:{proj[1]}] is not characteristic")
    target = chart or best.chart
    if target == best.chart:
        G = F if target == "U" else F.swapped()
        u0 = best.u0
    else:
        if best.u0 == 0:
            raise ValueError(f"direction {best.label} is not visible in chart {target}")
        G = F if target == "U" else F.swapped()
        u0 = 1 / best.u0
    p, r, roots = _chart_roots(G)
    near = [rm for rm in roots if abs(rm[0] - u0) <= 1e-6 * (1 + abs(u0))]
    if not near:
        raise DirectionNotCharacteristic("direction lost when changing chart")
    u0, n = near[0]
    return _local(G, target, u0, n, p, r)


def vanishing_orders(F: Germ, direction: DirectionLike, chart: Chart | None = None
                     ) -> tuple[float, int]:
    """Orders ``(m, n)`` of vanishing of ``p_k(1,u)`` and ``r(u)`` at the direction."""
    ld = local_data(F, direction, chart)
    return ld.m, ld.n


def analyze_in_chart(F: Germ, direction: DirectionLike, chart: Chart) -> CharDirection:
    """Re-derive a direction's data in an explicitly chosen chart."""
    return _make(local_data(F, direction, chart))

