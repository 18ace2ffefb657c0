"""Hakim index, Abate residual index and the regularity coefficient."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import UniPoly, contour_residue, roots_with_multiplicity, series_residue, zero_tol
from .directions import DirectionLike, LocalData, local_data
from .errors import DegenerateDirection, WrongClass
from .germ import Germ, blowup_expand


def hakim_index(F: Germ, direction: DirectionLike) -> complex:
    """``r'(u0) / p_k(1, u0)`` at a nondegenerate direction."""
    ld = local_data(F, direction)
    return _hakim(ld)


def _hakim(ld: LocalData) -> complex:
    if ld.m >= 1:
        raise DegenerateDirection("p_k vanishes along the direction (lambda = 0)")
    if ld.n >= 2:
        return 0j  # r'(u0) = 0 at a multiple root
    return ld.r.coeff(1) / ld.p.coeff(0)


def abate_index(F: Germ, direction: DirectionLike) -> complex:
    """Residue at the direction of ``p_k(1,u) / r(u)``."""
    return _abate(local_data(F, direction))


def _abate(ld: LocalData) -> complex:
    if ld.m == math.inf:
        return 0j
    # the low coefficients of the shifted r are rounding residue at a root of order n
    r = UniPoly([0j] * ld.n + list(ld.r.coeffs[ld.n:]))
    return series_residue(ld.p, r, 0j)


def _contour_radius(ld: LocalData) -> float:
    roots = [r for r, _ in roots_with_multiplicity(ld.r)]
    others = [abs(r) for r in roots if abs(r) > 1e-6]
    return 0.5 * min(others) if others else 0.5


def abate_contour(F: Germ, direction: DirectionLike, nodes: int = 128) -> complex:
    """Independent trapezoidal evaluation of the Abate index."""
    return _abate_contour(local_data(F, direction), nodes)


def _abate_contour(ld: LocalData, nodes: int = 128) -> complex:
    if ld.m == math.inf:
        return 0j
    radius = _contour_radius(ld)
    p, r = ld.p, ld.r
    return contour_residue(lambda u: p(u) / r(u), 0j, radius, nodes)


def rho_regularity(F: Germ, direction: DirectionLike) -> tuple[complex, bool]:
    """Regularity coefficient at a degenerate Fuchsian direction.

    ``rho`` is the ``z**k u**0`` coefficient of ``F~2 - u`` in the chart
    shifted to the direction, divided by the leading coefficient ``a_m`` of
    ``p_k(1,u)`` there.  The direction is regular when the unnormalised
    coefficient is above the zero tolerance.
    """
    ld = local_data(F, direction)
    return _rho(ld)


def _rho(ld: LocalData) -> tuple[complex, bool]:
    if not (ld.m >= 1 and ld.m != math.inf and 1 + ld.m == ld.n):
        raise WrongClass("regularity is defined for degenerate Fuchsian directions only")
    exp = blowup_expand(ld.germ, "U", 1)
    c1 = exp.comp2[1]
    raw = c1(ld.u0)
    a_m = ld.p.coeff(int(ld.m))
    scale = zero_tol(list(c1.coeffs) + list(exp.comp2[0].coeffs))
    return raw / a_m, abs(raw) > scale


@dataclass(frozen=True)
class IndexReport:
    hakim: complex | None
    abate: complex
    abate_contour: complex
    rho: complex | None
    regular: bool | None


def index_report(F: Germ, direction: DirectionLike) -> IndexReport:
    """Every index applicable at the direction."""
    ld = local_data(F, direction)
    hakim = _hakim(ld) if ld.m == 0 else None
    abate = _abate(ld)
    contour = _abate_contour(ld)
    rho = regular = None
    if ld.m >= 1 and ld.m != math.inf and 1 + ld.m == ld.n:
        rho, regular = _rho(ld)
    return IndexReport(hakim, abate, contour, rho, regular)
