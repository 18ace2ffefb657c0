"""Basin-existence criteria in the index plane and the per-direction verdict."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .directions import DirectionLike, local_data
from .errors import Dicritical, LiftUndefinedError
from .germ import Germ
from .indices import _abate, _hakim, _rho

BOUNDARY_TOL = 1e-9

Status = Literal["inside", "outside", "boundary"]
Conclusion = Literal["BasinExists", "NoBasinAlongDirection", "Unknown"]
Justification = Literal[
    "HakimTheorem",
    "Theorem1_Irregular",
    "Theorem2_FuchsianR",
    "RegularCaseS",
    "NegativeHakimRemark",
    "ApparentUndecided",
    "DicriticalOutOfScope",
    "BoundaryInconclusive",
    "NoCriterionApplies",
]


@dataclass(frozen=True)
class RegionR:
    """Half-plane ``Re z > -m/(k-1)`` with a closed disc removed."""

    m: int
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.m < 0:
            raise ValueError("m must be nonnegative")

    @property
    def half_plane_bound(self) -> float:
        return -self.m / (self.k - 1)

    @property
    def circle_center(self) -> float:
        return (self.m + 1 - self.m / (self.k - 1)) / 2

    @property
    def circle_radius(self) -> float:
        return (self.m + 1 + self.m / (self.k - 1)) / 2

    def status(self, zeta: complex) -> Status:
        zeta = complex(zeta)
        d_line = zeta.real - self.half_plane_bound
        d_circle = abs(zeta - self.circle_center) - self.circle_radius
        if abs(d_line) <= BOUNDARY_TOL or abs(d_circle) <= BOUNDARY_TOL:
            return "boundary"
        return "inside" if d_line > 0 and d_circle > 0 else "outside"

    def contains(self, zeta: complex) -> bool:
        return self.status(zeta) == "inside"


@dataclass(frozen=True)
class RegionS:
    """Open disc of diameter ``1/(m+1)`` touching the origin."""

    m: int

    @property
    def center(self) -> float:
        return 1 / (2 * (self.m + 1))

    @property
    def radius(self) -> float:
        return 1 / (2 * (self.m + 1))

    def status(self, zeta: complex) -> Status:
        d = abs(complex(zeta) - self.center) - self.radius
        if abs(d) <= BOUNDARY_TOL:
            return "boundary"
        return "inside" if d < 0 else "outside"

    def contains(self, zeta: complex) -> bool:
        return self.status(zeta) == "inside"


def in_region_R(zeta: complex, m: int, k: int) -> bool:
    return RegionR(m, k).contains(zeta)


def in_region_S(zeta: complex, m: int) -> bool:
    return RegionS(m).contains(zeta)


def lemma1_condition(c: complex, d: complex, a: int, b: int) -> bool:
    """``Re(c/d) > -b/a`` and ``|c/d + b/(2a)| > b/(2a)``."""
    if d == 0:
        raise ValueError("d must be nonzero")
    if a <= 0 or b < 0:
        raise ValueError("need a > 0 and b >= 0")
    t = complex(c) / complex(d)
    return t.real > -b / a and abs(t + b / (2 * a)) > b / (2 * a)


def lemma1_diagonal(c: complex, d: complex, a: int, b: int) -> tuple[complex, complex]:
    """Diagonal of the linear part of the lifted map: ``c/(ac+bd)``, ``d/(ac+bd)``."""
    s = a * complex(c) + b * complex(d)
    if s == 0:
        raise LiftUndefinedError("ac + bd = 0")
    return complex(c) / s, complex(d) / s


def eigenvalue_condition(alphas: Sequence[complex]) -> bool:
    if len(alphas) == 0:
        raise ValueError("need at least one eigenvalue")
    return all(complex(a).real > 0 for a in alphas)


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    justification: Justification
    tested_value: complex | None


def verdict(F: Germ, direction: DirectionLike) -> Verdict:
    """Which criterion (if any) yields a basin along ``direction``."""
    try:
        ld = local_data(F, direction)
    except Dicritical:
        return Verdict("Unknown", "DicriticalOutOfScope", None)
    m, n, k = ld.m, ld.n, ld.k
    if m == math.inf or 1 + m > n:
        return Verdict("Unknown", "ApparentUndecided", _abate(ld))
    if 1 + m < n:
        return Verdict("BasinExists", "Theorem1_Irregular", _abate(ld))
    if m == 0:  # nondegenerate, n = 1
        ih = _hakim(ld)
        if abs(ih.real) <= BOUNDARY_TOL:
            return Verdict("Unknown", "BoundaryInconclusive", ih)
        if ih.real > 0:
            return Verdict("BasinExists", "HakimTheorem", ih)
        return Verdict("NoBasinAlongDirection", "NegativeHakimRemark", ih)
    ind = _abate(ld)
    r_status = RegionR(int(m), k).status(ind)
    if r_status == "inside":
        return Verdict("BasinExists", "Theorem2_FuchsianR", ind)
    _, regular = _rho(ld)
    s_status = RegionS(int(m)).status(ind)
    if regular and s_status == "inside":
        return Verdict("BasinExists", "RegularCaseS", ind)
    if r_status == "boundary" or (regular and s_status == "boundary"):
        return Verdict("Unknown", "BoundaryInconclusive", ind)
    return Verdict("Unknown", "NoCriterionApplies", ind)
