"""The sector region ``V`` and invariance checks for maps ``x1 ~ x+1, y1 ~ y+1/x``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import HypothesisCheckError

Evaluator = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class SectorRegion:
    """``{Re x > R, |Arg x| < theta, Re y > R, |y|^N < |x|}``."""

    R: float
    N: float
    theta: float

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError("R must be positive")
        if not self.N > 1:
            raise ValueError("N must exceed 1")
        if not 0 < self.theta < math.pi / 4:
            raise ValueError("theta must lie in (0, pi/4)")

    def contains(self, x, y):
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        inside = ((x.real > self.R) & (np.abs(np.angle(x)) < self.theta)
                  & (y.real > self.R) & (np.abs(y) ** self.N < np.abs(x)))
        return bool(inside) if inside.ndim == 0 else inside

    def margins(self, x, y) -> np.ndarray:
        """Relative slack of each of the four conditions; all positive iff inside."""
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        return np.stack([
            (x.real - self.R) / self.R,
            (self.theta - np.abs(np.angle(x))) / self.theta,
            (y.real - self.R) / self.R,
            1 - np.abs(y) ** self.N / np.abs(x),
        ])

    def sample(self, count: int, rng: np.random.Generator, spread: float = 4.0):
        """Points of a bounded patch of the region.

        ``|x|^(1/N)`` is uniform on ``(1.05 R, spread R)`` and ``Arg x`` on
        ``(-theta, theta)``; ``y`` is uniform on the part of the disc
        ``|y| < |x|^(1/N)`` with ``Re y > R`` (by rejection).
        """
        rad = rng.uniform(1.05 * self.R, spread * self.R, count)
        arg = rng.uniform(-self.theta, self.theta, count)
        x = rad ** self.N * np.exp(1j * arg)
        y = np.empty(count, dtype=complex)
        todo = np.arange(count)
        while todo.size:
            r = rad[todo]
            cand = rng.uniform(self.R, r) + 1j * rng.uniform(-r, r)
            ok = np.abs(cand) < r
            y[todo[ok]] = cand[ok]
            todo = todo[~ok]
        keep = self.contains(x, y)
        return x[keep], y[keep]


def region_V_contains(x: complex, y: complex, V: SectorRegion) -> bool:
    return bool(V.contains(x, y))


Term = tuple[float, float]  # |x|**ex * |y|**ey


def _term_sum(terms: Sequence[Term], ax: np.ndarray, ay: np.ndarray) -> np.ndarray:
    return sum(ax ** ex * ay ** ey for ex, ey in terms)


@dataclass(frozen=True)
class NormalFormMap:
    """A map of the form ``x1 = x + 1 + eta1``, ``y1 = y + 1/x + eta2``.

    ``eta1_terms`` and ``eta2_terms`` declare the error bounds as sums of
    monomials ``|x|^ex |y|^ey``; :meth:`fit_constant` measures the constant.
    """

    evaluator: Evaluator
    eta1_terms: tuple[Term, ...] = ()
    eta2_terms: tuple[Term, ...] = ()

    @classmethod
    def from_exponents(cls, evaluator: Evaluator, a: float, b: float, c: float,
                       d: float, e: float) -> "NormalFormMap":
        """Bounds ``eta1 = O(x^-a, y^-b)`` and ``eta2 = O(y^c / x^d, 1/(x y^e))``."""
        if not (a > 0 and b > 0 and c > 0 and d > 1 and e > 0):
            raise ValueError("need a, b, c, e > 0 and d > 1")
        return cls(evaluator, ((-a, 0.0), (0.0, -b)), ((-d, c), (-1.0, -e)))

    def __call__(self, x, y):
        return self.evaluator(x, y)

    def errors(self, x, y) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        x1, y1 = self.evaluator(x, y)
        return x1 - x - 1, y1 - y - 1 / x

    def fit_constant(self, x, y) -> float:
        """Smallest ``C`` making both declared bounds hold on the given points."""
        e1, e2 = self.errors(x, y)
        ax, ay = np.abs(x), np.abs(y)
        ratios = []
        if self.eta1_terms:
            ratios.append(np.max(np.abs(e1) / _term_sum(self.eta1_terms, ax, ay)))
        if self.eta2_terms:
            ratios.append(np.max(np.abs(e2) / _term_sum(self.eta2_terms, ax, ay)))
        return float(max(ratios)) if ratios else math.nan


def model_map(x, y):
    """The exact normal form ``(x + 1, y + 1/x)``."""
    x = np.asarray(x, dtype=complex)
    return x + 1, np.asarray(y, dtype=complex) + 1 / x


MODEL = NormalFormMap(model_map)


@dataclass(frozen=True)
class InvarianceReport:
    samples: int
    violations: int
    worst_margin: float
    C: float
    eta1_max: float
    x_eta2_max: float


def check_V_invariance(G: NormalFormMap, V: SectorRegion, samples: int, seed: int,
                       verify_hypothesis: bool = True) -> InvarianceReport:
    """Apply ``G`` once to ``samples`` points of ``V`` and count the exits.

    The hypothesis ``|eta1| < 1/10`` and ``|x eta2| < 1/10`` is measured
    first; a failure raises :class:`HypothesisCheckError` unless
    ``verify_hypothesis`` is off (used for deliberately broken maps).
    """
    rng = np.random.default_rng(seed)
    x, y = V.sample(samples, rng)
    e1, e2 = G.errors(x, y)
    eta1_max = float(np.max(np.abs(e1)))
    x_eta2_max = float(np.max(np.abs(x * e2)))
    if verify_hypothesis and not (eta1_max < 0.1 and x_eta2_max < 0.1):
        raise HypothesisCheckError(
            f"max|eta1| = {eta1_max:.3g}, max|x eta2| = {x_eta2_max:.3g}; both must be < 0.1")
    x1, y1 = G(x, y)
    margins = V.margins(x1, y1)
    worst = margins.min(axis=0)
    inside = V.contains(x1, y1)
    C = G.fit_constant(x, y) if (G.eta1_terms or G.eta2_terms) else math.nan
    return InvarianceReport(int(x.size), int(np.count_nonzero(~inside)), float(worst.min()),
                            C, eta1_max, x_eta2_max)


def irregular_error_terms(k: int, m: int, n: int) -> tuple[tuple[Term, ...], tuple[Term, ...]]:
    """Declared remainder monomials of the irregular coordinate changes.

    For ``m = 0``: ``eta1 = O(x^(-1/(k-1)), y^(-1/(n-1)))`` and
    ``eta2 = O(y^(1/(n-1)) / x^(k/(k-1)), 1/(x y^(n/(n-1))))``.
    For ``m > 0`` with ``p = n-m-1``: ``eta1 = O(y^(-1/p), y^g / x^(1/(k-1)))``
    with ``g = (mk+k-1)/((k-1)p)``, and
    ``eta2 = O(y^h / x^(k/(k-1)), 1/(x y^(1/p)))`` with
    ``h = (n-m+k-2+mk)/(p(k-1))``.
    """
    if m == 0:
        return (((-1 / (k - 1), 0.0), (0.0, -1 / (n - 1))),
                ((-k / (k - 1), 1 / (n - 1)), (-1.0, -n / (n - 1))))
    p = n - m - 1
    g = (m * k + k - 1) / ((k - 1) * p)
    h = (n - m + k - 2 + m * k) / (p * (k - 1))
    return (((0.0, -1 / p), (-1 / (k - 1), g)),
            ((-k / (k - 1), h), (-1.0, -1 / p)))
