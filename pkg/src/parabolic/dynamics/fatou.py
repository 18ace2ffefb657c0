"""Fatou coordinates for maps in the normal form ``x1 = x+1, y1 = y + 1/x``.

The second coordinate is ``lim (y_n - log x_n)``.  Since the digamma
function satisfies ``psi(x+1) = psi(x) + 1/x`` and ``psi(x) - log x -> 0``,
the limit equals ``lim (y_n - psi(x_n))``, and for the exact model the
sequence ``y_n - psi(x_n)`` is constant.  Iterating that accelerated
sequence converges after a handful of steps for maps whose remainder decays
faster than ``1/x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Protocol, Sequence

import numpy as np
from scipy.special import psi

from ..errors import FatouConvergenceError, NotInBasinError

Evaluator = Callable[[complex, complex], tuple[complex, complex]]

SECTOR_HALF_ANGLE = math.pi / 4


@dataclass(frozen=True)
class FatouValue:
    phi1: complex
    phi2: complex
    converged: bool
    iterations: int

    def __iter__(self):
        return iter((self.phi1, self.phi2, self.converged))


def fatou_coordinate(G: Evaluator, p0: Sequence[complex], tol: float = 1e-13,
                     max_iter: int = 10_000, min_iter: int = 4) -> FatouValue:
    """``(lim x_n - n, lim y_n - log x_n)`` along the ``G``-orbit of ``p0``.

    ``p0`` must lie in the sector ``|Arg x| < pi/4`` where the principal
    logarithm is used.  Raises :class:`FatouConvergenceError` when the point
    is outside it, when the orbit produces non-finite values, or when the
    partial values still move by ``tol`` (relative) after ``max_iter`` steps.
    """
    x, y = complex(p0[0]), complex(p0[1])
    if x == 0 or abs(np.angle(x)) >= SECTOR_HALF_ANGLE:
        raise FatouConvergenceError("p0 outside the sector |Arg x| < pi/4")
    prev = None
    for n in range(max_iter + 1):
        cur = (x - n, y - complex(psi(x)))
        if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in cur):
            raise FatouConvergenceError(f"non-finite value at step {n}")
        if prev is not None and n >= min_iter:
            delta = max(abs(cur[0] - prev[0]), abs(cur[1] - prev[1]))
            if delta <= tol * (1 + abs(cur[0]) + abs(cur[1])):
                return FatouValue(cur[0], cur[1], True, n)
        prev = cur
        x, y = (complex(v) for v in G(x, y))
    raise FatouConvergenceError(f"no convergence within {max_iter} steps")


def model_step(x: complex, y: complex) -> tuple[complex, complex]:
    return x + 1, y + 1 / x


def model_fatou_exact(x: complex, y: complex) -> tuple[complex, complex]:
    """Closed form for the model map: ``(x, y - psi(x))``."""
    return complex(x), complex(y) - complex(psi(complex(x)))


class LocalChartLike(Protocol):
    def contains(self, p: Sequence[complex]) -> bool: ...

    def evaluate(self, p: Sequence[complex]) -> tuple[complex, complex]: ...


@dataclass(frozen=True)
class GlobalValue:
    value: tuple[complex, complex]
    n: int
    residual: float


def phi_global(F: Callable, chart: LocalChartLike, p: Sequence[complex],
               n_max: int = 10_000) -> GlobalValue:
    """``phi(F^n(p)) - (n, 0)`` for the least ``n`` with ``F^n(p)`` in the chart.

    The same quantity is recomputed at ``n+1``; ``residual`` is the distance
    between the two, which the translation property makes zero.
    """
    q = tuple(complex(c) for c in p)
    for n in range(n_max + 1):
        if chart.contains(q):
            v = chart.evaluate(q)
            val = (v[0] - n, v[1])
            q1 = tuple(complex(c) for c in F(*q))
            v1 = chart.evaluate(q1)
            val1 = (v1[0] - (n + 1), v1[1])
            res = max(abs(val[0] - val1[0]), abs(val[1] - val1[1]))
            return GlobalValue(val, n, float(res))
        try:
            q = tuple(complex(c) for c in F(*q))
        except (ZeroDivisionError, OverflowError):
            break
        if not all(math.isfinite(abs(c)) for c in q):
            break
    raise NotInBasinError(f"orbit did not enter the chart within {n_max} steps")


@dataclass(frozen=True)
class FatouChart:
    """A region ``V`` together with the Fatou coordinate of ``G`` on it."""

    G: Evaluator
    region: object  # anything with contains(x, y)
    tol: float = 1e-13

    def contains(self, p) -> bool:
        return bool(self.region.contains(p[0], p[1]))

    def evaluate(self, p) -> tuple[complex, complex]:
        v = fatou_coordinate(self.G, p, tol=self.tol)
        return v.phi1, v.phi2
