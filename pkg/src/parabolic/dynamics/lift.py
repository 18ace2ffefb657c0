"""Lift of a two-variable map to three variables through ``pi(z, w) = (-(ac+bd) z^a w^b, z, w)``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..criteria import lemma1_diagonal

Evaluator = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class LiftReport:
    diagonal: tuple[complex, complex]
    max_residual: float
    samples: int


@dataclass(frozen=True)
class Lemma1Lift:
    c: complex
    d: complex
    a: int
    b: int
    f: Evaluator

    @property
    def s(self) -> complex:
        return self.a * self.c + self.b * self.d

    def pi(self, z, w):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        return -self.s * z ** self.a * w ** self.b, z, w

    def g(self, X, z, w):
        """The lifted map: ``X`` is multiplied by ``(f1/z)^a (f2/w)^b``."""
        X = np.asarray(X, dtype=complex)
        z1, w1 = self.f(z, w)
        return X * (z1 / z) ** self.a * (w1 / w) ** self.b, z1, w1

    def commutation_residual(self, z, w) -> np.ndarray:
        """Relative mismatch between ``pi o f`` and ``g o pi``, per point."""
        lhs = np.stack(self.pi(*self.f(z, w)))
        rhs = np.stack(self.g(*self.pi(z, w)))
        scale = np.maximum(np.abs(lhs), np.abs(rhs))
        scale = np.where(scale > 0, scale, 1.0)
        return np.max(np.abs(lhs - rhs) / scale, axis=0)


def lemma1_lift(c: complex, d: complex, a: int, b: int, f: Evaluator,
                samples: int = 1000, radius: float = 0.05, seed: int = 42
                ) -> tuple[Lemma1Lift, LiftReport]:
    """Build the lift of ``f`` and verify ``pi o f = g o pi`` on random small points.

    Raises :class:`~parabolic.errors.LiftUndefinedError` when ``ac + bd = 0``.
    """
    diag = lemma1_diagonal(c, d, a, b)
    lift = Lemma1Lift(complex(c), complex(d), int(a), int(b), f)
    rng = np.random.default_rng(seed)

    def draw():
        r = radius * np.sqrt(rng.uniform(0.01, 1, samples))
        return r * np.exp(2j * np.pi * rng.uniform(0, 1, samples))

    z, w = draw(), draw()
    res = lift.commutation_residual(z, w)
    return lift, LiftReport(diag, float(np.max(res)), samples)
