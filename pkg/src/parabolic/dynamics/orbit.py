"""Orbit iteration with fate classification.

The inner loop is a numba kernel released from the GIL so raster rows can be
computed from several threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numba as nb
import numpy as np

from ..directions import CharDirection
from ..germ import Germ

Fate = Literal["AttractedAlong", "AttractedNoDirection", "Escaped", "Undecided"]

FATE_ESCAPED = 0
FATE_UNDECIDED = 1
FATE_NO_DIRECTION = 2
FATE_ALONG = 3
_FATE_NAMES = {
    FATE_ESCAPED: "Escaped",
    FATE_UNDECIDED: "Undecided",
    FATE_NO_DIRECTION: "AttractedNoDirection",
    FATE_ALONG: "AttractedAlong",
}


@dataclass(frozen=True)
class OrbitConfig:
    max_iter: int = 100_000
    attract_radius: float = 1e-4
    escape_radius: float = 10.0
    tangency_tol: float = 1e-3
    direction_window: int = 50

    def __post_init__(self):
        if self.max_iter < 1 or self.direction_window < 1:
            raise ValueError("max_iter and direction_window must be positive")
        if not 0 < self.attract_radius < self.escape_radius:
            raise ValueError("need 0 < attract_radius < escape_radius")
        if self.tangency_tol <= 0:
            raise ValueError("tangency_tol must be positive")


@dataclass(frozen=True)
class OrbitResult:
    fate: Fate
    iterations: int
    final_point: tuple[complex, complex]
    direction: tuple[complex, complex] | None  # unit representative of [z_n : w_n]

    @property
    def escaped(self) -> bool:
        return self.fate == "Escaped"


@nb.njit(cache=True, nogil=True)
def _poly_eval(ii, jj, cc, pz, pw):
    acc = 0j
    for t in range(cc.shape[0]):
        acc += cc[t] * pz[ii[t]] * pw[jj[t]]
    return acc


@nb.njit(cache=True, nogil=True)
def _step(i1, j1, c1, i2, j2, c2, z, w, pz, pw):
    pz[0] = 1.0
    pw[0] = 1.0
    for d in range(1, pz.shape[0]):
        pz[d] = pz[d - 1] * z
        pw[d] = pw[d - 1] * w
    return _poly_eval(i1, j1, c1, pz, pw), _poly_eval(i2, j2, c2, pz, pw)


@nb.njit(cache=True, nogil=True)
def _chordal(a1, a2, b1, b2):
    num = abs(a1 * b2 - a2 * b1)
    den = math.sqrt(abs(a1) ** 2 + abs(a2) ** 2) * math.sqrt(abs(b1) ** 2 + abs(b2) ** 2)
    return num / den


@nb.njit(cache=True, nogil=True)
def orbit_kernel(i1, j1, c1, i2, j2, c2, degree, z, w, max_iter, attract_r,
                 escape_r, tang_tol, window):
    """Return ``(fate_code, iterations, z, w)``."""
    pz = np.empty(degree + 1, dtype=np.complex128)
    pw = np.empty(degree + 1, dtype=np.complex128)
    ring_z = np.empty(window, dtype=np.complex128)
    ring_w = np.empty(window, dtype=np.complex128)
    prev = math.inf
    streak = 0
    for n in range(max_iter + 1):
        norm = math.sqrt(abs(z) ** 2 + abs(w) ** 2)
        if not (norm <= escape_r):  # also catches NaN
            return FATE_ESCAPED, n, z, w
        if norm < prev:
            streak += 1
        else:
            streak = 0
        prev = norm
        if norm > 0:
            ring_z[n % window] = z / norm
            ring_w[n % window] = w / norm
        if norm < attract_r and streak >= window:
            ok = True
            for t in range(window):
                if _chordal(ring_z[t], ring_w[t], z, w) > tang_tol:
                    ok = False
                    break
            if ok:
                return FATE_ALONG, n, z, w
        if n == max_iter:
            break
        z, w = _step(i1, j1, c1, i2, j2, c2, z, w, pz, pw)
    norm = math.sqrt(abs(z) ** 2 + abs(w) ** 2)
    if norm < attract_r:
        return FATE_NO_DIRECTION, max_iter, z, w
    return FATE_UNDECIDED, max_iter, z, w


@nb.njit(cache=True, nogil=True)
def trajectory_kernel(i1, j1, c1, i2, j2, c2, degree, z, w, steps):
    out = np.empty((steps + 1, 2), dtype=np.complex128)
    pz = np.empty(degree + 1, dtype=np.complex128)
    pw = np.empty(degree + 1, dtype=np.complex128)
    out[0, 0] = z
    out[0, 1] = w
    for n in range(steps):
        z, w = _step(i1, j1, c1, i2, j2, c2, z, w, pz, pw)
        out[n + 1, 0] = z
        out[n + 1, 1] = w
    return out


def _kernel_args(F: Germ):
    i1, j1, c1, i2, j2, c2 = F.arrays
    return i1, j1, c1, i2, j2, c2, F.degree


def iterate_orbit(F: Germ, p0: Sequence[complex], cfg: OrbitConfig | None = None) -> OrbitResult:
    """Iterate ``F`` from ``p0`` until a fate is decided or ``cfg.max_iter`` is hit."""
    cfg = cfg or OrbitConfig()
    z0, w0 = complex(p0[0]), complex(p0[1])
    if z0 == 0 and w0 == 0:
        raise ValueError("p0 must differ from the fixed point")
    code, n, z, w = orbit_kernel(*_kernel_args(F), z0, w0, cfg.max_iter, cfg.attract_radius,
                                 cfg.escape_radius, cfg.tangency_tol, cfg.direction_window)
    return _result(code, n, z, w)


def _result(code: int, n: int, z: complex, w: complex) -> OrbitResult:
    z, w = complex(z), complex(w)
    norm = math.hypot(abs(z), abs(w))
    direction = None
    if code == FATE_ALONG and norm > 0:
        direction = (z / norm, w / norm)
    return OrbitResult(_FATE_NAMES[code], int(n), (z, w), direction)


def trajectory(F: Germ, p0: Sequence[complex], steps: int) -> np.ndarray:
    """The points ``F^n(p0)`` for ``n = 0..steps`` as a ``(steps+1, 2)`` array."""
    return trajectory_kernel(*_kernel_args(F), complex(p0[0]), complex(p0[1]), int(steps))


def chordal_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Distance between ``[a0:a1]`` and ``[b0:b1]`` on the projective line."""
    return _chordal(complex(a[0]), complex(a[1]), complex(b[0]), complex(b[1]))


def nearest_direction(estimate: Sequence[complex],
                      directions: Sequence[CharDirection]) -> tuple[int, float]:
    """Index of the characteristic direction closest to ``estimate`` and its distance."""
    if not directions:
        raise ValueError("no directions to compare against")
    dists = [chordal_distance(estimate, d.projective) for d in directions]
    j = int(np.argmin(dists))
    return j, dists[j]
