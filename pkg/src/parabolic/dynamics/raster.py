"""Fate grids on real 2-planes of C^2, with PPM and CSV export."""
from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numba as nb
import numpy as np

from ..directions import characteristic_directions
from ..germ import Germ
from .orbit import (FATE_ALONG, FATE_ESCAPED, FATE_NO_DIRECTION, FATE_UNDECIDED, OrbitConfig,
                    _chordal, orbit_kernel)

ESCAPED_RGB = (255, 255, 255)
UNDECIDED_RGB = (0, 0, 0)
NO_DIRECTION_RGB = (128, 128, 128)
PALETTE = (
    (31, 119, 180), (255, 127, 14), (44, 160, 44), (214, 39, 40),
    (148, 103, 189), (140, 86, 75), (227, 119, 194), (188, 189, 34),
)


@dataclass(frozen=True)
class SliceSpec:
    """Pixel ``(row, col)`` sits at ``origin + s e1 + t e2``.

    ``s`` runs from ``-extent`` to ``extent`` across columns, ``t`` from
    ``extent`` down to ``-extent`` across rows, at pixel centres.
    """

    origin: tuple[complex, complex]
    e1: tuple[complex, complex]
    e2: tuple[complex, complex]
    width: int
    height: int
    extent: float

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must be positive")
        if not self.extent > 0:
            raise ValueError("extent must be positive")
        a = np.array([complex(c) for c in self.e1])
        b = np.array([complex(c) for c in self.e2])
        real = np.stack([np.concatenate([a.real, a.imag]), np.concatenate([b.real, b.imag])])
        if np.linalg.matrix_rank(real) < 2:
            raise ValueError("e1 and e2 must span a real 2-plane")

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        s = -self.extent + (np.arange(self.width) + 0.5) * 2 * self.extent / self.width
        t = self.extent - (np.arange(self.height) + 0.5) * 2 * self.extent / self.height
        return s, t

    def point(self, row: int, col: int) -> tuple[complex, complex]:
        s, t = self.coordinates()
        return tuple(complex(self.origin[i]) + s[col] * complex(self.e1[i])
                     + t[row] * complex(self.e2[i]) for i in range(2))


@dataclass(frozen=True)
class FateGrid:
    codes: np.ndarray  # (height, width) int: 0 escaped, 1 undecided, 2 no direction, 3+j along j
    iterations: np.ndarray
    direction_labels: tuple[str, ...]

    def counts(self) -> dict[str, int]:
        out = {
            "Escaped": int(np.count_nonzero(self.codes == FATE_ESCAPED)),
            "Undecided": int(np.count_nonzero(self.codes == FATE_UNDECIDED)),
            "AttractedNoDirection": int(np.count_nonzero(self.codes == FATE_NO_DIRECTION)),
        }
        for j, label in enumerate(self.direction_labels or ("any",)):
            out[f"AttractedAlong {label}"] = int(np.count_nonzero(self.codes == FATE_ALONG + j))
        return out


@nb.njit(cache=True, nogil=True)
def _row_kernel(i1, j1, c1, i2, j2, c2, degree, z_row, w_row, dirs, max_iter, attract_r,
                escape_r, tang_tol, window, codes, iters):
    for c in range(z_row.shape[0]):
        code, n, z, w = orbit_kernel(i1, j1, c1, i2, j2, c2, degree, z_row[c], w_row[c],
                                     max_iter, attract_r, escape_r, tang_tol, window)
        if code == FATE_ALONG and dirs.shape[0] > 0:
            best = 0
            best_d = 1e300
            for j in range(dirs.shape[0]):
                d = _chordal(dirs[j, 0], dirs[j, 1], z, w)
                if d < best_d:
                    best_d = d
                    best = j
            code = FATE_ALONG + best
        codes[c] = code
        iters[c] = n


def raster_slice(F: Germ, spec: SliceSpec, cfg: OrbitConfig | None = None,
                 workers: int = 1) -> FateGrid:
    """Fate of every pixel of the slice; rows are distributed over ``workers`` threads."""
    cfg = cfg or OrbitConfig()
    report = characteristic_directions(F)
    dirs = np.array([d.projective for d in report.directions], dtype=np.complex128).reshape(-1, 2)
    labels = tuple(d.label for d in report.directions)
    s, t = spec.coordinates()
    o = [complex(c) for c in spec.origin]
    e1 = [complex(c) for c in spec.e1]
    e2 = [complex(c) for c in spec.e2]
    codes = np.empty((spec.height, spec.width), dtype=np.int64)
    iters = np.empty((spec.height, spec.width), dtype=np.int64)
    i1, j1, c1, i2, j2, c2 = F.arrays

    def row(r: int) -> None:
        z_row = o[0] + s * e1[0] + t[r] * e2[0]
        w_row = o[1] + s * e1[1] + t[r] * e2[1]
        _row_kernel(i1, j1, c1, i2, j2, c2, F.degree, z_row.astype(np.complex128),
                    w_row.astype(np.complex128), dirs, cfg.max_iter, cfg.attract_radius,
                    cfg.escape_radius, cfg.tangency_tol, cfg.direction_window,
                    codes[r], iters[r])

    if workers <= 1:
        for r in range(spec.height):
            row(r)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(row, range(spec.height)))
    return FateGrid(codes, iters, labels)


def fate_color(code: int) -> tuple[int, int, int]:
    if code == FATE_ESCAPED:
        return ESCAPED_RGB
    if code == FATE_UNDECIDED:
        return UNDECIDED_RGB
    if code == FATE_NO_DIRECTION:
        return NO_DIRECTION_RGB
    return PALETTE[(code - FATE_ALONG) % len(PALETTE)]


def ppm_bytes(grid: FateGrid) -> bytes:
    h, w = grid.codes.shape
    lut = np.array([fate_color(c) for c in range(int(grid.codes.max(initial=0)) + 1)],
                   dtype=np.uint8)
    body = lut[grid.codes].tobytes()
    return f"P6\n{w} {h}\n255\n".encode("ascii") + body


def csv_text(grid: FateGrid) -> str:
    buf = io.StringIO()
    buf.write("row,col,fate_code,iterations\n")
    h, w = grid.codes.shape
    for r in range(h):
        for c in range(w):
            buf.write(f"{r},{c},{grid.codes[r, c]},{grid.iterations[r, c]}\n")
    return buf.getvalue()


def write_grid(grid: FateGrid, path: str | Path) -> Path:
    """Write as PPM (``.ppm``) or CSV (``.csv``), chosen by suffix."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".ppm":
        path.write_bytes(ppm_bytes(grid))
    elif suffix == ".csv":
        path.write_text(csv_text(grid), encoding="ascii")
    else:
        raise ValueError(f"unsupported output format {suffix!r} (use .ppm or .csv)")
    return path


def read_ppm(path: str | Path) -> np.ndarray:
    """Read back a P6 file as an ``(h, w, 3)`` uint8 array."""
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if parts[0] != b"P6":
        raise ValueError("not a binary PPM")
    w, h = (int(v) for v in parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(h, w, 3)


def diagonal_slice(width: int = 64, height: int = 64, extent: float = 0.5,
                   origin: Sequence[complex] = (0, 0)) -> SliceSpec:
    """The complex line ``z = w`` through ``origin``, parametrised by ``s + i t``."""
    return SliceSpec(tuple(complex(c) for c in origin), (1, 1), (1j, 1j), width, height, extent)
