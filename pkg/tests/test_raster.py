from pathlib import Path

import numpy as np
import pytest
from scipy import ndimage

from parabolic.catalog import diagonal_quadratic, dicritical
from parabolic.dynamics.orbit import FATE_ALONG, FATE_ESCAPED, OrbitConfig, chordal_distance, \
    iterate_orbit
from parabolic.dynamics.raster import (SliceSpec, csv_text, diagonal_slice, fate_color, ppm_bytes,
                                       raster_slice, read_ppm, write_grid)

GOLDEN = Path(__file__).parent / "data" / "golden"
CFG = OrbitConfig(max_iter=20_000)


def test_slice_spec_validation():
    with pytest.raises(ValueError):
        SliceSpec((0, 0), (1, 0), (2, 0), 4, 4, 1.0)  # parallel over R
    with pytest.raises(ValueError):
        SliceSpec((0, 0), (1, 0), (1j, 0), 0, 4, 1.0)
    with pytest.raises(ValueError):
        SliceSpec((0, 0), (1, 0), (1j, 0), 4, 4, 0.0)
    # (1, 0) and (1j, 0) are C-parallel but span a real 2-plane
    SliceSpec((0, 0), (1, 0), (1j, 0), 4, 4, 1.0)


def test_pixel_centres():
    spec = SliceSpec((0, 0), (1, 0), (0, 1), 4, 2, 1.0)
    s, t = spec.coordinates()
    assert np.allclose(s, [-0.75, -0.25, 0.25, 0.75])
    assert np.allclose(t, [0.5, -0.5])
    assert spec.point(0, 3) == (0.75, 0.5)


def test_diagonal_basin_is_one_patch():
    spec = diagonal_slice(24, 24, 0.5)
    grid = raster_slice(diagonal_quadratic(), spec, CFG)
    j = grid.direction_labels.index("[1:1]")
    basin = grid.codes == FATE_ALONG + j
    assert basin.sum() > 0
    _, ncomp = ndimage.label(basin)
    assert ncomp == 1
    # on z = w the map is z - z^2, whose basin meets the positive real axis
    row = 12  # t just below zero
    assert basin[row, 12:].all()
    assert set(np.unique(grid.codes)) <= {FATE_ESCAPED, 1, FATE_ALONG + j}


def test_pixels_agree_with_single_orbits():
    F = diagonal_quadratic()
    spec = diagonal_slice(6, 6, 0.5)
    grid = raster_slice(F, spec, CFG)
    for r in range(6):
        for c in range(6):
            res = iterate_orbit(F, spec.point(r, c), CFG)
            assert res.iterations == grid.iterations[r, c]


def test_small_escape_radius_escapes_everything():
    cfg = OrbitConfig(max_iter=100, attract_radius=1e-4, escape_radius=0.01)
    spec = SliceSpec((0, 0), (1, 0), (0, 1), 8, 8, 0.5)
    grid = raster_slice(diagonal_quadratic(), spec, cfg)
    assert np.all(grid.codes == FATE_ESCAPED)
    assert np.all(grid.iterations == 0)


def test_dicritical_limit_direction_is_starting_direction():
    F = dicritical()
    spec = SliceSpec((-0.2, -0.1), (0.1, 0), (0, 0.1j), 5, 5, 1.0)
    grid = raster_slice(F, spec, CFG)
    assert grid.direction_labels == ()
    for r in range(5):
        for c in range(5):
            p = spec.point(r, c)
            res = iterate_orbit(F, p, CFG)
            if grid.codes[r, c] == FATE_ALONG:
                assert chordal_distance(res.direction, p) < 1e-9


def test_dicritical_golden():
    # real (z, w) square: the half Re z > 0 escapes, the other half is attracted
    spec = SliceSpec((0, 0), (1, 0), (0, 1), 16, 16, 0.25)
    grid = raster_slice(dicritical(), spec, OrbitConfig(max_iter=30_000))
    counts = grid.counts()
    assert counts["Escaped"] > 0 and counts["AttractedAlong any"] > 0
    assert ppm_bytes(grid) == (GOLDEN / "dicritical_16.ppm").read_bytes()


def test_thread_count_does_not_change_result():
    spec = diagonal_slice(16, 16, 0.5)
    a = raster_slice(diagonal_quadratic(), spec, CFG, workers=1)
    b = raster_slice(diagonal_quadratic(), spec, CFG, workers=4)
    assert np.array_equal(a.codes, b.codes) and np.array_equal(a.iterations, b.iterations)
    assert ppm_bytes(a) == ppm_bytes(b) and csv_text(a) == csv_text(b)


def test_file_round_trip(tmp_path):
    grid = raster_slice(diagonal_quadratic(), diagonal_slice(8, 6, 0.5), CFG)
    img = read_ppm(write_grid(grid, tmp_path / "g.ppm"))
    assert img.shape == (6, 8, 3)
    assert tuple(img[0, 0]) == fate_color(int(grid.codes[0, 0]))
    lines = write_grid(grid, tmp_path / "g.csv").read_text().splitlines()
    assert lines[0] == "row,col,fate_code,iterations" and len(lines) == 49
    with pytest.raises(ValueError):
        write_grid(grid, tmp_path / "g.png")


def test_counts_cover_grid():
    grid = raster_slice(diagonal_quadratic(), diagonal_slice(8, 8, 0.5), CFG)
    assert sum(grid.counts().values()) == 64
