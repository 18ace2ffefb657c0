"""A picture of the basin.

Every pixel of a real 2-plane through the origin is iterated and coloured
by its fate: white escaped, black undecided, and one colour per
characteristic direction of attraction.  On the complex line z = w the map
(z - z^2, w - w^2) is the parabolic map z - z^2, so the coloured patch is
its familiar petal-shaped basin.
"""
import sys
import time

from parabolic.catalog import diagonal_quadratic
from parabolic.dynamics import OrbitConfig, diagonal_slice, raster_slice, write_grid

out = sys.argv[1] if len(sys.argv) > 1 else "basin_diagonal.ppm"
spec = diagonal_slice(width=64, height=64, extent=0.6)
t0 = time.perf_counter()
grid = raster_slice(diagonal_quadratic(), spec, OrbitConfig(max_iter=20_000), workers=4)
print(f"{spec.width}x{spec.height} pixels in {time.perf_counter() - t0:.1f} s")
for name, count in grid.counts().items():
    print(f"  {name}: {count}")
print(f"wrote {write_grid(grid, out)}")
