"""Following orbits.

Along the direction [1:1] the map (z - z^2, w - w^2) restricts to the
one-variable parabolic map z - z^2, so z_n behaves like 1/n.  The
neighbouring directions [1:0] and [0:1] have negative Hakim index and
repel.
"""
from parabolic import characteristic_directions
from parabolic.catalog import diagonal_quadratic
from parabolic.dynamics import OrbitConfig, iterate_orbit, nearest_direction, trajectory

F = diagonal_quadratic()
dirs = characteristic_directions(F).directions

for start in [(0.05, 0.05), (0.05, 0.04 + 0.01j), (0.02, 0.06), (-0.05, -0.05)]:
    res = iterate_orbit(F, start, OrbitConfig(max_iter=100_000))
    where = ""
    if res.direction is not None:
        j, dist = nearest_direction(res.direction, dirs)
        where = f" along {dirs[j].label} (chordal distance {dist:.1e})"
    print(f"start {start}: {res.fate} after {res.iterations} steps{where}")

pts = trajectory(F, (0.05, 0.05), 10_000)
for n in (10, 100, 1000, 10_000):
    print(f"  n = {n:>6}: n * z_n = {(n * pts[n, 0]).real:.5f}")
