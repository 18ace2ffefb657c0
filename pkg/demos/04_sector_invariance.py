"""The invariant sector behind every basin.

After the irregular coordinate change, F looks like (x + 1, y + 1/x) up to
small errors.  The sector V = {Re x > R, |Arg x| < theta, Re y > R,
|y|^N < |x|} is then mapped into itself.  We sample V, apply the map once
and count the points that leave.
"""
import math

from parabolic.catalog import irregular_degenerate, irregular_normalized
from parabolic.dynamics import (MODEL, IrregularCoordinates, NormalFormMap, SectorRegion,
                                check_V_invariance, direction_data, irregular_error_terms)

V = SectorRegion(50.0, 2.0, math.pi / 8)
rep = check_V_invariance(MODEL, V, 10_000, seed=42)
print(f"(x + 1, y + 1/x): {rep.violations} exits of {rep.samples}, worst margin "
      f"{rep.worst_margin:.2e}")

for name, F, kmn in (("(z - z^2, w - zw - w^2)", irregular_normalized(), (2, 0, 2)),
                     ("(z - zw + w^2, w - w^2)", irregular_degenerate(), (2, 1, 3))):
    coords = IrregularCoordinates(direction_data(F, (1, 0)))
    G = NormalFormMap(coords.conjugate(F), *irregular_error_terms(*kmn))
    rep = check_V_invariance(G, V, 10_000, seed=42)
    print(f"{name}: {rep.violations} exits of {rep.samples}, worst margin "
          f"{rep.worst_margin:.2e}, fitted remainder constant C = {rep.C:.3g}")

# a map that pushes y to the left fails the normal-form hypothesis and leaves V
broken = NormalFormMap(lambda x, y: (x + 1, y - 1))
rep = check_V_invariance(broken, V, 10_000, seed=1, verify_hypothesis=False)
print(f"(x + 1, y - 1): {rep.violations} exits of {rep.samples}")
