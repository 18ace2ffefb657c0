"""Straightening the dynamics.

On V the model map (x + 1, y + 1/x) is conjugate to the translation by
(1, 0) through Phi = (x, lim y_n - log x_n).  Since the digamma function
psi satisfies psi(x + 1) = psi(x) + 1/x, the limit is y - psi(x), which the
iteration reproduces.
"""
import math

import numpy as np
from scipy.special import psi

from parabolic.dynamics import (FatouChart, SectorRegion, fatou_coordinate, model_step,
                                phi_global)

v = fatou_coordinate(model_step, (10, 5))
print(f"Phi(10, 5) = ({v.phi1.real:.15f}, {v.phi2.real:.15f}) after {v.iterations} steps")
print(f"closed form y - psi(x) = {5 - psi(10):.15f}")

V = SectorRegion(5.0, 2.0, math.pi / 8)
x, y = V.sample(100, np.random.default_rng(0))
res = max(max(abs(b.phi1 - a.phi1 - 1), abs(b.phi2 - a.phi2))
          for a, b in ((fatou_coordinate(model_step, p),
                        fatou_coordinate(model_step, model_step(*p))) for p in zip(x, y)))
print(f"max |Phi o G - Phi - (1, 0)| over {x.size} points: {res:.2e}")

# a point outside V reaches it after a few steps; Phi extends by pulling back
g = phi_global(model_step, FatouChart(model_step, V), (20.0, 4.5))
print(f"(20, 4.5) enters V after {g.n} steps; extended Phi = "
      f"({g.value[0].real:.12f}, {g.value[1].real:.12f}), consistency {g.residual:.1e}")
