"""Starting points inside the predicted basin of a direction.

Points are drawn from the sector region ``V`` and pulled back to ``C^2``
through the coordinate change of the direction's case.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..directions import DirectionLike
from ..errors import WrongClass
from .normal_form import SectorRegion
from .transforms import (DirectionData, FuchsianCoordinates, HakimCoordinates,
                         IrregularCoordinates, direction_data)

Case = Literal["hakim", "irregular", "fuchsian_degenerate"]

DEFAULT_V = SectorRegion(50.0, 2.0, math.pi / 8)


def basin_case(data: DirectionData) -> Case:
    m, n = data.m, data.n
    if m == 0 and n == 1:
        return "hakim"
    if m != math.inf and n > m + 1:
        return "irregular"
    if m != math.inf and m >= 1 and n == m + 1:
        return "fuchsian_degenerate"
    raise WrongClass("no basin construction for apparent directions")


@dataclass(frozen=True)
class Seeds:
    case: Case
    points: np.ndarray  # (count, 2) ambient points


def basin_seeds(F, direction: DirectionLike, count: int = 50, seed: int = 42,
                V: SectorRegion = DEFAULT_V, u_band: tuple[float, float] = (0.25, 0.5)
                ) -> Seeds:
    """Draw ``count`` points of ``V`` and map them into ``C^2``.

    * nondegenerate, ``n = 1``: ``z`` from the first coordinate through
      ``x = -1/((k-1) lambda z^(k-1))`` and ``u = 1/y``;
    * irregular: the inverse of the irregular coordinates;
    * degenerate Fuchsian: ``X = 1/x`` is the coordinate of the lifted
      parabolic map, ``|u|`` is drawn from ``u_band`` with ``|Arg u| < theta``,
      and the blow-up point follows from ``X = -(ac+bd) x^a u^b`` and
      ``z = x u^(m+1)``.
    """
    data = direction_data(F, direction)
    case = basin_case(data)
    rng = np.random.default_rng(seed)
    x, y = V.sample(count, rng)
    if case == "hakim":
        z, w = HakimCoordinates(data).to_ambient(x, y)
    elif case == "irregular":
        z, w = IrregularCoordinates(data).to_ambient(x, y)
    else:
        fc = FuchsianCoordinates(data)
        a, b, c, d = fc.lemma1_data()
        s = a * c + b * d
        X = 1.0 / x
        u = rng.uniform(*u_band, x.size) * np.exp(1j * rng.uniform(-V.theta, V.theta, x.size))
        xx = (-X / (s * u ** b)) ** (1.0 / a)
        z, w = fc.to_ambient(xx, u)
    return Seeds(case, np.stack([np.asarray(z), np.asarray(w)], axis=1))
