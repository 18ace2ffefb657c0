"""Orbits, coordinate changes, invariance checks, Fatou coordinates and rasters."""

from .fatou import FatouChart, fatou_coordinate, model_step, phi_global
from .lift import lemma1_lift
from .normal_form import (MODEL, NormalFormMap, SectorRegion, check_V_invariance,
                          irregular_error_terms, model_map, region_V_contains)
from .orbit import OrbitConfig, OrbitResult, iterate_orbit, nearest_direction, trajectory
from .raster import SliceSpec, diagonal_slice, raster_slice, write_grid
from .seeds import basin_seeds
from .transforms import (FuchsianCoordinates, IrregularCoordinates, LocalChart,
                         direction_data, transform_a2, transform_b1, transform_b2)

__all__ = [
    "OrbitConfig", "OrbitResult", "iterate_orbit", "trajectory", "nearest_direction",
    "LocalChart", "direction_data", "IrregularCoordinates", "FuchsianCoordinates", "transform_b1",
    "transform_b2", "transform_a2", "lemma1_lift", "SectorRegion", "NormalFormMap",
    "region_V_contains", "check_V_invariance", "irregular_error_terms", "model_map", "MODEL",
    "fatou_coordinate", "phi_global", "FatouChart", "model_step", "SliceSpec",
    "diagonal_slice", "raster_slice", "write_grid", "basin_seeds",
]
