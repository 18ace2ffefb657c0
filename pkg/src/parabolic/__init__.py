"""Analysis and simulation of holomorphic germs of C^2 tangent to the identity."""

__version__ = "0.1.0"

from .algebra import (BiPoly, TruncSeries, UniPoly, contour_residue, homogeneous_parts,
                      restrict_chart, roots_with_multiplicity, series_residue)
from .criteria import (RegionR, RegionS, Verdict, eigenvalue_condition, in_region_R,
                       in_region_S, lemma1_condition, verdict)
from .directions import (CharDirection, DirectionReport, characteristic_directions, classify,
                         vanishing_orders)
from .errors import *  # noqa: F401,F403
from .germ import BlowupExpansion, Germ, blowup_expand, order, validate
from .indices import IndexReport, abate_contour, abate_index, hakim_index, index_report, rho_regularity

__all__ = [
    "BiPoly", "UniPoly", "TruncSeries", "homogeneous_parts", "restrict_chart",
    "roots_with_multiplicity", "series_residue", "contour_residue",
    "Germ", "validate", "order", "BlowupExpansion", "blowup_expand",
    "CharDirection", "DirectionReport", "characteristic_directions", "vanishing_orders",
    "classify", "IndexReport", "hakim_index", "abate_index", "abate_contour",
    "rho_regularity", "index_report", "RegionR", "RegionS", "in_region_R", "in_region_S",
    "lemma1_condition", "eigenvalue_condition", "Verdict", "verdict",
]
