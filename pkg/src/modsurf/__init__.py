"""Geodesic distances, covers and distinct-distance statistics on modular surfaces."""

from .covers import (
    COVERING,
    GeodesicCover,
    CoveringConstants,
    cover_central_generic,
    cover_Fo,
    cover_Fu,
    cover_strip,
    verify_cover,
)
from .domain import (
    REGION_F,
    REGION_FO,
    REGION_FU,
    Region,
    SubgroupDomain,
    classify_in_F,
    reduce_to_F,
    reduce_to_subgroup_domain,
)
from .metrics import (
    DistanceKey,
    DistanceStats,
    distance_stats,
    quadruple_count_H2,
    surface_distance_cover,
    surface_distance_oracle,
)
from .modular import IDENTITY, ModularElement, S, SubgroupSpec, T, T_INV, compose
from .orbit import BallQuery, enumerate_ball, enumerate_ball_bfs_oracle
from .sampling import sample_points
from .search import EquilateralCandidate, equilateral_search
from .uhp import RealMatrix2, UHPoint, cosh2_distance, disc_area, distance, mobius_apply

__version__ = "0.1.0"

__all__ = [
    "BallQuery",
    "DistanceKey",
    "DistanceStats",
    "EquilateralCandidate",
    "GeodesicCover",
    "IDENTITY",
    "ModularElement",
    "COVERING",
    "CoveringConstants",
    "REGION_F",
    "REGION_FO",
    "REGION_FU",
    "RealMatrix2",
    "Region",
    "S",
    "SubgroupDomain",
    "SubgroupSpec",
    "T",
    "T_INV",
    "UHPoint",
    "classify_in_F",
    "compose",
    "cosh2_distance",
    "cover_Fo",
    "cover_Fu",
    "cover_central_generic",
    "cover_strip",
    "disc_area",
    "distance",
    "distance_stats",
    "enumerate_ball",
    "enumerate_ball_bfs_oracle",
    "equilateral_search",
    "mobius_apply",
    "quadruple_count_H2",
    "reduce_to_F",
    "reduce_to_subgroup_domain",
    "sample_points",
    "surface_distance_cover",
    "surface_distance_oracle",
    "verify_cover",
]
