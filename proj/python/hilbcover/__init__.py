"""Funk, Hilbert and Minkowski convex geometry on low-dimensional polytopes.

Thin Python layer over the C++ core: polytope operations (polarity, Minkowski
sums, Macbeath regions, symmetrizations), Funk/Hilbert/Minkowski distances and
balls, Holmes-Thompson and Busemann measures, covering estimators, and the
named verification checks plus duality sweeps.
"""

from ._core import (  # noqa: F401
    ConvexBody,
    GeometryError,
    R_PLUS,
    EPS_GEOM,
    ball_growth_hilbert,
    body_to_json,
    boundary_transfer_hilbert,
    busemann_area,
    busemann_volume,
    complementary_chord,
    covering_estimate,
    cross_polytope,
    cube,
    distance_to_set_hilbert,
    distance_to_set_minkowski,
    expand_hilbert,
    expand_minkowski,
    funk_distance,
    funk_distance_variational,
    funk_finsler_ball,
    hausdorff_distance,
    hilbert_ball,
    hilbert_distance,
    hilbert_finsler_ball,
    ht_area_finsler,
    ht_area_minkowski,
    ht_area_minkowski_cauchy,
    ht_volume_finsler,
    ht_volume_minkowski,
    hull_of,
    intersect,
    interval,
    list_checks,
    macbeath,
    minkowski_sum,
    ngon,
    parse_body_spec,
    polar,
    projective_polar_map,
    random_hull,
    recentered,
    run_check,
    run_sweep,
    sandwich_estimate,
    scaled_cube,
    simplex,
    symmetrize,
    volume_product,
)

__version__ = "0.1.0"
