"""Exact-geometry census toolkit for planar point sets in convex position."""

from ._core import (  # noqa: F401
    ExactInstance,
    FloatInstance,
    InvariantError,
    bound_report,
    census,
    count_ap3,
    decompose,
    embed_counts,
    epsilon_chain,
    good_edge_count,
    max_ap3,
    max_point_distinct,
    optimize_parameters,
    quarter_arc_with_center,
    random_convex,
    rational_concyclic,
    regular_ngon,
    strip,
    symbolic_arc_census,
    total_distinct,
    verify,
)

__version__ = "0.1.0"
