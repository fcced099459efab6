"""Rainbow matchings in edge-colored graphs of large minimum color degree."""

from .graph import (
    ColorDegreeProfile,
    Edge,
    EdgeColoredGraph,
    GraphError,
    Matching,
    color_degree_profile,
    is_rainbow_matching,
    load_instance,
    min_color_degree,
    save_instance,
)
from .solvers import exact_find, exact_max, greedy_baseline, pipeline_solve
from .structure import classify_case, orient, partition, reduce_to_critical, star_decomposition

__version__ = "0.1.0"
