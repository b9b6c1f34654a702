"""ksetlab: exact (<=k)-set counts, rectilinear crossing numbers, and
closed-form bounds for 3-decomposable planar point sets."""

from .bounds import (
    BoundReport,
    BqrDecomposition,
    bound_report,
    bqr_decompose,
    build_extremal_digraph,
    crossing_coefficient,
    crossing_lower_bound,
    extremal_edge_count,
    extremal_edge_summands,
    extremal_indegree,
    heterogeneous_critical_count,
    homogeneous_lower_bound,
    kset_lower_bound,
    kset_lower_bound_sharp,
    min_kset_count,
    refinement_depth,
    series_and_integral_report,
    slack_quartic,
    triangular_threshold,
)
from .circular import (
    CriticalityReport,
    Halfperiod,
    Transposition,
    ValidSwapDigraph,
    build_halfperiod,
    build_valid_digraphs,
    critical_counts,
    kset_vector_from_halfperiod,
)
from .decompose import (
    DecompositionWitness,
    check_halfperiod,
    check_partition,
    find_partition,
    generate,
    locate_halfperiod_witness,
)
from .errors import (
    GeneralPositionError,
    LabelingError,
    OracleSizeError,
    UndefinedWindowError,
)
from .geometry import (
    DEFAULT_ORACLE_CAP,
    KSetVector,
    Point,
    PointSet,
    Rational,
    crossing_number,
    is_general_position,
    k_set_oracle,
    orientation,
)
from .io import load_point_set, save_point_set

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BqrDecomposition",
    "CriticalityReport",
    "DecompositionWitness",
    "DEFAULT_ORACLE_CAP",
    "GeneralPositionError",
    "Halfperiod",
    "KSetVector",
    "LabelingError",
    "OracleSizeError",
    "Point",
    "PointSet",
    "Rational",
    "Transposition",
    "UndefinedWindowError",
    "ValidSwapDigraph",
    "bound_report",
    "bqr_decompose",
    "build_extremal_digraph",
    "build_halfperiod",
    "build_valid_digraphs",
    "check_halfperiod",
    "check_partition",
    "critical_counts",
    "crossing_coefficient",
    "crossing_lower_bound",
    "crossing_number",
    "extremal_edge_count",
    "extremal_edge_summands",
    "extremal_indegree",
    "find_partition",
    "generate",
    "heterogeneous_critical_count",
    "homogeneous_lower_bound",
    "is_general_position",
    "k_set_oracle",
    "kset_lower_bound",
    "kset_lower_bound_sharp",
    "kset_vector_from_halfperiod",
    "load_point_set",
    "locate_halfperiod_witness",
    "min_kset_count",
    "orientation",
    "refinement_depth",
    "save_point_set",
    "series_and_integral_report",
    "slack_quartic",
    "triangular_threshold",
]
