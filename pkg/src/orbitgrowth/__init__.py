"""Exact circle dynamics, star combinatorics, ray landing classes and
periodic-point growth bounds for the unicritical family z -> z^d + c."""

from .circle import (
    Angle,
    angle_from_string,
    circle_dist,
    cyclic_order,
    exact_period,
    multiply,
    orbit,
    periodic_angles,
)
from .dynamics import DiskHypothesisReport, UnicriticalMap, escape_radius, verify_disk_hypothesis
from .itinerary import (
    ItineraryConfig,
    ItineraryResult,
    NonConvergenceError,
    PeriodicPointCount,
    count_periodic,
    itinerary_point,
)
from .noncrossing import (
    NCRelation,
    PartitionViolation,
    class_count,
    enumerate_valid,
    extremal_example,
    find_violation,
    min_classes,
    min_classes_bound,
    validate,
)
from .rate import RateEstimate, interval_class_bound, rate_estimate
from .rays import (
    LandingClassification,
    RayConfig,
    RayTrace,
    chebyshev_oracle,
    classes_noncrossing,
    classify_landing,
    trace_ray,
)
from .stars import (
    DegenerateArcError,
    Star,
    StarSet,
    check_maximal_bruteforce,
    disjoint,
    enumerate_grid_star_sets,
    has_cycle,
    is_maximal,
    multiplicity,
    named_example_stars,
    quotient,
    sum_multiplicities,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "angle_from_string",
    "circle_dist",
    "cyclic_order",
    "exact_period",
    "multiply",
    "orbit",
    "periodic_angles",
    "Star",
    "StarSet",
    "DegenerateArcError",
    "multiplicity",
    "disjoint",
    "has_cycle",
    "sum_multiplicities",
    "is_maximal",
    "check_maximal_bruteforce",
    "quotient",
    "named_example_stars",
    "enumerate_grid_star_sets",
    "NCRelation",
    "PartitionViolation",
    "find_violation",
    "validate",
    "class_count",
    "min_classes_bound",
    "extremal_example",
    "enumerate_valid",
    "min_classes",
    "UnicriticalMap",
    "DiskHypothesisReport",
    "escape_radius",
    "verify_disk_hypothesis",
    "RayConfig",
    "RayTrace",
    "chebyshev_oracle",
    "trace_ray",
    "LandingClassification",
    "classify_landing",
    "classes_noncrossing",
    "ItineraryConfig",
    "ItineraryResult",
    "NonConvergenceError",
    "PeriodicPointCount",
    "itinerary_point",
    "count_periodic",
    "RateEstimate",
    "rate_estimate",
    "interval_class_bound",
]
