"""Exact piecewise-linear reparametrizations, their stop maps, and trace
equivalence of PL paths, all over the rationals."""

from .errors import (BadEndpoints, BadExtraStops, BadTimeRange, DimensionMismatch,
                     DocumentSyntaxError, DomainError, DuplicateValue, EndpointMismatch,
                     InvalidStopData, NoLeftFactor, NoRightLift, NotEquivalent,
                     NotIncreasingTime, NotInjective, NotLoopFree, NotMonotone, NotRegular,
                     OutOfRange, PLTraceError, Unrenderable, ValidationError,
                     WitnessMismatch, WrongKind)
from .plmap import (IDENTITY, Homeo, Reparam, canonicalize, compose, convex_combination,
                    evaluate, invert, is_homeo, pointwise_max, pointwise_min, sup_distance)
from .stopmap import (Interval, StopData, approx_homeo, approx_noninjective, compose_stop_data,
                      countable_builder, move_intervals, realize, realize_values, stop_data,
                      stop_values)
from .factorization import left_factor, right_lift
from .lattice import BOTTOM, TraceClass, class_of, join, join_witness, leq, meet, meet_witness
from .trace import (HomotopyWitness, Path, PathStopData, TraceNF, concat, equivalent,
                    factor_regular, image_chain, is_directed, is_loop_free, is_regular,
                    normal_form, path_canonicalize, path_eval, path_reparam, path_stop_data,
                    regularize, shared_source, thin_homotopy, witness_endpoints, witness_eval)
from .document import Document, parse, serialize
from .svg import render

__version__ = "0.1.0"

__all__ = [
    "BOTTOM", "BadEndpoints", "BadExtraStops", "BadTimeRange", "DimensionMismatch",
    "Document", "DocumentSyntaxError", "DomainError", "DuplicateValue", "EndpointMismatch",
    "Homeo", "HomotopyWitness", "IDENTITY", "Interval", "InvalidStopData", "NoLeftFactor",
    "NoRightLift", "NotEquivalent", "NotIncreasingTime", "NotInjective", "NotLoopFree",
    "NotMonotone", "NotRegular", "OutOfRange", "PLTraceError", "Path", "PathStopData",
    "Reparam", "StopData", "TraceClass", "TraceNF", "Unrenderable", "ValidationError",
    "WitnessMismatch", "WrongKind", "approx_homeo", "approx_noninjective", "canonicalize",
    "class_of", "compose", "compose_stop_data", "concat", "convex_combination",
    "countable_builder", "equivalent", "evaluate", "factor_regular", "image_chain",
    "invert", "is_directed", "is_homeo", "is_loop_free", "is_regular", "join",
    "join_witness", "left_factor", "leq", "meet", "meet_witness", "move_intervals",
    "normal_form", "parse", "path_canonicalize", "path_eval", "path_reparam",
    "path_stop_data", "pointwise_max", "pointwise_min", "realize", "realize_values",
    "regularize", "render", "right_lift", "serialize", "shared_source", "stop_data",
    "stop_values", "sup_distance", "thin_homotopy", "witness_endpoints", "witness_eval",
]
