"""gradarg: acceptability degrees for bipolar weighted argument graphs.

The package computes per-argument acceptability degrees under several
semantics (a real-valued direct aggregation with closed-form solve, its
sigmoid conjugate on the open unit interval, and three recursive
unit-interval semantics), verifies the axiomatic characteristics of a
semantics as executable randomized checks, and serves a what-if HTTP API
for interactive exploration.
"""
from .direct import (
    Damping,
    PropagationMatrix,
    fixed_point_residual,
    propagation_matrix,
    resolve_damping,
    series_evaluate,
    solve_evaluate,
)
from .document import (
    GraphDocument,
    graph_to_document,
    load_fixture,
    fixture_names,
    parse_graph,
    serialize_graph,
)
from .graph import (
    ArgGraph,
    NeighborSets,
    build_graph,
    circular_indegree,
    hereditarily_circular,
    indegree,
    influence,
    is_bounded_support_graph,
    is_isomorphic,
    isolate,
    neighbors,
    parent_row,
    permute,
    union,
)
from .outcomes import Converged, DegreeVector, Diverging, EvalOutcome, NotWellDefined, Oscillating
from .recursive import aggregation_based_evaluate, aggregation_residual, recursive_evaluate, step
from .semantics import CATALOG, SemanticsInfo, evaluate
from .sigmoid import SigmoidFunction, get_sigmoid, sigmoid, sigmoid_evaluate, sigmoid_inverse

__version__ = "0.1.0"

__all__ = [
    "ArgGraph",
    "CATALOG",
    "Converged",
    "Damping",
    "DegreeVector",
    "Diverging",
    "EvalOutcome",
    "GraphDocument",
    "NeighborSets",
    "NotWellDefined",
    "Oscillating",
    "PropagationMatrix",
    "SemanticsInfo",
    "SigmoidFunction",
    "aggregation_based_evaluate",
    "aggregation_residual",
    "build_graph",
    "circular_indegree",
    "evaluate",
    "fixed_point_residual",
    "fixture_names",
    "get_sigmoid",
    "graph_to_document",
    "hereditarily_circular",
    "indegree",
    "influence",
    "is_bounded_support_graph",
    "is_isomorphic",
    "isolate",
    "load_fixture",
    "neighbors",
    "parent_row",
    "parse_graph",
    "permute",
    "propagation_matrix",
    "recursive_evaluate",
    "resolve_damping",
    "serialize_graph",
    "series_evaluate",
    "sigmoid",
    "sigmoid_evaluate",
    "sigmoid_inverse",
    "solve_evaluate",
    "step",
    "union",
]
