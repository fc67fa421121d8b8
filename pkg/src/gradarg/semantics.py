"""Catalog of the available semantics and a single evaluation entry point.

Tags used on the wire and the CLI:

==============  ============================================================
``gorgias``     constant 0 (the degenerate baseline)
``dir``         direct aggregation over the reals
``sdir``        sigmoid direct aggregation in (0, 1)
``rsig``        recursive sigmoid aggregation in [0, 1] (non-convergent in
                general)
``rdamped``     recursive damped aggregation in [0, 1]
``dogged``      damped dogged semantics in [0, 1]
``aggregation`` the support-only restriction of ``rsig``, which converges
==============  ============================================================
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import direct, recursive, sigmoid
from .direct import DampingLike, resolve_damping
from .errors import AttackEdgePresent, NotConverged, UnknownSemantics
from .graph import ArgGraph, circular_indegree
from .outcomes import Converged, DegreeVector, EvalOutcome, Oscillating


@dataclass(frozen=True)
class SemanticsInfo:
    """Metadata describing one semantics (weight domain, neutral value,
    convergence and boundedness behaviour)."""

    tag: str
    name: str
    weight_range: str        # "real" | "open-unit" | "closed-unit"
    edge_domain: str         # "bipolar" | "support-only"
    neutral: float
    convergent: str          # "yes" | "no" | "open"
    bounded: bool
    reverse_impact: bool
    uses_damping: bool
    uses_sigmoid: bool
    overview: bool           # member of the headline five-semantics table


CATALOG: dict[str, SemanticsInfo] = {
    info.tag: info
    for info in (
        SemanticsInfo("dir", "direct aggregation", "real", "bipolar", 0.0,
                      "yes", False, True, True, False, True),
        SemanticsInfo("sdir", "sigmoid direct aggregation", "open-unit", "bipolar", 0.5,
                      "yes", False, True, True, True, True),
        SemanticsInfo("rsig", "recursive sigmoid aggregation", "closed-unit", "bipolar", 0.0,
                      "no", True, False, False, False, True),
        SemanticsInfo("rdamped", "recursive damped aggregation", "closed-unit", "bipolar", 0.0,
                      "open", True, False, True, False, True),
        SemanticsInfo("dogged", "damped dogged", "closed-unit", "bipolar", 0.0,
                      "open", True, False, True, True, True),
        SemanticsInfo("gorgias", "constant zero", "real", "bipolar", 0.0,
                      "yes", True, False, False, False, False),
        SemanticsInfo("aggregation", "support-only aggregation", "closed-unit", "support-only", 0.0,
                      "yes", True, False, False, False, False),
    )
}

TAGS = tuple(CATALOG)


def info(tag: str) -> SemanticsInfo:
    try:
        return CATALOG[tag]
    except KeyError:
        raise UnknownSemantics(f"unknown semantics {tag!r}; expected one of {list(CATALOG)}") from None


def evaluate(
    graph: ArgGraph,
    tag: str,
    *,
    damping: DampingLike = "auto",
    sigmoid_kind: str = sigmoid.DEFAULT_SIGMOID,
    tol: float = 1e-9,
    max_iter: int | None = None,
) -> EvalOutcome:
    """Evaluate ``graph`` under the semantics named by ``tag``.

    For ``dir`` and ``sdir`` the closed-form solve is used whenever the
    damping factor clears the convergence threshold; below it the series
    runs in diagnostic mode and non-convergence is classified rather than
    refused.
    """
    info(tag)  # validates the tag
    if tag == "gorgias":
        return Converged(DegreeVector(np.zeros(graph.n), "gorgias", None), 0)
    if tag == "dir":
        d = resolve_damping(graph, damping)
        if d.value > circular_indegree(graph):
            return Converged(direct.solve_evaluate(graph, d), 0)
        return direct.series_evaluate(
            graph, d, tol=tol,
            max_iter=max_iter if max_iter is not None else direct.default_max_iter(graph))
    if tag == "sdir":
        d = resolve_damping(graph, damping)
        if d.value > circular_indegree(graph):
            return Converged(sigmoid.sigmoid_evaluate(graph, d, sigmoid_kind), 0)
        return _sigmoid_series_diagnostic(graph, d, sigmoid_kind, tol, max_iter)
    if tag in recursive.RECURSIVE_KINDS:
        return recursive.recursive_evaluate(
            tag, graph, damping=damping, sigmoid_kind=sigmoid_kind, tol=tol,
            max_iter=max_iter if max_iter is not None else recursive.DEFAULT_MAX_ITER)
    if tag == "aggregation":
        if (graph.incidence == -1).any():
            raise AttackEdgePresent(
                "aggregation semantics is defined for support-only graphs")
        outcome = recursive.recursive_evaluate(
            "rsig", graph, tol=tol,
            max_iter=max_iter if max_iter is not None else recursive.DEFAULT_MAX_ITER)
        if isinstance(outcome, Converged):
            return Converged(
                DegreeVector(outcome.result.degrees, "aggregation", None), outcome.iterations)
        return outcome
    raise UnknownSemantics(tag)


def _sigmoid_series_diagnostic(graph, d, sigmoid_kind, tol, max_iter) -> EvalOutcome:
    """Run the real-valued series on the transformed weights and map every
    reported state back through the sigmoid, so oscillation witnesses are in
    degree space."""
    sig = sigmoid.get_sigmoid(sigmoid_kind)
    sigmoid.check_open_unit_weights(graph.weights)
    z_graph = ArgGraph(graph.arguments, graph.incidence, sig.inverse(graph.weights))
    outcome = direct.series_evaluate(
        z_graph, d, tol=tol,
        max_iter=max_iter if max_iter is not None else direct.default_max_iter(graph))
    if isinstance(outcome, Converged):
        return Converged(
            DegreeVector(sig.forward(outcome.result.degrees), "sdir", d.value),
            outcome.iterations)
    if isinstance(outcome, Oscillating):
        return Oscillating(
            outcome.period,
            tuple(sig.forward(s) for s in outcome.states),
            outcome.state_iterations,
            "sdir",
            d.value,
        )
    return type(outcome)(**{**outcome.__dict__, "semantics": "sdir"})


def degrees_or_raise(outcome: EvalOutcome) -> DegreeVector:
    """Unwrap a converged outcome; raise :class:`NotConverged` otherwise."""
    if isinstance(outcome, Converged):
        return outcome.result
    raise NotConverged(outcome)
