"""Recursively defined semantics over the closed unit interval.

Three update rules share one iteration engine:

* ``rsig`` — the undamped rule whose aggregate is the raw support/attack
  difference; degrees follow ``w / (1 - s)`` for s <= 0 and
  ``(w + s) / (1 + s)`` for s >= 0.  Known not to converge in general.
* ``rdamped`` — the aggregate is divided by a damping factor and the update
  is piecewise linear: ``w (1 + s)`` for s <= 0, ``w + (1 - w) s`` for
  s >= 0.
* ``dogged`` — sigmoid update ``sigma(s + sigma_inverse(w))`` with damped
  aggregate; weights exactly 0 or 1 are absorbing.

Restricted to support-only graphs, the ``rsig`` iteration does converge and
is exposed as ``aggregation_based_evaluate``.
"""
from __future__ import annotations

import numpy as np

from .direct import DampingLike, resolve_damping
from .errors import AttackEdgePresent, NotConverged, WeightOutOfClosedUnit
from .graph import ArgGraph
from .iteration import run_iteration
from .outcomes import (
    Converged,
    DegreeVector,
    Diverging,
    EvalOutcome,
    NotWellDefined,
    Oscillating,
)
from .sigmoid import DEFAULT_SIGMOID, get_sigmoid

RECURSIVE_KINDS = ("rsig", "rdamped", "dogged")

DEFAULT_MAX_ITER = 5000  # no contraction bound is available for these kinds

#: residual bound for the support-only fixed-point identity
AGGREGATION_RESIDUAL_TOL = 1e-8


def _check_closed_unit(values: np.ndarray, what: str) -> None:
    if ((values < 0.0) | (values > 1.0)).any():
        raise WeightOutOfClosedUnit(f"{what} must lie in [0, 1]")


def _rsig_step(w: np.ndarray, matrix: np.ndarray, f: np.ndarray) -> np.ndarray:
    s = matrix @ f
    out = np.empty_like(w)
    neg = s <= 0.0
    out[neg] = w[neg] / (1.0 - s[neg])
    pos = ~neg
    out[pos] = (w[pos] + s[pos]) / (1.0 + s[pos])
    return out


def _rdamped_step(w: np.ndarray, matrix: np.ndarray, f: np.ndarray) -> np.ndarray:
    s = matrix @ f
    return np.where(s <= 0.0, w * (1.0 + s), w + (1.0 - w) * s)


def _dogged_step(
    w: np.ndarray,
    matrix: np.ndarray,
    interior: np.ndarray,
    inv_w: np.ndarray,
    forward,
    f: np.ndarray,
) -> np.ndarray:
    s = matrix @ f
    out = w.copy()  # keeps the absorbing 0 and 1 components
    out[interior] = forward(s[interior] + inv_w)
    return out


def _make_step(kind: str, graph: ArgGraph, damping: DampingLike | None, sigmoid_kind: str):
    w = graph.weights
    _check_closed_unit(w, "weights")
    g = graph.incidence.astype(np.float64)
    if kind == "rsig":
        return lambda f: _rsig_step(w, g, f), None
    d = resolve_damping(graph, "auto" if damping is None else damping)
    matrix = g / d.value
    if kind == "rdamped":
        return lambda f: _rdamped_step(w, matrix, f), d
    if kind == "dogged":
        sig = get_sigmoid(sigmoid_kind)
        interior = (w > 0.0) & (w < 1.0)
        inv_w = sig.inverse(w[interior])  # precomputed once per evaluation
        return lambda f: _dogged_step(w, matrix, interior, inv_w, sig.forward, f), d
    raise ValueError(f"unknown recursive kind {kind!r}")


def step(
    kind: str,
    graph: ArgGraph,
    f_prev,
    damping: DampingLike | None = None,
    sigmoid_kind: str = DEFAULT_SIGMOID,
) -> np.ndarray:
    """One application of the chosen recursion to ``f_prev``."""
    f = np.asarray(f_prev, dtype=np.float64)
    _check_closed_unit(f, "iterates")
    fn, _ = _make_step(kind, graph, damping, sigmoid_kind)
    return fn(f)


def recursive_evaluate(
    kind: str,
    graph: ArgGraph,
    damping: DampingLike | None = None,
    sigmoid_kind: str = DEFAULT_SIGMOID,
    tol: float = 1e-9,
    max_iter: int = DEFAULT_MAX_ITER,
) -> EvalOutcome:
    """Iterate from ``f_0 = w`` and classify the trajectory."""
    fn, d = _make_step(kind, graph, damping, sigmoid_kind)
    d_value = d.value if d is not None else None
    tag = kind
    result = run_iteration(
        fn,
        graph.weights,
        tol=tol,
        max_iter=max_iter,
        diverge_limit=1e6,  # unreachable while iterates stay in [0, 1]
    )
    if result.kind == "converged":
        return Converged(DegreeVector(result.vector, tag, d_value), result.iterations)
    if result.kind == "oscillating":
        return Oscillating(result.period, result.states, result.state_iterations, tag, d_value)
    if result.kind == "diverging":
        return Diverging(result.growth_rate, result.iterations, tag, d_value)
    return NotWellDefined(
        f"no convergence or short cycle within {max_iter} iterations",
        result.iterations, tag, d_value)


def aggregation_residual(graph: ArgGraph, degrees) -> float:
    """Sup-norm defect of the support-only fixed-point identity
    ``D = w + (I - Diag(w)) (G D) / (1 + G D)``."""
    vec = degrees.degrees if isinstance(degrees, DegreeVector) else np.asarray(degrees, dtype=np.float64)
    s = graph.incidence.astype(np.float64) @ vec
    expected = graph.weights + (1.0 - graph.weights) * (s / (1.0 + s))
    return float(np.max(np.abs(vec - expected))) if graph.n else 0.0


def aggregation_based_evaluate(
    graph: ArgGraph,
    tol: float = 1e-9,
    max_iter: int = DEFAULT_MAX_ITER,
) -> DegreeVector:
    """The ``rsig`` limit on support-only graphs, where it exists.

    The result satisfies the fixed-point identity checked by
    :func:`aggregation_residual` to within ``AGGREGATION_RESIDUAL_TOL``.
    """
    if (graph.incidence == -1).any():
        raise AttackEdgePresent("aggregation-based semantics is defined for support-only graphs")
    outcome = recursive_evaluate("rsig", graph, tol=tol, max_iter=max_iter)
    if not isinstance(outcome, Converged):
        raise NotConverged(outcome)
    residual = aggregation_residual(graph, outcome.result)
    if residual > AGGREGATION_RESIDUAL_TOL:
        raise NotConverged(outcome, residual)
    return DegreeVector(outcome.result.degrees, "aggregation", None)
