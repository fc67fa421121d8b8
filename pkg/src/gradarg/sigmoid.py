"""Sigmoid transforms and the open-unit-interval semantics.

A sigmoid here is a strictly increasing continuous bijection from the reals
onto (0, 1) with value 1/2 at 0.  Conjugating the real-valued direct
semantics with such a function yields degrees inside (0, 1) with neutral
value 1/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .direct import DampingLike, resolve_damping, solve_evaluate
from .errors import OutOfOpenUnitInterval, UnknownSigmoid, WeightOnBoundary
from .graph import ArgGraph
from .outcomes import DegreeVector

#: weights closer than this to 0 or 1 are rejected rather than clamped
BOUNDARY_MARGIN = 1e-12

SEMANTICS_TAG = "sdir"


def _logistic(x):
    return 1.0 / (1.0 + np.exp(-np.asarray(x, dtype=np.float64)))


def _logistic_inverse(y):
    y = np.asarray(y, dtype=np.float64)
    # log(y) - log(1-y); log1p keeps the complementary branch accurate near 1
    return np.log(y) - np.log1p(-y)


def _arctan(x):
    return np.arctan(np.asarray(x, dtype=np.float64)) / np.pi + 0.5


def _arctan_inverse(y):
    return np.tan(np.pi * (np.asarray(y, dtype=np.float64) - 0.5))


def _fraction(x):
    x = np.asarray(x, dtype=np.float64)
    return (1.0 + np.abs(x) + x) / (2.0 * (1.0 + np.abs(x)))


def _fraction_inverse(y):
    y = np.asarray(y, dtype=np.float64)
    upper = (2.0 * y - 1.0) / (2.0 * (1.0 - y))
    lower = (2.0 * y - 1.0) / (2.0 * y)
    return np.where(y >= 0.5, upper, lower)


@dataclass(frozen=True)
class SigmoidFunction:
    kind: str
    forward: Callable[[np.ndarray], np.ndarray]
    inverse: Callable[[np.ndarray], np.ndarray]


SIGMOIDS = {
    "logistic": SigmoidFunction("logistic", _logistic, _logistic_inverse),
    "arctan": SigmoidFunction("arctan", _arctan, _arctan_inverse),
    "fraction": SigmoidFunction("fraction", _fraction, _fraction_inverse),
}

DEFAULT_SIGMOID = "logistic"


def get_sigmoid(kind: str) -> SigmoidFunction:
    try:
        return SIGMOIDS[kind]
    except KeyError:
        raise UnknownSigmoid(
            f"unknown sigmoid {kind!r}; expected one of {sorted(SIGMOIDS)}") from None


def sigmoid(kind: str, x) -> np.ndarray | float:
    value = get_sigmoid(kind).forward(x)
    return float(value) if np.isscalar(x) else value


def sigmoid_inverse(kind: str, y) -> np.ndarray | float:
    arr = np.asarray(y, dtype=np.float64)
    if ((arr <= 0.0) | (arr >= 1.0)).any():
        raise OutOfOpenUnitInterval(
            f"sigmoid inverse needs values strictly inside (0, 1), got {y!r}")
    value = get_sigmoid(kind).inverse(arr)
    return float(value) if np.isscalar(y) else value


def check_open_unit_weights(weights: np.ndarray) -> None:
    if ((weights <= BOUNDARY_MARGIN) | (weights >= 1.0 - BOUNDARY_MARGIN)).any():
        raise WeightOnBoundary(
            "sigmoid direct semantics needs weights strictly inside (0, 1); "
            f"offending weights: {weights[(weights <= BOUNDARY_MARGIN) | (weights >= 1.0 - BOUNDARY_MARGIN)].tolist()}")


def sigmoid_evaluate(
    graph: ArgGraph,
    damping: DampingLike,
    kind: str = DEFAULT_SIGMOID,
    *,
    signed: bool = False,
) -> DegreeVector:
    """Degrees in the open unit interval: map weights through the inverse
    sigmoid, run the real-valued solve, map back.

    With ``signed=True`` the interval is (-1, 1) instead, realised as an
    affine pre/post transform around the same code path; the neutral value
    is then 0.
    """
    sig = get_sigmoid(kind)
    d = resolve_damping(graph, damping)
    weights = graph.weights
    if signed:
        if ((weights <= -1.0 + BOUNDARY_MARGIN) | (weights >= 1.0 - BOUNDARY_MARGIN)).any():
            raise WeightOnBoundary(
                "signed sigmoid semantics needs weights strictly inside (-1, 1)")
        weights = (weights + 1.0) / 2.0
    else:
        check_open_unit_weights(weights)
    z = sig.inverse(weights)
    inner = solve_evaluate(ArgGraph(graph.arguments, graph.incidence, z), d)
    degrees = sig.forward(inner.degrees)
    if signed:
        degrees = 2.0 * degrees - 1.0
    return DegreeVector(degrees, SEMANTICS_TAG, d.value)
