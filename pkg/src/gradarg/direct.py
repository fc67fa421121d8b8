"""Direct aggregation semantics over the reals.

The degree vector is the limit of ``f_0 = w``, ``f_i = w + G f_{i-1} / d``,
which for a large enough damping factor ``d`` equals ``(I - G/d)^{-1} w``.
The closed-form solve is the production path; the series is kept as an
independent cross-check and as a diagnostic for damping factors below the
convergence threshold, where it reports oscillation or divergence instead of
guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    DampingTooSmall,
    DimensionMismatch,
    InvalidDamping,
    SingularSystem,
)
from .graph import ArgGraph, circular_indegree, indegree
from .iteration import run_iteration
from .outcomes import (
    Converged,
    DegreeVector,
    Diverging,
    EvalOutcome,
    NotWellDefined,
    Oscillating,
)

SEMANTICS_TAG = "dir"

#: residual bound for the closed-form solve, relative to the degree scale
RESIDUAL_TOL = 1e-9

#: divergence declared when iterates exceed this multiple of the weight scale
DIVERGE_FACTOR = 1e12


@dataclass(frozen=True)
class Damping:
    """A damping factor d >= 1 with the policy that produced it.

    ``fixed`` is a globally chosen constant; ``auto`` is the graph-dependent
    choice d = indegree(G) + 1, which always satisfies the convergence
    precondition but makes degrees sensitive to unrelated graph parts.
    """

    value: float
    policy: str  # "fixed" | "auto"

    def __post_init__(self):
        if self.policy not in ("fixed", "auto"):
            raise InvalidDamping(f"unknown damping policy {self.policy!r}")
        if not (isinstance(self.value, (int, float)) and np.isfinite(self.value)):
            raise InvalidDamping(f"damping value must be a finite real, got {self.value!r}")
        if self.value < 1:
            raise DampingTooSmall(f"damping factor must be >= 1, got {self.value}")


DampingLike = Union[Damping, float, int, str]


def resolve_damping(graph: ArgGraph, damping: DampingLike) -> Damping:
    """Normalise a damping argument: a number is a fixed global factor,
    the string ``"auto"`` selects d = indegree(G) + 1."""
    if isinstance(damping, Damping):
        if damping.policy == "auto":
            return Damping(float(indegree(graph) + 1), "auto")
        return damping
    if isinstance(damping, str):
        if damping == "auto":
            return Damping(float(indegree(graph) + 1), "auto")
        try:
            return Damping(float(damping), "fixed")
        except ValueError:
            raise InvalidDamping(f"damping must be a number or 'auto', got {damping!r}") from None
    if isinstance(damping, (int, float)):
        return Damping(float(damping), "fixed")
    raise InvalidDamping(f"damping must be a number, 'auto' or Damping, got {damping!r}")


def default_max_iter(graph: ArgGraph) -> int:
    # geometric contraction at ratio indegree/d <= n/(n+1) needs O(n) steps
    # per digit; the constant absorbs near-boundary cases.
    return 10 * graph.n + 1000


def series_evaluate(
    graph: ArgGraph,
    damping: DampingLike,
    tol: float = 1e-9,
    max_iter: int | None = None,
) -> EvalOutcome:
    """Iterate ``f_i = w + G f_{i-1} / d`` and classify the trajectory.

    Accepts any d >= 1, including values for which the semantics is not
    well defined; non-convergence is then reported, never assumed away.
    """
    d = resolve_damping(graph, damping)
    if max_iter is None:
        max_iter = default_max_iter(graph)
    w = graph.weights
    matrix = graph.incidence.astype(np.float64) / d.value
    limit = DIVERGE_FACTOR * (1.0 + (float(np.max(np.abs(w))) if w.size else 0.0))
    result = run_iteration(
        lambda f: w + matrix @ f,
        w,
        tol=tol,
        max_iter=max_iter,
        diverge_limit=limit,
    )
    if result.kind == "converged":
        return Converged(DegreeVector(result.vector, SEMANTICS_TAG, d.value), result.iterations)
    if result.kind == "oscillating":
        return Oscillating(
            result.period, result.states, result.state_iterations, SEMANTICS_TAG, d.value)
    if result.kind == "diverging":
        return Diverging(result.growth_rate, result.iterations, SEMANTICS_TAG, d.value)
    return NotWellDefined(
        f"no convergence, oscillation or divergence within {max_iter} iterations",
        result.iterations, SEMANTICS_TAG, d.value)


def _require_convergent_damping(graph: ArgGraph, d: Damping) -> None:
    floor = circular_indegree(graph)
    if d.value <= floor:
        raise DampingTooSmall(
            f"damping {d.value} must exceed the circular-subgraph indegree {floor} "
            "for the degree vector to be well defined")


def _system_matrix(graph: ArgGraph, d: Damping) -> np.ndarray:
    return np.eye(graph.n) - graph.incidence.astype(np.float64) / d.value


def solve_evaluate(graph: ArgGraph, damping: DampingLike) -> DegreeVector:
    """Closed-form degrees ``(I - G/d)^{-1} w`` via a partial-pivot LU solve
    with one step of iterative refinement."""
    d = resolve_damping(graph, damping)
    _require_convergent_damping(graph, d)
    if graph.n == 0:
        return DegreeVector(np.zeros(0), SEMANTICS_TAG, d.value)
    a = _system_matrix(graph, d)
    w = graph.weights
    try:
        degrees = np.linalg.solve(a, w)
        degrees = degrees + np.linalg.solve(a, w - a @ degrees)
    except np.linalg.LinAlgError:
        raise SingularSystem(
            f"I - G/{d.value} is singular; d sits on a spectral boundary") from None
    residual = float(np.max(np.abs(degrees - (w + graph.incidence @ degrees / d.value))))
    if residual > RESIDUAL_TOL * (1.0 + float(np.max(np.abs(degrees)))):
        raise SingularSystem(
            f"solve residual {residual:.3e} exceeds tolerance; "
            f"d={d.value} is numerically at a spectral boundary")
    return DegreeVector(degrees, SEMANTICS_TAG, d.value)


@dataclass(frozen=True, eq=False)
class PropagationMatrix:
    """Dense linear map from initial plausibilities to degrees."""

    entries: np.ndarray
    damping: Damping

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.float64, copy=True)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)


def propagation_matrix(
    graph: ArgGraph,
    damping: DampingLike,
    *,
    check_damping: bool = True,
) -> PropagationMatrix:
    """The matrix ``(I - G/d)^{-1}``.

    ``check_damping=False`` skips the convergence precondition and inverts
    wherever the system is nonsingular; the series interpretation is not
    guaranteed there, only the closed form.
    """
    d = resolve_damping(graph, damping)
    if check_damping:
        _require_convergent_damping(graph, d)
    n = graph.n
    a = _system_matrix(graph, d)
    eye = np.eye(n)
    try:
        pr = np.linalg.solve(a, eye)
        pr = pr + np.linalg.solve(a, eye - a @ pr)
    except np.linalg.LinAlgError:
        raise SingularSystem(
            f"I - G/{d.value} is singular; the propagation matrix does not exist") from None
    scale = 1.0 + (float(np.max(np.abs(pr))) if n else 0.0)
    if n and float(np.max(np.abs(pr @ a - eye))) > RESIDUAL_TOL * scale:
        raise SingularSystem(
            f"propagation matrix residual above tolerance at d={d.value}")
    return PropagationMatrix(pr, d)


def fixed_point_residual(graph: ArgGraph, damping: DampingLike, degrees) -> float:
    """Sup-norm of ``D - (w + G D / d)``; zero exactly at the degree vector."""
    d = resolve_damping(graph, damping)
    vec = degrees.degrees if isinstance(degrees, DegreeVector) else np.asarray(degrees, dtype=np.float64)
    if vec.shape != (graph.n,):
        raise DimensionMismatch(f"degree vector must have length {graph.n}, got {vec.shape}")
    if graph.n == 0:
        return 0.0
    return float(np.max(np.abs(vec - (graph.weights + graph.incidence @ vec / d.value))))
