"""One iteration engine drives every fixed-point semantics.

The loop classifies a trajectory as converged (successive iterates within
``tol``), oscillating (an earlier iterate recurs within ``cycle_tol``, period
2..``max_period``), diverging (sup-norm beyond ``diverge_limit``), or
exhausted.  A rolling window of the last ``HISTORY`` iterates feeds the cycle
detector.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidIterationBudget, InvalidTolerance

HISTORY = 16
MAX_PERIOD = 8
CYCLE_TOL = 1e-9

#: a repeat only counts as a cycle when the step amplitude dominates the
#: repeat residual by this factor; decaying oscillatory modes fail it and
#: run on to convergence instead
CYCLE_DOMINANCE = 1e6


@dataclass
class IterationResult:
    kind: str  # "converged" | "oscillating" | "diverging" | "exhausted"
    vector: np.ndarray | None
    iterations: int
    period: int = 0
    states: tuple = ()
    state_iterations: tuple = ()
    growth_rate: float = 0.0


def run_iteration(
    step: Callable[[np.ndarray], np.ndarray],
    start: np.ndarray,
    *,
    tol: float,
    max_iter: int,
    diverge_limit: float = np.inf,
    max_period: int = MAX_PERIOD,
    cycle_tol: float = CYCLE_TOL,
) -> IterationResult:
    if not (isinstance(tol, (int, float)) and tol > 0 and np.isfinite(tol)):
        raise InvalidTolerance(f"tolerance must be a positive finite real, got {tol!r}")
    if not (isinstance(max_iter, (int, np.integer)) and max_iter >= 1):
        raise InvalidIterationBudget(f"max_iter must be >= 1, got {max_iter!r}")

    current = np.array(start, dtype=np.float64, copy=True)
    window: deque[tuple[int, np.ndarray]] = deque(maxlen=HISTORY)
    window.append((0, current.copy()))

    for i in range(1, max_iter + 1):
        nxt = np.asarray(step(current), dtype=np.float64)
        delta = float(np.max(np.abs(nxt - current))) if nxt.size else 0.0
        if delta <= tol:
            return IterationResult("converged", nxt, i)
        norm = float(np.max(np.abs(nxt))) if nxt.size else 0.0
        if norm > diverge_limit:
            prev_norm = float(np.max(np.abs(current))) or 1.0
            return IterationResult(
                "diverging", None, i, growth_rate=norm / prev_norm)
        window.append((i, nxt.copy()))
        for period in range(2, max_period + 1):
            if len(window) <= period:
                break
            past_iter, past = window[-1 - period]
            repeat_residual = float(np.max(np.abs(nxt - past)))
            if repeat_residual <= cycle_tol and delta >= CYCLE_DOMINANCE * repeat_residual:
                cycle = list(window)[-period:]
                return IterationResult(
                    "oscillating",
                    None,
                    i,
                    period=period,
                    states=tuple(s for _, s in cycle),
                    state_iterations=tuple(it for it, _ in cycle),
                )
        current = nxt
    return IterationResult("exhausted", current, max_iter)
