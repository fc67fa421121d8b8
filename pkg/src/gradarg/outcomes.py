"""Evaluation results: degree vectors and convergence classifications."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np


def _frozen(array) -> np.ndarray:
    a = np.array(array, dtype=np.float64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DegreeVector:
    """One acceptability degree per argument, tagged with the semantics that
    produced it and the damping factor used (None when not applicable)."""

    degrees: np.ndarray
    semantics: str
    damping: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", _frozen(self.degrees))

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True, eq=False)
class Converged:
    result: DegreeVector
    iterations: int  # 0 when obtained in closed form

    @property
    def degrees(self) -> np.ndarray:
        return self.result.degrees


@dataclass(frozen=True, eq=False)
class Oscillating:
    """A persistent cycle of iterates.

    ``states[k]`` is the iterate produced at iteration ``state_iterations[k]``;
    together they cover one full period, so callers can recover the even and
    odd phases.
    """

    period: int
    states: tuple[np.ndarray, ...]
    state_iterations: tuple[int, ...]
    semantics: str
    damping: float | None = None

    def state_at_parity(self, parity: int) -> np.ndarray:
        for it, state in zip(self.state_iterations, self.states):
            if it % 2 == parity % 2:
                return state
        raise ValueError("no state with requested parity recorded")


@dataclass(frozen=True, eq=False)
class Diverging:
    growth_rate: float
    iterations: int
    semantics: str
    damping: float | None = None


@dataclass(frozen=True, eq=False)
class NotWellDefined:
    reason: str
    iterations: int
    semantics: str
    damping: float | None = None


EvalOutcome = Union[Converged, Oscillating, Diverging, NotWellDefined]


def outcome_kind(outcome: EvalOutcome) -> str:
    return {
        Converged: "converged",
        Oscillating: "oscillating",
        Diverging: "diverging",
        NotWellDefined: "not_well_defined",
    }[type(outcome)]
