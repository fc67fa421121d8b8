"""Greedy counterexample shrinking.

Repeatedly try to delete a node or zero a single edge of the failing
instance's primary graph; keep a mutation only when the characteristic still
fails on the re-derived instance.  Termination: every accepted mutation
strictly shrinks the node count or the number of nonzero entries.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from ..errors import GradargError
from ..graph import ArgGraph
from .generators import delete_node, with_entry


def _still_fails(recheck: Callable[[ArgGraph], bool], graph: ArgGraph) -> bool:
    try:
        return bool(recheck(graph))
    except GradargError:
        return False


def minimize(graph: ArgGraph, protected: frozenset[str], recheck: Callable[[ArgGraph], bool]) -> ArgGraph:
    if not _still_fails(recheck, graph):
        return graph
    current = graph
    changed = True
    while changed:
        changed = False
        for idx in range(current.n - 1, -1, -1):
            if current.arguments[idx] in protected:
                continue
            candidate = delete_node(current, idx)
            if _still_fails(recheck, candidate):
                current = candidate
                changed = True
        for t, s in np.argwhere(current.incidence != 0).tolist():
            candidate = with_entry(current, t, s, 0)
            if _still_fails(recheck, candidate):
                current = candidate
                changed = True
    return current
