"""Core data model: weighted argument graphs with attack and support edges.

An :class:`ArgGraph` is a triple of argument ids, a square incidence matrix
over {-1, 0, +1} and a vector of initial plausibilities.  Entry
``incidence[t, s]`` describes what argument ``s`` does to argument ``t``:
``+1`` support, ``-1`` attack, ``0`` nothing.  Graphs are immutable; every
operation returns a fresh graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateArgument,
    DuplicateEdge,
    IndexOutOfRange,
    NonFiniteWeight,
    SharedComponent,
    SizeMismatch,
    UnknownEndpoint,
)

SUPPORT = 1
ATTACK = -1

_POLARITIES = {
    1: 1, -1: -1,
    "support": 1, "attack": -1,
    "+1": 1, "-1": -1,
}


def _as_polarity(value) -> int:
    try:
        return _POLARITIES[value]
    except (KeyError, TypeError):
        raise DuplicateEdge(f"invalid polarity {value!r}; expected 'support', 'attack', +1 or -1") from None


@dataclass(frozen=True, eq=False)
class ArgGraph:
    """Immutable argument graph.

    ``arguments`` fixes the index order used by ``incidence`` and
    ``weights``.  Arrays are defensively copied and frozen.
    """

    arguments: tuple[str, ...]
    incidence: np.ndarray
    weights: np.ndarray
    _index: dict = field(init=False, repr=False, default=None)

    def __post_init__(self):
        arguments = tuple(str(a) for a in self.arguments)
        if len(set(arguments)) != len(arguments):
            seen = set()
            dup = next(a for a in arguments if a in seen or seen.add(a))
            raise DuplicateArgument(f"argument id {dup!r} declared twice")
        n = len(arguments)
        try:
            incidence = np.array(self.incidence, dtype=np.int8, copy=True)
            raw = np.asarray(self.incidence, dtype=np.float64)
        except (TypeError, ValueError):
            raise DimensionMismatch("incidence must be a numeric matrix") from None
        if incidence.shape != (n, n):
            raise DimensionMismatch(
                f"incidence must be {n}x{n}, got {incidence.shape}")
        if not np.array_equal(raw, incidence) or not np.isin(incidence, (-1, 0, 1)).all():
            raise DimensionMismatch("incidence entries must be -1, 0 or +1")
        try:
            weights = np.array(self.weights, dtype=np.float64, copy=True)
        except (TypeError, ValueError):
            raise NonFiniteWeight("weights must be numeric") from None
        if weights.shape != (n,):
            raise DimensionMismatch(f"weights must have length {n}, got {weights.shape}")
        if not np.isfinite(weights).all():
            raise NonFiniteWeight("all weights must be finite reals")
        incidence.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "arguments", arguments)
        object.__setattr__(self, "incidence", incidence)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(arguments)})

    @property
    def n(self) -> int:
        return len(self.arguments)

    def index_of(self, argument_id: str) -> int:
        try:
            return self._index[argument_id]
        except KeyError:
            raise IndexOutOfRange(f"unknown argument id {argument_id!r}") from None

    def check_index(self, i: int) -> int:
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.n:
            raise IndexOutOfRange(f"argument index {i!r} out of range for n={self.n}")
        return int(i)


@dataclass(frozen=True)
class NeighborSets:
    """Direct and transitive neighbourhoods of one argument.

    ``attackers``/``supporters`` are the direct relations.  ``backers`` and
    ``detractors`` close them transitively: the supporter of a backer backs,
    the attacker of a backer detracts, the attacker of a detractor backs and
    the supporter of a detractor detracts.  A node may be both.
    """

    attackers: frozenset[int]
    supporters: frozenset[int]
    backers: frozenset[int]
    detractors: frozenset[int]


def build_graph(
    arguments: Sequence[str],
    edges: Iterable[tuple],
    weights: Mapping[str, float],
) -> ArgGraph:
    """Assemble a graph from ids, ``(source, target, polarity)`` edges and a
    weight per id.

    At most one edge is allowed per ordered pair: the matrix form cannot hold
    a simultaneous support and attack between the same arguments.
    """
    arguments = [str(a) for a in arguments]
    if len(set(arguments)) != len(arguments):
        raise DuplicateArgument("argument ids must be pairwise distinct")
    n = len(arguments)
    index = {a: i for i, a in enumerate(arguments)}
    incidence = np.zeros((n, n), dtype=np.int8)
    for edge in edges:
        try:
            source, target, polarity = edge
        except (TypeError, ValueError):
            raise DuplicateEdge(f"edge {edge!r} is not a (source, target, polarity) triple") from None
        for endpoint in (source, target):
            if endpoint not in index:
                raise UnknownEndpoint(f"edge endpoint {endpoint!r} is not a declared argument")
        s, t = index[source], index[target]
        if incidence[t, s] != 0:
            raise DuplicateEdge(f"more than one edge from {source!r} to {target!r}")
        incidence[t, s] = _as_polarity(polarity)
    weight_vector = np.empty(n, dtype=np.float64)
    for a in arguments:
        value = weights.get(a) if hasattr(weights, "get") else None
        if value is None:
            raise NonFiniteWeight(f"no finite weight given for argument {a!r}")
        weight_vector[index[a]] = float(value)
    for a in weights:
        if a not in index:
            raise UnknownEndpoint(f"weight given for undeclared argument {a!r}")
    return ArgGraph(tuple(arguments), incidence, weight_vector)


def parent_row(graph: ArgGraph, i: int) -> np.ndarray:
    """Row ``i`` of the incidence matrix: the parents of argument ``i``."""
    i = graph.check_index(i)
    return graph.incidence[i].copy()


def neighbors(graph: ArgGraph, i: int) -> NeighborSets:
    i = graph.check_index(i)
    row = graph.incidence[i]
    attackers = frozenset(np.flatnonzero(row == -1).tolist())
    supporters = frozenset(np.flatnonzero(row == 1).tolist())
    backers = set(supporters)
    detractors = set(attackers)
    # Worklist closure of the two mutually recursive equations: a supporter
    # of a backer/detractor inherits that role, an attacker takes the
    # opposite one.  Sets only grow inside a finite universe, so this
    # terminates.
    queue = [(j, True) for j in backers] + [(j, False) for j in detractors]
    while queue:
        node, backing = queue.pop()
        node_row = graph.incidence[node]
        for j in np.flatnonzero(node_row == 1).tolist():
            target = backers if backing else detractors
            if j not in target:
                target.add(j)
                queue.append((j, backing))
        for j in np.flatnonzero(node_row == -1).tolist():
            target = detractors if backing else backers
            if j not in target:
                target.add(j)
                queue.append((j, not backing))
    return NeighborSets(attackers, supporters, frozenset(backers), frozenset(detractors))


def influence(graph: ArgGraph, vector) -> np.ndarray:
    """Apply the incidence matrix: supporters add, attackers subtract."""
    v = np.asarray(vector, dtype=np.float64)
    if v.shape != (graph.n,):
        raise DimensionMismatch(f"vector must have length {graph.n}, got {v.shape}")
    return graph.incidence @ v


def union(g1: ArgGraph, g2: ArgGraph) -> ArgGraph:
    """Disjoint union: block-diagonal incidence, concatenated weights."""
    overlap = set(g1.arguments) & set(g2.arguments)
    if overlap:
        raise SharedComponent(f"graphs share argument ids {sorted(overlap)!r}")
    n1, n2 = g1.n, g2.n
    incidence = np.zeros((n1 + n2, n1 + n2), dtype=np.int8)
    incidence[:n1, :n1] = g1.incidence
    incidence[n1:, n1:] = g2.incidence
    weights = np.concatenate([g1.weights, g2.weights])
    return ArgGraph(g1.arguments + g2.arguments, incidence, weights)


def isolate(graph: ArgGraph, targets, neutral_weight: float = 0.0) -> ArgGraph:
    """Neutralise arguments: zero their incidence row and column and set
    their weight to the semantics' neutral value.

    Matrix entries are always set to 0 regardless of ``neutral_weight``;
    only the weight takes the neutral value (0 over the reals, 1/2 for the
    open-unit semantics).  Sequential isolation commutes.
    """
    if isinstance(targets, (int, np.integer)):
        targets = [targets]
    idx = [graph.check_index(i) for i in targets]
    incidence = np.array(graph.incidence, copy=True)
    weights = np.array(graph.weights, copy=True)
    for i in idx:
        incidence[i, :] = 0
        incidence[:, i] = 0
        weights[i] = neutral_weight
    return ArgGraph(graph.arguments, incidence, weights)


def is_isomorphic(g1: ArgGraph, g2: ArgGraph, mapping) -> bool:
    """True iff ``mapping`` (old index -> new index) preserves weights and
    incidence entries."""
    if g1.n != g2.n:
        raise SizeMismatch(f"graphs have different sizes {g1.n} and {g2.n}")
    n = g1.n
    if isinstance(mapping, Mapping):
        perm = [mapping.get(i) for i in range(n)]
    else:
        perm = list(mapping)
    if len(perm) != n or sorted(p for p in perm if p is not None and 0 <= int(p) < n) != list(range(n)):
        raise SizeMismatch("mapping is not a bijection between the index sets")
    perm = np.array([int(p) for p in perm])
    if not np.array_equal(g1.weights, g2.weights[perm]):
        return False
    return np.array_equal(g1.incidence, g2.incidence[np.ix_(perm, perm)])


def permute(graph: ArgGraph, perm: Sequence[int], new_ids: Sequence[str] | None = None) -> ArgGraph:
    """Relabelled copy where old index ``i`` lands at position ``perm[i]``."""
    n = graph.n
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise SizeMismatch("perm is not a permutation of the index set")
    p = np.array(perm, dtype=int)
    arguments = [None] * n
    ids = list(new_ids) if new_ids is not None else list(graph.arguments)
    if len(ids) != n:
        raise SizeMismatch(f"expected {n} ids, got {len(ids)}")
    for i in range(n):
        arguments[p[i]] = ids[i]
    incidence = np.zeros_like(graph.incidence)
    incidence[np.ix_(p, p)] = graph.incidence
    weights = np.zeros_like(graph.weights)
    weights[p] = graph.weights
    return ArgGraph(tuple(arguments), incidence, weights)


def indegree(graph: ArgGraph) -> int:
    """Maximum number of parents over all arguments (max row sum of |G|)."""
    if graph.n == 0:
        return 0
    return int(np.abs(graph.incidence).sum(axis=1).max())


def hereditarily_circular(graph: ArgGraph) -> frozenset[int]:
    """Arguments on a directed cycle of the parent relation, plus everything
    such a cycle can influence (directly or transitively)."""
    n = graph.n
    # adjacency in influence direction: source -> target
    out_edges = [np.flatnonzero(graph.incidence[:, j] != 0).tolist() for j in range(n)]
    circular = _cycle_nodes(n, out_edges)
    # forward reachability from the circular core
    reached = set(circular)
    stack = list(circular)
    while stack:
        j = stack.pop()
        for t in out_edges[j]:
            if t not in reached:
                reached.add(t)
                stack.append(t)
    return frozenset(reached)


def _cycle_nodes(n: int, out_edges: list[list[int]]) -> set[int]:
    """Nodes with a self-loop or inside a strongly connected component of
    size >= 2 (iterative Tarjan)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: set[int] = set()
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ei = work[-1]
            if ei == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            while ei < len(out_edges[node]):
                succ = out_edges[node][ei]
                ei += 1
                if index[succ] == -1:
                    work[-1] = (node, ei)
                    work.append((succ, 0))
                    advanced = True
                    break
                if on_stack[succ]:
                    low[node] = min(low[node], index[succ])
            if advanced:
                continue
            work.pop()
            if low[node] == index[node]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == node:
                        break
                if len(component) > 1:
                    result.update(component)
                elif node in out_edges[node]:
                    result.add(node)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return result


def circular_indegree(graph: ArgGraph) -> int:
    """Maximum indegree inside the subgraph induced by the hereditarily
    circular arguments; 0 when the graph is acyclic."""
    circ = hereditarily_circular(graph)
    if not circ:
        return 0
    idx = np.array(sorted(circ))
    sub = graph.incidence[np.ix_(idx, idx)]
    return int(np.abs(sub).sum(axis=1).max())


def is_bounded_support_graph(graph: ArgGraph) -> bool:
    """True iff the graph has no attack edges and all weights lie in [0, 1]."""
    if (graph.incidence == -1).any():
        return False
    return bool((graph.weights >= 0.0).all() and (graph.weights <= 1.0).all())
