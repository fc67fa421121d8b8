"""Random and constructed argument graphs for the characteristic checkers."""
from __future__ import annotations

import numpy as np

from ..graph import ArgGraph
from .sut import Domain

#: open-interval samples stay this far away from the endpoints
OPEN_MARGIN = 1e-6

#: most unit-interval samples stay in this band so sigmoid saturation cannot
#: shrink strict inequalities below testable size
MODERATE_LOW, MODERATE_HIGH = 0.1, 0.9


def sample_weight(rng: np.random.Generator, domain: Domain) -> float:
    if domain.weights == "real":
        return float(rng.uniform(-5.0, 5.0))
    if domain.weights == "open-unit":
        if rng.random() < 0.9:
            return float(rng.uniform(MODERATE_LOW, MODERATE_HIGH))
        return float(rng.uniform(OPEN_MARGIN, 1.0 - OPEN_MARGIN))
    if domain.weights == "closed-unit":
        roll = rng.random()
        if roll < 0.05:
            return 0.0
        if roll < 0.1:
            return 1.0
        return float(rng.uniform(0.0, 1.0))
    raise ValueError(f"unknown weight domain {domain.weights!r}")


def moderate_weight(rng: np.random.Generator, domain: Domain) -> float:
    """A weight away from the domain boundary, for strict-inequality tests."""
    if domain.weights == "real":
        return float(rng.uniform(-3.0, 3.0))
    return float(rng.uniform(MODERATE_LOW, MODERATE_HIGH))


def _random_incidence(rng: np.random.Generator, n: int, density: float, edges: str) -> np.ndarray:
    mask = rng.random((n, n)) < density
    if edges == "support-only":
        values = np.ones((n, n), dtype=np.int8)
    else:
        values = rng.choice(np.array([-1, 1], dtype=np.int8), size=(n, n))
    return np.where(mask, values, np.zeros((n, n), dtype=np.int8)).astype(np.int8)


def random_graph_rng(
    rng: np.random.Generator,
    domain: Domain,
    n_max: int = 6,
    density: float = 0.25,
    prefix: str = "a",
) -> ArgGraph:
    n = int(rng.integers(1, n_max + 1))
    incidence = _random_incidence(rng, n, density, domain.edges)
    weights = np.array([sample_weight(rng, domain) for _ in range(n)])
    ids = tuple(f"{prefix}{k}" for k in range(n))
    return ArgGraph(ids, incidence, weights)


def random_graph(domain: Domain, n_max: int, density: float, seed: int) -> ArgGraph:
    """Deterministic random graph: same seed, same graph.

    Argument count is uniform on 1..n_max, every ordered pair (self-pairs
    included) gets an edge with probability ``density``, polarities follow
    the domain's edge restriction and weights its range (kept away from
    open-interval endpoints).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    return random_graph_rng(np.random.default_rng(seed), domain, n_max, density)


def add_sink(
    graph: ArgGraph,
    new_id: str,
    weight: float,
    supporters: list[int] = (),
    attackers: list[int] = (),
) -> ArgGraph:
    """Append an argument with in-edges only (it influences nothing)."""
    n = graph.n
    incidence = np.zeros((n + 1, n + 1), dtype=np.int8)
    incidence[:n, :n] = graph.incidence
    for j in supporters:
        incidence[n, j] = 1
    for j in attackers:
        incidence[n, j] = -1
    weights = np.append(graph.weights, weight)
    return ArgGraph(graph.arguments + (new_id,), incidence, weights)


def add_source(
    graph: ArgGraph,
    new_id: str,
    weight: float,
    supports: list[int] = (),
    attacks: list[int] = (),
) -> ArgGraph:
    """Append a parentless argument with out-edges only."""
    n = graph.n
    incidence = np.zeros((n + 1, n + 1), dtype=np.int8)
    incidence[:n, :n] = graph.incidence
    for t in supports:
        incidence[t, n] = 1
    for t in attacks:
        incidence[t, n] = -1
    weights = np.append(graph.weights, weight)
    return ArgGraph(graph.arguments + (new_id,), incidence, weights)


def with_weight(graph: ArgGraph, index: int, value: float) -> ArgGraph:
    weights = np.array(graph.weights, copy=True)
    weights[index] = value
    return ArgGraph(graph.arguments, graph.incidence, weights)


def with_entry(graph: ArgGraph, target: int, source: int, polarity: int) -> ArgGraph:
    incidence = np.array(graph.incidence, copy=True)
    incidence[target, source] = polarity
    return ArgGraph(graph.arguments, incidence, graph.weights)


def delete_node(graph: ArgGraph, index: int) -> ArgGraph:
    keep = [i for i in range(graph.n) if i != index]
    incidence = graph.incidence[np.ix_(keep, keep)]
    weights = graph.weights[keep]
    ids = tuple(graph.arguments[i] for i in keep)
    return ArgGraph(ids, incidence, weights)


def induced_subgraph(graph: ArgGraph, ids: list[str]) -> ArgGraph:
    keep = [graph.index_of(i) for i in ids]
    incidence = graph.incidence[np.ix_(keep, keep)]
    return ArgGraph(tuple(ids), incidence, graph.weights[keep])
