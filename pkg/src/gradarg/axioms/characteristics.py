"""The characteristic catalog: one checker per axiom.

Each checker draws or constructs a single instance of the characteristic's
hypothesis, verifies the hypothesis numerically (instances whose hypothesis
fails count as vacuous, never as passes), and tests the conclusion at the
suite tolerance.  On failure it returns a replayable description together
with a recheck closure over the primary graph, which the minimiser uses to
shrink the witness while preserving failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Callable

import numpy as np

from ..graph import ArgGraph, isolate, neighbors, permute, union
from .generators import (
    add_sink,
    add_source,
    delete_node,
    induced_subgraph,
    moderate_weight,
    random_graph_rng,
    with_entry,
    with_weight,
)
from .sut import Domain, SemanticsUnderTest

#: numeric comparison tolerance; looser than solver tolerance on purpose
DEFAULT_TOL = 1e-7

#: strict inequalities must clear this margin
STRICT = 1e-12

#: hypotheses of the form Deg(b) > neutral require this much clearance so the
#: asserted strict conclusion has testable size
EFFECT_MARGIN = 1e-2

OK = "ok"
FAIL = "fail"
VACUOUS = "vacuous"


@dataclass
class Failure:
    """A falsifying instance, shrinkable through ``recheck``.

    ``recheck(graph)`` re-derives the whole instance from a reduced primary
    graph and returns True when the characteristic still fails on it.
    ``details_fn`` extracts the report payload (key degrees etc.) from the
    final graph.
    """

    graph: ArgGraph
    protected: frozenset[str]
    recheck: Callable[[ArgGraph], bool]
    description: str
    details_fn: Callable[[ArgGraph], dict] = dataclass_field(default=lambda g: {})


@dataclass
class InstanceResult:
    status: str
    failure: Failure | None = None


def _ok() -> InstanceResult:
    return InstanceResult(OK)


def _vacuous() -> InstanceResult:
    return InstanceResult(VACUOUS)


def _fail(failure: Failure) -> InstanceResult:
    return InstanceResult(FAIL, failure)


def _eval(sut: SemanticsUnderTest, graph: ArgGraph) -> np.ndarray:
    return np.asarray(sut.evaluate(graph), dtype=np.float64)


def _both_at(bound: float | None, x: float, y: float, tol: float) -> bool:
    return bound is not None and abs(x - bound) <= tol and abs(y - bound) <= tol


def _sample(sut, rng, n_max=5, density=0.3, prefix="a") -> ArgGraph:
    return random_graph_rng(rng, sut.domain, n_max=n_max, density=density, prefix=prefix)


# --------------------------------------------------------------------------
# anonymity

def check_anonymity(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    ranks = {aid: int(r) for aid, r in zip(g.arguments, rng.permutation(g.n))}

    def recheck(graph: ArgGraph) -> bool:
        order = sorted(graph.arguments, key=lambda aid: ranks[aid])
        position = {aid: k for k, aid in enumerate(order)}
        perm = [position[aid] for aid in graph.arguments]
        image = permute(graph, perm, new_ids=[f"p{p}" for p in perm])
        deg = _eval(sut, graph)
        deg_image = _eval(sut, image)
        return bool(np.max(np.abs(deg - deg_image[perm])) > tol) if graph.n else False

    if recheck(g):
        return _fail(Failure(
            g, frozenset(), recheck,
            "degrees changed under an isomorphic relabelling",
            details_fn=lambda graph: {"degrees": _eval(sut, graph).tolist()},
        ))
    return _ok()


# --------------------------------------------------------------------------
# independence

def _independence_canonical(sut) -> ArgGraph | None:
    """The damping-policy witness: a self-attacking argument unioned with a
    mutually-attacking, self-attacking pair."""
    if sut.domain.edges != "bipolar":
        return None
    w = 1.0 if sut.domain.weights == "real" else 0.85
    left = ArgGraph(("a",), np.array([[-1]]), np.array([w]))
    right = ArgGraph(
        ("b", "c"),
        np.array([[-1, -1], [-1, -1]]),
        np.array([w, w]),
    )
    return union(left, right)


def _make_independence_recheck(sut, side_a_ids, side_b_ids, tol):
    def recheck(graph: ArgGraph) -> bool:
        ids_a = [i for i in side_a_ids if i in graph.arguments]
        ids_b = [i for i in side_b_ids if i in graph.arguments]
        if not ids_a or not ids_b:
            return False
        part_a = induced_subgraph(graph, ids_a)
        part_b = induced_subgraph(graph, ids_b)
        whole = _eval(sut, graph)
        by_id = dict(zip(graph.arguments, whole))
        for part in (part_a, part_b):
            deg = _eval(sut, part)
            for aid, value in zip(part.arguments, deg):
                if abs(value - by_id[aid]) > tol:
                    return True
        return False

    return recheck


def check_independence(sut, rng, tol, trial_index=0) -> InstanceResult:
    if trial_index == 0:
        canonical = _independence_canonical(sut)
        if canonical is not None:
            side_a, side_b = ["a"], ["b", "c"]
            recheck = _make_independence_recheck(sut, side_a, side_b, tol)
            if recheck(canonical):
                return _fail(_independence_failure(sut, canonical, side_a, side_b, recheck))
            return _ok()
    g1 = _sample(sut, rng, prefix="a")
    g2 = _sample(sut, rng, prefix="b")
    combined = union(g1, g2)
    side_a, side_b = list(g1.arguments), list(g2.arguments)
    recheck = _make_independence_recheck(sut, side_a, side_b, tol)
    if recheck(combined):
        return _fail(_independence_failure(sut, combined, side_a, side_b, recheck))
    return _ok()


def _independence_failure(sut, combined, side_a, side_b, recheck) -> Failure:
    def details(graph: ArgGraph) -> dict:
        whole = dict(zip(graph.arguments, _eval(sut, graph)))
        out = {"degrees_in_union": {k: float(v) for k, v in whole.items()}, "degrees_alone": {}}
        for ids in (side_a, side_b):
            kept = [i for i in ids if i in graph.arguments]
            if kept:
                part = induced_subgraph(graph, kept)
                for aid, value in zip(part.arguments, _eval(sut, part)):
                    out["degrees_alone"][aid] = float(value)
        return out

    return Failure(
        combined, frozenset(), recheck,
        "degree of an argument changed when a disjoint graph was unioned in",
        details_fn=details,
    )


# --------------------------------------------------------------------------
# equivalence

def check_equivalence(sut, rng, tol) -> InstanceResult:
    base = _sample(sut, rng, n_max=3, prefix="a")
    mirror_ids = [f"m{k}" for k in range(base.n)]
    mirror = ArgGraph(tuple(mirror_ids), base.incidence, base.weights)
    combined = union(base, mirror)
    indices = list(range(base.n))
    rng.shuffle(indices)
    cut = int(rng.integers(0, base.n + 1))
    att = sorted(indices[:cut]) if sut.domain.edges == "bipolar" else []
    supp = sorted(indices[cut:])
    weight = moderate_weight(rng, sut.domain)
    pairs = [(base.arguments[i], mirror_ids[i]) for i in range(base.n)]
    witha = add_sink(combined, "eq_a", weight,
                     supporters=supp, attackers=att)
    final = add_sink(witha, "eq_b", weight,
                     supporters=[witha.index_of(mirror_ids[i]) for i in supp],
                     attackers=[witha.index_of(mirror_ids[i]) for i in att])

    def recheck(graph: ArgGraph) -> bool:
        if "eq_a" not in graph.arguments or "eq_b" not in graph.arguments:
            return False
        deg = _eval(sut, graph)
        by_id = dict(zip(graph.arguments, deg))
        ia, ib = graph.index_of("eq_a"), graph.index_of("eq_b")
        mirror_of = dict(pairs)
        for polarity in (-1, 1):
            parents_a = {graph.arguments[j] for j in np.flatnonzero(graph.incidence[ia] == polarity)}
            parents_b = {graph.arguments[j] for j in np.flatnonzero(graph.incidence[ib] == polarity)}
            if {mirror_of.get(x) for x in parents_a} != parents_b:
                return False
            for x in parents_a:
                if abs(by_id[x] - by_id[mirror_of[x]]) > tol:
                    return False  # hypothesis bijection broken
        if abs(graph.weights[ia] - graph.weights[ib]) > 0:
            return False
        return abs(by_id["eq_a"] - by_id["eq_b"]) > tol

    if recheck(final):
        return _fail(Failure(
            final, frozenset(["eq_a", "eq_b"]), recheck,
            "arguments with equal weight and degree-matched parents got different degrees",
            details_fn=lambda graph: {
                "degrees": dict(zip(graph.arguments, map(float, _eval(sut, graph))))},
        ))
    return _ok()


# --------------------------------------------------------------------------
# directionality

def check_directionality(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    zeros = np.argwhere(g.incidence == 0)
    if len(zeros) == 0:
        return _vacuous()
    t, s = map(int, zeros[rng.integers(0, len(zeros))])
    polarity = 1 if sut.domain.edges == "support-only" else int(rng.choice([-1, 1]))
    src_id, tgt_id = g.arguments[s], g.arguments[t]

    def recheck(graph: ArgGraph) -> bool:
        if src_id not in graph.arguments or tgt_id not in graph.arguments:
            return False
        si, ti = graph.index_of(src_id), graph.index_of(tgt_id)
        if graph.incidence[ti, si] != 0:
            return False
        extended = with_entry(graph, ti, si, polarity)
        before = _eval(sut, graph)
        after = _eval(sut, extended)
        for x in range(graph.n):
            if x == ti:
                continue
            nb = neighbors(extended, x)
            if ti in nb.backers or ti in nb.detractors:
                continue
            if abs(before[x] - after[x]) > tol:
                return True
        return False

    if recheck(g):
        return _fail(Failure(
            g, frozenset([src_id, tgt_id]), recheck,
            f"adding an edge {src_id}->{tgt_id} changed an argument the target cannot reach",
        ))
    return _ok()


# --------------------------------------------------------------------------
# conservativity

def _conservativity_canonical(sut) -> ArgGraph:
    w = 1.0 if sut.domain.weights == "real" else 0.75
    return ArgGraph(("a",), np.zeros((1, 1)), np.array([w]))


def _make_conservativity_recheck(sut, tol):
    def recheck(graph: ArgGraph) -> bool:
        deg = _eval(sut, graph)
        parentless = ~np.abs(graph.incidence).any(axis=1)
        return bool(np.any(np.abs(deg[parentless] - graph.weights[parentless]) > tol))

    return recheck


def check_conservativity(sut, rng, tol, trial_index=0) -> InstanceResult:
    g = _conservativity_canonical(sut) if trial_index == 0 else _sample(sut, rng)
    recheck = _make_conservativity_recheck(sut, tol)
    if not np.any(~np.abs(g.incidence).any(axis=1)):
        return _vacuous()
    if recheck(g):
        return _fail(Failure(
            g, frozenset(), recheck,
            "an argument without parents deviated from its initial plausibility",
            details_fn=lambda graph: {
                "weights": graph.weights.tolist(),
                "degrees": _eval(sut, graph).tolist()},
        ))
    return _ok()


# --------------------------------------------------------------------------
# initial monotony

def check_initial_monotony(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    b = int(rng.integers(0, g.n))
    if sut.domain.weights == "real":
        low = moderate_weight(rng, sut.domain)
        high = low + float(rng.uniform(0.3, 2.0))
    else:
        low = float(rng.uniform(0.1, 0.8))
        high = low + float(rng.uniform(0.05, min(0.89 - low, 0.5)))
    twin = "im_twin"
    n = g.n
    incidence = np.zeros((n + 1, n + 1), dtype=np.int8)
    incidence[:n, :n] = g.incidence
    incidence[n, :n] = g.incidence[b, :]  # twin parent row mirrors b's
    weights = np.append(g.weights, high)
    weights[b] = low
    planted = ArgGraph(g.arguments + (twin,), incidence, weights)
    b_id = g.arguments[b]

    def recheck(graph: ArgGraph) -> bool:
        if twin not in graph.arguments or b_id not in graph.arguments:
            return False
        ti, bi = graph.index_of(twin), graph.index_of(b_id)
        if not np.array_equal(graph.incidence[ti], graph.incidence[bi]):
            return False
        if not graph.weights[ti] > graph.weights[bi]:
            return False
        deg = _eval(sut, graph)
        if deg[ti] > deg[bi] + STRICT:
            return False
        if _both_at(sut.max_degree, deg[ti], deg[bi], tol):
            return False
        if _both_at(sut.min_degree, deg[ti], deg[bi], tol):
            return False
        return True

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset([twin, b_id]), recheck,
            "raising the initial plausibility did not strictly raise the degree",
            details_fn=lambda graph: {
                "twin": twin, "baseline": b_id,
                "degrees": dict(zip(graph.arguments, map(float, _eval(sut, graph))))},
        ))
    return _ok()


# --------------------------------------------------------------------------
# neutrality

def check_neutrality(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    targets = list(rng.choice(g.n, size=min(g.n, 2), replace=False))
    supports = [int(t) for t in targets[:1]]
    attacks = [int(t) for t in targets[1:]] if sut.domain.edges == "bipolar" else []
    planted = add_source(g, "neutral_src", sut.neutral,
                         supports=supports,
                         attacks=attacks)

    def recheck(graph: ArgGraph) -> bool:
        if "neutral_src" not in graph.arguments:
            return False
        i = graph.index_of("neutral_src")
        deg = _eval(sut, graph)
        if abs(deg[i] - sut.neutral) > 1e-9:
            return False  # hypothesis: the argument sits exactly at neutral
        stripped = isolate(graph, i, neutral_weight=sut.neutral)
        deg_stripped = _eval(sut, stripped)
        return bool(np.max(np.abs(deg - deg_stripped)) > tol)

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset(["neutral_src"]), recheck,
            "isolating a neutral-degree argument changed other degrees",
        ))
    return _ok()


# --------------------------------------------------------------------------
# parent monotony

def check_parent_monotony(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    a = int(rng.integers(0, g.n))
    a_id = g.arguments[a]
    row = g.incidence[a]
    removed_attacks = [g.arguments[j] for j in np.flatnonzero(row == -1)
                       if rng.random() < 0.5]
    free = [j for j in np.flatnonzero(row == 0) if j != a]
    added_supports = [g.arguments[int(j)] for j in free if rng.random() < 0.3]
    weight_shifts: dict[str, float] = {}
    for j in np.flatnonzero(row == 1):
        if j == a:  # the target's own weight must stay fixed
            continue
        if rng.random() < 0.5:
            room = 1.0 if sut.domain.weights == "real" else 1.0 - 1e-6 - float(g.weights[j])
            if room > 0.01:
                weight_shifts[g.arguments[int(j)]] = float(
                    g.weights[j] + rng.uniform(0.01, room))
    for j in np.flatnonzero(row == -1):
        if j == a or g.arguments[int(j)] in removed_attacks or rng.random() >= 0.5:
            continue
        room = 1.0 if sut.domain.weights == "real" else float(g.weights[j]) - 1e-6
        if room > 0.01:
            weight_shifts[g.arguments[int(j)]] = float(
                g.weights[j] - rng.uniform(0.01, room))
    if not (removed_attacks or added_supports or weight_shifts):
        added_supports = [g.arguments[int(j)] for j in free[:1]]
        if not added_supports:
            return _vacuous()

    def strengthened(graph: ArgGraph) -> ArgGraph | None:
        if a_id not in graph.arguments:
            return None
        ai = graph.index_of(a_id)
        out = graph
        for src in removed_attacks:
            if src in graph.arguments:
                out = with_entry(out, ai, out.index_of(src), 0)
        for src in added_supports:
            if src in graph.arguments and out.incidence[ai, out.index_of(src)] == 0:
                out = with_entry(out, ai, out.index_of(src), 1)
        for src, value in weight_shifts.items():
            if src in graph.arguments:
                out = with_weight(out, out.index_of(src), value)
        return out

    def recheck(graph: ArgGraph) -> bool:
        improved = strengthened(graph)
        if improved is None:
            return False
        ai = graph.index_of(a_id)
        deg = _eval(sut, graph)
        deg2 = _eval(sut, improved)
        att1 = set(np.flatnonzero(graph.incidence[ai] == -1).tolist())
        att2 = sorted(np.flatnonzero(improved.incidence[ai] == -1).tolist())
        supp1 = sorted(np.flatnonzero(graph.incidence[ai] == 1).tolist())
        supp2 = set(np.flatnonzero(improved.incidence[ai] == 1).tolist())
        if np.any(deg2[att2] > deg[att2] + tol):
            return False
        if np.any(deg[supp1] > deg2[supp1] + tol):
            return False
        # a removed attacker or freshly added supporter below the neutral
        # value acts with inverted effect, which the axiom's strengthening
        # reading does not intend; such draws are vacuous
        for j in att1 - set(att2):
            if deg[j] < sut.neutral - tol:
                return False
        for j in supp2 - set(supp1):
            if deg2[j] < sut.neutral - tol:
                return False
        return deg[ai] > deg2[ai] + tol

    if recheck(g):
        return _fail(Failure(
            g, frozenset([a_id]), recheck,
            "strengthening the parents of an argument lowered its degree",
        ))
    return _ok()


# --------------------------------------------------------------------------
# impact (and its reverse)

def _impact_candidates(sut, graph, deg, direction):
    """(a, b, polarity) with b a direct parent of a (never a itself), clear
    of the neutral value in the requested direction and not reinforcing a
    through the closure of the opposite sign."""
    for a in range(graph.n):
        nb = neighbors(graph, a)
        for polarity, parents, excluded in (
            (-1, nb.attackers, nb.backers),
            (1, nb.supporters, nb.detractors),
        ):
            for b in parents:
                if b == a or b in excluded:
                    continue
                clear = deg[b] - sut.neutral if direction > 0 else sut.neutral - deg[b]
                if clear > EFFECT_MARGIN:
                    yield a, b, polarity


def _impact_violated(sut, graph, a, b, polarity, direction, tol) -> bool:
    deg = _eval(sut, graph)
    stripped = isolate(graph, b, neutral_weight=sut.neutral)
    deg2 = _eval(sut, stripped)
    # positive-degree attacker / negative-degree supporter: isolation raises a
    raises_a = (polarity == -1) == (direction > 0)
    if raises_a:
        holds = deg2[a] > deg[a] + STRICT
    else:
        holds = deg[a] > deg2[a] + STRICT
    if holds:
        return False
    if _both_at(sut.max_degree, deg[a], deg2[a], tol):
        return False
    if _both_at(sut.min_degree, deg[a], deg2[a], tol):
        return False
    return True


def _check_impact_like(sut, rng, tol, direction) -> InstanceResult:
    g = _sample(sut, rng, density=0.35)
    deg = _eval(sut, g)
    found = False
    for a, b, polarity in _impact_candidates(sut, g, deg, direction):
        found = True
        if _impact_violated(sut, g, a, b, polarity, direction, tol):
            a_id, b_id = g.arguments[a], g.arguments[b]

            def recheck(graph: ArgGraph, a_id=a_id, b_id=b_id, polarity=polarity) -> bool:
                if a_id not in graph.arguments or b_id not in graph.arguments:
                    return False
                ai, bi = graph.index_of(a_id), graph.index_of(b_id)
                if ai == bi or graph.incidence[ai, bi] != polarity:
                    return False
                dvec = _eval(sut, graph)
                clear = dvec[bi] - sut.neutral if direction > 0 else sut.neutral - dvec[bi]
                if clear <= EFFECT_MARGIN:
                    return False
                nb = neighbors(graph, ai)
                excluded = nb.backers if polarity == -1 else nb.detractors
                if bi in excluded:
                    return False
                return _impact_violated(sut, graph, ai, bi, polarity, direction, tol)

            kind = "impact" if direction > 0 else "reverse impact"
            return _fail(Failure(
                g, frozenset([a_id, b_id]), recheck,
                f"{kind}: isolating parent {b_id} moved {a_id} the wrong way (or not at all)",
            ))
    return _ok() if found else _vacuous()


def check_impact(sut, rng, tol) -> InstanceResult:
    return _check_impact_like(sut, rng, tol, direction=+1)


def check_reverse_impact(sut, rng, tol) -> InstanceResult:
    return _check_impact_like(sut, rng, tol, direction=-1)


# --------------------------------------------------------------------------
# reinforcement

def check_reinforcement(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    a = int(rng.integers(0, g.n))
    parents = np.flatnonzero(g.incidence[a] != 0)
    parents = [int(j) for j in parents if j != a]
    if not parents:
        return _vacuous()
    b = int(parents[rng.integers(0, len(parents))])
    a_id, b_id = g.arguments[a], g.arguments[b]
    polarity = int(g.incidence[a, b])
    # case 1 of the axiom: the variant graph strengthens an attacker or
    # weakens a supporter, so the base graph must come out ahead
    if sut.domain.weights == "real":
        delta = float(rng.uniform(0.2, 1.5))
    else:
        room = (1.0 - 1e-6 - g.weights[b]) if polarity == -1 else (g.weights[b] - 1e-6)
        if room <= 0.01:
            return _vacuous()
        delta = float(rng.uniform(0.01, room))
    new_weight = float(g.weights[b] + delta) if polarity == -1 else float(g.weights[b] - delta)

    def recheck(graph: ArgGraph) -> bool:
        if a_id not in graph.arguments or b_id not in graph.arguments:
            return False
        ai, bi = graph.index_of(a_id), graph.index_of(b_id)
        if graph.incidence[ai, bi] != polarity:
            return False
        variant = with_weight(graph, bi, new_weight)
        deg = _eval(sut, graph)
        deg2 = _eval(sut, variant)
        att = np.flatnonzero(graph.incidence[ai] == -1)
        supp = np.flatnonzero(graph.incidence[ai] == 1)
        if np.any(deg[att] > deg2[att] + tol) or np.any(deg2[supp] > deg[supp] + tol):
            return False
        strict_witness = (deg2[bi] > deg[bi] + STRICT) if polarity == -1 else (deg[bi] > deg2[bi] + STRICT)
        if not strict_witness:
            return False
        if deg[ai] > deg2[ai] + STRICT:
            return False
        if _both_at(sut.max_degree, deg[ai], deg2[ai], tol):
            return False
        return True

    if recheck(g):
        return _fail(Failure(
            g, frozenset([a_id, b_id]), recheck,
            "strengthening an attacker (or weakening a supporter) failed to "
            "strictly lower the target",
        ))
    return _ok()


# --------------------------------------------------------------------------
# causality

def _make_causality_recheck(sut, tol):
    def recheck(graph: ArgGraph) -> bool:
        deg = _eval(sut, graph)
        for a in range(graph.n):
            if abs(deg[a] - graph.weights[a]) <= max(1e-6, tol):
                continue
            parents = np.flatnonzero(graph.incidence[a] != 0)
            if not np.any(np.abs(deg[parents] - sut.neutral) > 1e-9):
                return True
        return False

    return recheck


def check_causality(sut, rng, tol, trial_index=0) -> InstanceResult:
    g = _conservativity_canonical(sut) if trial_index == 0 else _sample(sut, rng)
    recheck = _make_causality_recheck(sut, tol)
    if recheck(g):
        return _fail(Failure(
            g, frozenset(), recheck,
            "a degree deviated from its weight with no non-neutral parent to cause it",
            details_fn=lambda graph: {
                "weights": graph.weights.tolist(),
                "degrees": _eval(sut, graph).tolist()},
        ))
    return _ok()


# --------------------------------------------------------------------------
# neutralisation

def _neutralisation_canonical(sut) -> tuple[ArgGraph, str, str, str] | None:
    if sut.domain.weights == "real":
        g = ArgGraph(
            ("a1", "a2", "a3"),
            np.array([[0, 0, 0], [-1, 0, 1], [0, 0, 0]]),
            np.array([4.0, 3.0, 4.0]),
        )
        return g, "a1", "a3", "a2"
    return None


def check_neutralisation(sut, rng, tol, trial_index=0) -> InstanceResult:
    canonical = _neutralisation_canonical(sut) if trial_index == 0 else None
    if canonical is not None:
        planted, k_id, l_id, m_id = canonical
    else:
        g = _sample(sut, rng)
        m = int(rng.integers(0, g.n))
        weight = moderate_weight(rng, sut.domain)
        withk = add_source(g, "nz_att", weight, attacks=[m])
        planted = add_source(withk, "nz_supp", weight, supports=[m])
        k_id, l_id, m_id = "nz_att", "nz_supp", g.arguments[m]

    def recheck(graph: ArgGraph) -> bool:
        for aid in (k_id, l_id, m_id):
            if aid not in graph.arguments:
                return False
        ki, li, mi = (graph.index_of(x) for x in (k_id, l_id, m_id))
        if graph.incidence[mi, ki] != -1 or graph.incidence[mi, li] != 1:
            return False
        deg = _eval(sut, graph)
        if abs(deg[ki] - deg[li]) > 1e-9:
            return False
        stripped = with_entry(with_entry(graph, mi, ki, 0), mi, li, 0)
        deg2 = _eval(sut, stripped)
        return bool(np.max(np.abs(deg - deg2)) > tol)

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset([k_id, l_id, m_id]), recheck,
            "removing a degree-matched attack/support pair changed the degrees",
            details_fn=lambda graph: {
                "degrees": dict(zip(graph.arguments, map(float, _eval(sut, graph))))},
        ))
    return _ok()


# --------------------------------------------------------------------------
# continuity

def check_continuity(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng)
    i = int(rng.integers(0, g.n))
    node_id = g.arguments[i]
    # nudge towards the domain interior so every probe stays admissible
    direction = 1.0
    if sut.domain.weights in ("open-unit", "closed-unit") and g.weights[i] > 0.5:
        direction = -1.0

    def recheck(graph: ArgGraph) -> bool:
        if node_id not in graph.arguments:
            return False
        idx = graph.index_of(node_id)
        base = _eval(sut, graph)
        responses = []
        for eps in (1e-2, 1e-4, 1e-6):
            probe = with_weight(graph, idx, float(graph.weights[idx] + direction * eps))
            moved = _eval(sut, probe)
            responses.append(float(np.max(np.abs(moved - base))))
        # a jump keeps the response level as the perturbation shrinks; a
        # continuous map must show real decay at every 100x step (steep but
        # finite slopes, e.g. near an open-interval boundary, still decay)
        return any(responses[k + 1] > 0.75 * responses[k] + 1e-8 for k in range(2))

    if recheck(g):
        return _fail(Failure(
            g, frozenset([node_id]), recheck,
            "degree response failed to decay as the weight perturbation shrank",
        ))
    return _ok()


# --------------------------------------------------------------------------
# interchangeability

def _interchangeability_canonical(sut) -> tuple[ArgGraph, str, str, str] | None:
    if sut.domain.weights != "real" or sut.domain.edges != "bipolar":
        return None
    g = ArgGraph(
        ("a1", "a2", "a3", "a4"),
        np.array([
            [0, 0, 0, 0],
            [1, 0, 0, -1],
            [1, 0, 0, -1],
            [0, 0, 0, 0],
        ]),
        np.array([0.5, 2.0, 1.0, 0.5]),
    )
    return g, "a2", "a1", "a4"


def check_interchangeability(sut, rng, tol, trial_index=0) -> InstanceResult:
    canonical = _interchangeability_canonical(sut) if trial_index == 0 else None
    if canonical is not None:
        planted, i_id, j_id, k_id = canonical
    else:
        g = _sample(sut, rng, n_max=4)
        i = int(rng.integers(0, g.n))
        weight = moderate_weight(rng, sut.domain)
        if sut.domain.edges == "bipolar":
            p1, p2 = [(1, 0), (1, -1), (-1, 0)][int(rng.integers(0, 3))]
        else:
            p1, p2 = 1, 0
        withj = add_source(g, "ic_j", weight,
                           supports=[i] if p1 == 1 else [], attacks=[i] if p1 == -1 else [])
        planted = add_source(withj, "ic_k", weight,
                             supports=[i] if p2 == 1 else [], attacks=[i] if p2 == -1 else [])
        i_id, j_id, k_id = g.arguments[i], "ic_j", "ic_k"

    def recheck(graph: ArgGraph) -> bool:
        for aid in (i_id, j_id, k_id):
            if aid not in graph.arguments:
                return False
        ii, ji, ki = (graph.index_of(x) for x in (i_id, j_id, k_id))
        deg = _eval(sut, graph)
        if abs(deg[ji] - deg[ki]) > 1e-9:
            return False
        swapped = with_entry(
            with_entry(graph, ii, ji, int(graph.incidence[ii, ki])),
            ii, ki, int(graph.incidence[ii, ji]))
        deg2 = _eval(sut, swapped)
        return bool(np.max(np.abs(deg - deg2)) > tol)

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset([i_id, j_id, k_id]), recheck,
            "swapping two equal-degree parents changed the degrees",
        ))
    return _ok()


# --------------------------------------------------------------------------
# linearity

def check_linearity(sut, rng, tol) -> InstanceResult:
    g = _sample(sut, rng, density=0.45)
    a = int(rng.integers(0, g.n))
    a_id = g.arguments[a]
    if sut.domain.weights == "real":
        points = (-1.0, 0.5, 2.0)
    else:
        points = (0.2, 0.45, 0.7)

    def recheck(graph: ArgGraph) -> bool:
        if a_id not in graph.arguments:
            return False
        idx = graph.index_of(a_id)
        values = [float(_eval(sut, with_weight(graph, idx, t))[idx]) for t in points]
        t0, t1, t2 = points
        predicted = values[0] + (values[1] - values[0]) * (t2 - t0) / (t1 - t0)
        return abs(predicted - values[2]) > tol * (1.0 + abs(values[2]))

    if recheck(g):
        return _fail(Failure(
            g, frozenset([a_id]), recheck,
            f"degree of {a_id} is not an affine function of its own weight",
            details_fn=lambda graph: {"argument": a_id, "probe_weights": list(points)},
        ))
    return _ok()


# --------------------------------------------------------------------------
# boundedness

def check_boundedness(sut, rng, tol) -> InstanceResult:
    if sut.max_degree is not None and sut.min_degree is not None:
        g = _sample(sut, rng)
        deg = _eval(sut, g)
        if np.any(deg > sut.max_degree + tol) or np.any(deg < sut.min_degree - tol):
            def recheck(graph: ArgGraph) -> bool:
                d = _eval(sut, graph)
                return bool(np.any(d > sut.max_degree + tol) or np.any(d < sut.min_degree - tol))

            return _fail(Failure(
                g, frozenset(), recheck,
                "a degree escaped the declared maximum/minimum",
            ))
        return _ok()
    # no maximum or minimum element exists, witnessed by an escalating family
    if sut.domain.weights == "real":
        lo = ArgGraph(("w",), np.zeros((1, 1)), np.array([10.0]))
        hi = ArgGraph(("w",), np.zeros((1, 1)), np.array([100.0]))
        d_lo, d_hi = float(_eval(sut, lo)[0]), float(_eval(sut, hi)[0])
        description = (
            "degree space has no extrema: single-node degrees "
            f"{d_lo} and {d_hi} keep growing with the weight")
        witness = hi
    else:
        witness = ArgGraph(("w",), np.zeros((1, 1)), np.array([0.5]))
        description = "degree space is an open interval: no maximum or minimum element"
    return _fail(Failure(witness, frozenset(["w"]), lambda graph: True, description))


# --------------------------------------------------------------------------
# dummy and stickiness (support-only, unit-interval graphs)

def check_dummy(sut, rng, tol) -> InstanceResult:
    base = _sample(sut, rng, n_max=4)
    shared = [int(j) for j in range(base.n) if rng.random() < 0.5]
    weight = float(rng.uniform(0.1, 0.9))
    with_zero = add_source(base, "du_zero", 0.0, supports=[])
    with_b = add_sink(with_zero, "du_b", weight, supporters=shared)
    planted = add_sink(with_b, "du_a", weight,
                       supporters=[*shared, with_b.index_of("du_zero")])

    def recheck(graph: ArgGraph) -> bool:
        for aid in ("du_a", "du_b", "du_zero"):
            if aid not in graph.arguments:
                return False
        ai, bi, xi = (graph.index_of(x) for x in ("du_a", "du_b", "du_zero"))
        supp_a = set(np.flatnonzero(graph.incidence[ai] == 1).tolist())
        supp_b = set(np.flatnonzero(graph.incidence[bi] == 1).tolist())
        if supp_a != supp_b | {xi} or xi in supp_b:
            return False
        if graph.weights[ai] != graph.weights[bi]:
            return False
        deg = _eval(sut, graph)
        if abs(deg[xi] - sut.neutral) > 1e-9:
            return False
        return abs(deg[ai] - deg[bi]) > tol

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset(["du_a", "du_b", "du_zero"]), recheck,
            "an extra neutral-degree supporter changed the degree",
        ))
    return _ok()


def check_stickiness(sut, rng, tol) -> InstanceResult:
    base = _sample(sut, rng, n_max=3)
    shared = [int(j) for j in range(base.n) if rng.random() < 0.5]
    w_low = float(rng.uniform(0.1, 0.5))
    w_high = float(rng.uniform(w_low + 0.1, 0.95))
    g1 = add_source(base, "st_x", w_high)
    g2 = add_source(g1, "st_y", w_low)
    g3 = add_sink(g2, "st_b", 1.0, supporters=[*shared, g2.index_of("st_y")])
    planted = add_sink(g3, "st_a", 1.0, supporters=[*shared, g3.index_of("st_x")])

    def recheck(graph: ArgGraph) -> bool:
        for aid in ("st_a", "st_b", "st_x", "st_y"):
            if aid not in graph.arguments:
                return False
        ai, bi, xi, yi = (graph.index_of(x) for x in ("st_a", "st_b", "st_x", "st_y"))
        supp_a = set(np.flatnonzero(graph.incidence[ai] == 1).tolist())
        supp_b = set(np.flatnonzero(graph.incidence[bi] == 1).tolist())
        if supp_a - supp_b != {xi} or supp_b - supp_a != {yi}:
            return False
        if graph.weights[ai] != graph.weights[bi]:
            return False
        deg = _eval(sut, graph)
        if not deg[xi] > deg[yi] + 1e-9:
            return False
        if abs(deg[bi] - 1.0) > tol:
            return False  # hypothesis Deg(b) = 1
        return abs(deg[ai] - 1.0) > tol

    if recheck(planted):
        return _fail(Failure(
            planted, frozenset(["st_a", "st_b", "st_x", "st_y"]), recheck,
            "stronger support than a degree-one argument did not reach degree one",
        ))
    return _ok()


# --------------------------------------------------------------------------
# catalog

@dataclass(frozen=True)
class Characteristic:
    key: str
    title: str
    mandatory: bool
    run: Callable
    applicable: Callable[[SemanticsUnderTest], str | None] = lambda sut: None
    accepts_trial_index: bool = False


def _needs_bipolar(sut) -> str | None:
    if sut.domain.edges != "bipolar":
        return "hypothesis needs attack edges, which the domain excludes"
    return None


def _needs_degrees_below_neutral(sut) -> str | None:
    if sut.domain.weights == "closed-unit" and sut.neutral <= 0.0:
        return "no degree can lie below the neutral value on this domain"
    return None


def _needs_bounded_support(sut) -> str | None:
    if sut.domain.edges != "support-only" or sut.domain.weights != "closed-unit":
        return "defined for support-only graphs with weights in [0, 1]"
    return None


CHARACTERISTICS: dict[str, Characteristic] = {
    c.key: c
    for c in (
        Characteristic("anonymity", "Anonymity", True, check_anonymity),
        Characteristic("independence", "Independence", True, check_independence,
                       accepts_trial_index=True),
        Characteristic("equivalence", "Equivalence", True, check_equivalence),
        Characteristic("directionality", "Directionality", True, check_directionality),
        Characteristic("conservativity", "Conservativity", True, check_conservativity,
                       accepts_trial_index=True),
        Characteristic("initial-monotony", "Initial Monotony", True, check_initial_monotony),
        Characteristic("neutrality", "Neutrality", True, check_neutrality),
        Characteristic("parent-monotony", "Parent Monotony", True, check_parent_monotony),
        Characteristic("impact", "Impact", True, check_impact),
        Characteristic("reinforcement", "Reinforcement", True, check_reinforcement),
        Characteristic("causality", "Causality", True, check_causality,
                       accepts_trial_index=True),
        Characteristic("neutralisation", "Neutralisation", True, check_neutralisation,
                       applicable=_needs_bipolar, accepts_trial_index=True),
        Characteristic("continuity", "Continuity", True, check_continuity),
        Characteristic("interchangeability", "Interchangeability", True,
                       check_interchangeability, accepts_trial_index=True),
        Characteristic("dummy", "Dummy", True, check_dummy,
                       applicable=_needs_bounded_support),
        Characteristic("stickiness", "Stickiness", True, check_stickiness,
                       applicable=_needs_bounded_support),
        Characteristic("linearity", "Linearity", False, check_linearity),
        Characteristic("boundedness", "Boundedness", False, check_boundedness),
        Characteristic("reverse-impact", "Reverse impact", False, check_reverse_impact,
                       applicable=_needs_degrees_below_neutral),
    )
}
