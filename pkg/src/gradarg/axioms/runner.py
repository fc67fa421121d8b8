"""Running characteristics against a semantics and reporting the verdicts."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from ..document import graph_to_document
from ..errors import GradargError, UnknownCharacteristic
from ..graph import ArgGraph, isolate, neighbors
from . import characteristics as chars
from .characteristics import CHARACTERISTICS, DEFAULT_TOL, Failure
from .generators import add_sink, add_source, random_graph_rng
from .minimize import minimize
from .sut import SemanticsUnderTest

PASSED = "passed"
FALSIFIED = "falsified"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Counterexample:
    """A falsifying instance: the (minimised) graph, its degrees under the
    semantics, and checker-specific details.  Replayable from the report's
    seed."""

    graph: dict
    degrees: dict
    description: str
    details: dict
    trial: int


@dataclass(frozen=True)
class CharacteristicReport:
    characteristic: str
    title: str
    mandatory: bool
    verdict: str
    trials: int           # effective trials (hypothesis satisfied)
    vacuous: int
    seed: int
    reason: str | None = None
    counterexample: Counterexample | None = None

    @property
    def failed(self) -> bool:
        return self.verdict == FALSIFIED

    def to_dict(self) -> dict:
        out = {
            "characteristic": self.characteristic,
            "title": self.title,
            "mandatory": self.mandatory,
            "verdict": self.verdict,
            "trials": self.trials,
            "vacuous": self.vacuous,
            "seed": self.seed,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.counterexample:
            out["counterexample"] = {
                "graph": self.counterexample.graph,
                "degrees": self.counterexample.degrees,
                "description": self.counterexample.description,
                "details": self.counterexample.details,
                "trial": self.counterexample.trial,
            }
        return out


def characteristic_names() -> list[str]:
    return list(CHARACTERISTICS)


def mandatory_names() -> list[str]:
    return [k for k, c in CHARACTERISTICS.items() if c.mandatory]


def optional_names() -> list[str]:
    return [k for k, c in CHARACTERISTICS.items() if not c.mandatory]


def _stream(seed: int, name: str) -> np.random.Generator:
    # stable private stream per (seed, characteristic); independent of hash
    # randomisation so falsified reports replay bit-identically
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    spawn = int.from_bytes(digest[:8], "big")
    return np.random.default_rng(np.random.SeedSequence(entropy=[seed, spawn]))


def _counterexample(sut: SemanticsUnderTest, failure: Failure, trial: int, shrink: bool) -> Counterexample:
    graph = failure.graph
    if shrink:
        graph = minimize(graph, failure.protected, failure.recheck)
    try:
        degrees = {a: float(v) for a, v in zip(graph.arguments, sut.evaluate(graph))}
    except GradargError:
        degrees = {}
    try:
        details = failure.details_fn(graph)
    except GradargError:
        details = {}
    return Counterexample(
        graph=graph_to_document(graph).to_dict(),
        degrees=degrees,
        description=failure.description,
        details=details,
        trial=trial,
    )


def check(
    sut: SemanticsUnderTest,
    characteristic: str,
    trials: int = 200,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    shrink: bool = True,
) -> CharacteristicReport:
    """Run one characteristic for ``trials`` sampled instances.

    Deterministic in (sut, characteristic, trials, seed).  The first
    falsifying instance is minimised and reported; instances whose
    hypothesis cannot be established count as vacuous, never as passes.
    """
    try:
        spec = CHARACTERISTICS[characteristic]
    except KeyError:
        raise UnknownCharacteristic(
            f"unknown characteristic {characteristic!r}; expected one of "
            f"{', '.join(CHARACTERISTICS)}") from None
    reason = spec.applicable(sut)
    if reason is not None:
        return CharacteristicReport(
            spec.key, spec.title, spec.mandatory, INAPPLICABLE, 0, 0, seed, reason=reason)
    rng = _stream(seed, spec.key)
    effective = 0
    vacuous = 0
    for trial in range(trials):
        try:
            if spec.accepts_trial_index:
                result = spec.run(sut, rng, tol, trial_index=trial)
            else:
                result = spec.run(sut, rng, tol)
        except GradargError:
            vacuous += 1
            continue
        if result.status == chars.VACUOUS:
            vacuous += 1
            continue
        effective += 1
        if result.status == chars.FAIL:
            return CharacteristicReport(
                spec.key, spec.title, spec.mandatory, FALSIFIED,
                effective, vacuous, seed,
                reason=result.failure.description,
                counterexample=_counterexample(sut, result.failure, trial, shrink),
            )
    if effective == 0:
        return CharacteristicReport(
            spec.key, spec.title, spec.mandatory, INAPPLICABLE, 0, vacuous, seed,
            reason=f"hypothesis never satisfiable in {trials} sampled instances")
    return CharacteristicReport(
        spec.key, spec.title, spec.mandatory, PASSED, effective, vacuous, seed)


def check_all(
    sut: SemanticsUnderTest,
    trials: int = 200,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    names: list[str] | None = None,
    shrink: bool = True,
) -> list[CharacteristicReport]:
    selected = names if names is not None else list(CHARACTERISTICS)
    return [check(sut, name, trials=trials, seed=seed, tol=tol, shrink=shrink)
            for name in selected]


# --------------------------------------------------------------------------
# derived-theorem consistency checks
#
# The suite re-verifies, instance by instance, the implications the axioms
# are known to entail: whenever the premises hold on a sampled instance the
# conclusion must hold on that same instance.

IMPLICATIONS = ("causality-implication", "dummy-implication", "stickiness-implication")


def _report(key, title, verdict, effective, vacuous, seed, reason=None, counterexample=None):
    return CharacteristicReport(key, title, True, verdict, effective, vacuous, seed,
                                reason=reason, counterexample=counterexample)


def _causality_implication(sut, rng, tol) -> tuple[str, ArgGraph | None]:
    """Replays the proof: a deviating argument whose parents all sit at the
    neutral value gets its parents isolated; if degrees survive that
    (neutrality premise) and the now-parentless argument matches its weight
    (conservativity premise), the deviation contradicts causality."""
    g = random_graph_rng(rng, sut.domain, n_max=5, density=0.3)
    deg = np.asarray(sut.evaluate(g), dtype=np.float64)
    effective = False
    for a in range(g.n):
        if abs(deg[a] - g.weights[a]) <= max(1e-6, tol):
            continue
        parents = np.flatnonzero(g.incidence[a] != 0)
        if np.any(np.abs(deg[parents] - sut.neutral) > 1e-9):
            effective = True  # causality's conclusion holds outright
            continue
        stripped = isolate(g, parents.tolist(), neutral_weight=sut.neutral)
        deg2 = np.asarray(sut.evaluate(stripped))
        if np.max(np.abs(deg - deg2)) > tol:
            continue  # neutrality premise failed here; nothing to conclude
        if abs(deg2[a] - g.weights[a]) > tol:
            continue  # conservativity premise failed here
        return "fail", g
    return ("ok" if effective else "vacuous"), None


def _dummy_implication(sut, rng, tol) -> tuple[str, ArgGraph | None]:
    result = chars.check_dummy(sut, rng, tol)
    if result.status == chars.VACUOUS:
        return "vacuous", None
    if result.status == chars.OK:
        return "ok", None
    # dummy failed; the implication is violated only if its premises held on
    # the same instance: isolating the extra supporter x changes nothing
    # (neutrality at x) and the twins tie in the isolated graph (parent
    # monotony both ways)
    g = result.failure.graph
    deg = np.asarray(sut.evaluate(g))
    xi = g.index_of("du_zero")
    stripped = isolate(g, xi, neutral_weight=sut.neutral)
    deg2 = np.asarray(sut.evaluate(stripped))
    neutrality_holds = np.max(np.abs(deg - deg2)) <= tol
    ties = abs(deg2[g.index_of("du_a")] - deg2[g.index_of("du_b")]) <= tol
    if neutrality_holds and ties:
        return "fail", g
    return "vacuous", None


def _stickiness_implication(sut, rng, tol) -> tuple[str, ArgGraph | None]:
    """Rebuild the proof's auxiliary graphs: each twin alone with parentless
    supporters carrying the original supporters' degrees."""
    g = random_graph_rng(rng, sut.domain, n_max=3, density=0.4)
    shared = [int(j) for j in range(g.n) if rng.random() < 0.5]
    w_low = float(rng.uniform(0.1, 0.5))
    w_high = float(rng.uniform(w_low + 0.1, 0.95))
    g1 = add_source(g, "x", w_high)
    g2 = add_source(g1, "y", w_low)
    g3 = add_sink(g2, "b", 1.0, supporters=[*shared, g2.index_of("y")])
    full = add_sink(g3, "a", 1.0, supporters=[*shared, g3.index_of("x")])
    deg = np.asarray(sut.evaluate(full))
    by_id = dict(zip(full.arguments, deg))
    if not by_id["x"] > by_id["y"] + 1e-9 or abs(by_id["b"] - 1.0) > tol:
        return "vacuous", None
    shared_ids = [g.arguments[j] for j in shared]

    def star(center_weight: float, head_weight: float) -> float:
        ids = ("hub",) + tuple(f"s{k}" for k in range(len(shared_ids) + 1))
        n = len(ids)
        incidence = np.zeros((n, n), dtype=np.int8)
        incidence[0, 1:] = 1
        weights = np.array([center_weight, head_weight] + [by_id[s] for s in shared_ids])
        return float(np.asarray(sut.evaluate(ArgGraph(ids, incidence, weights)))[0])

    # premises from independence/interchangeability/anonymity: the detached
    # star reproduces each twin's degree
    star_a = star(1.0, by_id["x"])
    star_b = star(1.0, by_id["y"])
    if abs(star_a - by_id["a"]) > tol or abs(star_b - by_id["b"]) > tol:
        return "vacuous", None
    # premise from parent monotony on the stars (identical shape, weaker head)
    if star_b > star_a + tol:
        return "vacuous", None
    # conclusion: stickiness on the original instance
    if abs(by_id["a"] - 1.0) > tol:
        return "fail", full
    return "ok", None


def implication_checks(
    sut: SemanticsUnderTest,
    trials: int = 200,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> list[CharacteristicReport]:
    """Instance-level verification of the derived characteristics: on every
    sampled instance where the premise axioms hold, the implied one must."""
    reports = []
    support_only = sut.domain.edges == "support-only" and sut.domain.weights == "closed-unit"
    plans = [("causality-implication",
              "Conservativity and Neutrality imply Causality", _causality_implication, True)]
    plans.append(("dummy-implication",
                  "Neutrality and Parent Monotony imply Dummy", _dummy_implication, support_only))
    plans.append(("stickiness-implication",
                  "Parent Monotony, Independence, Interchangeability, Anonymity and "
                  "Conservativity imply Stickiness", _stickiness_implication, support_only))
    for key, title, fn, applicable in plans:
        if not applicable:
            reports.append(_report(key, title, INAPPLICABLE, 0, 0, seed,
                                   reason="premises live on support-only unit-interval graphs"))
            continue
        rng = _stream(seed, key)
        effective = vacuous = 0
        failed_graph = None
        for _ in range(trials):
            try:
                status, witness = fn(sut, rng, tol)
            except GradargError:
                vacuous += 1
                continue
            if status == "vacuous":
                vacuous += 1
                continue
            effective += 1
            if status == "fail":
                failed_graph = witness
                break
        if failed_graph is not None:
            try:
                degrees = {a: float(v) for a, v in
                           zip(failed_graph.arguments, sut.evaluate(failed_graph))}
            except GradargError:
                degrees = {}
            ce = Counterexample(
                graph=graph_to_document(failed_graph).to_dict(),
                degrees=degrees,
                description=f"premises held but the implied characteristic failed ({title})",
                details={},
                trial=effective + vacuous - 1,
            )
            reports.append(_report(key, title, FALSIFIED, effective, vacuous, seed,
                                   reason=ce.description, counterexample=ce))
        elif effective == 0:
            reports.append(_report(key, title, INAPPLICABLE, 0, vacuous, seed,
                                   reason=f"premises never jointly held in {trials} instances"))
        else:
            reports.append(_report(key, title, PASSED, effective, vacuous, seed))
    return reports
