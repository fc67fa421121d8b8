"""Semantics under test: a total degree function plus its declared domain."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import semantics as sem
from ..graph import ArgGraph


@dataclass(frozen=True)
class Domain:
    """What inputs the semantics accepts.

    ``weights``: "real" (all finite reals), "open-unit" ((0,1)) or
    "closed-unit" ([0,1]).  ``edges``: "bipolar" or "support-only".
    """

    weights: str
    edges: str = "bipolar"


@dataclass(frozen=True)
class SemanticsUnderTest:
    """A deterministic degree function with the metadata the checkers need:
    the neutral value and, when the degree space has them, its maximum and
    minimum elements."""

    name: str
    domain: Domain
    neutral: float
    evaluate: Callable[[ArgGraph], np.ndarray]
    max_degree: float | None = None
    min_degree: float | None = None


def _converged_degrees(graph: ArgGraph, tag: str, **kwargs) -> np.ndarray:
    return sem.degrees_or_raise(sem.evaluate(graph, tag, **kwargs)).degrees


def direct_sut(damping=8) -> SemanticsUnderTest:
    """Direct aggregation; ``damping`` is a global constant or "auto"."""
    label = f"dir[d={damping}]"
    return SemanticsUnderTest(
        name=label,
        domain=Domain("real", "bipolar"),
        neutral=0.0,
        evaluate=lambda g: _converged_degrees(g, "dir", damping=damping),
    )


def sigmoid_direct_sut(damping=8, sigmoid_kind: str = "logistic") -> SemanticsUnderTest:
    return SemanticsUnderTest(
        name=f"sdir[d={damping},{sigmoid_kind}]",
        domain=Domain("open-unit", "bipolar"),
        neutral=0.5,
        evaluate=lambda g: _converged_degrees(
            g, "sdir", damping=damping, sigmoid_kind=sigmoid_kind),
    )


def gorgias_sut() -> SemanticsUnderTest:
    # the degree space is {0}, so 0 is both its maximum and minimum
    return SemanticsUnderTest(
        name="gorgias",
        domain=Domain("real", "bipolar"),
        neutral=0.0,
        evaluate=lambda g: np.zeros(g.n),
        max_degree=0.0,
        min_degree=0.0,
    )


def aggregation_sut() -> SemanticsUnderTest:
    return SemanticsUnderTest(
        name="aggregation",
        domain=Domain("closed-unit", "support-only"),
        neutral=0.0,
        evaluate=lambda g: _converged_degrees(g, "aggregation"),
        max_degree=1.0,
        min_degree=0.0,
    )


def sut_for_tag(tag: str, damping=8, sigmoid_kind: str = "logistic") -> SemanticsUnderTest:
    if tag == "dir":
        return direct_sut(damping)
    if tag == "sdir":
        return sigmoid_direct_sut(damping, sigmoid_kind)
    if tag == "gorgias":
        return gorgias_sut()
    if tag == "aggregation":
        return aggregation_sut()
    from ..errors import UnknownSemantics

    raise UnknownSemantics(
        f"no axiom-suite wrapper for {tag!r}; convergence is not guaranteed "
        "for the recursive bipolar semantics")
