"""Executable characteristics for acceptability semantics.

The suite samples or constructs instances of each characteristic's
hypothesis, evaluates the semantics under test, and asserts the conclusion
numerically.  Falsified characteristics come with a greedily minimised,
replayable counterexample.
"""
from .sut import Domain, SemanticsUnderTest, aggregation_sut, direct_sut, gorgias_sut, sigmoid_direct_sut
from .generators import random_graph
from .runner import (
    CharacteristicReport,
    Counterexample,
    check,
    check_all,
    implication_checks,
    characteristic_names,
    mandatory_names,
    optional_names,
)

__all__ = [
    "Domain",
    "SemanticsUnderTest",
    "aggregation_sut",
    "direct_sut",
    "gorgias_sut",
    "sigmoid_direct_sut",
    "random_graph",
    "CharacteristicReport",
    "Counterexample",
    "check",
    "check_all",
    "implication_checks",
    "characteristic_names",
    "mandatory_names",
    "optional_names",
]
