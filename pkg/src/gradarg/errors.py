"""Exception hierarchy for gradarg.

Every library error derives from :class:`GradargError` so callers (CLI,
service) can map failures to exit codes / HTTP responses in one place.
"""


class GradargError(Exception):
    """Base class for all gradarg errors."""

    code = "error"


# --- graph construction and structural operations ---

class DuplicateArgument(GradargError):
    code = "duplicate_argument"


class UnknownEndpoint(GradargError):
    code = "unknown_endpoint"


class DuplicateEdge(GradargError):
    code = "duplicate_edge"


class NonFiniteWeight(GradargError):
    code = "non_finite_weight"


class IndexOutOfRange(GradargError):
    code = "index_out_of_range"


class DimensionMismatch(GradargError):
    code = "dimension_mismatch"


class SharedComponent(GradargError):
    code = "shared_component"


class SizeMismatch(GradargError):
    code = "size_mismatch"


# --- evaluation ---

class InvalidTolerance(GradargError):
    code = "invalid_tolerance"


class InvalidIterationBudget(GradargError):
    code = "invalid_iteration_budget"


class InvalidDamping(GradargError):
    code = "invalid_damping"


class DampingTooSmall(GradargError):
    code = "damping_too_small"


class SingularSystem(GradargError):
    code = "singular_system"


class OutOfOpenUnitInterval(GradargError):
    code = "out_of_open_unit_interval"


class WeightOnBoundary(GradargError):
    code = "weight_on_boundary"


class WeightOutOfClosedUnit(GradargError):
    code = "weight_out_of_closed_unit"


class AttackEdgePresent(GradargError):
    code = "attack_edge_present"


class NotConverged(GradargError):
    """A semantics that was expected to reach a fixed point did not.

    Carries the diagnosed outcome (oscillation, divergence, budget
    exhaustion) so callers can render the classification.
    """

    code = "not_converged"

    def __init__(self, outcome, residual=None):
        self.outcome = outcome
        self.residual = residual
        detail = f"outcome={type(outcome).__name__}"
        if residual is not None:
            detail += f", residual={residual:.3e}"
        super().__init__(f"iteration did not reach the expected fixed point ({detail})")


class UnknownSemantics(GradargError):
    code = "unknown_semantics"


class UnknownSigmoid(GradargError):
    code = "unknown_sigmoid"


# --- axiom suite ---

class DomainMismatch(GradargError):
    code = "domain_mismatch"


class UnknownCharacteristic(GradargError):
    code = "unknown_characteristic"


# --- documents and storage ---

class MalformedDocument(GradargError):
    code = "malformed_document"


class SchemaViolation(GradargError):
    """Document violates the graph schema; ``path`` points at the offender."""

    code = "schema_violation"

    def __init__(self, message: str, path: str = ""):
        super().__init__(message)
        self.path = path


class GraphNotFound(GradargError):
    code = "not_found"
