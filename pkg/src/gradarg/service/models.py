"""Pydantic request/response models for the what-if service."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ArgumentModel(BaseModel):
    id: str
    weight: float
    label: Optional[str] = None


class EdgeModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: str = Field(alias="from")
    to: str
    polarity: Literal["support", "attack"]


class GraphDocumentModel(BaseModel):
    version: str = "1"
    arguments: list[ArgumentModel]
    edges: list[EdgeModel]

    def to_wire(self) -> dict:
        return {
            "version": self.version,
            "arguments": [
                {"id": a.id, "weight": a.weight, **({"label": a.label} if a.label else {})}
                for a in self.arguments
            ],
            "edges": [
                {"from": e.source, "to": e.to, "polarity": e.polarity}
                for e in self.edges
            ],
        }


class DampingModel(BaseModel):
    policy: Literal["auto", "fixed"] = "auto"
    value: Optional[float] = None


class EvalParams(BaseModel):
    semantics: Literal["gorgias", "dir", "sdir", "rsig", "rdamped", "dogged", "aggregation"]
    damping: DampingModel = DampingModel()
    sigmoid: Literal["logistic", "arctan", "fraction"] = "logistic"
    tol: float = 1e-9
    max_iter: Optional[int] = None
    include_propagation: bool = False


class EvalRequest(EvalParams):
    graph: Optional[GraphDocumentModel] = None  # inline alternative to a stored id


class OscillationModel(BaseModel):
    period: int
    state_iterations: list[int]
    states: list[dict[str, float]]


class EvalResponse(BaseModel):
    semantics: str
    damping: Optional[float] = None
    outcome: Literal["converged", "oscillating", "diverging", "not_well_defined"]
    degrees: Optional[dict[str, float]] = None
    iterations: Optional[int] = None
    residual: Optional[float] = None
    oscillation: Optional[OscillationModel] = None
    growth_rate: Optional[float] = None
    reason: Optional[str] = None
    propagation: Optional[list[list[float]]] = None


class StoredGraphResponse(BaseModel):
    id: str
    graph: GraphDocumentModel


class PatchWeightsRequest(BaseModel):
    weights: dict[str, float]
    evaluate: EvalParams


class EdgePatchModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    action: Literal["add", "remove", "flip"]
    source: str = Field(alias="from")
    to: str
    polarity: Optional[Literal["support", "attack"]] = None


class PatchEdgesRequest(BaseModel):
    edit: EdgePatchModel
    evaluate: EvalParams


class WhatIfResponse(BaseModel):
    id: str
    graph: GraphDocumentModel
    evaluation: EvalResponse


class SemanticsEntry(BaseModel):
    tag: str
    name: str
    weight_range: str
    neutral: float
    convergent: str
    bounded: bool
    reverse_impact: bool
    edge_domain: str
    uses_damping: bool
    uses_sigmoid: bool


class SemanticsCatalogResponse(BaseModel):
    semantics: list[SemanticsEntry]
    additional: list[SemanticsEntry]


class ErrorBody(BaseModel):
    code: str
    message: str
    path: str = ""
