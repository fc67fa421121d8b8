"""FastAPI application: graph storage, evaluation, and what-if editing.

Non-convergence is a successful response with the classification and
witness states in the body; only domain violations and malformed inputs
produce error statuses.  All degree numbers come straight from the library,
so clients never recompute anything.
"""
from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import semantics as sem
from ..direct import Damping, fixed_point_residual, propagation_matrix
from ..document import DocumentArgument, DocumentEdge, GraphDocument, document_from_dict
from ..errors import (
    GradargError,
    GraphNotFound,
    MalformedDocument,
    NotConverged,
    SchemaViolation,
)
from ..graph import ArgGraph, circular_indegree
from ..outcomes import Converged, Diverging, NotWellDefined, Oscillating
from .models import (
    ErrorBody,
    EvalParams,
    EvalRequest,
    EvalResponse,
    GraphDocumentModel,
    OscillationModel,
    PatchEdgesRequest,
    PatchWeightsRequest,
    SemanticsCatalogResponse,
    SemanticsEntry,
    StoredGraphResponse,
    WhatIfResponse,
)
from .store import GraphStore

ENV_STORE_DIR = "GRADARG_STORE_DIR"
ENV_UI_DIR = "GRADARG_UI_DIR"

OVERVIEW_TAGS = ("dir", "sdir", "rsig", "rdamped", "dogged")
EXTRA_TAGS = ("gorgias", "aggregation")


def _entry(tag: str) -> SemanticsEntry:
    info = sem.info(tag)
    return SemanticsEntry(
        tag=info.tag,
        name=info.name,
        weight_range={"real": "R", "open-unit": "(0,1)", "closed-unit": "[0,1]"}[info.weight_range],
        neutral=info.neutral,
        convergent=info.convergent,
        bounded=info.bounded,
        reverse_impact=info.reverse_impact,
        edge_domain=info.edge_domain,
        uses_damping=info.uses_damping,
        uses_sigmoid=info.uses_sigmoid,
    )


def _resolve_damping(params: EvalParams):
    if params.damping.policy == "auto":
        return "auto"
    if params.damping.value is None:
        raise SchemaViolation("fixed damping needs a value", "damping.value")
    return params.damping.value


def _evaluate(graph: ArgGraph, params: EvalParams) -> EvalResponse:
    outcome = sem.evaluate(
        graph,
        params.semantics,
        damping=_resolve_damping(params),
        sigmoid_kind=params.sigmoid,
        tol=params.tol,
        max_iter=params.max_iter,
    )
    ids = graph.arguments
    if isinstance(outcome, Converged):
        result = outcome.result
        residual = None
        if params.semantics == "dir":
            residual = fixed_point_residual(graph, result.damping, result)
        propagation = None
        if params.include_propagation:
            if params.semantics != "dir":
                raise SchemaViolation(
                    "the propagation matrix is defined for the 'dir' semantics",
                    "include_propagation")
            pr = propagation_matrix(
                graph, Damping(result.damping, "fixed"), check_damping=False)
            propagation = [list(map(float, row)) for row in pr.entries]
        return EvalResponse(
            semantics=result.semantics,
            damping=result.damping,
            outcome="converged",
            degrees={a: float(v) for a, v in zip(ids, result.degrees)},
            iterations=outcome.iterations,
            residual=residual,
            propagation=propagation,
        )
    if isinstance(outcome, Oscillating):
        return EvalResponse(
            semantics=outcome.semantics,
            damping=outcome.damping,
            outcome="oscillating",
            oscillation=OscillationModel(
                period=outcome.period,
                state_iterations=list(outcome.state_iterations),
                states=[{a: float(v) for a, v in zip(ids, s)} for s in outcome.states],
            ),
            iterations=outcome.state_iterations[-1],
        )
    if isinstance(outcome, Diverging):
        return EvalResponse(
            semantics=outcome.semantics,
            damping=outcome.damping,
            outcome="diverging",
            growth_rate=outcome.growth_rate,
            iterations=outcome.iterations,
        )
    assert isinstance(outcome, NotWellDefined)
    return EvalResponse(
        semantics=outcome.semantics,
        damping=outcome.damping,
        outcome="not_well_defined",
        reason=outcome.reason,
        iterations=outcome.iterations,
    )


def _model_to_document(model: GraphDocumentModel) -> GraphDocument:
    return document_from_dict(model.to_wire())


def _document_to_model(document: GraphDocument) -> GraphDocumentModel:
    return GraphDocumentModel.model_validate(document.to_dict())


def create_app(store_dir: str | Path | None = None, ui_dir: str | Path | None = None) -> FastAPI:
    store_dir = store_dir if store_dir is not None else os.environ.get(ENV_STORE_DIR) or None
    ui_dir = ui_dir if ui_dir is not None else os.environ.get(ENV_UI_DIR) or None
    app = FastAPI(title="gradarg", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    store = GraphStore(store_dir)
    app.state.store = store

    @app.exception_handler(GradargError)
    async def gradarg_error(request: Request, exc: GradargError):
        status = 404 if isinstance(exc, GraphNotFound) else 422
        body = ErrorBody(code=exc.code, message=str(exc),
                         path=getattr(exc, "path", "") or "")
        return JSONResponse(status_code=status, content=body.model_dump())

    @app.get("/semantics", response_model=SemanticsCatalogResponse)
    def semantics_catalog():
        return SemanticsCatalogResponse(
            semantics=[_entry(t) for t in OVERVIEW_TAGS],
            additional=[_entry(t) for t in EXTRA_TAGS],
        )

    @app.post("/graphs", response_model=StoredGraphResponse, status_code=201)
    def post_graph(model: GraphDocumentModel):
        document = _model_to_document(model)
        graph_id = store.put(document)
        return StoredGraphResponse(id=graph_id, graph=_document_to_model(document))

    @app.get("/graphs", response_model=list[str])
    def list_graphs():
        return store.ids()

    @app.get("/graphs/{graph_id}", response_model=StoredGraphResponse)
    def get_graph(graph_id: str):
        return StoredGraphResponse(id=graph_id, graph=_document_to_model(store.get(graph_id)))

    @app.put("/graphs/{graph_id}", response_model=StoredGraphResponse)
    def put_graph(graph_id: str, model: GraphDocumentModel):
        document = _model_to_document(model)
        store.replace(graph_id, document)
        return StoredGraphResponse(id=graph_id, graph=_document_to_model(document))

    @app.post("/graphs/{graph_id}/evaluate", response_model=EvalResponse,
              response_model_exclude_none=True)
    def evaluate_stored(graph_id: str, params: EvalParams):
        document = store.get(graph_id)
        return _evaluate(document.to_graph(), params)

    @app.post("/evaluate", response_model=EvalResponse, response_model_exclude_none=True)
    def evaluate_inline(request: EvalRequest):
        if request.graph is None:
            raise SchemaViolation("inline evaluation needs a graph document", "graph")
        document = _model_to_document(request.graph)
        return _evaluate(document.to_graph(), request)

    @app.patch("/graphs/{graph_id}/weights", response_model=WhatIfResponse,
               response_model_exclude_none=True)
    def patch_weights(graph_id: str, patch: PatchWeightsRequest):
        document = store.get(graph_id)
        known = {a.id for a in document.arguments}
        unknown = set(patch.weights) - known
        if unknown:
            raise SchemaViolation(f"unknown argument ids {sorted(unknown)}", "weights")
        arguments = tuple(
            DocumentArgument(a.id, float(patch.weights.get(a.id, a.weight)), a.label)
            for a in document.arguments
        )
        updated = GraphDocument(arguments, document.edges, document.version)
        evaluation = _evaluate(updated.to_graph(), patch.evaluate)  # evaluate before committing
        store.replace(graph_id, updated)
        return WhatIfResponse(
            id=graph_id, graph=_document_to_model(updated), evaluation=evaluation)

    @app.patch("/graphs/{graph_id}/edges", response_model=WhatIfResponse,
               response_model_exclude_none=True)
    def patch_edges(graph_id: str, patch: PatchEdgesRequest):
        document = store.get(graph_id)
        edit = patch.edit
        edges = list(document.edges)
        existing = {(e.source, e.target): k for k, e in enumerate(edges)}
        key = (edit.source, edit.to)
        if edit.action == "add":
            if key in existing:
                raise SchemaViolation("edge already present; use flip or remove", "edit")
            if edit.polarity is None:
                raise SchemaViolation("adding an edge needs a polarity", "edit.polarity")
            edges.append(DocumentEdge(edit.source, edit.to, edit.polarity))
        elif edit.action == "remove":
            if key not in existing:
                raise SchemaViolation("no such edge", "edit")
            edges.pop(existing[key])
        else:  # flip
            if key not in existing:
                raise SchemaViolation("no such edge", "edit")
            old = edges[existing[key]]
            new_polarity = edit.polarity or ("attack" if old.polarity == "support" else "support")
            edges[existing[key]] = DocumentEdge(old.source, old.target, new_polarity)
        updated = GraphDocument(document.arguments, tuple(edges), document.version)
        updated.to_graph()  # validates endpoints and duplicates
        evaluation = _evaluate(updated.to_graph(), patch.evaluate)
        store.replace(graph_id, updated)
        return WhatIfResponse(
            id=graph_id, graph=_document_to_model(updated), evaluation=evaluation)

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
