"""Graph wire format: a versioned JSON document listing arguments and edges.

Example::

    {
      "version": "1",
      "arguments": [{"id": "mnw", "label": "optional", "weight": 8.0}, ...],
      "edges": [{"from": "mnw", "to": "lpl", "polarity": "support"}, ...]
    }

Parsing and serialising round-trip losslessly; weights keep full double
precision.  Validation errors carry the path of the offending field.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources

from .errors import MalformedDocument, SchemaViolation
from .graph import ArgGraph, build_graph

FORMAT_VERSION = "1"

POLARITY_NAMES = {1: "support", -1: "attack"}


@dataclass(frozen=True)
class DocumentArgument:
    id: str
    weight: float
    label: str | None = None


@dataclass(frozen=True)
class DocumentEdge:
    source: str
    target: str
    polarity: str  # "support" | "attack"


@dataclass(frozen=True)
class GraphDocument:
    arguments: tuple[DocumentArgument, ...]
    edges: tuple[DocumentEdge, ...]
    version: str = FORMAT_VERSION

    def to_graph(self) -> ArgGraph:
        return build_graph(
            [a.id for a in self.arguments],
            [(e.source, e.target, e.polarity) for e in self.edges],
            {a.id: a.weight for a in self.arguments},
        )

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "arguments": [
                {"id": a.id, "weight": a.weight, **({"label": a.label} if a.label else {})}
                for a in self.arguments
            ],
            "edges": [
                {"from": e.source, "to": e.target, "polarity": e.polarity}
                for e in self.edges
            ],
        }


def graph_to_document(graph: ArgGraph, labels: dict[str, str] | None = None) -> GraphDocument:
    labels = labels or {}
    arguments = tuple(
        DocumentArgument(a, float(graph.weights[i]), labels.get(a))
        for i, a in enumerate(graph.arguments)
    )
    edges = []
    for t in range(graph.n):
        for s in range(graph.n):
            polarity = int(graph.incidence[t, s])
            if polarity:
                edges.append(DocumentEdge(graph.arguments[s], graph.arguments[t], POLARITY_NAMES[polarity]))
    return GraphDocument(arguments, tuple(edges))


def _expect(condition: bool, message: str, path: str):
    if not condition:
        raise SchemaViolation(message, path)


def document_from_dict(data: dict) -> GraphDocument:
    _expect(isinstance(data, dict), "document must be a JSON object", "")
    version = data.get("version")
    _expect(isinstance(version, str) and version == FORMAT_VERSION,
            f"unsupported or missing version (expected {FORMAT_VERSION!r})", "version")
    raw_args = data.get("arguments")
    _expect(isinstance(raw_args, list), "arguments must be a list", "arguments")
    arguments = []
    for k, item in enumerate(raw_args):
        path = f"arguments[{k}]"
        _expect(isinstance(item, dict), "argument must be an object", path)
        _expect(isinstance(item.get("id"), str) and item["id"], "argument id must be a non-empty string", f"{path}.id")
        weight = item.get("weight")
        _expect(isinstance(weight, (int, float)) and not isinstance(weight, bool)
                and math.isfinite(weight), "weight must be a finite number", f"{path}.weight")
        label = item.get("label")
        _expect(label is None or isinstance(label, str), "label must be a string", f"{path}.label")
        unknown = set(item) - {"id", "weight", "label"}
        _expect(not unknown, f"unknown fields {sorted(unknown)}", path)
        arguments.append(DocumentArgument(item["id"], float(weight), label))
    raw_edges = data.get("edges")
    _expect(isinstance(raw_edges, list), "edges must be a list", "edges")
    edges = []
    for k, item in enumerate(raw_edges):
        path = f"edges[{k}]"
        _expect(isinstance(item, dict), "edge must be an object", path)
        for key in ("from", "to"):
            _expect(isinstance(item.get(key), str) and item[key],
                    f"edge {key!r} must be a non-empty string", f"{path}.{key}")
        _expect(item.get("polarity") in ("support", "attack"),
                "polarity must be 'support' or 'attack'", f"{path}.polarity")
        unknown = set(item) - {"from", "to", "polarity"}
        _expect(not unknown, f"unknown fields {sorted(unknown)}", path)
        edges.append(DocumentEdge(item["from"], item["to"], item["polarity"]))
    unknown = set(data) - {"version", "arguments", "edges"}
    _expect(not unknown, f"unknown fields {sorted(unknown)}", "")
    doc = GraphDocument(tuple(arguments), tuple(edges))
    doc.to_graph()  # structural validation: ids, endpoints, duplicates
    return doc


def parse_graph(payload: bytes | str) -> GraphDocument:
    if isinstance(payload, bytes):
        try:
            payload = payload.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"document is not valid UTF-8: {exc}") from None
    try:
        data = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"document is not valid JSON: {exc}") from None
    return document_from_dict(data)


def serialize_graph(document: GraphDocument) -> bytes:
    return json.dumps(document.to_dict(), indent=2).encode("utf-8") + b"\n"


def fixture_names() -> list[str]:
    root = resources.files(__package__) / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> GraphDocument:
    root = resources.files(__package__) / "fixtures"
    candidate = root / f"{name}.json"
    if not candidate.is_file():
        raise MalformedDocument(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return parse_graph(candidate.read_bytes())
