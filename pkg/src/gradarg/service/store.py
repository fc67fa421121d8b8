"""Graph store: content-addressed ids, optional file persistence.

POST ids derive from a hash of the canonical serialization, so re-posting
the same document is idempotent.  Later replacements keep the id stable
(the what-if loop edits in place).  With a persistence directory configured,
every mutation is written through to ``<id>.json`` and the store survives
restarts.  Writes are serialised per id; reads are lock-free snapshots.
"""
from __future__ import annotations

import hashlib
import threading
from collections import defaultdict
from pathlib import Path

from ..document import GraphDocument, parse_graph, serialize_graph
from ..errors import GraphNotFound


def content_id(document: GraphDocument) -> str:
    return hashlib.sha256(serialize_graph(document)).hexdigest()[:12]


class GraphStore:
    def __init__(self, directory: str | Path | None = None):
        self._documents: dict[str, GraphDocument] = {}
        self._locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
        self._registry_lock = threading.Lock()
        self._directory = Path(directory) if directory else None
        if self._directory:
            self._directory.mkdir(parents=True, exist_ok=True)
            for path in sorted(self._directory.glob("*.json")):
                self._documents[path.stem] = parse_graph(path.read_bytes())

    def _lock(self, graph_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks[graph_id]

    def _persist(self, graph_id: str, document: GraphDocument) -> None:
        if self._directory:
            (self._directory / f"{graph_id}.json").write_bytes(serialize_graph(document))

    def put(self, document: GraphDocument) -> str:
        graph_id = content_id(document)
        with self._lock(graph_id):
            self._documents[graph_id] = document
            self._persist(graph_id, document)
        return graph_id

    def get(self, graph_id: str) -> GraphDocument:
        try:
            return self._documents[graph_id]
        except KeyError:
            raise GraphNotFound(f"no graph stored under id {graph_id!r}") from None

    def replace(self, graph_id: str, document: GraphDocument) -> None:
        with self._lock(graph_id):
            if graph_id not in self._documents:
                raise GraphNotFound(f"no graph stored under id {graph_id!r}")
            self._documents[graph_id] = document
            self._persist(graph_id, document)

    def ids(self) -> list[str]:
        return sorted(self._documents)
