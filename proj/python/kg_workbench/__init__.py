"""Python access to the knowledge-graph workbench core.

Results come back as plain dicts and lists. Read and write calls return
``(graph_version, payload)``.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from . import _kgwb

__all__ = ["Workbench", "WorkbenchError", "canonical_query", "demo_dataset", "write_demo_data"]


class WorkbenchError(Exception):
    """A core error. ``code`` is the category name, e.g. ``"SyntaxError"``."""

    def __init__(self, code: str, message: str, position: Optional[int] = None, expected: Optional[str] = None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.position = position
        self.expected = expected


def _call(fn, *args):
    try:
        return fn(*args)
    except _kgwb.NativeError as exc:
        body = json.loads(str(exc))
        raise WorkbenchError(body["code"], body["message"], body.get("position"), body.get("expected")) from None


def _versioned(text: str) -> tuple[int, Any]:
    out = json.loads(text)
    return out["graphVersion"], out["payload"]


def _jsonl(records: Iterable[dict] | str) -> str:
    if isinstance(records, str):
        return records
    return "".join(json.dumps(r) + "\n" for r in records)


class Workbench:
    def __init__(self, data_dir: Optional[str] = None, node_cap: int = 200):
        self._wb = _call(_kgwb.Workbench, data_dir, node_cap)

    @property
    def graph_version(self) -> int:
        return self._wb.graph_version

    @staticmethod
    def operation_names() -> list[str]:
        return _kgwb.Workbench.operation_names()

    def invoke(self, op: str, **params) -> tuple[int, Any]:
        return _versioned(_call(self._wb.invoke, op, json.dumps(params)))

    def query(self, text: str) -> dict:
        return self.invoke("query", query=text)[1]

    def ingest_graph(self, nodes=(), edges=()) -> tuple[int, Any]:
        return _versioned(_call(self._wb.ingest_graph, _jsonl(nodes), _jsonl(edges)))

    def ingest_corpus(self, documents) -> tuple[int, Any]:
        return _versioned(_call(self._wb.ingest_corpus, _jsonl(documents)))

    def create_seed_session(self, entity_type: str):
        return _versioned(_call(self._wb.create_seed_session, entity_type))

    def add_seed(self, session_id: str, node_id: str):
        return _versioned(_call(self._wb.add_seed, session_id, node_id))

    def remove_seed(self, session_id: str, node_id: str):
        return _versioned(_call(self._wb.remove_seed, session_id, node_id))

    def export_seeds(self, session_id: str):
        return _versioned(_call(self._wb.export_seeds, session_id))

    def import_seeds(self, seed_file: dict):
        return _versioned(_call(self._wb.import_seeds, json.dumps(seed_file)))

    def create_verification_session(self, candidates):
        return _versioned(_call(self._wb.create_verification_session, _jsonl(candidates)))

    def set_decision(self, session_id: str, candidate_id: str, decision: str):
        return _versioned(_call(self._wb.set_decision, session_id, candidate_id, decision))

    def export_decisions(self, session_id: str):
        return _versioned(_call(self._wb.export_decisions, session_id))

    def import_decisions(self, decision_file: dict):
        return _versioned(_call(self._wb.import_decisions, json.dumps(decision_file)))

    def apply_merge(self, session_id: str):
        return _versioned(_call(self._wb.apply_merge, session_id))

    def record_state(self, op: str, params: Optional[dict] = None, view_hint: Any = None, parent: Optional[str] = None) -> dict:
        return json.loads(_call(self._wb.record_state, op, json.dumps(params or {}), json.dumps(view_hint), parent))

    def list_states(self) -> list[dict]:
        return json.loads(self._wb.list_states())

    def restore_state(self, state_id: str) -> dict:
        return json.loads(_call(self._wb.restore_state, state_id))


def canonical_query(text: str) -> str:
    return _call(_kgwb.canonical_query, text)


def demo_dataset(seed: int = 42) -> dict:
    return json.loads(_kgwb.demo_generate(seed))


def write_demo_data(directory: str, seed: int = 42, overwrite: bool = False) -> None:
    _call(_kgwb.demo_write, directory, seed, overwrite)
