"""HTTP session API driving the interactive web UI.

One in-memory session per uploaded hypergraph. Changing the structural
parameters recomputes the graph and barcode (and clears bar expansions, whose
ids are barcode-relative); threshold and expansion updates only recompute the
partition. Requests within one session are serialized by a per-session lock;
sessions expire after an idle timeout.
"""

from __future__ import annotations

import threading
import time
import uuid

from fastapi import Body, FastAPI, HTTPException
from fastapi.responses import JSONResponse, Response

from .errors import HypersimpError, ParameterError
from .formats import (
    barcode_to_doc,
    correspondence_to_doc,
    dendrogram_to_doc,
    hypergraph_from_doc,
    hypergraph_to_doc,
    layout_to_doc,
    metrics_to_doc,
    partition_to_doc,
    serialize_result,
)
from .graphs import SingletonMode, WeightScheme
from .layout import DEFAULT_HULL_MARGIN, Layout, bipartite_layout, venn_hulls
from .metrics import metrics_report
from .persistence import persistence_graph
from .pipeline import (
    PreparedSimplification,
    Side,
    SimplificationParams,
    SimplificationResult,
    finish,
    prepare,
)

IDLE_SECONDS = 3600.0


class Session:
    def __init__(self, session_id: str, prepared: PreparedSimplification):
        self.id = session_id
        self.prepared = prepared
        self.epsilon: float = 0.0
        self.expanded: set[int] = set()
        self.result: SimplificationResult = finish(prepared, 0.0, frozenset())
        self.layouts: dict[tuple[str, int], tuple[Layout, list]] = {}
        self.lock = threading.Lock()
        self.last_access = time.monotonic()

    def refresh(self) -> SimplificationResult:
        self.result = finish(self.prepared, self.epsilon, frozenset(self.expanded))
        return self.result


class SessionStore:
    def __init__(self, idle_seconds: float = IDLE_SECONDS):
        self.idle_seconds = idle_seconds
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, prepared: PreparedSimplification) -> Session:
        session = Session(uuid.uuid4().hex, prepared)
        with self._lock:
            self._prune()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._prune()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_access = time.monotonic()
            return session

    def _prune(self) -> None:
        cutoff = time.monotonic() - self.idle_seconds
        stale = [k for k, s in self._sessions.items() if s.last_access < cutoff]
        for k in stale:
            del self._sessions[k]


def _params_from_body(body: dict) -> SimplificationParams:
    try:
        return SimplificationParams(
            side=Side.VERTEX if body.get("side", "edge") == "vertex" else Side.HYPEREDGE,
            s=int(body.get("s", 1)),
            scheme=WeightScheme(body.get("weight", "jaccard")),
            pre_collapse_vertices=bool(body.get("collapse_vertices", False)),
            pre_collapse_edges=bool(body.get("collapse_edges", False)),
            singleton_mode=SingletonMode(body.get("singletons", "greyout")),
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _partition_payload(result: SimplificationResult) -> dict:
    return {
        "partition": partition_to_doc(result.partition),
        "simplified_hypergraph": hypergraph_to_doc(result.simplified_hypergraph),
        "correspondence": correspondence_to_doc(result.correspondence),
    }


def create_app(static_dir: str | None = None, idle_seconds: float = IDLE_SECONDS) -> FastAPI:
    app = FastAPI(title="hypersimp session service")
    store = SessionStore(idle_seconds)
    app.state.store = store

    @app.post("/sessions")
    def create_session(body: dict = Body(...)) -> JSONResponse:
        try:
            h = hypergraph_from_doc(body)
            prepared = prepare(h, SimplificationParams())
        except HypersimpError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        session = store.create(prepared)
        return JSONResponse({"session_id": session.id}, status_code=201)

    @app.put("/sessions/{session_id}/params")
    def set_params(session_id: str, body: dict = Body(...)) -> dict:
        session = store.get(session_id)
        params = _params_from_body(body)
        with session.lock:
            try:
                session.prepared = prepare(session.prepared.original, params)
            except HypersimpError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from exc
            cleared = bool(session.expanded)
            session.expanded = set()
            session.layouts = {
                key: value for key, value in session.layouts.items()
                if key[0] == "original"
            }
            result = session.refresh()
            return {
                "barcode": barcode_to_doc(result.barcode),
                "dendrogram": dendrogram_to_doc(result.dendrogram),
                "persistence_graph": [
                    [float(eps), count]
                    for eps, count in persistence_graph(result.dendrogram)
                ],
                "cleared": cleared,
            }

    @app.put("/sessions/{session_id}/threshold")
    def set_threshold(session_id: str, body: dict = Body(...)) -> dict:
        session = store.get(session_id)
        if "epsilon" not in body:
            raise HTTPException(status_code=400, detail="missing 'epsilon'")
        epsilon = float(body["epsilon"])
        if epsilon < 0:
            raise HTTPException(status_code=400, detail="epsilon must be >= 0")
        with session.lock:
            session.epsilon = epsilon
            session.layouts = {
                key: value for key, value in session.layouts.items()
                if key[0] == "original"
            }
            return _partition_payload(session.refresh())

    @app.post("/sessions/{session_id}/expand")
    def expand(session_id: str, body: dict = Body(...)) -> dict:
        session = store.get(session_id)
        if "bar_id" not in body:
            raise HTTPException(status_code=400, detail="missing 'bar_id'")
        bar_id = int(body["bar_id"])
        with session.lock:
            bars = {b.id: b for b in session.result.barcode.finite_bars}
            bar = bars.get(bar_id)
            if bar is None or bar.length > session.epsilon or bar_id in session.expanded:
                raise HTTPException(
                    status_code=409,
                    detail=f"bar {bar_id} is not expandable under the current parameters",
                )
            session.expanded.add(bar_id)
            session.layouts = {
                key: value for key, value in session.layouts.items()
                if key[0] == "original"
            }
            return _partition_payload(session.refresh())

    @app.delete("/sessions/{session_id}/expand/{bar_id}")
    def unexpand(session_id: str, bar_id: int) -> dict:
        session = store.get(session_id)
        with session.lock:
            if bar_id not in session.expanded:
                raise HTTPException(
                    status_code=409, detail=f"bar {bar_id} is not expanded"
                )
            session.expanded.discard(bar_id)
            session.layouts = {
                key: value for key, value in session.layouts.items()
                if key[0] == "original"
            }
            return _partition_payload(session.refresh())

    @app.get("/sessions/{session_id}/layout")
    def get_layout(session_id: str, view: str = "original", seed: int = 42) -> dict:
        if view not in ("original", "simplified"):
            raise HTTPException(status_code=400, detail="view must be original|simplified")
        session = store.get(session_id)
        with session.lock:
            key = (view, seed)
            if key not in session.layouts:
                h = (
                    session.result.original
                    if view == "original"
                    else session.result.simplified_hypergraph
                )
                lay = bipartite_layout(h, seed=seed)
                hulls = venn_hulls(h, lay, DEFAULT_HULL_MARGIN)
                session.layouts[key] = (lay, hulls)
            lay, hulls = session.layouts[key]
            return {"view": view, "layout": layout_to_doc(lay, hulls)}

    @app.get("/sessions/{session_id}/metrics")
    def get_metrics(session_id: str, seed: int = 42) -> dict:
        session = store.get(session_id)
        with session.lock:
            reports = {}
            for name, h in (
                ("before", session.result.original),
                ("after", session.result.simplified_hypergraph),
            ):
                lay = bipartite_layout(h, seed=seed)
                hulls = venn_hulls(h, lay, DEFAULT_HULL_MARGIN)
                reports[name] = metrics_to_doc(metrics_report(h, lay, hulls))
            return reports

    @app.get("/sessions/{session_id}/class/{simplified_id}")
    def get_class(session_id: str, simplified_id: int) -> dict:
        from .pipeline import class_members

        session = store.get(session_id)
        with session.lock:
            result = session.result
            try:
                members = class_members(result, simplified_id)
            except ParameterError as exc:
                raise HTTPException(status_code=404, detail=str(exc)) from exc
            if result.params.side is Side.VERTEX:
                labels = result.original.vertex_labels
                super_label = result.simplified_hypergraph.vertex_labels[simplified_id]
            else:
                labels = result.original.edge_labels
                super_label = result.simplified_hypergraph.edge_labels[simplified_id]
            return {
                "simplified_id": simplified_id,
                "label": super_label,
                "members": [{"id": m, "label": labels[m]} for m in members],
            }

    @app.get("/sessions/{session_id}/snapshot")
    def snapshot(session_id: str) -> Response:
        session = store.get(session_id)
        with session.lock:
            return Response(
                content=serialize_result(session.result),
                media_type="application/json",
            )

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
