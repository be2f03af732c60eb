"""HTTP+JSON teaching service.

POST /sessions                     create a session
POST /sessions/{id}/present        present a percept, get the chosen action
POST /sessions/{id}/reward         reward the pending interaction
GET  /sessions/{id}                inspect graph, similarities, weights, history
GET  /sessions/{id}/events?since=N line-delimited event records
POST /sessions/{id}/save           write the graph document to a path
POST /sessions/{id}/load           replace the graph from a saved document

Error bodies are {"code": ..., "message": ...}.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..knowledge import (
    ConfigurationError,
    DegenerateInputError,
    FeatureSpec,
    Parameters,
    ParseError,
    REWARDS,
    document_to_graph,
    graph_to_document,
    normalize_percept,
)
from ..harness.events import format_event
from .sessions import Session, SessionError, SessionStore


class FeatureSpecPayload(BaseModel):
    id: str
    characteristics: list[str] = Field(min_length=1)


class CreateSessionPayload(BaseModel):
    featureSchema: list[FeatureSpecPayload] = Field(min_length=1)
    actionSet: list[str] = Field(min_length=1)
    parameters: dict[str, float] = Field(default_factory=dict)
    seed: int = 0


class PresentPayload(BaseModel):
    features: dict[str, list[float]]


class RewardPayload(BaseModel):
    reward: str


class PathPayload(BaseModel):
    path: str


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _similarity_entries(session: Session) -> list[dict[str, Any]]:
    return [
        {"a": a, "b": b, "sigma": sigma}
        for (a, b), sigma in sorted(session.graph.similarities().items())
    ]


def _weights(session: Session) -> dict[str, float]:
    out = {fid: session.graph.weights.features[fid] for fid in session.graph.feature_ids}
    out["experience"] = session.graph.weights.experience
    return out


def _event_body(event) -> dict[str, Any]:
    return {
        "step": event.step,
        "perceptId": event.percept_id,
        "categoryId": event.category_id,
        "action": event.action,
        "reward": event.reward,
        "merges": [list(m) for m in event.merges],
        "splits": [list(s) for s in event.splits],
        "weightsAfter": event.weights_after,
    }


def create_app(frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="categraph teaching service")
    store = SessionStore()

    @app.exception_handler(SessionError)
    async def _session_error(_: Request, exc: SessionError):
        return _error(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_: Request, exc: RequestValidationError):
        return _error(422, "validation_error", str(exc.errors()[:3]))

    @app.post("/sessions", status_code=201)
    def create_session(payload: CreateSessionPayload):
        try:
            params = Parameters(
                rho_ra=payload.parameters.get("rhoRa", 0.0),
                delta_aw=payload.parameters.get("deltaAw", 0.1),
                theta_mc=payload.parameters.get("thetaMc", 1.0),
                theta_mf=payload.parameters.get("thetaMf", 0.3),
            )
            schema = tuple(
                FeatureSpec(entry.id, tuple(entry.characteristics))
                for entry in payload.featureSchema
            )
            session = store.create(schema, tuple(payload.actionSet), params, payload.seed)
        except (ConfigurationError, ValueError) as exc:
            raise SessionError("invalid_session_config", str(exc), 400) from exc
        return {"sessionId": session.session_id}

    @app.post("/sessions/{session_id}/present")
    def present(session_id: str, payload: PresentPayload):
        session = store.get(session_id)
        expected = set(session.graph.feature_ids)
        if set(payload.features) != expected:
            raise SessionError(
                "invalid_percept",
                f"percept features {sorted(payload.features)} != declared {sorted(expected)}",
                400,
            )
        try:
            percept = {
                spec.feature_id: normalize_percept(
                    spec.feature_id,
                    payload.features[spec.feature_id],
                    arity=spec.arity,
                )
                for spec in session.graph.schema
            }
        except (DegenerateInputError, ValueError) as exc:
            raise SessionError("invalid_percept", str(exc), 400) from exc
        pending = session.present(percept)
        return {
            "categoryId": pending.category_id,
            "isNew": pending.created,
            "chosenAction": pending.chosen_action,
            "similaritiesSnapshot": _similarity_entries(session),
        }

    @app.post("/sessions/{session_id}/reward")
    def reward(session_id: str, payload: RewardPayload):
        session = store.get(session_id)
        if payload.reward not in REWARDS:
            raise SessionError(
                "invalid_reward", f"reward must be one of {list(REWARDS)}", 400
            )
        event, outcome = session.reward(payload.reward)
        return {
            "outcome": outcome,
            "merges": [list(m) for m in event.merges],
            "splits": [list(s) for s in event.splits],
            "weightsAfter": event.weights_after,
        }

    @app.get("/sessions/{session_id}")
    def inspect(session_id: str):
        session = store.get(session_id)
        return {
            "graph": graph_to_document(session.graph),
            "similarities": _similarity_entries(session),
            "weights": _weights(session),
            "events": [_event_body(e) for e in session.events],
            "pendingInteraction": (
                None
                if session.pending is None
                else {
                    "categoryId": session.pending.category_id,
                    "chosenAction": session.pending.chosen_action,
                }
            ),
        }

    @app.get("/sessions/{session_id}/events")
    def events(session_id: str, since: int = 0):
        session = store.get(session_id)
        lines = [format_event(e) for e in session.events[since:]]
        return PlainTextResponse("".join(line + "\n" for line in lines))

    @app.post("/sessions/{session_id}/save")
    def save(session_id: str, payload: PathPayload):
        session = store.get(session_id)
        with session.lock:
            Path(payload.path).write_text(
                json.dumps(graph_to_document(session.graph), indent=2)
            )
        return {"saved": payload.path}

    @app.post("/sessions/{session_id}/load")
    def load(session_id: str, payload: PathPayload):
        session = store.get(session_id)
        with session.lock:
            if session.pending is not None:
                raise SessionError(
                    "pending_interaction",
                    "reward the pending interaction before loading",
                    409,
                )
            try:
                doc = json.loads(Path(payload.path).read_text())
                session.graph = document_to_graph(doc)
            except FileNotFoundError as exc:
                raise SessionError("unknown_path", str(exc), 404) from exc
            except ParseError as exc:
                raise SessionError("malformed_document", str(exc), 400) from exc
        return {"loaded": payload.path}

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="ui")

    return app
