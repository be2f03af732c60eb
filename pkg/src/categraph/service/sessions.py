"""In-memory teaching sessions: a knowledge graph plus the strict
present-then-reward interaction state."""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Mapping

from ..knowledge import (
    FeatureSpec,
    FeatureVector,
    KnowledgeGraph,
    Parameters,
)
from ..harness.events import EventRecord, make_event


class SessionError(Exception):
    def __init__(self, code: str, message: str, status: int):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


@dataclass
class PendingInteraction:
    percept: dict[str, FeatureVector]
    category_id: int
    chosen_action: str
    created: bool


@dataclass
class Session:
    session_id: str
    graph: KnowledgeGraph
    pending: PendingInteraction | None = None
    events: list[EventRecord] = field(default_factory=list)
    steps: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)

    def present(self, percept: Mapping[str, FeatureVector]) -> PendingInteraction:
        """Observe the percept and choose an action; the interaction stays
        pending until a reward arrives."""
        with self.lock:
            if self.pending is not None:
                raise SessionError(
                    "pending_interaction",
                    "a presented object is awaiting its reward",
                    409,
                )
            observed = self.graph.observe(percept)
            action = self.graph.select_action(observed.category_id)
            self.pending = PendingInteraction(
                percept=dict(percept),
                category_id=observed.category_id,
                chosen_action=action,
                created=observed.created,
            )
            return self.pending

    def reward(self, reward: str) -> tuple[EventRecord, str]:
        """Apply the reward to the pending interaction and clear it; returns
        the logged event together with the reward-processing outcome."""
        with self.lock:
            if self.pending is None:
                raise SessionError(
                    "no_pending_interaction",
                    "no presented object is awaiting a reward",
                    409,
                )
            pending = self.pending
            result = self.graph.record_reward(
                pending.category_id, pending.percept, pending.chosen_action, reward
            )
            self.steps += 1
            event = make_event(
                self.steps,
                str(self.steps),
                pending.category_id,
                pending.chosen_action,
                reward,
                result,
                self.graph,
            )
            self.events.append(event)
            self.pending = None
            return event, result.outcome


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(
        self,
        schema: tuple[FeatureSpec, ...],
        action_set: tuple[str, ...],
        params: Parameters,
        seed: int,
    ) -> Session:
        session = Session(
            session_id=uuid.uuid4().hex,
            graph=KnowledgeGraph(schema, action_set, params=params, seed=seed),
        )
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise SessionError("unknown_session", f"no session {session_id!r}", 404)
        return session
