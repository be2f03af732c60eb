"""Estimator-style wrapper around the knowledge graph.

The interaction loop (observe / select an action / record the reward) does
not map onto fit/transform, so those stay first-class methods; the wrapper
adds the scikit-learn parameter surface (``get_params``/``set_params``/
``clone``) used by the sweep harness, plus a read-only ``predict`` that
classifies percepts without touching the graph.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from sklearn.base import BaseEstimator

from .knowledge import (
    FeatureSpec,
    FeatureVector,
    KnowledgeGraph,
    ObserveResult,
    Parameters,
    RewardResult,
)


class CategoryLearner(BaseEstimator):
    """Online category learner over a declared feature schema and action set.

    Parameters mirror the knowledge-graph behavior parameters; the graph is
    created lazily on first use so cloned learners start fresh.
    """

    def __init__(
        self,
        feature_schema: Sequence[FeatureSpec] = (),
        action_set: Iterable[str] = (),
        rho_ra: float = 0.0,
        delta_aw: float = 0.1,
        theta_mc: float = 1.0,
        theta_mf: float = 0.3,
        seed: int = 0,
    ) -> None:
        self.feature_schema = feature_schema
        self.action_set = action_set
        self.rho_ra = rho_ra
        self.delta_aw = delta_aw
        self.theta_mc = theta_mc
        self.theta_mf = theta_mf
        self.seed = seed

    def start(self) -> "CategoryLearner":
        """Create the underlying graph; called implicitly by the first interaction."""
        self.graph_ = KnowledgeGraph(
            tuple(self.feature_schema),
            tuple(self.action_set),
            params=Parameters(
                rho_ra=self.rho_ra,
                delta_aw=self.delta_aw,
                theta_mc=self.theta_mc,
                theta_mf=self.theta_mf,
            ),
            seed=self.seed,
        )
        return self

    def _graph(self) -> KnowledgeGraph:
        if not hasattr(self, "graph_"):
            self.start()
        return self.graph_

    def observe(self, percept: Mapping[str, FeatureVector]) -> ObserveResult:
        return self._graph().observe(percept)

    def select_action(self, category_id: int) -> str:
        return self._graph().select_action(category_id)

    def record_reward(
        self,
        category_id: int,
        percept: Mapping[str, FeatureVector],
        action: str,
        reward: str,
    ) -> RewardResult:
        return self._graph().record_reward(category_id, percept, action, reward)

    def predict(self, percepts: Iterable[Mapping[str, FeatureVector]]) -> list[int | None]:
        """Classify percepts by fit without mutating the graph; None = no fit."""
        graph = self._graph()
        return [graph.classify(p) for p in percepts]
