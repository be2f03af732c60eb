"""Object categories: per-feature interval vector sets plus action experiences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .features import FeatureIntervalVector, FeatureVector, delta_distance

POSITIVE = "positive"
NEUTRAL = "neutral"
NEGATIVE = "negative"
REWARDS = (POSITIVE, NEUTRAL, NEGATIVE)


def opposed(a: str | None, b: str | None) -> bool:
    """True when one reward is positive and the other negative."""
    return (a == POSITIVE and b == NEGATIVE) or (a == NEGATIVE and b == POSITIVE)


@dataclass
class ObjectCategory:
    """One node of the knowledge graph.

    `features` maps each declared feature id to the interval vectors learned
    for it; `experiences` maps action ids to the single stored reward.
    Callers that mutate interval vectors or counts must call `touch()` so the
    cached per-feature similarity data gets rebuilt.
    """

    category_id: int
    features: dict[str, list[FeatureIntervalVector]]
    experiences: dict[str, str] = field(default_factory=dict)
    _sim_data: dict | None = field(default=None, repr=False, compare=False)

    def touch(self) -> None:
        self._sim_data = None

    def feature_data(self, feature_id: str) -> tuple:
        """Cached (flat bounds, occurrence probability) pairs for one feature."""
        cache = self._sim_data
        if cache is None:
            cache = self._sim_data = {}
        data = cache.get(feature_id)
        if data is None:
            vectors = self.features[feature_id]
            total = 0
            for v in vectors:
                total += v.count
            data = tuple((v.flat_bounds, v.count / total) for v in vectors)
            cache[feature_id] = data
        return data

    @classmethod
    def from_percept(
        cls, category_id: int, percept: Mapping[str, FeatureVector]
    ) -> "ObjectCategory":
        """A fresh category whose intervals are point-like around the percept."""
        return cls(
            category_id,
            {fid: [FeatureIntervalVector.degenerate(vec)] for fid, vec in percept.items()},
        )

    def total_count(self, feature_id: str) -> int:
        return sum(v.count for v in self.features[feature_id])

    def probabilities(self, feature_id: str) -> list[float]:
        """Occurrence probability of each interval vector, derived from counts."""
        total = self.total_count(feature_id)
        return [v.count / total for v in self.features[feature_id]]

    def find_fit(self, percept: Mapping[str, FeatureVector]) -> dict[str, int] | None:
        """Assignment of percept features to containing interval vectors.

        The percept fits only if every feature has at least one interval
        vector containing all its characteristic values.  Among several
        containing vectors the one closest (by interval distance to the
        percept's point-like form) wins; ties go to the lowest index.
        """
        assignment: dict[str, int] = {}
        for fid, vectors in self.features.items():
            vec = percept.get(fid)
            if vec is None:
                return None
            probe = FeatureIntervalVector.degenerate(vec)
            best_idx = -1
            best_d = float("inf")
            for idx, candidate in enumerate(vectors):
                if candidate.contains(vec):
                    d = delta_distance(candidate, probe)
                    if d < best_d:
                        best_idx, best_d = idx, d
            if best_idx < 0:
                return None
            assignment[fid] = best_idx
        return assignment
