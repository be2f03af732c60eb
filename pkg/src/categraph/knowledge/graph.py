"""The incremental knowledge graph.

Holds all object categories, the adaptive attribute weights, a complete
cache of pairwise category similarities, and the behavior parameters.  All
mutating operations are serialized per instance (single writer); separate
instances are fully independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .categories import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    REWARDS,
    ObjectCategory,
    opposed,
)
from .features import (
    FeatureIntervalVector,
    FeatureSpec,
    FeatureVector,
    fold_interval_vectors,
)
from .similarity import attribute_similarities, feature_similarity

CASE_MERGED = "merged"
CASE_SPLIT = "split"
CASE_CONTRADICTION = "contradictingFirstExperience"
WEIGHT_CASES = (CASE_MERGED, CASE_SPLIT, CASE_CONTRADICTION)


class ConfigurationError(ValueError):
    """Invalid parameters, schema, or action set."""


@dataclass(frozen=True)
class Parameters:
    """Behavior parameters of a knowledge graph.

    rho_ra: probability of exploring with a uniformly random action instead
        of the experience-based selection scheme.
    delta_aw: step by which attribute weights shift on merge/split events.
    theta_mc: similarity threshold at or above which categories merge.
    theta_mf: interval distance threshold at or below which two interval
        vectors of the same feature fold into one during a merge.
    """

    rho_ra: float = 0.0
    delta_aw: float = 0.1
    theta_mc: float = 1.0
    theta_mf: float = 0.3

    def validate(self) -> None:
        if not 0.0 <= self.rho_ra <= 1.0:
            raise ConfigurationError(f"rho_ra must lie in [0, 1], got {self.rho_ra}")
        if self.delta_aw < 0.0:
            raise ConfigurationError(f"delta_aw must be nonnegative, got {self.delta_aw}")
        if not 0.0 <= self.theta_mf <= 2.0:
            raise ConfigurationError(f"theta_mf must lie in [0, 2], got {self.theta_mf}")


@dataclass
class AttributeWeights:
    """Per-attribute weights with a conserved total of (feature count + 1)."""

    features: dict[str, float]
    experience: float = 1.0

    @classmethod
    def initial(cls, schema: Sequence[FeatureSpec]) -> "AttributeWeights":
        return cls({spec.feature_id: 1.0 for spec in schema}, 1.0)

    def total(self) -> float:
        return sum(self.features.values()) + self.experience

    def vector(self, schema: Sequence[FeatureSpec]) -> list[float]:
        return [self.features[spec.feature_id] for spec in schema] + [self.experience]


@dataclass(frozen=True)
class ObserveResult:
    category_id: int
    created: bool


@dataclass(frozen=True)
class MergeEvent:
    into: int
    merged: tuple[int, int]
    similarity: float


@dataclass(frozen=True)
class RewardResult:
    outcome: str  # "updated" | "unchanged" | "split"
    split_category_id: int | None
    merges: tuple[MergeEvent, ...]


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class KnowledgeGraph:
    """Single-writer store of object categories with derived similarities."""

    def __init__(
        self,
        schema: Sequence[FeatureSpec],
        action_set: Iterable[str],
        params: Parameters | None = None,
        seed: int = 0,
        weights: AttributeWeights | None = None,
    ) -> None:
        self.schema: tuple[FeatureSpec, ...] = tuple(schema)
        if not self.schema:
            raise ConfigurationError("a graph needs at least one declared feature")
        if len({s.feature_id for s in self.schema}) != len(self.schema):
            raise ConfigurationError("duplicate feature ids in schema")
        self.action_set: tuple[str, ...] = tuple(sorted(set(action_set)))
        self.params = params or Parameters()
        self.params.validate()
        self.weights = weights or AttributeWeights.initial(self.schema)
        self.seed = seed
        self.rng = random.Random(seed)
        self.categories: dict[int, ObjectCategory] = {}
        self._next_id = 1
        # per-attribute similarities and the derived weighted totals, one
        # entry per unordered category pair
        self._attr_sims: dict[tuple[int, int], tuple[float, ...]] = {}
        self._sigma: dict[tuple[int, int], float] = {}

    # ------------------------------------------------------------------
    # queries

    @property
    def feature_ids(self) -> tuple[str, ...]:
        return tuple(spec.feature_id for spec in self.schema)

    def similarity(self, a: int, b: int) -> float:
        return self._sigma[_pair(a, b)]

    def similarities(self) -> dict[tuple[int, int], float]:
        """Complete symmetric view over all unordered category pairs."""
        return dict(self._sigma)

    def pair_attribute_similarities(self, a: int, b: int) -> tuple[float, ...]:
        return self._attr_sims[_pair(a, b)]

    def classify(self, percept: Mapping[str, FeatureVector]) -> int | None:
        """Id of the first fitting category in stable id order, without mutation."""
        self._check_percept(percept)
        for cid in sorted(self.categories, reverse=True):
            if self.categories[cid].find_fit(percept) is not None:
                return cid
        return None

    def fitting_categories(self, percept: Mapping[str, FeatureVector]) -> list[int]:
        self._check_percept(percept)
        return [
            cid
            for cid in sorted(self.categories)
            if self.categories[cid].find_fit(percept) is not None
        ]

    # ------------------------------------------------------------------
    # the interaction loop

    def observe(self, percept: Mapping[str, FeatureVector]) -> ObserveResult:
        """Absorb a percept: bump the matched interval vectors of the first
        fitting category, or create a fresh category from the percept."""
        self._check_percept(percept)
        for cid in sorted(self.categories, reverse=True):
            category = self.categories[cid]
            fit = category.find_fit(percept)
            if fit is not None:
                for fid, idx in fit.items():
                    category.features[fid][idx].count += 1
                category.touch()
                self._refresh_similarities(cid, features_only=True)
                return ObserveResult(cid, False)
        cid = self._create_category(percept)
        return ObserveResult(cid, True)

    def select_action(self, category_id: int) -> str:
        """Pick an action for the category.

        With probability rho_ra a uniformly random action is explored.
        Otherwise: an action with positive experience here; failing that, the
        positively similar categories are scanned in descending similarity
        for a positively experienced action that is not negative here nor in
        the most similar category; failing that, a random action without
        negative experience here (or fully random when everything is
        negative).
        """
        if not self.action_set:
            raise ConfigurationError("action set is empty")
        category = self._category(category_id)
        actions = self.action_set
        if self.rng.random() < self.params.rho_ra:
            return actions[self.rng.randrange(len(actions))]
        for action in actions:
            if category.experiences.get(action) == POSITIVE:
                return action
        ranked = sorted(
            (
                (self._sigma[_pair(category_id, other)], other)
                for other in self.categories
                if other != category_id
            ),
            key=lambda item: (-item[0], item[1]),
        )
        positive = [(s, cid) for s, cid in ranked if s > 0.0]
        if positive:
            anchor = self.categories[positive[0][1]]
            for _, cid in positive:
                other = self.categories[cid]
                for action in actions:
                    if (
                        other.experiences.get(action) == POSITIVE
                        and category.experiences.get(action) != NEGATIVE
                        and anchor.experiences.get(action) != NEGATIVE
                    ):
                        return action
        pool = [a for a in actions if category.experiences.get(a) != NEGATIVE]
        if not pool:
            pool = list(actions)
        return pool[self.rng.randrange(len(pool))]

    def record_reward(
        self,
        category_id: int,
        percept: Mapping[str, FeatureVector],
        action: str,
        reward: str,
    ) -> RewardResult:
        """Store the reward for (category, action) and evolve the graph.

        A reward equal to the stored one changes nothing; a neutral reward
        never displaces a non-neutral one; a non-neutral reward overwrites a
        neutral one.  Directly opposed rewards split the percept out of the
        category into a new one.  Every call ends with a merge pass.
        """
        if reward not in REWARDS:
            raise ValueError(f"unknown reward {reward!r}")
        if action not in self.action_set:
            raise ValueError(f"unknown action {action!r}")
        category = self._category(category_id)
        stored = category.experiences.get(action)
        split_id: int | None = None
        if stored is None:
            anchor = self._most_similar_positive(category_id)
            category.experiences[action] = reward
            self._refresh_similarities(category_id)
            if anchor is not None and opposed(
                self.categories[anchor].experiences.get(action), reward
            ):
                self.adapt_weights(CASE_CONTRADICTION, category_id, anchor)
            outcome = "updated"
        elif stored == reward or reward == NEUTRAL:
            outcome = "unchanged"
        elif stored == NEUTRAL:
            category.experiences[action] = reward
            self._refresh_similarities(category_id)
            outcome = "updated"
        else:
            split_id = self._split(category_id, percept, action, reward)
            outcome = "split"
        merges = self.merge_pass()
        return RewardResult(outcome, split_id, tuple(merges))

    # ------------------------------------------------------------------
    # generalization

    def merge_pass(self) -> list[MergeEvent]:
        """Merge the most similar eligible pair while any pair's similarity
        reaches theta_mc; pairs with directly opposed experiences for a
        shared action never merge."""
        events: list[MergeEvent] = []
        threshold = self.params.theta_mc
        while True:
            if not self._sigma or max(self._sigma.values()) < threshold:
                return events
            best: tuple[float, int, int] | None = None
            for (i, j), sigma in self._sigma.items():
                if sigma < threshold:
                    continue
                if best is not None and (sigma, -i, -j) <= (best[0], -best[1], -best[2]):
                    continue
                if self._mergeable(i, j):
                    best = (sigma, i, j)
            if best is None:
                return events
            sigma, first, second = best
            self.adapt_weights(CASE_MERGED, first, second)
            merged_id = self._merge_pair(first, second)
            events.append(MergeEvent(merged_id, (first, second), sigma))

    def adapt_weights(self, case: str, a: int, b: int) -> AttributeWeights:
        """Shift attribute weights in response to a merge, split, or first
        contradicting experience between categories `a` and `b`.

        Merges target the attribute in which the pair differs the most (the
        lowest raw similarity); splits and contradictions target the
        attribute most responsible for the alleged similarity (the highest
        weighted contribution).  The target loses at most delta_aw, clamped
        at zero, and the loss is spread evenly over the other attributes so
        the total stays constant.
        """
        if case not in WEIGHT_CASES:
            raise ValueError(f"unknown weight adaptation case {case!r}")
        if a == b:
            raise ValueError("weight adaptation needs two distinct categories")
        n = len(self.schema) + 1
        if n < 2:
            return self.weights
        sims = self._attr_sims[_pair(a, b)]
        wvec = self.weights.vector(self.schema)
        if case == CASE_MERGED:
            target = min(range(n), key=lambda i: (sims[i], i))
        else:
            target = max(range(n), key=lambda i: (wvec[i] * sims[i], -i))
        step = min(self.params.delta_aw, wvec[target])
        if step > 0.0:
            share = step / (n - 1)
            for i in range(n):
                wvec[i] = wvec[i] - step if i == target else wvec[i] + share
            for i, spec in enumerate(self.schema):
                self.weights.features[spec.feature_id] = wvec[i]
            self.weights.experience = wvec[-1]
            self._recompute_sigma()
        return self.weights

    # ------------------------------------------------------------------
    # internals

    def _category(self, category_id: int) -> ObjectCategory:
        try:
            return self.categories[category_id]
        except KeyError:
            raise ValueError(f"unknown category id {category_id}") from None

    def _check_percept(self, percept: Mapping[str, FeatureVector]) -> None:
        expected = set(self.feature_ids)
        got = set(percept)
        if got != expected:
            raise ValueError(f"percept features {sorted(got)} != declared {sorted(expected)}")
        for spec in self.schema:
            if percept[spec.feature_id].arity != spec.arity:
                raise ValueError(
                    f"percept arity for {spec.feature_id!r} is "
                    f"{percept[spec.feature_id].arity}, expected {spec.arity}"
                )

    def _create_category(
        self,
        percept: Mapping[str, FeatureVector],
        experiences: dict[str, str] | None = None,
    ) -> int:
        cid = self._next_id
        self._next_id += 1
        ordered = {fid: percept[fid] for fid in self.feature_ids}
        category = ObjectCategory.from_percept(cid, ordered)
        if experiences:
            category.experiences.update(experiences)
        self.categories[cid] = category
        self._refresh_similarities(cid)
        return cid

    def _split(
        self,
        category_id: int,
        percept: Mapping[str, FeatureVector],
        action: str,
        reward: str,
    ) -> int:
        category = self.categories[category_id]
        fit = category.find_fit(percept)
        if fit is None:
            raise ValueError("percept to split does not fit the rewarded category")
        # roll back only this percept's count increments; intervals and the
        # previously stored experience stay with the original category
        for fid, idx in fit.items():
            category.features[fid][idx].count -= 1
        category.touch()
        self._refresh_similarities(category_id, features_only=True)
        split_id = self._create_category(percept, experiences={action: reward})
        self.adapt_weights(CASE_SPLIT, category_id, split_id)
        return split_id

    def _mergeable(self, a: int, b: int) -> bool:
        ea = self.categories[a].experiences
        eb = self.categories[b].experiences
        for action, reward in ea.items():
            if opposed(reward, eb.get(action)):
                return False
        return True

    def _merge_pair(self, first: int, second: int) -> int:
        """Union the two categories into a fresh one; the new id keeps the
        consolidated knowledge at the front of the newest-first fit scan."""
        a = self.categories[first]
        b = self.categories[second]
        merged_id = self._next_id
        self._next_id += 1
        features = {
            fid: fold_interval_vectors(
                a.features[fid] + b.features[fid], self.params.theta_mf
            )
            for fid in self.feature_ids
        }
        experiences = dict(a.experiences)
        for action, reward in b.experiences.items():
            current = experiences.get(action)
            if current is None or (current == NEUTRAL and reward != NEUTRAL):
                experiences[action] = reward
        del self.categories[first]
        del self.categories[second]
        for key in [k for k in self._sigma if first in k or second in k]:
            del self._sigma[key]
            del self._attr_sims[key]
        self.categories[merged_id] = ObjectCategory(merged_id, features, experiences)
        self._refresh_similarities(merged_id)
        return merged_id

    def _most_similar_positive(self, category_id: int) -> int | None:
        best: tuple[float, int] | None = None
        for other in sorted(self.categories):
            if other == category_id:
                continue
            sigma = self._sigma[_pair(category_id, other)]
            if sigma > 0.0 and (best is None or sigma > best[0]):
                best = (sigma, other)
        return best[1] if best else None

    def _refresh_similarities(self, category_id: int, features_only: bool = False) -> None:
        """Recompute the cached per-attribute similarities of every pair that
        involves `category_id`.  With features_only the cached experience
        similarity is kept (counts changed but experiences did not)."""
        category = self.categories[category_id]
        wvec = self.weights.vector(self.schema)
        n = len(wvec)
        for other_id, other in self.categories.items():
            if other_id == category_id:
                continue
            key = _pair(category_id, other_id)
            if features_only and key in self._attr_sims:
                sims = tuple(
                    feature_similarity(category, other, spec.feature_id)
                    for spec in self.schema
                ) + (self._attr_sims[key][-1],)
            else:
                sims = attribute_similarities(category, other, self.schema)
            self._attr_sims[key] = sims
            total = 0.0
            for i in range(n):
                total += wvec[i] * sims[i]
            self._sigma[key] = total

    def _recompute_sigma(self) -> None:
        wvec = self.weights.vector(self.schema)
        sigma = self._sigma
        n = len(wvec)
        for key, sims in self._attr_sims.items():
            total = 0.0
            for i in range(n):
                total += wvec[i] * sims[i]
            sigma[key] = total
