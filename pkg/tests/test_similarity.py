import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from categraph import (
    category_similarity,
    experience_similarity,
    feature_similarity,
    normalize_percept,
)
from categraph.knowledge.features import FeatureIntervalVector
from categraph.knowledge.similarity import attribute_similarities

from support import (
    SCHEMA,
    brute_force_feature_similarity,
    category,
    fv,
    iv,
    point_iv,
)


class TestFeatureSimilarity:
    def test_single_vector_pair_hand_value(self):
        a = category(1, {"color": [point_iv("color", [1, 0, 0, 0])]})
        b = category(2, {"color": [iv("color", [(0.6, 0.8), (0, 0), (0, 0), (0.2, 0.4)])]})
        expected = brute_force_feature_similarity(a, b, "color")
        assert expected == pytest.approx(0.6, abs=1e-12)
        assert feature_similarity(a, b, "color") == pytest.approx(expected, abs=1e-12)

    def test_identical_single_vectors(self):
        a = category(1, {"color": [point_iv("color", [0.5, 0.5, 0, 0])]})
        b = category(2, {"color": [point_iv("color", [0.5, 0.5, 0, 0])]})
        assert feature_similarity(a, b, "color") == 1.0

    def test_maximally_distant_single_vectors(self):
        a = category(1, {"color": [point_iv("color", [1, 0, 0, 0])]})
        b = category(2, {"color": [point_iv("color", [0, 1, 0, 0])]})
        assert feature_similarity(a, b, "color") == -1.0

    def test_symmetric_despite_different_cardinalities(self):
        a = category(
            1,
            {
                "color": [
                    point_iv("color", [1, 0, 0, 0], count=3),
                    point_iv("color", [0, 1, 0, 0], count=1),
                ]
            },
        )
        b = category(2, {"color": [iv("color", [(0.8, 1), (0, 0.2), (0, 0), (0, 0)], count=2)]})
        assert feature_similarity(a, b, "color") == feature_similarity(b, a, "color")
        assert feature_similarity(a, b, "color") == pytest.approx(
            brute_force_feature_similarity(a, b, "color"), abs=1e-12
        )

    @staticmethod
    def _random_category(data, cid, arity, max_vectors=3):
        n = data.draw(st.integers(1, max_vectors))
        vectors = []
        for _ in range(n):
            raw = data.draw(st.lists(st.floats(0.01, 1), min_size=arity, max_size=arity))
            vec = FeatureIntervalVector.degenerate(normalize_percept("color", raw))
            vec.count = data.draw(st.integers(1, 5))
            vectors.append(vec)
        return category(cid, {"color": vectors})

    @settings(max_examples=200)
    @given(st.data())
    def test_matches_brute_force_and_stays_bounded(self, data):
        arity = data.draw(st.integers(2, 4))
        a = self._random_category(data, 1, arity)
        b = self._random_category(data, 2, arity)
        got = feature_similarity(a, b, "color")
        assert got == pytest.approx(brute_force_feature_similarity(a, b, "color"), abs=1e-12)
        assert -1.0 - 1e-9 <= got <= 1.0 + 1e-9
        assert got == feature_similarity(b, a, "color")


class TestExperienceSimilarity:
    def test_single_matching_positive(self):
        a = category(1, {}, {"Action1": "positive"})
        b = category(2, {}, {"Action1": "positive"})
        assert experience_similarity(a, b) == 1.0

    def test_single_contradiction(self):
        a = category(1, {}, {"A": "positive"})
        b = category(2, {}, {"A": "negative"})
        assert experience_similarity(a, b) == -1.0

    def test_partial_agreement(self):
        a = category(1, {}, {"A": "positive", "B": "positive"})
        b = category(2, {}, {"A": "positive"})
        assert experience_similarity(a, b) == 0.5

    def test_no_experiences(self):
        assert experience_similarity(category(1, {}), category(2, {})) == 0.0

    def test_neutral_contributes_nothing(self):
        a = category(1, {}, {"A": "neutral"})
        b = category(2, {}, {"A": "neutral"})
        assert experience_similarity(a, b) == 0.0
        c = category(3, {}, {"A": "positive"})
        assert experience_similarity(a, c) == 0.0

    def test_symmetry(self):
        a = category(1, {}, {"A": "positive", "B": "negative", "C": "neutral"})
        b = category(2, {}, {"A": "negative", "C": "positive", "D": "positive"})
        assert experience_similarity(a, b) == experience_similarity(b, a)


class TestCategorySimilarity:
    def _weighted(self, a, b, wf, we):
        return category_similarity(a, b, SCHEMA, wf, we)

    def test_weighted_sum(self):
        # color sim 0.6 (hand value above), form sim 1.0, no experiences
        a = category(
            1,
            {
                "color": [point_iv("color", [1, 0, 0, 0])],
                "form": [point_iv("form", [0.5, 0.5])],
            },
        )
        b = category(
            2,
            {
                "color": [iv("color", [(0.6, 0.8), (0, 0), (0, 0), (0.2, 0.4)])],
                "form": [point_iv("form", [0.5, 0.5])],
            },
        )
        weights = {"color": 1.0, "form": 1.0}
        assert self._weighted(a, b, weights, 1.0) == pytest.approx(1.6, abs=1e-12)

    def test_self_similarity_is_weight_total_for_single_vector_category(self):
        a = category(
            1,
            {
                "color": [point_iv("color", [1, 0, 0, 0])],
                "form": [point_iv("form", [0, 1])],
            },
            {"A": "positive"},
        )
        weights = {"color": 1.2, "form": 0.8}
        assert self._weighted(a, a, weights, 1.0) == pytest.approx(3.0, abs=1e-12)

    def test_zero_when_all_attribute_similarities_zero(self):
        # orthogonal halves cancel: delta = 1 so each feature similarity is 0
        a = category(
            1,
            {
                "color": [point_iv("color", [1, 0, 0, 0])],
                "form": [point_iv("form", [1, 0])],
            },
        )
        b = category(
            2,
            {
                "color": [point_iv("color", [0.5, 0.5, 0, 0])],
                "form": [point_iv("form", [0.5, 0.5])],
            },
        )
        assert self._weighted(a, b, {"color": 1.0, "form": 1.0}, 1.0) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_attribute_similarities_order(self):
        a = category(
            1,
            {
                "color": [point_iv("color", [1, 0, 0, 0])],
                "form": [point_iv("form", [0, 1])],
            },
            {"A": "positive"},
        )
        b = category(
            2,
            {
                "color": [point_iv("color", [1, 0, 0, 0])],
                "form": [point_iv("form", [0, 1])],
            },
            {"A": "negative"},
        )
        sims = attribute_similarities(a, b, SCHEMA)
        assert sims == (1.0, 1.0, -1.0)
