"""Shared fixtures/builders for the test suite."""

from __future__ import annotations

from categraph import (
    CharacteristicInterval,
    FeatureIntervalVector,
    FeatureSpec,
    FeatureVector,
    KnowledgeGraph,
    ObjectCategory,
    Parameters,
)
from categraph.knowledge.features import delta_distance

COLOR = FeatureSpec("color", ("red", "green", "yellow", "brown"))
FORM = FeatureSpec("form", ("circular", "rectangular"))
SCHEMA = (COLOR, FORM)


def iv(feature_id, pairs, count=1):
    return FeatureIntervalVector(
        feature_id, tuple(CharacteristicInterval(lo, hi) for lo, hi in pairs), count
    )


def point_iv(feature_id, values, count=1):
    return iv(feature_id, [(v, v) for v in values], count)


def fv(feature_id, values):
    return FeatureVector(feature_id, tuple(values))


def category(cid, features, experiences=None):
    return ObjectCategory(cid, features, dict(experiences or {}))


def example_graph_category():
    """The one-category graph fixture: two color interval vectors with
    counts 1 and 2 (probabilities 1/3 and 2/3), one widened form vector,
    and a single positive experience."""
    color_green = point_iv("color", [0, 1, 0, 0], count=1)
    color_red_brown = point_iv("color", [0.7, 0, 0, 0.3], count=2)
    form_rect = iv("form", [(0, 0.2), (0.8, 1.0)], count=3)
    return category(
        3,
        {"color": [color_green, color_red_brown], "form": [form_rect]},
        {"Action1": "positive"},
    )


def make_graph(params=None, seed=0, actions=("fruitBasket", "rubbishBin", "toyBox")):
    return KnowledgeGraph(SCHEMA, actions, params=params or Parameters(), seed=seed)


def brute_force_feature_similarity(a, b, feature_id):
    """Independent evaluator: explicit enumeration of all interval-vector
    pairs with the smaller set in the summing role (ties oriented by id)."""
    cj, ck = a.features[feature_id], b.features[feature_id]
    pj = [v.count / sum(x.count for x in cj) for v in cj]
    pk = [v.count / sum(x.count for x in ck) for v in ck]
    if (len(cj), a.category_id) > (len(ck), b.category_id):
        cj, ck, pj, pk = ck, cj, pk, pj
    total = 0.0
    for j in range(len(cj)):
        candidates = []
        for k in range(len(ck)):
            candidates.append((1.0 - delta_distance(cj[j], ck[k])) * pj[j] * pk[k])
        total += max(candidates)
    return total
