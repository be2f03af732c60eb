"""Versioned JSON document format for knowledge graphs.

Top-level fields: version, parameters, actionSet, featureSchema, weights,
categories, rngState.  Interval-vector counts are stored; occurrence
probabilities and the similarity cache are derived on load.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .categories import REWARDS, ObjectCategory
from .features import CharacteristicInterval, FeatureIntervalVector, FeatureSpec
from .graph import AttributeWeights, KnowledgeGraph, Parameters

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed graph document; the message names the offending location."""


def _require(mapping: Any, key: str, path: str) -> Any:
    if not isinstance(mapping, dict):
        raise ParseError(f"{path}: expected an object")
    if key not in mapping:
        raise ParseError(f"{path}.{key}: missing")
    return mapping[key]


def graph_to_document(graph: KnowledgeGraph) -> dict:
    state = graph.rng.getstate()
    return {
        "version": FORMAT_VERSION,
        "parameters": {
            "rhoRa": graph.params.rho_ra,
            "deltaAw": graph.params.delta_aw,
            "thetaMc": graph.params.theta_mc,
            "thetaMf": graph.params.theta_mf,
        },
        "actionSet": list(graph.action_set),
        "featureSchema": [
            {"id": spec.feature_id, "characteristics": list(spec.characteristics)}
            for spec in graph.schema
        ],
        "weights": {
            "features": {fid: graph.weights.features[fid] for fid in graph.feature_ids},
            "experience": graph.weights.experience,
        },
        "categories": [
            _category_to_document(graph.categories[cid], graph.feature_ids)
            for cid in sorted(graph.categories)
        ],
        "rngState": {"seed": graph.seed, "state": [state[0], list(state[1]), state[2]]},
    }


def _category_to_document(category: ObjectCategory, feature_ids: tuple[str, ...]) -> dict:
    return {
        "id": category.category_id,
        "features": {
            fid: [
                {
                    "intervals": [[iv.lo, iv.hi] for iv in vector.intervals],
                    "count": vector.count,
                }
                for vector in category.features[fid]
            ]
            for fid in feature_ids
        },
        "experiences": [
            {"action": action, "reward": category.experiences[action]}
            for action in sorted(category.experiences)
        ],
    }


def document_to_graph(doc: Any) -> KnowledgeGraph:
    version = _require(doc, "version", "$")
    if version != FORMAT_VERSION:
        raise ParseError(f"$.version: unsupported version {version!r}")
    raw_params = _require(doc, "parameters", "$")
    params = Parameters(
        rho_ra=float(_require(raw_params, "rhoRa", "$.parameters")),
        delta_aw=float(_require(raw_params, "deltaAw", "$.parameters")),
        theta_mc=float(_require(raw_params, "thetaMc", "$.parameters")),
        theta_mf=float(_require(raw_params, "thetaMf", "$.parameters")),
    )
    raw_schema = _require(doc, "featureSchema", "$")
    if not isinstance(raw_schema, list):
        raise ParseError("$.featureSchema: expected a list")
    schema = tuple(
        FeatureSpec(
            _require(entry, "id", f"$.featureSchema[{i}]"),
            tuple(_require(entry, "characteristics", f"$.featureSchema[{i}]")),
        )
        for i, entry in enumerate(raw_schema)
    )
    actions = _require(doc, "actionSet", "$")
    raw_rng = _require(doc, "rngState", "$")
    seed = _require(raw_rng, "seed", "$.rngState")

    graph = KnowledgeGraph(schema, actions, params=params, seed=seed)

    raw_weights = _require(doc, "weights", "$")
    feature_weights = _require(raw_weights, "features", "$.weights")
    weights = AttributeWeights(
        {spec.feature_id: float(_require(feature_weights, spec.feature_id, "$.weights.features")) for spec in schema},
        float(_require(raw_weights, "experience", "$.weights")),
    )
    graph.weights = weights

    raw_categories = _require(doc, "categories", "$")
    if not isinstance(raw_categories, list):
        raise ParseError("$.categories: expected a list")
    for i, raw_cat in enumerate(raw_categories):
        path = f"$.categories[{i}]"
        cid = _require(raw_cat, "id", path)
        if not isinstance(cid, int):
            raise ParseError(f"{path}.id: expected an integer")
        raw_features = _require(raw_cat, "features", path)
        features: dict[str, list[FeatureIntervalVector]] = {}
        for spec in schema:
            vectors = _require(raw_features, spec.feature_id, f"{path}.features")
            parsed = []
            for v, raw_vec in enumerate(vectors):
                vec_path = f"{path}.features.{spec.feature_id}[{v}]"
                raw_intervals = _require(raw_vec, "intervals", vec_path)
                if len(raw_intervals) != spec.arity:
                    raise ParseError(f"{vec_path}.intervals: expected {spec.arity} entries")
                try:
                    intervals = tuple(
                        CharacteristicInterval(float(lo), float(hi))
                        for lo, hi in raw_intervals
                    )
                    parsed.append(
                        FeatureIntervalVector(
                            spec.feature_id, intervals, int(_require(raw_vec, "count", vec_path))
                        )
                    )
                except (TypeError, ValueError) as exc:
                    raise ParseError(f"{vec_path}: {exc}") from exc
            if not parsed:
                raise ParseError(f"{path}.features.{spec.feature_id}: empty vector set")
            features[spec.feature_id] = parsed
        category = ObjectCategory(cid, features)
        for e, raw_exp in enumerate(_require(raw_cat, "experiences", path)):
            exp_path = f"{path}.experiences[{e}]"
            action = _require(raw_exp, "action", exp_path)
            reward = _require(raw_exp, "reward", exp_path)
            if reward not in REWARDS:
                raise ParseError(f"{exp_path}.reward: unknown reward {reward!r}")
            category.experiences[action] = reward
        if cid in graph.categories:
            raise ParseError(f"{path}.id: duplicate category id {cid}")
        graph.categories[cid] = category

    raw_state = _require(raw_rng, "state", "$.rngState")
    try:
        graph.rng.setstate((raw_state[0], tuple(raw_state[1]), raw_state[2]))
    except (TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"$.rngState.state: {exc}") from exc
    graph._next_id = max(graph.categories, default=0) + 1
    for cid in graph.categories:
        graph._refresh_similarities(cid)
    return graph


def dumps_graph(graph: KnowledgeGraph, indent: int | None = None) -> str:
    return json.dumps(graph_to_document(graph), indent=indent)


def loads_graph(text: str) -> KnowledgeGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    return document_to_graph(doc)


def save_graph(graph: KnowledgeGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(graph, indent=2))


def load_graph(path: str | Path) -> KnowledgeGraph:
    return loads_graph(Path(path).read_text())
