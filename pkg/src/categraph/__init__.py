"""categraph: online object-category learning with interval-based matching,
analogy-driven action selection, and reward-guided category merging/splitting."""

from .knowledge import (
    AttributeWeights,
    CharacteristicInterval,
    ConfigurationError,
    DegenerateInputError,
    FeatureIntervalVector,
    FeatureSpec,
    FeatureVector,
    KnowledgeGraph,
    MergeEvent,
    NEGATIVE,
    NEUTRAL,
    ObjectCategory,
    ObserveResult,
    Parameters,
    ParseError,
    POSITIVE,
    RewardResult,
    category_similarity,
    delta_distance,
    document_to_graph,
    dumps_graph,
    experience_similarity,
    feature_similarity,
    graph_to_document,
    load_graph,
    loads_graph,
    normalize_percept,
    save_graph,
)
from .learner import CategoryLearner

__version__ = "0.1.0"

__all__ = [
    "AttributeWeights",
    "CategoryLearner",
    "CharacteristicInterval",
    "ConfigurationError",
    "DegenerateInputError",
    "FeatureIntervalVector",
    "FeatureSpec",
    "FeatureVector",
    "KnowledgeGraph",
    "MergeEvent",
    "NEGATIVE",
    "NEUTRAL",
    "ObjectCategory",
    "ObserveResult",
    "Parameters",
    "ParseError",
    "POSITIVE",
    "RewardResult",
    "category_similarity",
    "delta_distance",
    "document_to_graph",
    "dumps_graph",
    "experience_similarity",
    "feature_similarity",
    "graph_to_document",
    "load_graph",
    "loads_graph",
    "normalize_percept",
    "save_graph",
]
