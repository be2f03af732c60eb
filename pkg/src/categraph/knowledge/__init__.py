from .features import (
    EPS,
    CharacteristicInterval,
    DegenerateInputError,
    FeatureIntervalVector,
    FeatureSpec,
    FeatureVector,
    delta_distance,
    normalize_percept,
)
from .categories import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    REWARDS,
    ObjectCategory,
    opposed,
)
from .similarity import (
    attribute_similarities,
    category_similarity,
    experience_similarity,
    feature_similarity,
)
from .graph import (
    AttributeWeights,
    ConfigurationError,
    KnowledgeGraph,
    MergeEvent,
    ObserveResult,
    Parameters,
    RewardResult,
)
from .serialize import (
    ParseError,
    document_to_graph,
    dumps_graph,
    graph_to_document,
    load_graph,
    loads_graph,
    save_graph,
)

__all__ = [
    "EPS",
    "AttributeWeights",
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
    "REWARDS",
    "RewardResult",
    "attribute_similarities",
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
    "opposed",
    "save_graph",
]
