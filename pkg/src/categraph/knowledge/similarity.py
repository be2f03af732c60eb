"""Similarity calculus between object categories.

The similarity of two categories for a single feature sums, over the
smaller set of interval vectors, the best match against the other set:
each term is (1 - distance) scaled by both occurrence probabilities, so
frequently confirmed vectors dominate.  The total category similarity is
the attribute-weighted sum of all feature similarities plus the
experience similarity.
"""

from __future__ import annotations

from typing import Sequence

from .categories import NEUTRAL, ObjectCategory, opposed
from .features import FeatureSpec


def feature_similarity(a: ObjectCategory, b: ObjectCategory, feature_id: str) -> float:
    """Similarity of two categories for one feature, in [-1, 1].

    The set with fewer interval vectors always takes the summing role so the
    result does not depend on argument order; equal-size sets are oriented by
    category id.
    """
    cj = a.feature_data(feature_id)
    ck = b.feature_data(feature_id)
    if (len(cj), a.category_id) > (len(ck), b.category_id):
        cj, ck = ck, cj
    result = 0.0
    for bj, prob_j in cj:
        best = None
        for bk, prob_k in ck:
            distance = 0.0
            for i in range(0, len(bj), 2):
                gap = bj[i] - bk[i + 1]
                other = bk[i] - bj[i + 1]
                if other > gap:
                    gap = other
                if gap > 0.0:
                    distance += gap
            term = (1.0 - distance) * prob_j * prob_k
            if best is None or term > best:
                best = term
        result += best if best is not None else 0.0
    return result


def experience_similarity(a: ObjectCategory, b: ObjectCategory) -> float:
    """Signed agreement ratio over the union of experienced actions.

    Matching non-neutral rewards score +1, directly opposed rewards -1,
    everything else 0; the sum is divided by the number of actions either
    category has experienced.  Two categories without experiences score 0.
    """
    actions = set(a.experiences) | set(b.experiences)
    if not actions:
        return 0.0
    score = 0
    for action in actions:
        ra = a.experiences.get(action)
        rb = b.experiences.get(action)
        if ra is None or rb is None or ra == NEUTRAL or rb == NEUTRAL:
            continue
        if ra == rb:
            score += 1
        elif opposed(ra, rb):
            score -= 1
    return score / len(actions)


def attribute_similarities(
    a: ObjectCategory, b: ObjectCategory, schema: Sequence[FeatureSpec]
) -> tuple[float, ...]:
    """Per-attribute similarities in declaration order, experience last."""
    values = [feature_similarity(a, b, spec.feature_id) for spec in schema]
    values.append(experience_similarity(a, b))
    return tuple(values)


def category_similarity(
    a: ObjectCategory,
    b: ObjectCategory,
    schema: Sequence[FeatureSpec],
    feature_weights: dict[str, float],
    experience_weight: float,
) -> float:
    """Weighted sum of the per-feature similarities and the experience similarity."""
    total = 0.0
    for spec in schema:
        total += feature_weights[spec.feature_id] * feature_similarity(a, b, spec.feature_id)
    total += experience_weight * experience_similarity(a, b)
    return total
