"""Feature vectors, characteristic intervals, and the interval distance.

A *feature* (color, form, ...) is a named group of characteristics.  A
percept carries one normalized value per characteristic; a category stores
per-characteristic intervals together with an occurrence count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

EPS = 1e-9


class DegenerateInputError(ValueError):
    """Raised when a raw percept carries no mass after clamping negatives."""


@dataclass(frozen=True)
class FeatureSpec:
    """Declaration of one feature: its id and ordered characteristic names."""

    feature_id: str
    characteristics: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "characteristics", tuple(self.characteristics))
        if not self.characteristics:
            raise ValueError(f"feature {self.feature_id!r} declares no characteristics")

    @property
    def arity(self) -> int:
        return len(self.characteristics)


FeatureSchema = tuple[FeatureSpec, ...]


@dataclass(frozen=True)
class FeatureVector:
    """A percept's normalized per-characteristic values for one feature."""

    feature_id: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        for v in self.values:
            if not (-EPS <= v <= 1.0 + EPS):
                raise ValueError(f"characteristic value {v} outside [0, 1]")
        if abs(sum(self.values) - 1.0) > EPS:
            raise ValueError(f"values of {self.feature_id!r} do not sum to 1")

    @property
    def arity(self) -> int:
        return len(self.values)


def normalize_percept(
    feature_id: str, raw: Sequence[float], arity: int | None = None
) -> FeatureVector:
    """Clamp negatives to zero and rescale so the values sum to one.

    Raises DegenerateInputError if nothing remains after clamping, and
    ValueError when the input length disagrees with the declared arity.
    """
    if arity is not None and len(raw) != arity:
        raise ValueError(f"expected {arity} values for {feature_id!r}, got {len(raw)}")
    clamped = [max(0.0, float(v)) for v in raw]
    total = sum(clamped)
    if total <= 0.0:
        raise DegenerateInputError(f"percept for {feature_id!r} has no positive mass")
    return FeatureVector(feature_id, tuple(v / total for v in clamped))


@dataclass(frozen=True)
class CharacteristicInterval:
    """A closed interval [lo, hi] for one characteristic."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval lower bound {self.lo} exceeds {self.hi}")

    def contains(self, value: float) -> bool:
        return self.lo - EPS <= value <= self.hi + EPS

    def gap(self, other: "CharacteristicInterval") -> float:
        """Shortest distance between the two intervals; 0 when they overlap or touch."""
        return max(0.0, self.lo - other.hi, other.lo - self.hi)

    def hull(self, other: "CharacteristicInterval") -> "CharacteristicInterval":
        return CharacteristicInterval(min(self.lo, other.lo), max(self.hi, other.hi))


@dataclass
class FeatureIntervalVector:
    """A category's per-characteristic intervals plus the number of percepts absorbed."""

    feature_id: str
    intervals: tuple[CharacteristicInterval, ...]
    count: int = 1

    def __post_init__(self) -> None:
        self.intervals = tuple(self.intervals)
        if self.count < 1:
            raise ValueError("interval vector count must be at least 1")
        # flat (lo0, hi0, lo1, hi1, ...) mirror of the immutable intervals,
        # kept for the distance inner loops
        bounds: list[float] = []
        for interval in self.intervals:
            bounds.append(interval.lo)
            bounds.append(interval.hi)
        self.flat_bounds = tuple(bounds)

    @classmethod
    def degenerate(cls, vector: FeatureVector, count: int = 1) -> "FeatureIntervalVector":
        """Point-like intervals [v, v] around a single percept's values."""
        return cls(
            vector.feature_id,
            tuple(CharacteristicInterval(v, v) for v in vector.values),
            count,
        )

    @property
    def arity(self) -> int:
        return len(self.intervals)

    def contains(self, vector: FeatureVector) -> bool:
        if vector.arity != self.arity:
            return False
        return all(iv.contains(v) for iv, v in zip(self.intervals, vector.values))

    def fold(self, other: "FeatureIntervalVector") -> "FeatureIntervalVector":
        """Per-characteristic hull of both vectors with the counts summed."""
        if other.feature_id != self.feature_id or other.arity != self.arity:
            raise ValueError("cannot fold interval vectors of different features")
        merged = tuple(a.hull(b) for a, b in zip(self.intervals, other.intervals))
        return FeatureIntervalVector(self.feature_id, merged, self.count + other.count)


def flat_bounds_distance(a: tuple[float, ...], b: tuple[float, ...]) -> float:
    total = 0.0
    for i in range(0, len(a), 2):
        gap = a[i] - b[i + 1]
        other = b[i] - a[i + 1]
        if other > gap:
            gap = other
        if gap > 0.0:
            total += gap
    return total


def delta_distance(a: FeatureIntervalVector, b: FeatureIntervalVector) -> float:
    """Sum over characteristics of the shortest gap between the two intervals.

    Overlapping or touching intervals contribute 0; for percentage-normalized
    features the result lies in [0, 2].
    """
    if a.feature_id != b.feature_id:
        raise ValueError(f"feature mismatch: {a.feature_id!r} vs {b.feature_id!r}")
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch for {a.feature_id!r}: {a.arity} vs {b.arity}")
    return flat_bounds_distance(a.flat_bounds, b.flat_bounds)


def fold_interval_vectors(
    vectors: Iterable[FeatureIntervalVector], threshold: float
) -> list[FeatureIntervalVector]:
    """Repeatedly fold the closest pair of vectors while their distance is
    within `threshold`; ties resolve to the lowest index pair."""
    vs = list(vectors)
    while True:
        best: tuple[float, int, int] | None = None
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                d = delta_distance(vs[i], vs[j])
                if d <= threshold and (best is None or d < best[0]):
                    best = (d, i, j)
        if best is None:
            return vs
        _, i, j = best
        vs[i] = vs[i].fold(vs[j])
        del vs[j]
