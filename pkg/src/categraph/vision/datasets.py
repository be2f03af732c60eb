"""Synthetic labeled datasets for the color and shape classifiers.

Color samples are quartered-bounding-box chroma averages of rendered
objects with class-typical (a, b) chroma plus jitter; shape samples are the
two area ratios of rendered rectangles and circles.  Datasets persist as
CSV rows of features followed by the label.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .descriptors import quarter_averages, shape_ratios
from .raster import ObjectSpec, render_object
from .silhouette import silhouette_stats

# offset-encoded chroma centers, roughly where these colors live on the
# two chromatic axes of an 8-bit opponent encoding
COLOR_CHROMA = {
    "red": (190.0, 160.0),
    "green": (75.0, 170.0),
    "yellow": (120.0, 210.0),
    "brown": (150.0, 155.0),
}
COLOR_CLASSES = ("red", "green", "yellow", "brown")
SHAPE_CLASSES = ("rectangular", "circular")

CHROMA_SCALE = 255.0


def make_color_dataset(n_samples: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """(features, labels): 8 scaled quarter averages per sample, label index
    into COLOR_CLASSES."""
    rng = np.random.default_rng(seed)
    features = []
    labels = []
    for i in range(n_samples):
        label = i % len(COLOR_CLASSES)
        base_a, base_b = COLOR_CHROMA[COLOR_CLASSES[label]]
        chroma = (
            base_a + rng.normal(0.0, 6.0),
            base_b + rng.normal(0.0, 6.0),
        )
        shape = "circle" if rng.random() < 0.5 else "rect"
        size = float(rng.uniform(10, 22)) if shape == "circle" else (
            float(rng.uniform(16, 40)),
            float(rng.uniform(16, 40)),
        )
        spec = ObjectSpec(
            shape=shape,
            chroma=chroma,
            size=size,
            rotation=float(rng.uniform(0, 90)),
            noise=4.0,
            seed=int(rng.integers(0, 2**31)),
        )
        raster = render_object(spec)
        features.append(quarter_averages(raster) / CHROMA_SCALE)
        labels.append(label)
    return np.array(features), np.array(labels)


def make_shape_dataset(n_samples: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """(features, labels): the two area ratios per sample, label index into
    SHAPE_CLASSES."""
    rng = np.random.default_rng(seed)
    features = []
    labels = []
    for i in range(n_samples):
        label = i % len(SHAPE_CLASSES)
        if SHAPE_CLASSES[label] == "rectangular":
            spec = ObjectSpec(
                shape="rect",
                chroma=(128.0, 128.0),
                size=(float(rng.uniform(18, 40)), float(rng.uniform(12, 30))),
                rotation=float(rng.uniform(0, 180)),
            )
        else:
            spec = ObjectSpec(
                shape="circle",
                chroma=(128.0, 128.0),
                size=float(rng.uniform(10, 24)),
            )
        raster = render_object(spec)
        features.append(shape_ratios(silhouette_stats(raster)))
        labels.append(label)
    return np.array(features), np.array(labels)


def save_dataset(path: str | Path, features: np.ndarray, labels: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"f{i}" for i in range(features.shape[1])] + ["label"])
        for row, label in zip(features, labels):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])


def load_dataset(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        next(reader)  # header
        features, labels = [], []
        for row in reader:
            features.append([float(v) for v in row[:-1]])
            labels.append(int(row[-1]))
    return np.array(features), np.array(labels)
