"""Synthetic rasters: a binary object mask plus two chroma channels.

The luminance channel is deliberately absent; background pixels carry zero
chroma and are excluded from every statistic downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ObjectSpec:
    """Recipe for one rendered object.

    size is the side length for rectangles (or a (width, height) pair) and
    the radius for circles.  noise adds seeded per-pixel chroma jitter.
    """

    shape: str  # "rect" | "circle"
    chroma: tuple[float, float]
    size: float | tuple[float, float]
    rotation: float = 0.0
    noise: float = 0.0
    seed: int = 0


@dataclass
class Raster:
    a: np.ndarray
    b: np.ndarray
    mask: np.ndarray

    @property
    def height(self) -> int:
        return int(self.mask.shape[0])

    @property
    def width(self) -> int:
        return int(self.mask.shape[1])

    @property
    def object_pixel_count(self) -> int:
        return int(self.mask.sum())


def render_object(spec: ObjectSpec, canvas: tuple[int, int] = (64, 64)) -> Raster:
    """Deterministically rasterize the object centered on the canvas."""
    height, width = canvas
    cy, cx = height / 2.0, width / 2.0
    ys, xs = np.mgrid[0:height, 0:width]
    px = xs + 0.5 - cx
    py = ys + 0.5 - cy

    if spec.shape == "rect":
        if isinstance(spec.size, tuple):
            w, h = float(spec.size[0]), float(spec.size[1])
        else:
            w = h = float(spec.size)
        if w <= 0 or h <= 0:
            raise ValueError("rectangle sides must be positive")
        half_diag = math.hypot(w, h) / 2.0
        if half_diag > min(width, height) / 2.0:
            raise ValueError("shape does not fit the canvas")
        angle = math.radians(spec.rotation)
        cos_a, sin_a = math.cos(angle), math.sin(angle)
        u = px * cos_a + py * sin_a
        v = -px * sin_a + py * cos_a
        mask = (np.abs(u) <= w / 2.0) & (np.abs(v) <= h / 2.0)
    elif spec.shape == "circle":
        r = float(spec.size)
        if r <= 0:
            raise ValueError("circle radius must be positive")
        if r > min(width, height) / 2.0:
            raise ValueError("shape does not fit the canvas")
        mask = px * px + py * py <= r * r
    else:
        raise ValueError(f"unknown shape {spec.shape!r}")

    if not mask.any():
        raise ValueError("rendered object covers no pixels")

    a = np.zeros((height, width))
    b = np.zeros((height, width))
    a[mask] = spec.chroma[0]
    b[mask] = spec.chroma[1]
    if spec.noise > 0.0:
        rng = np.random.default_rng(spec.seed)
        a[mask] += rng.normal(0.0, spec.noise, int(mask.sum()))
        b[mask] += rng.normal(0.0, spec.noise, int(mask.sum()))
    return Raster(a=a, b=b, mask=mask)
