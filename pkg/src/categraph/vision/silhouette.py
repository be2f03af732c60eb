"""Silhouette statistics: axis box, oriented box, and minimal enclosing circle.

Geometry runs over the centers of the object pixels, so the measured object
area is the area of their convex outline; that keeps the containment
relations (object <= oriented box, object <= circle) exact by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import convex_hull, min_enclosing_circle, oriented_bounding_box, polygon_area
from .raster import Raster


@dataclass
class SilhouetteStats:
    mask: np.ndarray
    axis_box: tuple[int, int, int, int]  # (row0, col0, row1, col1), inclusive
    oriented_box_area: float
    min_circle_area: float
    object_area: float


def silhouette_stats(raster: Raster | np.ndarray) -> SilhouetteStats:
    mask = raster.mask if isinstance(raster, Raster) else np.asarray(raster, dtype=bool)
    if not mask.any():
        raise ValueError("empty mask")
    rows, cols = np.nonzero(mask)
    axis_box = (int(rows.min()), int(cols.min()), int(rows.max()), int(cols.max()))
    points = [(float(c) + 0.5, float(r) + 0.5) for r, c in zip(rows, cols)]
    hull = convex_hull(points)
    object_area = polygon_area(hull)
    box_area, _ = oriented_bounding_box(hull)
    _, _, radius = min_enclosing_circle(hull if len(hull) >= 3 else points)
    return SilhouetteStats(
        mask=mask,
        axis_box=axis_box,
        oriented_box_area=box_area,
        min_circle_area=math.pi * radius * radius,
        object_area=object_area,
    )
