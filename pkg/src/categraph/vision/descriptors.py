"""Feature descriptors: quartered-bounding-box chroma averages and shape ratios."""

from __future__ import annotations

import numpy as np

from .raster import Raster
from .silhouette import SilhouetteStats


def quarter_averages(raster: Raster) -> np.ndarray:
    """Mean chroma per bounding-box quarter, over object pixels only.

    The axis-aligned bounding box of the mask is split into four quarters;
    for each quarter (upper-left, upper-right, lower-left, lower-right) the
    mean a and mean b over the object pixels inside it are returned, giving
    eight values.  Quarters without object pixels yield 0.
    """
    if not raster.mask.any():
        raise ValueError("empty mask")
    rows, cols = np.nonzero(raster.mask)
    r0, r1 = int(rows.min()), int(rows.max())
    c0, c1 = int(cols.min()), int(cols.max())
    row_mid = (r0 + r1 + 1) // 2
    col_mid = (c0 + c1 + 1) // 2
    out = []
    for row_slice in ((r0, row_mid), (row_mid, r1 + 1)):
        for col_slice in ((c0, col_mid), (col_mid, c1 + 1)):
            quarter_mask = np.zeros_like(raster.mask)
            quarter_mask[row_slice[0]:row_slice[1], col_slice[0]:col_slice[1]] = True
            quarter_mask &= raster.mask
            n = int(quarter_mask.sum())
            if n == 0:
                out.extend([0.0, 0.0])
            else:
                out.append(float(raster.a[quarter_mask].mean()))
                out.append(float(raster.b[quarter_mask].mean()))
    return np.array(out)


def shape_ratios(stats: SilhouetteStats) -> tuple[float, float]:
    """(object area / oriented box area, object area / enclosing circle area)."""
    if stats.object_area <= 0.0:
        raise ValueError("degenerate silhouette: object area is zero")
    if stats.oriented_box_area <= 0.0 or stats.min_circle_area <= 0.0:
        raise ValueError("degenerate silhouette: zero box or circle area")
    return (
        stats.object_area / stats.oriented_box_area,
        stats.object_area / stats.min_circle_area,
    )
