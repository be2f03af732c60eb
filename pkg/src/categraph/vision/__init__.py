from .geometry import (
    convex_hull,
    min_enclosing_circle,
    oriented_bounding_box,
    polygon_area,
)
from .raster import ObjectSpec, Raster, render_object
from .silhouette import SilhouetteStats, silhouette_stats
from .descriptors import quarter_averages, shape_ratios
from .mlp import Mlp, confusion_stats, load_mlp, mlp_from_document, mlp_to_document, save_mlp
from .classifier import RpropMlpClassifier
from .datasets import (
    load_dataset,
    make_color_dataset,
    make_shape_dataset,
    save_dataset,
)

__all__ = [
    "Mlp",
    "ObjectSpec",
    "Raster",
    "RpropMlpClassifier",
    "SilhouetteStats",
    "confusion_stats",
    "convex_hull",
    "load_dataset",
    "load_mlp",
    "make_color_dataset",
    "make_shape_dataset",
    "min_enclosing_circle",
    "mlp_from_document",
    "mlp_to_document",
    "oriented_bounding_box",
    "polygon_area",
    "quarter_averages",
    "render_object",
    "save_dataset",
    "save_mlp",
    "shape_ratios",
    "silhouette_stats",
]
