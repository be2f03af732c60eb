import math

import numpy as np
import pytest

from categraph.vision import (
    ObjectSpec,
    Raster,
    SilhouetteStats,
    quarter_averages,
    render_object,
    shape_ratios,
    silhouette_stats,
)

# the 5x5 upper-right-quarter b-channel block with background zeros; the
# nonzero entries average to 1231/9
QUARTER_BLOCK = np.array(
    [
        [0, 0, 0, 0, 0],
        [130, 0, 0, 0, 0],
        [134, 137, 0, 0, 0],
        [138, 135, 139, 0, 0],
        [140, 138, 140, 0, 0],
    ],
    dtype=float,
)


class TestRenderObject:
    def test_axis_square_pixel_count_exact(self):
        raster = render_object(ObjectSpec("rect", (10.0, 20.0), 10))
        assert raster.object_pixel_count == 100

    def test_circle_pixel_count_near_area(self):
        raster = render_object(ObjectSpec("circle", (10.0, 20.0), 20, seed=1))
        expected = math.pi * 400
        assert abs(raster.object_pixel_count - expected) / expected < 0.02

    def test_determinism(self):
        spec = ObjectSpec("circle", (100.0, 150.0), 15, noise=3.0, seed=9)
        r1, r2 = render_object(spec), render_object(spec)
        assert np.array_equal(r1.mask, r2.mask)
        assert np.array_equal(r1.a, r2.a)
        assert np.array_equal(r1.b, r2.b)

    def test_background_is_zero(self):
        raster = render_object(ObjectSpec("rect", (90.0, 70.0), 8))
        assert raster.a[~raster.mask].sum() == 0.0
        assert raster.b[~raster.mask].sum() == 0.0

    def test_too_large_rejected(self):
        with pytest.raises(ValueError):
            render_object(ObjectSpec("circle", (1.0, 1.0), 40), canvas=(64, 64))
        with pytest.raises(ValueError):
            render_object(ObjectSpec("rect", (1.0, 1.0), (90, 10)), canvas=(64, 64))


def block_raster():
    """A 10x10-bounding-box raster whose upper-right quarter is QUARTER_BLOCK."""
    b = np.zeros((12, 12))
    b[0:5, 5:10] = QUARTER_BLOCK
    # anchors pin the mask bounding box to rows 0..9, cols 0..9
    b[0, 0] = 50.0
    b[9, 0] = 60.0
    b[9, 9] = 70.0
    mask = b != 0
    a = np.where(mask, 100.0, 0.0)
    return Raster(a=a, b=b, mask=mask)


class TestQuarterAverages:
    def test_block_example_average(self):
        values = quarter_averages(block_raster())
        upper_right_b = values[3]
        assert upper_right_b == pytest.approx(1231 / 9, abs=1e-9)
        assert abs(upper_right_b - 137) < 0.5

    def test_uniform_chroma(self):
        raster = render_object(ObjectSpec("circle", (70.0, 140.0), 18))
        values = quarter_averages(raster)
        assert values[0::2] == pytest.approx([70.0] * 4)
        assert values[1::2] == pytest.approx([140.0] * 4)

    def test_empty_quarters_read_zero(self):
        b = np.zeros((12, 12))
        b[0:3, 0:3] = 55.0  # object confined to the upper-left quarter...
        b[9, 9] = 44.0  # ...except one anchor pinning the box to 10x10
        mask = b != 0
        raster = Raster(a=np.where(mask, 5.0, 0.0), b=b, mask=mask)
        values = quarter_averages(raster)
        assert values[2] == 0.0 and values[3] == 0.0  # upper right
        assert values[4] == 0.0 and values[5] == 0.0  # lower left

    def test_background_pixels_never_contribute(self):
        raster = block_raster()
        grown = Raster(
            a=np.pad(raster.a, 7),
            b=np.pad(raster.b, 7),
            mask=np.pad(raster.mask, 7),
        )
        assert quarter_averages(grown) == pytest.approx(quarter_averages(raster))

    def test_empty_mask_rejected(self):
        empty = Raster(a=np.zeros((4, 4)), b=np.zeros((4, 4)), mask=np.zeros((4, 4), bool))
        with pytest.raises(ValueError):
            quarter_averages(empty)


class TestShapeRatios:
    def test_ideal_square(self):
        stats = SilhouetteStats(
            mask=np.ones((1, 1), bool),
            axis_box=(0, 0, 0, 0),
            oriented_box_area=4.0,
            min_circle_area=math.pi * 2.0,  # circumcircle radius sqrt(2)
            object_area=4.0,
        )
        ratios = shape_ratios(stats)
        assert ratios[0] == pytest.approx(1.0)
        assert ratios[1] == pytest.approx(2 / math.pi)

    def test_ideal_circle(self):
        stats = SilhouetteStats(
            mask=np.ones((1, 1), bool),
            axis_box=(0, 0, 0, 0),
            oriented_box_area=4.0,
            min_circle_area=math.pi,
            object_area=math.pi,
        )
        ratios = shape_ratios(stats)
        assert ratios[0] == pytest.approx(math.pi / 4)
        assert ratios[1] == pytest.approx(1.0)

    def test_rasterized_circle_close_to_ideal(self):
        raster = render_object(ObjectSpec("circle", (1.0, 1.0), 40), canvas=(96, 96))
        ratios = shape_ratios(silhouette_stats(raster))
        assert abs(ratios[0] - math.pi / 4) / (math.pi / 4) < 0.02
        assert abs(ratios[1] - 1.0) < 0.02

    def test_rasterized_axis_square_matches_analytic(self):
        raster = render_object(ObjectSpec("rect", (1.0, 1.0), 20))
        ratios = shape_ratios(silhouette_stats(raster))
        assert ratios[0] == pytest.approx(1.0, abs=1e-9)
        assert ratios[1] == pytest.approx(2 / math.pi, rel=1e-6)

    def test_invariant_under_translation_and_quarter_turn(self):
        base = render_object(ObjectSpec("rect", (1.0, 1.0), (24, 12), rotation=0))
        turned = render_object(ObjectSpec("rect", (1.0, 1.0), (24, 12), rotation=90))
        r_base = shape_ratios(silhouette_stats(base))
        r_turned = shape_ratios(silhouette_stats(turned))
        assert r_base[0] == pytest.approx(r_turned[0], rel=0.02)
        assert r_base[1] == pytest.approx(r_turned[1], rel=0.02)
        shifted_mask = np.roll(base.mask, (5, -7), axis=(0, 1))
        r_shifted = shape_ratios(silhouette_stats(shifted_mask))
        assert r_base == pytest.approx(r_shifted, rel=1e-9)

    def test_containment_invariants(self):
        for spec in (
            ObjectSpec("circle", (1.0, 1.0), 17),
            ObjectSpec("rect", (1.0, 1.0), (23, 9), rotation=31),
        ):
            stats = silhouette_stats(render_object(spec))
            assert stats.object_area <= stats.oriented_box_area + 1e-9
            assert stats.object_area <= stats.min_circle_area + 1e-9

    def test_degenerate_silhouette_rejected(self):
        mask = np.zeros((8, 8), bool)
        mask[3, 3] = True  # single pixel: zero-area outline
        with pytest.raises(ValueError):
            shape_ratios(silhouette_stats(mask))
