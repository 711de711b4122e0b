"""Tests for sequential thinning."""

import random

from pixeltopo import (
    PAIR_48,
    PAIR_84,
    BinaryImage,
    config_of,
    count_black_components,
    count_white_components,
    is_simple,
    skeletonize,
)

from conftest import random_image


def _has_simple_point(img, pair):
    return any(is_simple(config_of(img, p), pair) for p in img.black_points())


def test_full_block_preserves_both_counts():
    img = BinaryImage(5, 5, [1] * 25)
    for pair in (PAIR_48, PAIR_84):
        result = skeletonize(img, pair)
        assert result.converged
        assert count_black_components(result.image, pair.n) == 1
        assert count_white_components(result.image, pair.n_bar) == 1
        assert not _has_simple_point(result.image, pair)
        assert result.deleted == 25 - result.image.count_black()


def test_all_white_image_converges_immediately():
    result = skeletonize(BinaryImage(4, 4), PAIR_84)
    assert result.converged
    assert result.passes == 1
    assert result.deleted == 0


def test_bar_with_curve_ends_keeps_a_curve():
    img = BinaryImage(10, 2, [1] * 20)
    result = skeletonize(img, PAIR_84, preserve_curve_ends=True)
    assert result.converged
    assert result.image.count_black() >= 2
    assert count_black_components(result.image, PAIR_84.n) == 1


def test_without_preservation_a_bar_shrinks_to_a_point():
    img = BinaryImage(10, 2, [1] * 20)
    result = skeletonize(img, PAIR_84)
    assert result.converged
    assert result.image.count_black() == 1  # only a non-simple isolated point is left


def test_pass_limit_reported_as_not_converged():
    img = BinaryImage(5, 5, [1] * 25)
    result = skeletonize(img, PAIR_84, max_passes=1)
    assert not result.converged
    assert result.passes == 1


def test_random_images_keep_topology_and_reach_fixpoints(rng):
    for _ in range(20):
        img = random_image(rng, 12, 12)
        for pair in (PAIR_48, PAIR_84):
            blacks = count_black_components(img, pair.n)
            whites = count_white_components(img, pair.n_bar)
            result = skeletonize(img, pair)
            assert result.converged
            assert count_black_components(result.image, pair.n) == blacks
            assert count_white_components(result.image, pair.n_bar) == whites
            assert not _has_simple_point(result.image, pair)
            again = skeletonize(result.image, pair)
            assert again.image == result.image
            assert again.deleted == 0


def test_idempotent_with_curve_end_preservation(rng):
    for _ in range(5):
        img = random_image(rng, 12, 12, density=0.6)
        result = skeletonize(img, PAIR_48, preserve_curve_ends=True)
        again = skeletonize(result.image, PAIR_48, preserve_curve_ends=True)
        assert again.image == result.image
