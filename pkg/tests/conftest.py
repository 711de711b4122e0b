"""Shared fixtures and image builders for the test suite."""

import random

import pytest

from pixeltopo import BinaryImage


def random_image(rng: random.Random, width: int = 16, height: int = 16, density: float = 0.5) -> BinaryImage:
    return BinaryImage(width, height, [rng.random() < density for _ in range(width * height)])


def showcase_image() -> BinaryImage:
    """16x16 canvas exercising all six classes for the (4,8) pair: a lone
    pixel, a filled 3x3 block, a 1-wide segment, a T junction and a +
    crossing, all far enough apart that their neighborhoods stay clean."""
    img = BinaryImage(16, 16)
    img.set_black(1, 1)  # isolated pixel
    for y in range(1, 4):  # filled 3x3 block: interior at (5, 2)
        for x in range(4, 7):
            img.set_black(x, y)
    for x in range(1, 7):  # horizontal 1-wide segment along y=6
        img.set_black(x, 6)
    for x in range(9, 14):  # T junction: bar ...
        img.set_black(x, 1)
    for y in range(2, 5):  # ... plus stem at x=11
        img.set_black(11, y)
    for y in range(7, 12):  # + crossing: vertical ...
        img.set_black(11, y)
    for x in range(9, 14):  # ... and horizontal through (11, 9)
        img.set_black(x, 9)
    return img


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)
