"""Global, definition-level topology checks on whole images.

This is the ground-truth side of the library: components are counted by
labeling the full bitmap with scipy.ndimage, with no reliance on the local
lookup tables, so the two routes can be cross-checked against each other.
Counting is redone from scratch on every call; this module is an oracle,
not a fast path.
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from .grid import BinaryImage, Connectivity, ConnPair, Point

_STRUCTURE = {
    Connectivity.FOUR: np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool),
    Connectivity.EIGHT: np.ones((3, 3), dtype=bool),
}


def _as_array(img: BinaryImage) -> np.ndarray:
    return (
        np.frombuffer(img.tobytes(), dtype=np.uint8)
        .reshape(img.height, img.width)
        .astype(bool)
    )


def count_black_components(img: BinaryImage, n: Connectivity) -> int:
    """Number of n-components of the object."""
    return int(ndimage.label(_as_array(img), structure=_STRUCTURE[n])[1])


def count_white_components(img: BinaryImage, n_bar: Connectivity, pad: int = 1) -> int:
    """Number of n_bar-components of the white side of the padded canvas.

    Padding with ``pad`` rings of white makes the unbounded background a
    single component; enclosed white regions (holes) count separately. One
    ring suffices; the parameter exists so tests can show the count is
    stable under wider padding.
    """
    if pad < 1:
        raise ValueError("pad must be >= 1")
    arr = np.pad(_as_array(img), pad, constant_values=False)
    return int(ndimage.label(~arr, structure=_STRUCTURE[n_bar])[1])


def is_simple_global(img: BinaryImage, p: Point, pair: ConnPair) -> bool:
    """Deletion-based simplicity test: removing ``p`` must leave both the
    object's n-component count and the complement's n_bar-component count
    unchanged. ``p`` must be an object point."""
    x, y = p
    if not img.is_black(x, y):
        raise ValueError(f"({x},{y}) is not an object point")
    after = img.copy()
    after.set_black(x, y, False)
    return count_black_components(img, pair.n) == count_black_components(
        after, pair.n
    ) and count_white_components(img, pair.n_bar) == count_white_components(
        after, pair.n_bar
    )
