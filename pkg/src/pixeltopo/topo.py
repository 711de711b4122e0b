"""Local 3x3 topology: neighborhood masks, topological numbers, point classes.

The 8 neighbors of a point are packed into one byte, bit k holding the state
of the k-th offset of ``grid.OFFSETS_8`` (row-major: bit 0 = NW, 1 = N,
2 = NE, 3 = W, 4 = E, 5 = SW, 6 = S, 7 = SE). Complementing an image is then
a bitwise NOT of the mask. The topological numbers of every (mask,
connectivity, phase) combination are precomputed through the component
machinery of :mod:`pixeltopo.grid`, so all per-pixel tests are table lookups.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .grid import (
    OFFSETS_8,
    BinaryImage,
    Connectivity,
    ConnPair,
    Point,
    count_components_adjacent_to,
)

NEIGHBOR_OFFSETS: tuple[Point, ...] = OFFSETS_8
NW, N, NE, W, E, SW, S, SE = NEIGHBOR_OFFSETS
_BIT = {off: k for k, off in enumerate(NEIGHBOR_OFFSETS)}


class Phase(Enum):
    """Which side of the image a topological number is taken on."""

    OBJECT = "object"
    COMPLEMENT = "complement"


class PointClass(Enum):
    """Topological classes of object points, plus BACKGROUND for the pixels
    outside the object in whole-image maps."""

    ISOLATED = "Isolated"
    INTERIOR = "Interior"
    SIMPLE = "Simple"
    CURVE = "Curve"
    JUNCTION_3 = "Junction3"
    JUNCTION_4 = "Junction4"
    BACKGROUND = "Background"


OBJECT_CLASSES = (
    PointClass.ISOLATED,
    PointClass.INTERIOR,
    PointClass.SIMPLE,
    PointClass.CURVE,
    PointClass.JUNCTION_3,
    PointClass.JUNCTION_4,
)

# The only (object number, complement number) pairs that occur over the 256
# masks; anything else coming out of the tables would be a bug.
_CLASS_BY_PAIR = {
    (0, 1): PointClass.ISOLATED,
    (1, 0): PointClass.INTERIOR,
    (1, 1): PointClass.SIMPLE,
    (2, 2): PointClass.CURVE,
    (3, 3): PointClass.JUNCTION_3,
    (4, 4): PointClass.JUNCTION_4,
}


def _check_mask(mask: int) -> None:
    if not 0 <= mask <= 255:
        raise ValueError(f"neighborhood mask must be in 0..255, got {mask}")


def complement(mask: int) -> int:
    """Mask of the white neighbors."""
    _check_mask(mask)
    return mask ^ 0xFF


def mask_from_offsets(offsets: Iterable[Point]) -> int:
    """Mask with the given neighbor offsets black; offsets must be in
    ``NEIGHBOR_OFFSETS``."""
    mask = 0
    for off in offsets:
        mask |= 1 << _BIT[off]
    return mask


def black_offsets(mask: int) -> tuple[Point, ...]:
    """Offsets of the black neighbors, in bit order."""
    _check_mask(mask)
    return tuple(off for off, k in _BIT.items() if mask >> k & 1)


def config_of(img: BinaryImage, p: Point) -> int:
    """Pack the black/white states of p's 8 neighbors into a mask.

    Out-of-image neighbors read as white; ``p`` itself may lie anywhere,
    even outside the canvas.
    """
    x, y = p
    mask = 0
    for k, (dx, dy) in enumerate(NEIGHBOR_OFFSETS):
        if img.is_black(x + dx, y + dy):
            mask |= 1 << k
    return mask


def mask_image(mask: int) -> BinaryImage:
    """3x3 image with a black center and ring pixels taken from ``mask``;
    the inverse of :func:`config_of` at the center (1, 1)."""
    _check_mask(mask)
    img = BinaryImage(3, 3)
    img.set_black(1, 1)
    for k, (dx, dy) in enumerate(NEIGHBOR_OFFSETS):
        if mask >> k & 1:
            img.set_black(1 + dx, 1 + dy)
    return img


def _build_table(conn: Connectivity, phase: Phase) -> tuple[int, ...]:
    table = []
    for mask in range(256):
        bits = mask if phase is Phase.OBJECT else mask ^ 0xFF
        pts = {off for off, k in _BIT.items() if bits >> k & 1}
        table.append(count_components_adjacent_to(pts, (0, 0), conn))
    return tuple(table)


_TABLES: dict[tuple[Connectivity, Phase], tuple[int, ...]] = {
    (conn, phase): _build_table(conn, phase) for conn in Connectivity for phase in Phase
}


def topological_number(mask: int, conn: Connectivity, phase: Phase = Phase.OBJECT) -> int:
    """Number of conn-components of the phase's neighbors in the mask that
    are conn-adjacent to the center."""
    _check_mask(mask)
    return _TABLES[(conn, phase)][mask]


def topo_pair(mask: int, pair: ConnPair) -> tuple[int, int]:
    """(object number under pair.n, complement number under pair.n_bar)."""
    return (
        topological_number(mask, pair.n, Phase.OBJECT),
        topological_number(mask, pair.n_bar, Phase.COMPLEMENT),
    )


def is_simple(mask: int, pair: ConnPair) -> bool:
    """Local simplicity test: both topological numbers equal one."""
    return topo_pair(mask, pair) == (1, 1)


def class_for_pair(t: int, t_bar: int) -> PointClass:
    try:
        return _CLASS_BY_PAIR[(t, t_bar)]
    except KeyError:
        raise RuntimeError(
            f"topological pair ({t},{t_bar}) matches no class; "
            "this indicates a table-construction bug"
        ) from None


def classify(mask: int, pair: ConnPair) -> PointClass:
    """Class of an object point whose neighborhood is ``mask``.

    Total over all 256 masks; never returns BACKGROUND.
    """
    t, t_bar = topo_pair(mask, pair)
    return class_for_pair(t, t_bar)


def is_curve_end(mask: int, pair: ConnPair) -> bool:
    """Simple point with exactly one black neighbor, that neighbor being
    pair.n-adjacent to the center."""
    if not is_simple(mask, pair):
        return False
    if mask == 0 or mask & (mask - 1):
        return False  # zero or several black neighbors
    dx, dy = NEIGHBOR_OFFSETS[mask.bit_length() - 1]
    return pair.n is Connectivity.EIGHT or abs(dx) + abs(dy) == 1


def classify_image(img: BinaryImage, pair: ConnPair) -> list[list[PointClass]]:
    """Per-pixel class map: object pixels get their class, all others
    BACKGROUND. Output dimensions equal input dimensions."""
    out = []
    for y in range(img.height):
        row = []
        for x in range(img.width):
            if img.is_black(x, y):
                row.append(classify(config_of(img, (x, y)), pair))
            else:
                row.append(PointClass.BACKGROUND)
        out.append(row)
    return out


def census(classmap: list[list[PointClass]]) -> dict[PointClass, int]:
    """Pixel count per class, every class present (zeros included)."""
    counts = {cls: 0 for cls in PointClass}
    for row in classmap:
        for cls in row:
            counts[cls] += 1
    return counts


def config_diagram(mask: int) -> str:
    """Three-line ASCII picture: '#' black neighbor, '.' white, 'x' center."""
    _check_mask(mask)
    rows = []
    for dy in (-1, 0, 1):
        cells = []
        for dx in (-1, 0, 1):
            if dx == 0 and dy == 0:
                cells.append("x")
            else:
                cells.append("#" if mask >> _BIT[(dx, dy)] & 1 else ".")
        rows.append(" ".join(cells))
    return "\n".join(rows)
