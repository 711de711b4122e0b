"""Grid geometry, adjacency and connected components on the integer plane.

Points are plain ``(x, y)`` tuples: ``x`` is the column, ``y`` the row, with
``y`` growing downward to match raster image formats. Everything here is a
pure function over finite point sets; nothing mutates its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

Point = tuple[int, int]


class Connectivity(Enum):
    """Pixel adjacency flavor: edge-sharing (FOUR) or edge-or-corner (EIGHT)."""

    FOUR = 4
    EIGHT = 8

    @property
    def dual(self) -> "Connectivity":
        """The connectivity the complement must use for Jordan-style separation."""
        return Connectivity.EIGHT if self is Connectivity.FOUR else Connectivity.FOUR


@dataclass(frozen=True)
class ConnPair:
    """Connectivity assignment for an image: ``n`` for the object, its dual
    for the complement. Only (4,8) and (8,4) are constructible."""

    n: Connectivity

    @property
    def n_bar(self) -> Connectivity:
        return self.n.dual

    def __str__(self) -> str:
        return f"({self.n.value},{self.n_bar.value})"


PAIR_48 = ConnPair(Connectivity.FOUR)
PAIR_84 = ConnPair(Connectivity.EIGHT)

# Neighbor offsets (dx, dy) in row-major order (by dy, then dx). The 8-offset
# order also fixes the bit layout of the neighborhood masks in `topo`.
OFFSETS_4: tuple[Point, ...] = ((0, -1), (-1, 0), (1, 0), (0, 1))
OFFSETS_8: tuple[Point, ...] = (
    (-1, -1), (0, -1), (1, -1),
    (-1, 0), (1, 0),
    (-1, 1), (0, 1), (1, 1),
)


def neighbors(p: Point, c: Connectivity) -> list[Point]:
    """The 4 or 8 neighbors of ``p`` (``p`` itself excluded), row-major."""
    x, y = p
    offsets = OFFSETS_4 if c is Connectivity.FOUR else OFFSETS_8
    return [(x + dx, y + dy) for dx, dy in offsets]


def adjacent(p: Point, q: Point, c: Connectivity) -> bool:
    """True iff ``p`` and ``q`` are distinct and c-adjacent."""
    dx = abs(p[0] - q[0])
    dy = abs(p[1] - q[1])
    if c is Connectivity.FOUR:
        return dx + dy == 1
    return max(dx, dy) == 1


def connected_components(points: Iterable[Point], c: Connectivity) -> list[set[Point]]:
    """Partition ``points`` into maximal c-connected subsets.

    Components are merged with a union-find over the point set and returned
    ordered by their smallest member in row-major (y, x) order, so the result
    does not depend on the iteration order of ``points``.
    """
    pts = set(points)
    parent: dict[Point, Point] = {p: p for p in pts}

    def find(p: Point) -> Point:
        root = p
        while parent[root] != root:
            root = parent[root]
        while parent[p] != root:  # path compression
            parent[p], p = root, parent[p]
        return root

    # Scanning the forward half of the stencil visits each adjacent pair once.
    if c is Connectivity.FOUR:
        forward = ((1, 0), (0, 1))
    else:
        forward = ((1, 0), (-1, 1), (0, 1), (1, 1))
    for x, y in pts:
        for dx, dy in forward:
            q = (x + dx, y + dy)
            if q in pts:
                ra, rb = find((x, y)), find(q)
                if ra != rb:
                    parent[rb] = ra

    groups: dict[Point, set[Point]] = {}
    for p in pts:
        groups.setdefault(find(p), set()).add(p)
    return sorted(groups.values(), key=lambda comp: min((y, x) for x, y in comp))


def count_components_adjacent_to(points: Iterable[Point], x: Point, c: Connectivity) -> int:
    """Number of c-components of ``points`` containing a point c-adjacent to ``x``.

    ``x`` must not belong to the set itself.
    """
    pts = set(points)
    if x in pts:
        raise ValueError(f"{x} must not belong to the point set")
    return sum(
        1
        for comp in connected_components(pts, c)
        if any(adjacent(p, x, c) for p in comp)
    )


class BinaryImage:
    """Finite rectangular bitmap. True bits are the object (black); any query
    outside the canvas reports white, so the object is always finite while
    the complement extends over the whole plane."""

    __slots__ = ("width", "height", "_bits")

    def __init__(self, width: int, height: int, bits: Iterable[object] | None = None):
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be positive, got {width}x{height}")
        self.width = width
        self.height = height
        if bits is None:
            self._bits = bytearray(width * height)
        else:
            self._bits = bytearray(1 if b else 0 for b in bits)
            if len(self._bits) != width * height:
                raise ValueError(f"expected {width * height} bits, got {len(self._bits)}")

    @classmethod
    def from_points(cls, width: int, height: int, points: Iterable[Point]) -> "BinaryImage":
        img = cls(width, height)
        for x, y in points:
            img.set_black(x, y)
        return img

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryImage":
        """Build from ASCII art rows; '#' or '1' is black, '.', '0' or ' ' white."""
        if not rows or not rows[0]:
            raise ValueError("need at least one non-empty row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("rows must all have the same length")
        bits = []
        for row in rows:
            for ch in row:
                if ch in "#1":
                    bits.append(1)
                elif ch in ".0 ":
                    bits.append(0)
                else:
                    raise ValueError(f"unexpected character {ch!r}")
        return cls(width, len(rows), bits)

    def is_black(self, x: int, y: int) -> bool:
        return (
            0 <= x < self.width
            and 0 <= y < self.height
            and self._bits[y * self.width + x] != 0
        )

    def set_black(self, x: int, y: int, black: bool = True) -> None:
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f"({x},{y}) outside {self.width}x{self.height} image")
        self._bits[y * self.width + x] = 1 if black else 0

    def black_points(self) -> list[Point]:
        """All object points in row-major order."""
        w = self.width
        return [(i % w, i // w) for i, b in enumerate(self._bits) if b]

    def count_black(self) -> int:
        return sum(self._bits)

    def copy(self) -> "BinaryImage":
        dup = BinaryImage(self.width, self.height)
        dup._bits[:] = self._bits
        return dup

    def inverted(self) -> "BinaryImage":
        """Swap object and complement inside the canvas."""
        dup = BinaryImage(self.width, self.height)
        dup._bits[:] = bytes(0 if b else 1 for b in self._bits)
        return dup

    def tobytes(self) -> bytes:
        """Row-major pixel dump, one byte per pixel (1 = black)."""
        return bytes(self._bits)

    def to_strings(self) -> list[str]:
        w = self.width
        return [
            "".join("#" if self._bits[y * w + x] else "." for x in range(w))
            for y in range(self.height)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return (
            (self.width, self.height) == (other.width, other.height)
            and self._bits == other._bits
        )

    def __repr__(self) -> str:
        return f"BinaryImage({self.width}x{self.height}, {self.count_black()} black)"
