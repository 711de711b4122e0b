"""Topology-preserving thinning by sequential deletion of simple points."""

from __future__ import annotations

from dataclasses import dataclass

from .grid import BinaryImage, ConnPair
from .topo import config_of, is_curve_end, is_simple


@dataclass
class ThinningResult:
    image: BinaryImage
    passes: int  # raster scans performed, including the final empty one
    deleted: int
    converged: bool


def skeletonize(
    img: BinaryImage,
    pair: ConnPair,
    preserve_curve_ends: bool = False,
    max_passes: int = 10_000,
) -> ThinningResult:
    """Scan in raster order, deleting any point that is simple at the moment
    of the test, until a full pass deletes nothing.

    Deleting one simple point at a time keeps both global component counts
    intact. With ``preserve_curve_ends`` the endpoints of 1-wide arcs
    survive, so curves are kept instead of shrinking away.
    """
    work = img.copy()
    passes = 0
    deleted = 0
    while passes < max_passes:
        passes += 1
        removed = 0
        for y in range(work.height):
            for x in range(work.width):
                if not work.is_black(x, y):
                    continue
                mask = config_of(work, (x, y))
                if not is_simple(mask, pair):
                    continue
                if preserve_curve_ends and is_curve_end(mask, pair):
                    continue
                work.set_black(x, y, False)
                removed += 1
        deleted += removed
        if removed == 0:
            return ThinningResult(work, passes, deleted, True)
    return ThinningResult(work, passes, deleted, False)
