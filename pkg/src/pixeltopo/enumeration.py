"""Exhaustive sweep of all 2^8 = 256 neighborhood masks.

Derives the marginal and joint histograms of the topological numbers, the
per-class configuration counts, and cross-checks the local simplicity test
against the global deletion test for every mask and both connectivity pairs.
The frozen reference counts below are what `pixeltopo verify` and the test
suite hold the live enumeration against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import oracle, topo
from .grid import PAIR_48, PAIR_84, ConnPair, Connectivity
from .topo import Phase, PointClass

ALL_MASKS = range(256)
BOTH_PAIRS = (PAIR_48, PAIR_84)

REFERENCE_MARGINALS: dict[tuple[Connectivity, Phase], tuple[int, ...]] = {
    (Connectivity.FOUR, Phase.OBJECT): (16, 117, 102, 20, 1),
    (Connectivity.EIGHT, Phase.OBJECT): (1, 132, 102, 20, 1),
    (Connectivity.FOUR, Phase.COMPLEMENT): (16, 117, 102, 20, 1),
    (Connectivity.EIGHT, Phase.COMPLEMENT): (1, 132, 102, 20, 1),
}

REFERENCE_JOINT: dict[ConnPair, dict[tuple[int, int], int]] = {
    PAIR_48: {(0, 1): 16, (1, 0): 1, (1, 1): 116, (2, 2): 102, (3, 3): 20, (4, 4): 1},
    PAIR_84: {(0, 1): 1, (1, 0): 16, (1, 1): 116, (2, 2): 102, (3, 3): 20, (4, 4): 1},
}

REFERENCE_CLASS_COUNTS: dict[ConnPair, dict[PointClass, int]] = {
    PAIR_48: {
        PointClass.ISOLATED: 16,
        PointClass.INTERIOR: 1,
        PointClass.SIMPLE: 116,
        PointClass.CURVE: 102,
        PointClass.JUNCTION_3: 20,
        PointClass.JUNCTION_4: 1,
    },
    PAIR_84: {
        PointClass.ISOLATED: 1,
        PointClass.INTERIOR: 16,
        PointClass.SIMPLE: 116,
        PointClass.CURVE: 102,
        PointClass.JUNCTION_3: 20,
        PointClass.JUNCTION_4: 1,
    },
}


@dataclass(frozen=True)
class MarginalHistogram:
    """Counts of masks by topological number k = 0..4; ``overflow`` holds any
    k > 4 (always zero for a correct implementation)."""

    counts: tuple[int, int, int, int, int]
    overflow: int = 0

    def total(self) -> int:
        return sum(self.counts) + self.overflow


def marginal_histogram(conn: Connectivity, phase: Phase) -> MarginalHistogram:
    """Histogram of the topological number over all 256 masks."""
    buckets = [0] * 5
    overflow = 0
    for mask in ALL_MASKS:
        t = topo.topological_number(mask, conn, phase)
        if t <= 4:
            buckets[t] += 1
        else:
            overflow += 1
    return MarginalHistogram(tuple(buckets), overflow)


@dataclass(frozen=True)
class JointHistogram:
    """5x5 grid of mask counts indexed by (object number, complement number)."""

    counts: tuple[tuple[int, ...], ...]

    def cell(self, t: int, t_bar: int) -> int:
        return self.counts[t][t_bar]

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def nonzero_cells(self) -> dict[tuple[int, int], int]:
        return {
            (t, t_bar): v
            for t, row in enumerate(self.counts)
            for t_bar, v in enumerate(row)
            if v
        }


def joint_histogram(pair: ConnPair) -> JointHistogram:
    """Joint histogram of (object, complement) topological numbers over all
    256 masks."""
    cells = [[0] * 5 for _ in range(5)]
    for mask in ALL_MASKS:
        t, t_bar = topo.topo_pair(mask, pair)
        cells[t][t_bar] += 1  # numbers never exceed 4
    return JointHistogram(tuple(tuple(row) for row in cells))


def class_census(pair: ConnPair) -> dict[PointClass, int]:
    """How many of the 256 masks fall in each of the six object classes."""
    counts = {cls: 0 for cls in topo.OBJECT_CLASSES}
    for mask in ALL_MASKS:
        counts[topo.classify(mask, pair)] += 1
    return counts


@dataclass
class CharacterizationReport:
    """Outcome of the local-vs-global simplicity cross-check."""

    checked: int
    mismatches: list[tuple[int, ConnPair]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def masks(self) -> list[int]:
        """Offending masks as integers under the bit convention of `topo`."""
        return sorted({mask for mask, _ in self.mismatches})


def verify_local_characterization(
    masks: Iterable[int] | None = None,
    pairs: tuple[ConnPair, ...] = BOTH_PAIRS,
    local_test: Callable[[int, ConnPair], bool] | None = None,
) -> CharacterizationReport:
    """Compare ``topo.is_simple`` against ``oracle.is_simple_global`` on the
    3x3 embedding of every mask, for the given pairs.

    ``local_test`` may substitute a deliberately broken predicate so the
    mismatch-reporting path itself can be exercised.
    """
    if local_test is None:
        local_test = topo.is_simple
    if masks is None:
        masks = ALL_MASKS
    mismatches: list[tuple[int, ConnPair]] = []
    checked = 0
    for mask in masks:
        img = topo.mask_image(mask)
        for pair in pairs:
            checked += 1
            if local_test(mask, pair) != oracle.is_simple_global(img, (1, 1), pair):
                mismatches.append((mask, pair))
    return CharacterizationReport(checked, mismatches)


_MARGINAL_ROWS = (
    ("T4(object)", Connectivity.FOUR, Phase.OBJECT),
    ("T8(object)", Connectivity.EIGHT, Phase.OBJECT),
    ("T8(complement)", Connectivity.EIGHT, Phase.COMPLEMENT),
    ("T4(complement)", Connectivity.FOUR, Phase.COMPLEMENT),
)

CSV_HEADER = "object_connectivity,t_object,t_complement,count"


def _format_row(label: str, cells: Iterable[object]) -> str:
    return f"{label:<16}" + "".join(f"{c:>6}" for c in cells)


def render_marginal_table() -> str:
    """Aligned text table of all four marginal histograms."""
    lines = [_format_row("", [f"k={k}" for k in range(5)] + ["k>4"])]
    for label, conn, phase in _MARGINAL_ROWS:
        hist = marginal_histogram(conn, phase)
        lines.append(_format_row(label, [*hist.counts, hist.overflow]))
    return "\n".join(lines)


def render_joint_table(pair: ConnPair) -> str:
    """Aligned text table of the joint histogram for one pair."""
    hist = joint_histogram(pair)
    lines = [_format_row(f"pair {pair}", [f"t'={k}" for k in range(5)])]
    for t in range(5):
        lines.append(_format_row(f"t={t}", hist.counts[t]))
    return "\n".join(lines)


def joint_csv_rows(pair: ConnPair) -> list[str]:
    """One CSV row per (t, t') cell of the joint histogram: 25 rows."""
    hist = joint_histogram(pair)
    n = pair.n.value
    return [
        f"{n},{t},{t_bar},{hist.counts[t][t_bar]}"
        for t in range(5)
        for t_bar in range(5)
    ]
