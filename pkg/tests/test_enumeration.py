"""Tests for the exhaustive 256-mask sweeps and their cross-checks."""

from pixeltopo import (
    PAIR_48,
    PAIR_84,
    Connectivity,
    Phase,
    PointClass,
    class_census,
    classify,
    is_simple,
    joint_histogram,
    marginal_histogram,
    topological_number,
    verify_local_characterization,
)
from pixeltopo.enumeration import (
    REFERENCE_CLASS_COUNTS,
    REFERENCE_JOINT,
    REFERENCE_MARGINALS,
    joint_csv_rows,
    render_joint_table,
    render_marginal_table,
)

FOUR = Connectivity.FOUR
EIGHT = Connectivity.EIGHT


# ---------------------------------------------------------------------------
# Histograms
# ---------------------------------------------------------------------------

def test_marginals_match_reference():
    for (conn, phase), expected in REFERENCE_MARGINALS.items():
        hist = marginal_histogram(conn, phase)
        assert hist.counts == expected, (conn, phase)
        assert hist.overflow == 0
        assert hist.total() == 256


def test_object_and_complement_marginals_mirror():
    for conn in (FOUR, EIGHT):
        assert marginal_histogram(conn, Phase.OBJECT) == marginal_histogram(
            conn, Phase.COMPLEMENT
        )


def test_joint_histograms_match_reference():
    for pair, expected in REFERENCE_JOINT.items():
        hist = joint_histogram(pair)
        assert hist.nonzero_cells() == expected, pair
        assert hist.total() == 256


def test_joint_marginalizes_to_marginals():
    for pair in (PAIR_48, PAIR_84):
        hist = joint_histogram(pair)
        row_sums = tuple(sum(row) for row in hist.counts)
        col_sums = tuple(sum(hist.counts[t][tb] for t in range(5)) for tb in range(5))
        assert row_sums == marginal_histogram(pair.n, Phase.OBJECT).counts
        assert col_sums == marginal_histogram(pair.n_bar, Phase.COMPLEMENT).counts


def test_simple_count_explains_marginal_ones():
    # the k=1 marginals exceed the 116 simple masks by the (1,0) cell
    assert 117 == 116 + joint_histogram(PAIR_48).cell(1, 0)
    assert 132 == 116 + joint_histogram(PAIR_84).cell(1, 0)


# ---------------------------------------------------------------------------
# Class census
# ---------------------------------------------------------------------------

def test_class_census_matches_reference():
    for pair, expected in REFERENCE_CLASS_COUNTS.items():
        counts = class_census(pair)
        assert counts == expected, pair
        assert sum(counts.values()) == 256


def test_zero_object_number_masks_have_no_axis_neighbors():
    axis_bits = 0b01011010  # N, W, E, S
    expected = {mask for mask in range(256) if mask & axis_bits == 0}
    found = {
        mask
        for mask in range(256)
        if topological_number(mask, FOUR, Phase.OBJECT) == 0
    }
    assert found == expected
    assert len(found) == 16


def test_unique_class_representatives():
    junction4_48 = [m for m in range(256) if classify(m, PAIR_48) is PointClass.JUNCTION_4]
    assert junction4_48 == [0b01011010]  # exactly N, W, E, S black
    interior_48 = [m for m in range(256) if classify(m, PAIR_48) is PointClass.INTERIOR]
    assert interior_48 == [255]
    isolated_84 = [m for m in range(256) if classify(m, PAIR_84) is PointClass.ISOLATED]
    assert isolated_84 == [0]


# ---------------------------------------------------------------------------
# Local vs global cross-check
# ---------------------------------------------------------------------------

def test_full_cross_check_agrees():
    report = verify_local_characterization()
    assert report.ok
    assert report.checked == 512
    assert report.mismatches == []
    assert report.masks == []


def test_subset_cross_check():
    report = verify_local_characterization(masks=[0, 255])
    assert report.ok
    assert report.checked == 4


def test_fault_injection_reports_exact_masks():
    def flipped(mask, pair):
        verdict = is_simple(mask, pair)
        return not verdict if mask == 137 else verdict

    report = verify_local_characterization(local_test=flipped)
    assert not report.ok
    assert report.masks == [137]
    assert len(report.mismatches) == 2  # both pairs disagree for that mask


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def test_marginal_table_mentions_every_count():
    text = render_marginal_table()
    for value in ("16", "117", "132", "102", "20"):
        assert value in text
    assert text.count("\n") == 4  # header plus four rows


def test_joint_table_shows_pair():
    text = render_joint_table(PAIR_48)
    assert "(4,8)" in text
    assert "116" in text


def test_csv_rows_cover_the_grid():
    rows = joint_csv_rows(PAIR_48)
    assert len(rows) == 25
    assert sum(int(r.rsplit(",", 1)[1]) for r in rows) == 256
    assert rows[0].startswith("4,0,0,")
