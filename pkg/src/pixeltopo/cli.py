"""Command line front end: class maps, histogram tables, exhaustive
verification, mask inspection and thinning.

Exit codes: 0 success, 1 input parse failure, 2 output write failure,
3 verification mismatch, 4 thinning hit the pass limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, TextIO

from . import enumeration, netpbm, topo
from .grid import PAIR_48, PAIR_84, BinaryImage, ConnPair, Connectivity
from .thinning import skeletonize

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_WRITE = 2
EXIT_VERIFY = 3
EXIT_NO_FIXPOINT = 4


def _pair(connectivity: int) -> ConnPair:
    return PAIR_48 if connectivity == 4 else PAIR_84


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _read_input_image(args: argparse.Namespace) -> BinaryImage | None:
    """Load the input PBM, or print a diagnostic and return None."""
    try:
        data = Path(args.input).read_bytes()
    except OSError as exc:
        _fail(f"cannot read {args.input}: {exc}")
        return None
    try:
        img = netpbm.read_pbm(data)
    except netpbm.PBMParseError as exc:
        _fail(f"{args.input}: {exc}")
        return None
    return img.inverted() if getattr(args, "invert", False) else img


def cmd_classify(args: argparse.Namespace) -> int:
    img = _read_input_image(args)
    if img is None:
        return EXIT_PARSE
    palette = netpbm.DEFAULT_PALETTE
    if args.palette:
        try:
            palette = netpbm.load_palette(Path(args.palette).read_text())
        except (OSError, ValueError) as exc:
            _fail(f"palette {args.palette}: {exc}")
            return EXIT_PARSE
    classmap = topo.classify_image(img, _pair(args.connectivity))
    try:
        Path(args.output).write_bytes(netpbm.render_classification(classmap, palette))
    except OSError as exc:
        _fail(f"cannot write {args.output}: {exc}")
        return EXIT_WRITE
    if args.figure:
        # matplotlib import is slow; keep it off the no-figure path
        from .figures import save_classification_figure

        try:
            save_classification_figure(classmap, args.figure, palette)
        except OSError as exc:
            _fail(f"cannot write {args.figure}: {exc}")
            return EXIT_WRITE
    for cls, count in topo.census(classmap).items():
        print(f"{cls.value}: {count}")
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    pairs = [PAIR_48, PAIR_84] if args.connectivity is None else [_pair(args.connectivity)]
    if args.csv:
        print(enumeration.CSV_HEADER)
        for pair in pairs:
            for row in enumeration.joint_csv_rows(pair):
                print(row)
    else:
        print(enumeration.render_marginal_table())
        for pair in pairs:
            print()
            print(enumeration.render_joint_table(pair))
    return EXIT_OK


def _verdict(out: TextIO, label: str, ok: bool) -> None:
    print(f"{label}: {'PASS' if ok else 'FAIL'}", file=out)


def run_verification(
    local_test: Callable[[int, ConnPair], bool] | None = None,
    out: TextIO | None = None,
) -> int:
    """Run every exhaustive check, one PASS/FAIL line each.

    ``local_test`` substitutes the local simplicity predicate (used by tests
    to exercise the failure path)."""
    if out is None:
        out = sys.stdout
    ok_all = True

    report = enumeration.verify_local_characterization(local_test=local_test)
    agree = report.checked - len(report.mismatches)
    _verdict(out, f"simple-point test, local vs global ({agree}/{report.checked})", report.ok)
    if not report.ok:
        _fail("disagreeing masks: " + ", ".join(map(str, report.masks)))
        ok_all = False

    marginal_bad = []
    for (conn, phase), expected in enumeration.REFERENCE_MARGINALS.items():
        hist = enumeration.marginal_histogram(conn, phase)
        if hist.counts != expected or hist.overflow != 0:
            marginal_bad.append(f"T{conn.value}({phase.value})")
    _verdict(out, f"marginal histograms vs reference ({4 - len(marginal_bad)}/4)", not marginal_bad)
    if marginal_bad:
        _fail("marginal mismatch for: " + ", ".join(marginal_bad))
        ok_all = False

    joint_bad = []
    for pair, expected_cells in enumeration.REFERENCE_JOINT.items():
        if enumeration.joint_histogram(pair).nonzero_cells() != expected_cells:
            joint_bad.append(str(pair))
    _verdict(out, f"joint histograms vs reference ({2 - len(joint_bad)}/2)", not joint_bad)
    if joint_bad:
        _fail("joint mismatch for pairs: " + ", ".join(joint_bad))
        ok_all = False

    census_bad = [
        str(pair)
        for pair, expected_counts in enumeration.REFERENCE_CLASS_COUNTS.items()
        if enumeration.class_census(pair) != expected_counts
    ]
    _verdict(out, f"class census vs reference ({2 - len(census_bad)}/2)", not census_bad)
    if census_bad:
        _fail("census mismatch for pairs: " + ", ".join(census_bad))
        ok_all = False

    return EXIT_OK if ok_all else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    return run_verification()


def cmd_config(args: argparse.Namespace) -> int:
    mask = args.mask
    if not 0 <= mask <= 255:
        _fail(f"mask must be in 0..255, got {mask}")
        return EXIT_PARSE
    pair = _pair(args.connectivity)
    print(topo.config_diagram(mask))
    print(f"mask: {mask}")
    print(
        " ".join(
            f"T{conn.value}({phase.value})={topo.topological_number(mask, conn, phase)}"
            for phase in (topo.Phase.OBJECT, topo.Phase.COMPLEMENT)
            for conn in (Connectivity.FOUR, Connectivity.EIGHT)
        )
    )
    t, t_bar = topo.topo_pair(mask, pair)
    print(f"pair {pair}: T=({t},{t_bar}) class={topo.classify(mask, pair).value.lower()}")
    return EXIT_OK


def cmd_skeletonize(args: argparse.Namespace) -> int:
    img = _read_input_image(args)
    if img is None:
        return EXIT_PARSE
    result = skeletonize(
        img,
        _pair(args.connectivity),
        preserve_curve_ends=args.preserve_curve_ends,
        max_passes=args.max_iters,
    )
    if not result.converged:
        _fail(f"no fixpoint after {result.passes} passes (raise --max-iters)")
        return EXIT_NO_FIXPOINT
    try:
        Path(args.output).write_bytes(netpbm.write_pbm(result.image))
    except OSError as exc:
        _fail(f"cannot write {args.output}: {exc}")
        return EXIT_WRITE
    print(f"iterations: {result.passes}")
    print(f"deleted: {result.deleted}")
    return EXIT_OK


def _add_connectivity(parser: argparse.ArgumentParser, default: int | None = 8) -> None:
    if default is None:
        help_text = "object connectivity; omit to cover both pairs"
    else:
        help_text = f"object connectivity, the complement uses the dual (default {default})"
    parser.add_argument(
        "--connectivity", type=int, choices=(4, 8), default=default, help=help_text
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pixeltopo",
        description=(
            "Topological numbers, simple points and point classification "
            "for 2D binary images."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="write a color-coded class map (PPM) for a PBM image")
    p.add_argument("input", help="input PBM (P1 or P4)")
    p.add_argument("-o", "--output", required=True, help="output PPM path")
    _add_connectivity(p)
    p.add_argument("--invert", action="store_true", help="treat 0-bits as the object")
    p.add_argument("--palette", help="palette override file: '<ClassName> <r> <g> <b>' lines")
    p.add_argument("--figure", help="also save a matplotlib figure (map plus legend) here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="print the histogram tables over all 256 masks")
    _add_connectivity(p, default=None)
    p.add_argument("--csv", action="store_true", help="joint histogram as CSV, one row per cell")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="re-derive every table and cross-check the simple-point tests")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("config", help="inspect a single 8-neighbor mask")
    p.add_argument("mask", type=int, help="neighborhood mask, 0..255")
    _add_connectivity(p)
    p.set_defaults(func=cmd_config)

    p = sub.add_parser("skeletonize", help="thin the object by deleting simple points")
    p.add_argument("input", help="input PBM (P1 or P4)")
    p.add_argument("-o", "--output", required=True, help="output PBM path")
    _add_connectivity(p)
    p.add_argument("--invert", action="store_true", help="treat 0-bits as the object")
    p.add_argument(
        "--preserve-curve-ends",
        action="store_true",
        help="never delete curve endpoints, keeping a curve skeleton",
    )
    p.add_argument("--max-iters", type=int, default=10_000, help="pass limit (default 10000)")
    p.set_defaults(func=cmd_skeletonize)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
