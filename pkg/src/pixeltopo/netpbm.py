"""Netpbm codecs and class-map rendering.

PBM (P1 plain, P4 raw) in, PBM P1 out, and binary PPM (P6) out for the
color-coded class maps. The PBM convention maps 1-bits to black, and black
is the object here; inversion, when wanted, is the caller's job.
"""

from __future__ import annotations

from .grid import BinaryImage
from .topo import PointClass

Color = tuple[int, int, int]
Palette = dict[PointClass, Color]

# Distinct, colorblind-considerate hues; the background stays white.
# Individual entries can be overridden via a palette file, see load_palette.
DEFAULT_PALETTE: Palette = {
    PointClass.ISOLATED: (230, 25, 75),
    PointClass.INTERIOR: (128, 128, 128),
    PointClass.SIMPLE: (60, 180, 75),
    PointClass.CURVE: (0, 130, 200),
    PointClass.JUNCTION_3: (245, 130, 48),
    PointClass.JUNCTION_4: (240, 50, 230),
    PointClass.BACKGROUND: (255, 255, 255),
}

_WHITESPACE = b" \t\n\r\x0b\x0c"
_MAX_DIM = 2**31 - 1
_MAX_PIXELS = 1 << 28  # refuse to allocate more than 256 Mpx

_CLASS_BY_NAME = {cls.value.lower(): cls for cls in PointClass}


class PBMParseError(ValueError):
    """Malformed PBM input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        b = data[pos]
        if b in _WHITESPACE:
            pos += 1
        elif b == 0x23:  # '#' comment runs to end of line
            while pos < len(data) and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    return pos


def _read_dimension(data: bytes, pos: int, name: str) -> tuple[int, int]:
    pos = _skip_space_and_comments(data, pos)
    if pos >= len(data):
        raise PBMParseError(f"missing {name}", pos)
    start = pos
    while pos < len(data) and 48 <= data[pos] <= 57:
        pos += 1
    if pos == start:
        raise PBMParseError(f"non-numeric {name}", start)
    value = int(data[start:pos])
    if value < 1:
        raise PBMParseError(f"{name} must be at least 1", start)
    if value > _MAX_DIM:
        raise PBMParseError(f"{name} overflows supported size", start)
    return value, pos


def _read_plain_raster(data: bytes, pos: int, total: int, bits: bytearray) -> None:
    count = 0
    while count < total:
        pos = _skip_space_and_comments(data, pos)
        if pos >= len(data):
            raise PBMParseError(f"truncated pixel data ({count} of {total} pixels)", pos)
        b = data[pos]
        if b == 48 or b == 49:
            bits[count] = b - 48
            count += 1
            pos += 1
        else:
            raise PBMParseError(f"invalid pixel character {chr(b)!r}", pos)


def _read_raw_raster(data: bytes, pos: int, width: int, height: int, bits: bytearray) -> None:
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PBMParseError("expected whitespace before raster data", pos)
    pos += 1  # exactly one separator byte in the raw format
    row_bytes = (width + 7) // 8
    if len(data) - pos < row_bytes * height:
        raise PBMParseError(
            f"truncated pixel data (need {row_bytes * height} raster bytes)", len(data)
        )
    i = 0
    for y in range(height):
        row = data[pos + y * row_bytes : pos + (y + 1) * row_bytes]
        for x in range(width):  # rows are padded to a byte boundary, MSB first
            bits[i] = row[x >> 3] >> (7 - (x & 7)) & 1
            i += 1


def read_pbm(data: bytes) -> BinaryImage:
    """Decode a plain (P1) or raw (P4) PBM stream; 1-bits become the object."""
    data = bytes(data)
    if data[:1] != b"P" or data[1:2] not in (b"1", b"4"):
        raise PBMParseError("malformed magic number (want P1 or P4)", 0)
    raw = data[1:2] == b"4"
    width, pos = _read_dimension(data, 2, "width")
    height, pos = _read_dimension(data, pos, "height")
    if width * height > _MAX_PIXELS:
        raise PBMParseError("dimension overflow (image too large)", pos)
    bits = bytearray(width * height)
    if raw:
        _read_raw_raster(data, pos, width, height, bits)
    else:
        _read_plain_raster(data, pos, width * height, bits)
    return BinaryImage(width, height, bits)


def write_pbm(img: BinaryImage) -> bytes:
    """Encode as plain P1; ``read_pbm(write_pbm(img)) == img``."""
    lines = [b"P1", f"{img.width} {img.height}".encode("ascii")]
    raw = img.tobytes()
    for y in range(img.height):
        row = bytes(48 + raw[y * img.width + x] for x in range(img.width))
        for i in range(0, len(row), 70):  # keep plain-format lines short
            lines.append(row[i : i + 70])
    return b"\n".join(lines) + b"\n"


def validate_palette(palette: Palette) -> None:
    """Require an entry for all seven classes and pairwise distinct colors."""
    missing = [cls for cls in PointClass if cls not in palette]
    if missing:
        raise ValueError(
            "palette misses classes: " + ", ".join(c.value for c in missing)
        )
    for cls, color in palette.items():
        if len(color) != 3 or any(
            not isinstance(v, int) or not 0 <= v <= 255 for v in color
        ):
            raise ValueError(f"bad color {color!r} for class {cls.value}")
    colors = list(palette.values())
    if len(set(colors)) != len(colors):
        raise ValueError("palette colors must be pairwise distinct")


def load_palette(text: str, base: Palette | None = None) -> Palette:
    """Parse '<ClassName> <r> <g> <b>' lines on top of ``base`` (default
    palette if omitted). Blank lines and '#' comments are allowed."""
    palette = dict(DEFAULT_PALETTE if base is None else base)
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(
                f"palette line {lineno}: want '<ClassName> <r> <g> <b>', got {raw_line!r}"
            )
        cls = _CLASS_BY_NAME.get(parts[0].lower())
        if cls is None:
            raise ValueError(f"palette line {lineno}: unknown class {parts[0]!r}")
        try:
            color = tuple(int(v) for v in parts[1:])
        except ValueError:
            raise ValueError(
                f"palette line {lineno}: color components must be integers"
            ) from None
        if any(not 0 <= v <= 255 for v in color):
            raise ValueError(f"palette line {lineno}: color components must be in 0..255")
        palette[cls] = color
    validate_palette(palette)
    return palette


def render_classification(
    classmap: list[list[PointClass]], palette: Palette | None = None
) -> bytes:
    """Encode a class map as binary PPM (P6), one palette color per pixel."""
    if palette is None:
        palette = DEFAULT_PALETTE
    validate_palette(palette)
    height = len(classmap)
    width = len(classmap[0]) if height else 0
    if width == 0 or any(len(row) != width for row in classmap):
        raise ValueError("class map must be non-empty and rectangular")
    body = bytearray()
    for row in classmap:
        for cls in row:
            body.extend(palette[cls])
    return b"P6\n%d %d\n255\n" % (width, height) + bytes(body)
