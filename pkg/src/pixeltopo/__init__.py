"""Topological numbers, simple-point detection and point classification for
2D binary images on the integer grid.

The object of an image carries one connectivity (4 or 8) and its complement
the dual one. For every object point, two topological numbers computed on
its 8-neighborhood decide whether the point is isolated, interior, simple,
a curve point, or a junction of 3 or 4 curves; simple points are exactly
those whose deletion preserves both global component counts.
"""

from .enumeration import (
    CharacterizationReport,
    JointHistogram,
    MarginalHistogram,
    class_census,
    joint_histogram,
    marginal_histogram,
    verify_local_characterization,
)
from .grid import (
    PAIR_48,
    PAIR_84,
    BinaryImage,
    Connectivity,
    ConnPair,
    Point,
    adjacent,
    connected_components,
    count_components_adjacent_to,
    neighbors,
)
from .netpbm import (
    DEFAULT_PALETTE,
    Palette,
    PBMParseError,
    load_palette,
    read_pbm,
    render_classification,
    validate_palette,
    write_pbm,
)
from .oracle import count_black_components, count_white_components, is_simple_global
from .thinning import ThinningResult, skeletonize
from .topo import (
    NEIGHBOR_OFFSETS,
    Phase,
    PointClass,
    black_offsets,
    census,
    classify,
    classify_image,
    complement,
    config_diagram,
    config_of,
    is_curve_end,
    is_simple,
    mask_from_offsets,
    mask_image,
    topo_pair,
    topological_number,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryImage",
    "CharacterizationReport",
    "ConnPair",
    "Connectivity",
    "DEFAULT_PALETTE",
    "JointHistogram",
    "MarginalHistogram",
    "NEIGHBOR_OFFSETS",
    "PAIR_48",
    "PAIR_84",
    "PBMParseError",
    "Palette",
    "Phase",
    "Point",
    "PointClass",
    "ThinningResult",
    "adjacent",
    "black_offsets",
    "census",
    "class_census",
    "classify",
    "classify_image",
    "complement",
    "config_diagram",
    "config_of",
    "connected_components",
    "count_black_components",
    "count_components_adjacent_to",
    "count_white_components",
    "is_curve_end",
    "is_simple",
    "is_simple_global",
    "joint_histogram",
    "load_palette",
    "marginal_histogram",
    "mask_from_offsets",
    "mask_image",
    "neighbors",
    "read_pbm",
    "render_classification",
    "skeletonize",
    "topo_pair",
    "topological_number",
    "validate_palette",
    "verify_local_characterization",
    "write_pbm",
]
