#
#    Module `penroseconst`: implements `PenroseConst` class.
#    penrosewang authors (C) 2024.
#
from fractions import Fraction


class PenroseConst:
    """Constant values shared by the modules of the package (tolerances, default radii, result kinds, names)."""
    FLOAT_GUARD = 1e-7
    """Distance below which a floating point candidate value is re-evaluated with exact arithmetic."""
    EDGE_LENGTH = Fraction(2, 5)
    """Edge length of the rhombic tiles; also the patch separation constant of the tiling metric."""
    VERTEX_BOUND = 0.6472135954999579
    """Upper bound for the distance of a rhomb corner `b_n` and its dual vertex `d_n` ((1+sqrt(5))/5)."""
    BENT_LINE_BOUND = Fraction(2, 3)
    """Upper bound for the distance of a bent grid line from its straight grid line."""
    SHIFT_BOUND = Fraction(4, 3)
    """Upper bound for the norm of the anchor shift of a reconstructed tiling."""
    DEFAULT_R1 = 6
    """Default strip half-width used for reconstruction from strips."""
    STRIP_MARGIN = 2
    """Extra width added around a strip when grid crossings are harvested for it."""
    FRAME_MIN_COS = 0.05
    """Smallest cosine between a strip direction and `v0` or `v1` reconstructed in the 0/1 Wang frame; strips
    closer to a lattice axis are reconstructed in a rotated frame."""
    LOCATE_CHUNK = 1 << 16
    """Number of points located together in the bifurcation diagram."""
    SCHEMA_VERSION = 1
    """Version of the JSON output schema."""

    SCAN_NONSINGULAR = 0
    """Singularity scan result: every crossing is 2-fold."""
    SCAN_WORM = 1
    """Singularity scan result: 3-fold crossings along one spine line."""
    SCAN_CARTWHEEL = 2
    """Singularity scan result: a 5-fold crossing exists."""
    SCAN_NAMES = {SCAN_NONSINGULAR: "nonsingular", SCAN_WORM: "worm", SCAN_CARTWHEEL: "cartwheel"}
    """Names of the singularity scan results."""

    POLY_RHOMB = 2
    """Dual polygon of a 2-fold crossing."""
    POLY_HEXAGON = 3
    """Dual polygon of a 3-fold crossing."""
    POLY_DECAGON = 5
    """Dual polygon of a 5-fold crossing."""

    ORIGIN_DUAL = "dual"
    """Tile origin: dual of a 2-fold crossing."""
    ORIGIN_WORMFILL = "wormfill"
    """Tile origin: filled worm hexagon."""
    ORIGIN_CARTWHEELFILL = "cartwheelfill"
    """Tile origin: filled cartwheel hexagon or decagon."""

    VARIANT_PLUS = "+"
    """Sturmian coding interval [1-alpha, 1)."""
    VARIANT_MINUS = "-"
    """Sturmian coding interval (1-alpha, 1]."""

    FRAME_TILING = "tiling"
    """Direction given in the tiling plane."""
    FRAME_LATTICE = "lattice"
    """Direction given in the Wang lattice."""

    SIDES = ("b", "t", "l", "r")
    """Sides of a Wang patch and of a Wang tile."""

# End
