#
#    Module `expansive`: implements strips of Penrose tilings (`StripRegion`, `Strip` classes), the
#    classification of directions, the reconstruction of a tiling from a strip and the worm flip witnesses of
#    the non-expansive directions.
#    penrosewang authors (C) 2024.
#
import logging
from collections import deque
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple
import numpy as np
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, DirectionV, V, VPRIME, ALPHA, as_qr5, dot
from penrosewang.pentagrid import Region, F0, F1, Window, make_params, singularity_scan, \
    translate_params, spine_family, family_coefficients
from penrosewang.duality import RhombTile, PenroseTiling, WormFill, cartwheel_perturbation, materialize
from penrosewang.sturmian import CircleInterval, recover_parameter
from penrosewang.wang import edge_index, walk_trail, read_margins, colors_of_margins, id_of_colors, \
    enumerate_canon_24, trail_roots

_logger = logging.getLogger(__name__)

_SIGNS_F1 = tuple(dot(V[o], F1).sign() for o in range(5))
_SIGNS_F0 = tuple(dot(V[o], F0).sign() for o in range(5))


class DegenerateFrameError(ValueError):
    """Raised when a strip direction is perpendicular to `v0` or `v1` (one Wang lattice index is constant
    along the strip)."""


class CoverageGapError(RuntimeError):
    """Raised when the Wang patches of a strip do not cover an interval of rows and columns.

    Args:
        missing_n0 (List[int]): missing first indices
        missing_n1 (List[int]): missing second indices
        message (str): error message
    """
    missing_n0: List[int]
    missing_n1: List[int]

    def __init__(self, missing_n0: List[int], missing_n1: List[int], message: str = "") -> None:
        self.missing_n0 = missing_n0
        self.missing_n1 = missing_n1
        super().__init__(message or f"Coverage gaps in the strip (n0: {missing_n0}, n1: {missing_n1}).")


def direction_transform(d: DirectionV, to_frame: str) -> DirectionV:
    """Transforms a direction between the tiling plane and the Wang lattice. A tiling vector `g` has the
    lattice coordinates ``(v0.g, v1.g)``, a lattice vector ``(x, y)`` is the tiling vector ``x*f1 + y*f0``.

    Raises:
        ValueError: in case of unknown frame

    Example:
        >>> direction_transform(DirectionV.perpendicular_to(2), "lattice").get_slope() == GAMMA
        True
    """
    if to_frame not in (PenroseConst.FRAME_TILING, PenroseConst.FRAME_LATTICE):
        raise ValueError(f"Invalid frame ({to_frame}).")
    if d.get_frame() == to_frame:
        return d
    g = d.get_generator()
    if to_frame == PenroseConst.FRAME_LATTICE:
        return DirectionV(PointV(dot(g, V[0]), dot(g, V[1])), d.get_tag(), PenroseConst.FRAME_LATTICE)
    return DirectionV(g.get_p() * F1 + g.get_q() * F0, d.get_tag(), PenroseConst.FRAME_TILING)


def non_expansive_directions() -> List[DirectionV]:
    """Returns the five non-expansive tiling directions (perpendicular to the grid vectors)."""
    return [DirectionV.perpendicular_to(j) for j in range(5)]


def non_expansive_slopes() -> List[Optional[Qr5]]:
    """Returns the Wang lattice slopes of the non-expansive directions by family (`None` is infinite).
    The order is ``[inf, 0, gamma, -1, alpha]`` for the families 0 to 4.

    Example:
        >>> non_expansive_slopes()[2] == GAMMA
        True
    """
    return [direction_transform(d, PenroseConst.FRAME_LATTICE).get_slope() for d in non_expansive_directions()]


class DirectionVerdict(NamedTuple):
    """Result of a direction classification: expansive flag and the family of a non-expansive direction."""
    expansive: bool
    family: Optional[int] = None


def classify_direction(d: DirectionV) -> DirectionVerdict:
    """Classifies a direction: non-expansive exactly if it is perpendicular to one of the grid vectors.

    Example:
        >>> classify_direction(DirectionV.from_slope(GAMMA, "lattice"))
        DirectionVerdict(expansive=False, family=2)
    """
    g = direction_transform(d, PenroseConst.FRAME_TILING).get_generator()
    for j in range(5):
        if not dot(g, V[j]):
            return DirectionVerdict(False, j)
    return DirectionVerdict(True)


def frame_rotation(d: DirectionV) -> int:
    """Returns the number of 72 degree rotations giving a Wang frame for strips in direction `d`. The 0/1
    frame is kept while the direction makes a cosine of at least `PenroseConst.FRAME_MIN_COS` with both `v0`
    and `v1`, otherwise the rotation with the largest such cosine for the rotated direction is returned.

    Example:
        >>> frame_rotation(DirectionV.from_slope(Qr5(1)))
        0
    """
    unit = np.array(direction_transform(d, PenroseConst.FRAME_TILING).to_cartesian())
    cosines = np.abs(np.array([v.to_cartesian() for v in V]) @ unit)

    def transverse(steps: int) -> float:
        # The rotated direction meets v0 and v1 as the original one meets v_{-steps} and v_{1-steps}.
        return float(min(cosines[(-steps) % 5], cosines[(1 - steps) % 5]))

    if transverse(0) >= PenroseConst.FRAME_MIN_COS:
        return 0
    return max(range(5), key=transverse)


class StripRegion(Region):
    """Closed strip ``{s : |(s - c).d| <= L*|d|, |(s - c) x d| <= r*|d|}`` of half-width `r` and half-length
    `L` around the line through the center `c` in direction `d`.

    Args:
        direction (DirectionV): direction of the strip
        r (Any): half-width (exact, positive)
        length (Any): half-length (exact, positive)
        center (Optional[PointV]): center point (default is the origin)

    Raises:
        ValueError: in case of non-positive size
    """
    __direction: DirectionV         # Direction in the tiling frame
    __r: Qr5                        # Half-width
    __length: Qr5                   # Half-length
    __center: PointV                # Center point
    __unit: np.ndarray              # Float unit direction
    __cf: np.ndarray                # Float center

    def __init__(self, direction: DirectionV, r: Any, length: Any, center: Optional[PointV] = None) -> None:
        r, length = as_qr5(r), as_qr5(length)

        # Validate input parameters.
        if r <= 0:
            raise ValueError(f"Invalid strip half-width ({r}).")
        if length <= 0:
            raise ValueError(f"Invalid strip half-length ({length}).")
        self.__direction = direction_transform(direction, PenroseConst.FRAME_TILING)
        self.__r = r
        self.__length = length
        self.__center = center if center is not None else PointV()
        self.__unit = np.array(self.__direction.to_cartesian())
        self.__cf = np.array(self.__center.to_cartesian())

    def get_direction(self) -> DirectionV:
        """Returns the direction (tiling frame)."""
        return self.__direction

    def get_r(self) -> Qr5:
        """Returns the half-width."""
        return self.__r

    def get_length(self) -> Qr5:
        """Returns the half-length."""
        return self.__length

    def get_center(self) -> PointV:
        """Returns the center point."""
        return self.__center

    def contains(self, s: PointV) -> bool:
        d = self.__direction.get_generator()
        x = s - self.__center
        d2 = dot(d, d)
        t = dot(x, d)
        t2 = t * t
        return t2 <= self.__length * self.__length * d2 and dot(x, x) * d2 - t2 <= self.__r * self.__r * d2

    def contains_float(self, xs: np.ndarray, ys: np.ndarray, slack: float) -> np.ndarray:
        dx, dy = self.__unit
        x, y = xs - self.__cf[0], ys - self.__cf[1]
        along = x * dx + y * dy
        across = y * dx - x * dy
        return (np.abs(along) <= float(self.__length) + slack) & (np.abs(across) <= float(self.__r) + slack)

    def get_bounds(self) -> Tuple[float, float, float, float]:
        dx, dy = self.__unit
        length, r = float(self.__length), float(self.__r)
        corners = np.array([[sa * length * dx - sb * r * dy, sa * length * dy + sb * r * dx]
                            for sa in (-1, 1) for sb in (-1, 1)]) + self.__cf
        return (float(corners[:, 0].min()), float(corners[:, 1].min()),
                float(corners[:, 0].max()), float(corners[:, 1].max()))

    def translate(self, t: PointV) -> "StripRegion":
        return StripRegion(self.__direction, self.__r, self.__length, self.__center + t)

    def grow(self, margin: Any) -> "StripRegion":
        """Returns the strip grown by a margin in both directions."""
        return StripRegion(self.__direction, self.__r + margin, self.__length + margin, self.__center)

    def rot72(self, steps: int = 1) -> "StripRegion":
        """Returns the strip rotated by ``steps*72`` degrees counterclockwise around the origin."""
        g, c = self.__direction.get_generator(), self.__center
        for _ in range(steps % 5):
            g, c = g.rot72(), c.rot72()
        return StripRegion(DirectionV(g, None, PenroseConst.FRAME_TILING), self.__r, self.__length, c)

    def __repr__(self) -> str:
        return f"StripRegion(direction={self.__direction}, r={self.__r}, length={self.__length})"


def tiles_inside(tiles: Iterable[RhombTile], region: Region) -> List[RhombTile]:
    """Returns the tiles with all four vertices in a closed region (float test, exact near the boundary)."""
    tiles = list(tiles)
    if not tiles:
        return []
    points = np.array([v for t in tiles for v in t.get_cartesian_vertices()])
    guard = PenroseConst.FLOAT_GUARD
    inner = region.contains_float(points[:, 0], points[:, 1], -guard).reshape(-1, 4).all(axis=1)
    outer = region.contains_float(points[:, 0], points[:, 1], guard).reshape(-1, 4).all(axis=1)
    result = []
    for t, is_inner, is_outer in zip(tiles, inner.tolist(), outer.tolist()):
        if is_inner or (is_outer and all(region.contains(v) for v in t.get_vertices())):
            result.append(t)
    return result


class Strip:
    """Tiles of a tiling inside a strip (see `strip_extract`).

    Args:
        region (StripRegion): the strip
        tiles (Iterable[RhombTile]): the tiles with all vertices in the strip
    """
    __region: StripRegion               # Strip region
    __tiles: FrozenSet[RhombTile]       # Tiles

    def __init__(self, region: StripRegion, tiles: Iterable[RhombTile]) -> None:
        self.__region = region
        self.__tiles = frozenset(tiles)

    def get_region(self) -> StripRegion:
        """Returns the strip region."""
        return self.__region

    def get_direction(self) -> DirectionV:
        """Returns the direction of the strip."""
        return self.__region.get_direction()

    def get_tiles(self) -> FrozenSet[RhombTile]:
        """Returns the tiles."""
        return self.__tiles

    def rot72(self, steps: int = 1) -> "Strip":
        """Returns the strip and its tiles rotated by ``steps*72`` degrees counterclockwise around the origin."""
        return Strip(self.__region.rot72(steps), (t.rot72(steps) for t in self.__tiles))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Strip):
            return NotImplemented
        return self.__tiles == other.__tiles

    def __hash__(self) -> int:
        return hash(self.__tiles)

    def __repr__(self) -> str:
        return f"Strip(region={self.__region}, tiles={len(self.__tiles)})"


def strip_extract(x: PenroseTiling, d: DirectionV, r: Any, length: Any) -> Strip:
    """Returns the tiles of a tiling with all vertices in the strip of half-width `r` and half-length
    `length` around the line through the origin in direction `d`.

    Raises:
        ValueError: in case of non-positive size

    Example:
        >>> x = PenroseTiling(make_params((0, 0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))))
        >>> len(strip_extract(x, DirectionV(PointV(1, 1)), 2, 5).get_tiles()) > 0
        True
    """
    region = StripRegion(d, r, length)
    tiles = materialize(x, region.grow(PenroseConst.STRIP_MARGIN))
    result = Strip(region, tiles_inside(tiles, region))
    _logger.debug("strip_extract(): %d tiles in %r.", len(result.get_tiles()), region)
    return result


class Reconstruction(NamedTuple):
    """Result of a reconstruction from a strip.

    Fields:
        u2, u4: admissible parameter arcs of the anchor patch (``{u2 + n1*alpha}``, ``{u4 + n0*alpha}``)
        tile_id: Wang tile id of the anchor patch
        anchor: lower left corner tile of the anchor patch
        anchor_vertex: exact vertex ``d_n`` of the anchor patch
        t0: float estimate of the lower left corner ``b_n`` of the anchor rhomb
        patches: number of indexed Wang patches
        n0_span, n1_span: covered index ranges (relative to the anchor)
        frame: number of 72 degree rotations of the strip before the reconstruction, the other fields describe
            the rotated tiling (grid parameters ``u_{l - frame}`` at family `l`, see `rotate_params`)
    """
    u2: CircleInterval
    u4: CircleInterval
    tile_id: int
    anchor: RhombTile
    anchor_vertex: PointV
    t0: Tuple[float, float]
    patches: int
    n0_span: Tuple[int, int]
    n1_span: Tuple[int, int]
    frame: int = 0


def _try_walk(index: Dict, start: RhombTile, f: int, signs: Tuple[int, ...]) -> Optional[Tuple[Tuple[int, ...],
                                                                                               RhombTile]]:
    try:
        return walk_trail(index, start, f, signs)
    except RuntimeError:
        return None


def index_patches(tiles: Iterable[RhombTile]) -> Tuple[Dict[RhombTile, Tuple[int, int]], Dict, Dict]:
    """Indexes the Wang patches of a tile set: the corner tiles of the largest connected group get lattice
    indices (relative to an arbitrary first corner).

    Returns:
        Tuple: corner tile indices, bottom trails, left trails (word and end tile by corner tile)

    Raises:
        RuntimeError: in case of inconsistent indices
    """
    tiles = set(tiles)
    index = edge_index(tiles)
    corners = sorted((t for t in tiles if t.get_family() == (0, 1)), key=RhombTile.sort_key)
    right = {c: _try_walk(index, c, 1, _SIGNS_F1) for c in corners}
    up = {c: _try_walk(index, c, 0, _SIGNS_F0) for c in corners}
    neighbors: Dict[RhombTile, List[Tuple[RhombTile, Tuple[int, int]]]] = {c: [] for c in corners}
    for c in corners:
        for walk, step in ((right[c], (1, 0)), (up[c], (0, 1))):
            if walk is not None and walk[1] in neighbors:
                neighbors[c].append((walk[1], step))
                neighbors[walk[1]].append((c, (-step[0], -step[1])))

    best: Dict[RhombTile, Tuple[int, int]] = {}
    seen = set()
    for c in corners:
        if c in seen:
            continue
        component = {c: (0, 0)}
        seen.add(c)
        queue = deque([c])
        while queue:
            a = queue.popleft()
            n = component[a]
            for b, step in neighbors[a]:
                m = (n[0] + step[0], n[1] + step[1])
                if b in component:
                    if component[b] != m:
                        raise RuntimeError(f"Inconsistent Wang patch indices ({component[b]} != {m}).")
                    continue
                component[b] = m
                seen.add(b)
                queue.append(b)
        if len(component) > len(best):
            best = component
    return best, right, up


def _missing(indices: Iterable[int]) -> List[int]:
    indices = set(indices)
    return sorted(set(range(min(indices), max(indices) + 1)) - indices)


def _estimated_corner(vertex: PointV, u2: float, u4: float) -> np.ndarray:
    """Returns the float estimate ``d_n + (2/5)*(u2*v2 + u3*v3 + u4*v4)`` of the rhomb corner ``b_n``."""
    u3 = (-u2 - u4) % 1.0
    result = np.array(vertex.to_cartesian())
    for l, value in ((2, u2), (3, u3), (4, u4)):
        result = result + value * np.array(VPRIME[l].to_cartesian())
    return result


def reconstruct_from_strip(strip: Strip) -> Reconstruction:
    """Reconstructs the parameters and the position of a tiling from one of its strips. The Wang patches of
    the strip are indexed, their symbols give two finite golden Sturmian words, the words give parameter
    arcs, and the patch containing the origin is anchored exactly by matching its canonical patch. A strip
    close to a lattice axis is rotated first (see `frame_rotation`).

    Args:
        strip (Strip): strip of a tiling

    Returns:
        Reconstruction: parameter arcs and exact anchor of the tiling

    Raises:
        DegenerateFrameError: if the strip direction is perpendicular to `v0` or `v1`
        CoverageGapError: if the patches do not cover an interval of rows and columns
        RuntimeError: in case of inconsistent symbols or failed anchor matching
    """
    g = strip.get_direction().get_generator()
    for j in (0, 1):
        if not dot(g, V[j]):
            raise DegenerateFrameError(f"Invalid strip direction, it is perpendicular to v{j}.")
    verdict = classify_direction(strip.get_direction())
    if not verdict.expansive:
        _logger.warning("reconstruct_from_strip(): non-expansive direction (family %d).", verdict.family)
    frame = frame_rotation(strip.get_direction())
    if frame:
        _logger.info("reconstruct_from_strip(): strip rotated by %d*72 degrees.", frame)
        strip = strip.rot72(frame)

    tiles = strip.get_tiles()
    positions, right, up = index_patches(tiles)

    # Read the symbols of the complete patches.
    z: Dict[int, int] = {}
    zp: Dict[int, int] = {}
    for c, (n0, n1) in positions.items():
        if right[c] is None or up[c] is None:
            continue
        letters = [abs(x) for x in right[c][0] + up[c][0]]
        for store, key, value in ((z, n0, letters.count(4) - 1), (zp, n1, letters.count(2) - 1)):
            if value not in (0, 1):
                raise RuntimeError(f"Invalid symbol ({value}) at n={(n0, n1)}.")
            if store.setdefault(key, value) != value:
                raise RuntimeError(f"Inconsistent symbols at n={(n0, n1)}.")
    if not z or not zp:
        raise CoverageGapError([], [], "No complete Wang patch in the strip.")
    missing_n0, missing_n1 = _missing(z), _missing(zp)
    if missing_n0 or missing_n1:
        raise CoverageGapError(missing_n0, missing_n1)

    interval4 = recover_parameter(z)
    interval2 = recover_parameter(zp)

    # Choose the patch whose estimated rhomb contains the origin.
    mid2, mid4 = float(interval2.get_midpoint()), float(interval4.get_midpoint())
    alpha = float(ALPHA)
    v0f, v1f = np.array(V[0].to_cartesian()), np.array(V[1].to_cartesian())
    best: Optional[Tuple[float, RhombTile, np.ndarray]] = None
    for c, (n0, n1) in positions.items():
        vertex = c.get_anchor() + VPRIME[0] + VPRIME[1]
        b = _estimated_corner(vertex, (mid2 + n1 * alpha) % 1.0, (mid4 + n0 * alpha) % 1.0)
        p, q = -b @ v0f, -b @ v1f
        inside = -1e-9 <= p <= 1 + 1e-9 and -1e-9 <= q <= 1 + 1e-9
        rank = 0.0 if inside else float(np.hypot(*b)) + 10.0
        if best is None or rank < best[0] or (rank == best[0] and np.hypot(*b) < np.hypot(*best[2])):
            best = (rank, c, b)
    _, anchor, t0 = best
    n = positions[anchor]
    if float(np.hypot(*t0)) >= float(PenroseConst.SHIFT_BOUND):
        raise RuntimeError(f"Anchor shift estimate too large ({t0}).")

    # Match the canonical patch of the anchor exactly.
    margins = read_margins(tiles, anchor)
    tile_id = id_of_colors(colors_of_margins(margins))
    vertex = anchor.get_anchor() + VPRIME[0] + VPRIME[1]
    canon = enumerate_canon_24()[tile_id]
    placed = [t.translate(vertex) for t in canon.get_tiles()]
    expected = tiles_inside(placed, strip.get_region())
    if not set(expected) <= set(tiles):
        raise RuntimeError(f"Canonical patch {tile_id} does not match the strip at the anchor.")

    result = Reconstruction(interval2.rotate(n[1] * ALPHA), interval4.rotate(n[0] * ALPHA), tile_id, anchor,
                            vertex, (float(t0[0]), float(t0[1])), len(positions),
                            (min(z) - n[0], max(z) - n[0]), (min(zp) - n[1], max(zp) - n[1]), frame)
    _logger.debug("reconstruct_from_strip(): %r", result)
    return result


class FilledHexagon(NamedTuple):
    """Hexagon of three tiles around an interior vertex: center vertex, the three families (middle family
    first), the three tiles and the filling sign (see `hexagon_sign`)."""
    center: PointV
    families: Tuple[int, int, int]
    tiles: Tuple[RhombTile, RhombTile, RhombTile]
    sign: int


def hexagon_sign(center: PointV, tiles: Iterable[RhombTile], middle: int) -> int:
    """Returns the filling sign of a hexagon: +1 if the center is on the far side of the ``v'_middle`` edge of
    a tile with the middle family, -1 otherwise."""
    tile = min((t for t in tiles if middle in t.get_family()), key=RhombTile.sort_key)
    other = tile.other_family(middle)
    offset = center - tile.get_anchor()
    if offset in (VPRIME[middle], VPRIME[middle] + VPRIME[other]):
        return 1
    if offset in (PointV(), VPRIME[other]):
        return -1
    raise RuntimeError(f"Hexagon center {center} is not a vertex of {tile}.")


def find_filled_hexagons(tiles: Iterable[RhombTile], middle: Optional[int] = None) -> List[FilledHexagon]:
    """Returns the hexagons formed by three tiles around a vertex of degree 3 (optionally only the hexagons
    with a given middle family)."""
    at_vertex: Dict[PointV, List[RhombTile]] = {}
    for t in set(tiles):
        for v in t.get_vertices():
            at_vertex.setdefault(v, []).append(t)
    result = []
    for v, group in at_vertex.items():
        if len(group) != 3:
            continue
        if sum(t.get_angles()[t.get_vertices().index(v)] for t in group) != 10:
            continue
        families = {f for t in group for f in t.get_family()}
        if len(families) != 3 or len({t.get_family() for t in group}) != 3:
            continue
        x = spine_family(families)
        if middle is not None and x != middle:
            continue
        others = sorted(families - {x})
        group = tuple(sorted(group, key=RhombTile.sort_key))
        result.append(FilledHexagon(v, (x, others[0], others[1]), group, hexagon_sign(v, group, x)))
    result.sort(key=lambda h: h.center.sort_key())
    return result


class WormReading(NamedTuple):
    """Filling read from the tiles of a worm: the filling and the number of hexagons read."""
    filling: WormFill
    hexagons: int


def read_worm_filling(tiles: Iterable[RhombTile], spine: int, offset: Any) -> WormReading:
    """Reads the filling of a worm from tiles. The hexagons with middle family `spine` are grouped by their
    family `spine` trail, the trail closest to the line ``v_spine.s == offset`` is the worm.

    Raises:
        RuntimeError: if no hexagon is found or the signs of the worm are not consistent
    """
    tiles = set(tiles)
    hexagons = find_filled_hexagons(tiles, spine)
    if not hexagons:
        raise RuntimeError(f"No hexagon with middle family {spine}.")
    roots = trail_roots(tiles, spine)
    trails: Dict[RhombTile, List[FilledHexagon]] = {}
    for h in hexagons:
        tile = next(t for t in h.tiles if spine in t.get_family())
        trails.setdefault(roots[tile], []).append(h)
    vj = np.array(V[spine].to_cartesian())
    target = float(as_qr5(offset))
    worm = min(trails.values(),
               key=lambda hs: abs(float(np.mean([np.array(h.center.to_cartesian()) @ vj for h in hs])) - target))
    signs = {h.sign for h in worm}
    if len(signs) != 1:
        raise RuntimeError(f"Inconsistent worm signs along the spine ({len(worm)} hexagons).")
    return WormReading(WormFill(signs.pop()), len(worm))


def predicted_hexagon_sign(w: Tuple[Qr5, ...], families: Iterable[int]) -> int:
    """Returns the filling sign of the hexagon of three families produced by the perturbation `w`."""
    families = sorted(families)
    x = spine_family(families)
    a, b = [f for f in families if f != x]
    coeff_a, coeff_b = family_coefficients(a, b)[x]
    return (w[x] - coeff_a * w[a] - coeff_b * w[b]).sign()


def cartwheel_candidates(observed: Mapping[Tuple[int, ...], int]) -> List[int]:
    """Returns the cartwheel fillings consistent with observed hexagon signs.

    Args:
        observed (Mapping): filling sign by family triple of the hexagons along the spokes

    Returns:
        List[int]: fillings `k` (0..9) predicting the same signs
    """
    result = []
    for k in range(10):
        w = cartwheel_perturbation(k)
        if all(predicted_hexagon_sign(w, fam) == sign for fam, sign in observed.items()):
            result.append(k)
    return result


def observed_cartwheel_signs(tiles: Iterable[RhombTile]) -> Dict[Tuple[int, ...], int]:
    """Returns the filling signs of the hexagons inside a filled cartwheel decagon by family triple.

    Raises:
        RuntimeError: if two hexagons of the same families have different signs
    """
    inner = [t for t in tiles if t.get_origin() == PenroseConst.ORIGIN_CARTWHEELFILL]
    result: Dict[Tuple[int, ...], int] = {}
    for h in find_filled_hexagons(inner):
        key = tuple(sorted(h.families))
        if result.setdefault(key, h.sign) != h.sign:
            raise RuntimeError(f"Inconsistent hexagon signs for families {key}.")
    return result


class WormFlipAudit(NamedTuple):
    """Result of a worm flip: family, strip half-width, equality of the two strips, difference of the two
    tilings, tile counts and the largest distance of a differing tile vertex from the spine."""
    family: int
    r: int
    strips_equal: bool
    tilings_differ: bool
    strip_tiles: int
    differing_tiles: int
    max_spine_distance: float
    plus: PenroseTiling
    minus: PenroseTiling


WORM_EXAMPLE = (0, 0, Fraction(1, 3), 0, Fraction(2, 3))
"""Parameters of a worm tiling with spine line ``l_{3,0}`` through the origin."""


def worm_flip_counterexample(j: int, r: int, window_radius: int = 60) -> WormFlipAudit:
    """Builds the two fillings of a worm with spine perpendicular to `v_j` at distance ``r + 2`` from the
    origin, and compares them on the strip of half-width `r` along the spine direction and on a band around
    the spine.

    Raises:
        ValueError: in case of invalid family or size
        RuntimeError: if the example grid is not a worm
    """
    if j not in range(5):
        raise ValueError(f"Invalid family ({j}).")
    if r <= 0 or window_radius <= 0:
        raise ValueError(f"Invalid sizes (r={r}, window_radius={window_radius}).")
    u = make_params([WORM_EXAMPLE[(l - j + 3) % 5] for l in range(5)])
    scan = singularity_scan(u, Window.around(2))
    if scan.kind != PenroseConst.SCAN_WORM or scan.spine.j != j:
        raise RuntimeError(f"Example grid is not a worm of family {j} ({scan}).")
    distance = r + 2
    offset = scan.spine.k - u[j]
    u = translate_params(u, (offset + distance) * V[j])
    plus = PenroseTiling(u, WormFill(1))
    minus = PenroseTiling(u, WormFill(-1))

    d = DirectionV.perpendicular_to(j)
    strip_plus = strip_extract(plus, d, r, window_radius)
    strip_minus = strip_extract(minus, d, r, window_radius)
    band = StripRegion(d, 1, window_radius, -distance * V[j])
    tiles_plus = set(materialize(plus, band))
    tiles_minus = set(materialize(minus, band))
    differing = tiles_plus ^ tiles_minus
    vj = np.array(V[j].to_cartesian())
    spread = max((abs(float(np.array(p) @ vj) + distance) for t in differing for p in t.get_cartesian_vertices()),
                 default=0.0)
    result = WormFlipAudit(j, r, strip_plus == strip_minus, bool(differing), len(strip_plus.get_tiles()),
                           len(differing), spread, plus, minus)
    _logger.debug("worm_flip_counterexample(): %s", result[:7])
    return result

# End
