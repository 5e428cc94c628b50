#
#    Module `duality`: implements the pentagrid-to-tiling duality (`RhombTile`, `PolygonDual`,
#    `PenroseTiling` classes, singular fillings and the tiling audit).
#    penrosewang authors (C) 2024.
#
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, V, VPRIME, ZERO, dot
from penrosewang.pentagrid import PentagridParams, Crossing, Region, ScanResult, crossings_in_region, \
    family_coefficients, scan_crossings, spine_family

_logger = logging.getLogger(__name__)


def _lattice_vertex(m: Sequence[int]) -> PointV:
    """Returns ``(2/5)*sum(m_l*v_l)`` for an integer vector."""
    m0, m1, m2, m3, m4 = (int(x) for x in m)
    p = Qr5._make(Fraction(2 * (m0 - m2) - (m4 - m3), 5), Fraction(m4 - m3, 5))  # pylint: disable=protected-access
    q = Qr5._make(Fraction(2 * (m1 - m4) - (m2 - m3), 5), Fraction(m2 - m3, 5))  # pylint: disable=protected-access
    return PointV(p, q)


@lru_cache(maxsize=256)
def _param_offset(u: PentagridParams) -> PointV:
    """Returns ``-(2/5)*sum(u_l*v_l)``."""
    p, q = ZERO, ZERO
    for l in range(5):
        p = p - u[l] * VPRIME[l].get_p()
        q = q - u[l] * VPRIME[l].get_q()
    return PointV(p, q)


def dual_vertex(m: Sequence[int], u: PentagridParams) -> PointV:
    """Returns the tiling vertex ``(2/5)*sum((m_l - u_l)*v_l)`` of the grid cell `m`. The cell index is
    ``m_l = floor(v_l.s + u_l)``, so the offset enters with a minus sign.

    Example:
        >>> dual_vertex((0, -1, 0, 0, 0), make_params((0, 0, 0, 0, 0))) == -VPRIME[1]
        True
    """
    return _lattice_vertex(m) + _param_offset(u)


class RhombTile:
    """Rhombic tile spanned by the edge vectors ``v'_i`` and ``v'_j`` of two families (``i < j``). Tiles are
    equal if their families and anchors are equal.

    Args:
        family (Tuple[int, int]): the two families
        anchor (PointV): anchor vertex
        origin (str): ``dual``, ``wormfill`` or ``cartwheelfill``

    Raises:
        ValueError: in case of invalid families
    """
    __slots__ = ("_RhombTile__family", "_RhombTile__anchor", "_RhombTile__origin", "_RhombTile__vertices",
                 "_RhombTile__cartesian")
    __family: Tuple[int, int]                       # Families of the edges
    __anchor: PointV                                # Anchor vertex
    __origin: str                                   # Origin of the tile
    __vertices: Optional[Tuple[PointV, ...]]        # Lazy vertices
    __cartesian: Optional[Tuple[Tuple[float, float], ...]]

    def __init__(self, family: Tuple[int, int], anchor: PointV, origin: str = PenroseConst.ORIGIN_DUAL) -> None:
        i, j = family
        if not 0 <= i < j <= 4:
            raise ValueError(f"Invalid tile families ({family}).")
        self.__family = (i, j)
        self.__anchor = anchor
        self.__origin = origin
        self.__vertices = None
        self.__cartesian = None

    def get_family(self) -> Tuple[int, int]:
        """Returns the two families of the tile."""
        return self.__family

    def get_anchor(self) -> PointV:
        """Returns the anchor vertex."""
        return self.__anchor

    def get_origin(self) -> str:
        """Returns the origin of the tile."""
        return self.__origin

    def get_vertices(self) -> Tuple[PointV, ...]:
        """Returns the vertices ``A, A+v'_i, A+v'_i+v'_j, A+v'_j``."""
        if self.__vertices is None:
            a, (i, j) = self.__anchor, self.__family
            b = a + VPRIME[i]
            self.__vertices = (a, b, b + VPRIME[j], a + VPRIME[j])
        return self.__vertices

    def get_ccw_vertices(self) -> Tuple[PointV, ...]:
        """Returns the vertices in counterclockwise order."""
        vertices = self.get_vertices()
        if self.__family[1] - self.__family[0] <= 2:
            return vertices
        return vertices[0], vertices[3], vertices[2], vertices[1]

    def get_cartesian_vertices(self) -> Tuple[Tuple[float, float], ...]:
        """Returns the float coordinates of the vertices (order of `get_vertices`)."""
        if self.__cartesian is None:
            self.__cartesian = tuple(v.to_cartesian() for v in self.get_vertices())
        return self.__cartesian

    def get_angles(self) -> Tuple[int, ...]:
        """Returns the interior angles of the vertices (order of `get_vertices`) in units of 36 degrees."""
        d = self.__family[1] - self.__family[0]
        a = min(2 * d, 10 - 2 * d)
        return a, 5 - a, a, 5 - a

    def is_thick(self) -> bool:
        """Returns `True` for the thick (72 degrees) rhomb."""
        return self.get_angles()[0] == 2

    def get_edge_starts(self, f: int) -> Tuple[PointV, PointV]:
        """Returns the start points of the two ``v'_f`` edges: ``A`` and ``A + v'_o`` (`o` is the other
        family)."""
        i, j = self.__family
        if f == i:
            return self.__anchor, self.__anchor + VPRIME[j]
        if f == j:
            return self.__anchor, self.__anchor + VPRIME[i]
        raise ValueError(f"Invalid family ({f}) for tile {self}.")

    def other_family(self, f: int) -> int:
        """Returns the family of the tile which is not `f`."""
        i, j = self.__family
        if f == i:
            return j
        if f == j:
            return i
        raise ValueError(f"Invalid family ({f}) for tile {self}.")

    def translate(self, t: PointV) -> "RhombTile":
        """Returns the tile translated by `t`."""
        return RhombTile(self.__family, self.__anchor + t, self.__origin)

    def rot72(self, steps: int = 1) -> "RhombTile":
        """Returns the tile rotated by ``steps*72`` degrees counterclockwise around the origin (families are
        shifted by `steps`)."""
        anchor = self.__anchor
        for _ in range(steps % 5):
            anchor = anchor.rot72()
        i, j = ((f + steps) % 5 for f in self.__family)
        return RhombTile((min(i, j), max(i, j)), anchor, self.__origin)

    def sort_key(self) -> Tuple[Any, ...]:
        """Returns a deterministic ordering key."""
        return self.__family, self.__anchor.sort_key()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RhombTile):
            return NotImplemented
        return self.__family == other.__family and self.__anchor == other.__anchor

    def __hash__(self) -> int:
        return hash((self.__family, self.__anchor))

    def __repr__(self) -> str:
        return f"RhombTile(family={self.__family}, anchor={self.__anchor}, origin={self.__origin})"


class PolygonDual(NamedTuple):
    """Dual polygon of a crossing: kind (`PenroseConst.POLY_*`), the crossing, vertices in counterclockwise
    order, the tile of a 2-fold crossing and the hexagon type (``wide`` or ``narrow``)."""
    kind: int
    crossing: Crossing
    vertices: Tuple[PointV, ...]
    rhomb: Optional[RhombTile] = None
    hexagon_type: Optional[str] = None


def hexagon_type(families: Iterable[int]) -> str:
    """Returns ``wide`` for the families ``x-1, x, x+1`` and ``narrow`` for ``x-2, x, x+2``."""
    families = sorted(families)
    x = spine_family(families)
    return "wide" if all((f - x) % 5 in (0, 1, 4) for f in families) else "narrow"


def dual_tile(c: Crossing, origin: str = PenroseConst.ORIGIN_DUAL) -> RhombTile:
    """Returns the rhomb of a 2-fold crossing."""
    i, j = c.get_families()
    return RhombTile((i, j), dual_vertex(c.get_low_cell(i, j), c.get_params()), origin)


def dual_polygon(c: Crossing) -> PolygonDual:
    """Returns the dual polygon of a crossing."""
    u = c.get_params()
    vertices = tuple(dual_vertex(m, u) for m in c.get_cells())
    mult = c.get_multiplicity()
    if mult == 2:
        return PolygonDual(PenroseConst.POLY_RHOMB, c, vertices, rhomb=dual_tile(c))
    if mult == 3:
        return PolygonDual(PenroseConst.POLY_HEXAGON, c, vertices, hexagon_type=hexagon_type(c.get_families()))
    return PolygonDual(PenroseConst.POLY_DECAGON, c, vertices)


def dual_patch(u: PentagridParams, window: Region) -> List[PolygonDual]:
    """Returns the dual polygons (rhombs, hexagons, decagons) of the crossings in a window."""
    return [dual_polygon(c) for c in crossings_in_region(u, window)]


def fill_crossing(c: Crossing, w: Sequence[Any], origin: str) -> List[RhombTile]:
    """Fills the dual polygon of a multiple crossing with rhombs by an infinitesimal perturbation
    ``u + eps*w`` of the grid parameters.

    Args:
        c (Crossing): crossing
        w (Sequence): perturbation direction (five exact values)
        origin (str): origin of the result tiles

    Returns:
        List[RhombTile]: one tile for every pair of incident families

    Raises:
        ValueError: if the perturbation leaves three lines concurrent
    """
    u = c.get_params()
    families = c.get_families()
    levels = c.get_levels()
    tiles = []
    for x, y in combinations(families, 2):
        coeffs = family_coefficients(x, y)
        m = list(levels)
        m[x] -= 1
        m[y] -= 1
        for z in families:
            if z in (x, y):
                continue
            a, b = coeffs[z]
            sign = (w[z] - a * w[x] - b * w[y]).sign()
            if sign == 0:
                raise ValueError(f"Invalid perturbation ({w}), lines {x}, {y}, {z} stay concurrent.")
            if sign < 0:
                m[z] -= 1
        tiles.append(RhombTile((x, y), dual_vertex(m, u), origin))
    return tiles


class WormFill(NamedTuple):
    """Filling of a worm: sign +1 or -1 (the sign of the perturbation of the spine family)."""
    sign: int


class CartwheelFill(NamedTuple):
    """Filling of a cartwheel: index 0..9 of the sign pattern."""
    k: int


def worm_perturbation(spine: int, sign: int) -> Tuple[Qr5, ...]:
    """Returns the perturbation of a worm filling: the spine family moves by `sign`."""
    if sign not in (1, -1):
        raise ValueError(f"Invalid worm sign ({sign}).")
    return tuple(Qr5(sign) if l == spine else ZERO for l in range(5))


def cartwheel_pattern(k: int) -> Tuple[int, ...]:
    """Returns the sign pattern of the cartwheel filling `k`: pattern 0 is ``(-,+,-,-,+)``, each step flips
    all signs and moves the last sign to the front.

    Example:
        >>> cartwheel_pattern(1)
        (-1, 1, -1, 1, 1)
    """
    if not isinstance(k, int) or not 0 <= k <= 9:
        raise ValueError(f"Invalid cartwheel filling index ({k}).")
    pattern = [-1, 1, -1, -1, 1]
    for _ in range(k):
        flipped = [-s for s in pattern]
        pattern = [flipped[-1]] + flipped[:-1]
    return tuple(pattern)


@lru_cache(maxsize=10)
def cartwheel_perturbation(k: int) -> Tuple[Qr5, ...]:
    """Returns the perturbation ``w_l = v_{2l}.t`` of the cartwheel filling `k`, where `t` is the grid vector
    (or its negative) giving the sign pattern of `k`.

    Raises:
        ValueError: in case of invalid `k`
    """
    pattern = cartwheel_pattern(k)
    for i in range(5):
        for t in (V[i], -V[i]):
            w = tuple(dot(V[(2 * l) % 5], t) for l in range(5))
            if tuple(x.sign() for x in w) == pattern:
                return w
    raise RuntimeError(f"No perturbation for cartwheel pattern {pattern}.")


def fill_worm(hexagons: Sequence[PolygonDual], sign: int) -> List[RhombTile]:
    """Fills the hexagons of a worm. All hexagons must have the same spine line.

    Raises:
        ValueError: in case of invalid sign, non-hexagon input or different spines
    """
    spines = set()
    for h in hexagons:
        if h.kind != PenroseConst.POLY_HEXAGON:
            raise ValueError(f"Invalid worm polygon (kind={h.kind}).")
        x = spine_family(h.crossing.get_families())
        spines.add(next(line for line in h.crossing.get_incident() if line.j == x))
    if len(spines) > 1:
        raise ValueError(f"Invalid worm, hexagons are not on a common spine ({spines}).")
    if not spines:
        return []
    spine = spines.pop()
    w = worm_perturbation(spine.j, sign)
    tiles = []
    for h in hexagons:
        tiles.extend(fill_crossing(h.crossing, w, PenroseConst.ORIGIN_WORMFILL))
    return tiles


def fill_cartwheel(polygons: Sequence[PolygonDual], k: int) -> List[RhombTile]:
    """Fills the decagon and the hexagons of a cartwheel with the filling `k` (10 tiles for the decagon,
    3 tiles for every hexagon).

    Raises:
        ValueError: in case of invalid `k` or a rhomb in the input
    """
    w = cartwheel_perturbation(k)
    tiles = []
    for p in polygons:
        if p.kind == PenroseConst.POLY_RHOMB:
            raise ValueError("Invalid cartwheel polygon (rhomb).")
        tiles.extend(fill_crossing(p.crossing, w, PenroseConst.ORIGIN_CARTWHEELFILL))
    return tiles


Filling = Union[None, WormFill, CartwheelFill]


class PenroseTiling:
    """Penrose tiling given by grid parameters, the filling of its singular polygons and a translation.

    Args:
        u (PentagridParams): grid parameters
        filling (Filling): `None`, `WormFill` or `CartwheelFill`
        shift (Optional[PointV]): translation of the tiling (default is zero)

    Example:
        An example about the use of the class::

            >>> from penrosewang import *
            >>> x = PenroseTiling(make_params((0, 0, 0, 0, 0)), CartwheelFill(0))
            >>> len(x.materialize(Window.around(1))) > 10
            True
    """
    __params: PentagridParams       # Grid parameters
    __filling: Filling              # Filling of the singular polygons
    __shift: PointV                 # Translation of the tiling

    def __init__(self, u: PentagridParams, filling: Filling = None, shift: Optional[PointV] = None) -> None:
        if filling is not None and not isinstance(filling, (WormFill, CartwheelFill)):
            raise ValueError(f"Invalid filling ({filling}).")
        if isinstance(filling, WormFill) and filling.sign not in (1, -1):
            raise ValueError(f"Invalid worm sign ({filling.sign}).")
        if isinstance(filling, CartwheelFill):
            cartwheel_pattern(filling.k)
        self.__params = u
        self.__filling = filling
        self.__shift = shift if shift is not None else PointV()

    def get_params(self) -> PentagridParams:
        """Returns the grid parameters."""
        return self.__params

    def get_filling(self) -> Filling:
        """Returns the filling."""
        return self.__filling

    def get_shift(self) -> PointV:
        """Returns the translation."""
        return self.__shift

    def materialize(self, window: Region) -> List[RhombTile]:
        """Returns the tiles dual to the crossings in a window (see `materialize`)."""
        return materialize(self, window)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PenroseTiling):
            return NotImplemented
        return (self.__params, self.__filling, self.__shift) == (other.__params, other.__filling, other.__shift)

    def __hash__(self) -> int:
        return hash((self.__params, self.__filling, self.__shift))

    def __repr__(self) -> str:
        return f"PenroseTiling(u={self.__params}, filling={self.__filling}, shift={self.__shift})"


def check_filling(filling: Filling, scan: ScanResult) -> None:
    """Validates a filling against the singularity scan of a window. A nonsingular window accepts any filling, a
    window with a worm needs a worm filling and a window with a part of a cartwheel needs a cartwheel filling.

    Raises:
        ValueError: if the filling does not match the scan
    """
    if scan.kind == PenroseConst.SCAN_NONSINGULAR:
        return
    if filling is None:
        raise ValueError(f"Invalid filling, the window is singular ({scan.get_name()}) but no filling is given.")
    if scan.kind == PenroseConst.SCAN_CARTWHEEL and not isinstance(filling, CartwheelFill):
        raise ValueError("Invalid filling, the window contains a part of a cartwheel.")
    if scan.kind == PenroseConst.SCAN_WORM and not isinstance(filling, WormFill):
        raise ValueError("Invalid filling, the window contains a worm.")


def materialize(x: PenroseTiling, window: Region) -> List[RhombTile]:
    """Returns the tiles of a tiling dual to the grid crossings in a window. Singular polygons are filled
    according to the filling of the tiling. Tiles are computed in the grid frame (window moved by the negative
    shift) and translated by the shift.

    Args:
        x (PenroseTiling): tiling
        window (Region): closed region of crossings

    Returns:
        List[RhombTile]: tiles, one per 2-fold crossing and one per family pair of a multiple crossing

    Raises:
        ValueError: if the filling is not consistent with the singularities in the window
    """
    shift = x.get_shift()
    region = window.translate(-shift) if not shift.is_zero() else window
    crossings = crossings_in_region(x.get_params(), region)
    scan = scan_crossings(crossings)
    check_filling(x.get_filling(), scan)

    w: Optional[Tuple[Qr5, ...]] = None
    if isinstance(x.get_filling(), CartwheelFill):
        w = cartwheel_perturbation(x.get_filling().k)
    elif isinstance(x.get_filling(), WormFill) and scan.kind == PenroseConst.SCAN_WORM:
        w = worm_perturbation(scan.spine.j, x.get_filling().sign)

    tiles: List[RhombTile] = []
    origin = PenroseConst.ORIGIN_CARTWHEELFILL if isinstance(x.get_filling(), CartwheelFill) \
        else PenroseConst.ORIGIN_WORMFILL
    for c in crossings:
        if c.get_multiplicity() == 2:
            tiles.append(dual_tile(c))
        else:
            tiles.extend(fill_crossing(c, w, origin))
    if not shift.is_zero():
        tiles = [t.translate(shift) for t in tiles]
    _logger.debug("materialize(): %d tiles from %d crossings (%s).", len(tiles), len(crossings), scan.get_name())
    return tiles


class TilingAudit(NamedTuple):
    """Result of a tiling audit: number of tiles, directed edges used by more than one tile, interior
    vertices and interior vertices where the angle sum is not 360 degrees."""
    tiles: int
    overlapping_edges: int
    interior_vertices: int
    angle_defects: int

    def is_valid(self) -> bool:
        """Returns `True` if the tiles are edge-to-edge without overlaps."""
        return self.overlapping_edges == 0 and self.angle_defects == 0


def audit_tiling(tiles: Iterable[RhombTile]) -> TilingAudit:
    """Checks that the tiles form an edge-to-edge tiling: every directed edge (counterclockwise orientation)
    belongs to one tile only and the angles around every interior vertex sum to 360 degrees.

    Example:
        >>> audit_tiling(PenroseTiling(make_params((0, 0, 0, 0, 0)), CartwheelFill(3)).materialize(
        ...     Window.around(2))).is_valid()
        True
    """
    tiles = list(dict.fromkeys(tiles))
    directed: Dict[Tuple[PointV, PointV], int] = {}
    angles: Dict[PointV, int] = {}
    for t in tiles:
        ccw = t.get_ccw_vertices()
        for a, b in zip(ccw, ccw[1:] + ccw[:1]):
            directed[(a, b)] = directed.get((a, b), 0) + 1
        for v, angle in zip(t.get_vertices(), t.get_angles()):
            angles[v] = angles.get(v, 0) + angle

    overlapping = sum(1 for n in directed.values() if n > 1)
    open_vertices = set()
    for a, b in directed:
        if (b, a) not in directed:
            open_vertices.add(a)
            open_vertices.add(b)
    interior = [v for v in angles if v not in open_vertices]
    defects = sum(1 for v in interior if angles[v] != 10)
    return TilingAudit(len(tiles), overlapping, len(interior), defects)


def same_tiles(first: Iterable[RhombTile], second: Iterable[RhombTile]) -> bool:
    """Returns `True` if two tile collections contain the same tiles."""
    return set(first) == set(second)

# End
