#
#    Module `wang`: implements the 24 Penrose Wang tiles (`WangTile`, `WangPatch`, `BifurcationDiagram`
#    classes), the edge codes of the grid patches, the Wang shift adjacency, the tetragon deformation and the
#    Wang field of a grid.
#    penrosewang authors (C) 2024.
#
import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple
import numpy as np
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, V, VPRIME, ZERO, ONE, ALPHA, ETA1, ETA3, as_qr5, dot
from penrosewang.pentagrid import PentagridParams, SingularPatchError, F0, F1, GridLine, family_coefficients, \
    grid_corner, grid_patch, make_params, normal_form, shifted_pair
from penrosewang.duality import RhombTile, dual_tile, dual_vertex

_logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
"""Edge code: families of the crossed grid lines, negative values are barred (crossed downwards)."""

BT_WORDS: Tuple[Word, ...] = (
    (4, -3, -2),
    (4, -2),
    (-2, 4),
    (-2, -3, 4),
    (-2,),
    (-3, -2),
    (-2, -3),
    (-3, -2, 4),
    (4, -2, -3),
)
"""Edge codes of the bottom and top edges by color."""

LR_WORDS: Tuple[Word, ...] = (
    (2, -3, -4),
    (2, -4),
    (-4, 2),
    (-4, -3, 2),
    (-4,),
    (-3, -4),
    (-4, -3),
    (-3, -4, 2),
    (2, -4, -3),
)
"""Edge codes of the left and right edges by color."""

WANG_COLORS: Tuple[Tuple[int, int, int, int], ...] = (
    (0, 1, 0, 1), (2, 3, 2, 3), (4, 5, 4, 5), (6, 4, 6, 4), (7, 3, 7, 3), (0, 8, 0, 8),
    (1, 7, 1, 7), (8, 2, 8, 2), (3, 8, 5, 6), (7, 0, 5, 6), (5, 6, 3, 8), (5, 6, 7, 0),
    (6, 4, 3, 2), (4, 5, 1, 0), (3, 2, 6, 4), (1, 0, 4, 5), (2, 7, 1, 3), (8, 1, 0, 2),
    (0, 2, 8, 1), (1, 3, 2, 7), (4, 6, 2, 0), (5, 4, 3, 1), (2, 0, 4, 6), (3, 1, 5, 4),
)
"""Colors ``(c_b, c_t, c_l, c_r)`` of the 24 Wang tiles."""

VECTOR_INDEX: Tuple[int, ...] = (0, 1, 1, 0, 2, 3, 3, 0, 0)
"""Index of the tetragon edge vector by color (same for the bottom/top and for the left/right edges)."""

TETRAGON_TYPES: Tuple[int, ...] = (0, 1, 2, 3, 4, 4, 1, 0, 5, 5, 6, 6, 7, 8, 9, 10, 1, 0, 0, 1, 8, 7, 10, 9)
"""Tetragon type of the 24 Wang tiles (11 types)."""

BT_VECTORS: Tuple[Tuple[float, float], ...] = ((1.1710, -0.3804), (0.8472, -0.6155), (0.7236, -0.2351),
                                               (1.047, 0.0))
"""Float values of the bottom/top tetragon edge vectors."""

LR_VECTORS: Tuple[Tuple[float, float], ...] = ((0.0, 1.231), (-0.3236, 0.9960), (0.0, 0.7608), (0.3236, 0.9960))
"""Float values of the left/right tetragon edge vectors."""

_BT_COLOR = {w: c for c, w in enumerate(BT_WORDS)}
_LR_COLOR = {w: c for c, w in enumerate(LR_WORDS)}
_ID_OF_COLORS = {c: i for i, c in enumerate(WANG_COLORS)}
_SIGNS_F1 = tuple(dot(V[o], F1).sign() for o in range(5))
_SIGNS_F0 = tuple(dot(V[o], F0).sign() for o in range(5))


def format_word(word: Word) -> str:
    """Returns the printable form of an edge code (barred letters with a combining overline).

    Example:
        >>> format_word((4, -3, -2))
        '43̄2̄'
    """
    return "".join(str(x) if x > 0 else f"{-x}\u0304" for x in word)


class WangTile(NamedTuple):
    """Wang tile: id, colors of the bottom, top, left and right edges and the edge codes."""
    id: int
    colors: Tuple[int, int, int, int]
    codes: Dict[str, Word]

    @classmethod
    def from_id(cls, tile_id: int) -> "WangTile":
        """Returns the Wang tile of an id.

        Raises:
            ValueError: in case of invalid id
        """
        codes, colors = edge_codes_and_colors(tile_id)
        return cls(tile_id, colors, codes)


def edge_codes_and_colors(tile_id: int) -> Tuple[Dict[str, Word], Tuple[int, int, int, int]]:
    """Returns the edge codes and the colors of a Wang tile.

    Args:
        tile_id (int): tile id (0..23)

    Returns:
        Tuple[Dict[str, Word], Tuple[int, int, int, int]]: codes by side (``b``, ``t``, ``l``, ``r``), colors

    Raises:
        ValueError: in case of invalid id

    Example:
        >>> edge_codes_and_colors(9)[1]
        (7, 0, 5, 6)
    """
    if not isinstance(tile_id, (int, np.integer)) or not 0 <= tile_id < 24:
        raise ValueError(f"Invalid Wang tile id ({tile_id}).")
    cb, ct, cl, cr = WANG_COLORS[int(tile_id)]
    codes = {"b": BT_WORDS[cb], "t": BT_WORDS[ct], "l": LR_WORDS[cl], "r": LR_WORDS[cr]}
    return codes, (cb, ct, cl, cr)


def wang_tiles() -> List[WangTile]:
    """Returns the 24 Wang tiles."""
    return [WangTile.from_id(i) for i in range(24)]


def sft_adjacency() -> Tuple[np.ndarray, np.ndarray]:
    """Returns the horizontal and vertical adjacency matrices of the Wang shift. ``H[a, b]`` is `True` if tile
    `b` may be placed to the right of tile `a`, ``V[a, b]`` is `True` if tile `b` may be placed below tile `a`.

    Example:
        >>> h, v = sft_adjacency()
        >>> bool(h[0, 6]), bool(v[0, 9]), bool(h[0, 1])
        (True, True, False)
    """
    colors = np.array(WANG_COLORS)
    h = colors[:, 3][:, None] == colors[:, 2][None, :]
    v = colors[:, 0][:, None] == colors[:, 1][None, :]
    return h, v


def is_valid_configuration(field: np.ndarray) -> bool:
    """Returns `True` if a Wang field (indexed by ``[n0, n1]``) respects the adjacency rules."""
    h, v = sft_adjacency()
    field = np.asarray(field)
    right = h[field[:-1, :], field[1:, :]].all() if field.shape[0] > 1 else True
    up = v[field[:, 1:], field[:, :-1]].all() if field.shape[1] > 1 else True
    return bool(right and up)


class Margins(NamedTuple):
    """Edge codes of a patch read along its four margins and the four corner tiles (``D_0``, ``D_e0``,
    ``D_e1``, ``D_e0+e1``)."""
    b: Word
    t: Word
    l: Word
    r: Word
    corners: Tuple[RhombTile, RhombTile, RhombTile, RhombTile]

    def get_word(self, side: str) -> Word:
        """Returns the edge code of a side."""
        return getattr(self, side)


def edge_index(tiles: Iterable[RhombTile], families: Sequence[int] = (0, 1)) -> Dict[Tuple[PointV, int],
                                                                                     List[RhombTile]]:
    """Returns the tiles by their ``v'_f`` edges (start point and family `f`)."""
    index: Dict[Tuple[PointV, int], List[RhombTile]] = {}
    for t in tiles:
        for f in families:
            if f in t.get_family():
                for start in t.get_edge_starts(f):
                    index.setdefault((start, f), []).append(t)
    return index


def walk_trail(index: Dict[Tuple[PointV, int], List[RhombTile]], start: RhombTile, f: int,
               signs: Sequence[int], max_steps: int = 64) -> Tuple[Word, RhombTile]:
    """Walks along the trail of family `f` tiles from a corner tile to the next corner tile (family (0, 1)).

    Args:
        index (Dict): tiles by edges (see `edge_index`)
        start (RhombTile): start tile
        f (int): family of the shared edges (0 or 1)
        signs (Sequence[int]): sign of ``v_o.dir`` for all families, `dir` is the walking direction
        max_steps (int): step limit

    Returns:
        Tuple[Word, RhombTile]: the families of the crossed tiles and the end tile

    Raises:
        RuntimeError: if the trail leaves the tiles or it is too long
    """
    letters: List[int] = []
    tile = start
    for _ in range(max_steps):
        o = tile.other_family(f)
        low, high = tile.get_edge_starts(f)
        key = (high if signs[o] > 0 else low, f)
        following = [t for t in index.get(key, []) if t != tile]
        if not following:
            raise RuntimeError(f"Trail of family {f} leaves the tiles at {tile}.")
        tile = following[0]
        if tile.get_family() == (0, 1):
            return tuple(letters), tile
        o = tile.other_family(f)
        letters.append(o if signs[o] > 0 else -o)
    raise RuntimeError(f"Trail of family {f} is longer than {max_steps} tiles.")


def read_margins(tiles: Iterable[RhombTile], corner: RhombTile) -> Margins:
    """Reads the edge codes of a Wang patch along the trails starting at its lower left corner tile.

    Raises:
        RuntimeError: if the trails do not close
    """
    index = edge_index(tiles)
    bottom, d_e0 = walk_trail(index, corner, 1, _SIGNS_F1)
    left, d_e1 = walk_trail(index, corner, 0, _SIGNS_F0)
    top, d_e01 = walk_trail(index, d_e1, 1, _SIGNS_F1)
    right, d_e10 = walk_trail(index, d_e0, 0, _SIGNS_F0)
    if d_e01 != d_e10:
        raise RuntimeError(f"Patch trails do not close ({d_e01} != {d_e10}).")
    return Margins(bottom, top, left, right, (corner, d_e0, d_e1, d_e01))


def colors_of_margins(margins: Margins) -> Tuple[int, int, int, int]:
    """Returns the colors of the edge codes of a patch.

    Raises:
        RuntimeError: in case of unknown edge code
    """
    try:
        return (_BT_COLOR[margins.b], _BT_COLOR[margins.t], _LR_COLOR[margins.l], _LR_COLOR[margins.r])
    except KeyError as e:
        raise RuntimeError(f"Unknown edge code {e} in {margins}.") from e


def id_of_colors(colors: Sequence[int]) -> int:
    """Returns the id of the Wang tile with the given colors.

    Raises:
        RuntimeError: in case of unknown colors
    """
    try:
        return _ID_OF_COLORS[tuple(colors)]
    except KeyError as e:
        raise RuntimeError(f"Unknown Wang colors ({colors}).") from e


def trail_components(tiles: Iterable[RhombTile], f: int) -> int:
    """Returns the number of connected trails of family `f` tiles (tiles linked by shared ``v'_f`` edges)."""
    return len(set(trail_roots(tiles, f).values()))


def trail_roots(tiles: Iterable[RhombTile], f: int) -> Dict[RhombTile, RhombTile]:
    """Returns a representative tile of its family `f` trail for each family `f` tile."""
    members = [t for t in tiles if f in t.get_family()]
    parent = {t: t for t in members}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for group in edge_index(members, (f,)).values():
        for other in group[1:]:
            a, b = find(group[0]), find(other)
            if a != b:
                parent[a] = b
    return {t: find(t) for t in members}


def corner_vertex(u: PentagridParams, n: Tuple[int, int]) -> PointV:
    """Returns the tiling vertex ``d_n`` dual to the cell above and right of the corner ``b_n`` of ``R_n``.

    Raises:
        SingularPatchError: if a third grid line passes through ``b_n``
    """
    b = grid_corner(u, n)
    m = [int(n[0]), int(n[1])]
    for l in range(2, 5):
        value = dot(V[l], b) + u[l]
        if value.is_integer():
            raise SingularPatchError(n, f"Grid line {GridLine(l, value.floor())} through the corner of R_{n}.")
        m.append(value.floor())
    return dual_vertex(m, u)


class WangPatch:
    """Tiles dual to the crossings of the closed rhomb ``R_n`` translated by ``-d_n`` (canonical position:
    the upper right vertex of the lower left corner tile at the origin), with edge codes, colors and id.

    Args:
        u (PentagridParams): grid parameters
        n (Tuple[int, int]): rhomb index

    Raises:
        SingularPatchError: if the grid patch has a crossing of multiplicity 3 or more
    """
    __n: Tuple[int, int]                # Rhomb index
    __tiles: FrozenSet[RhombTile]       # Canonical tiles
    __margins: Margins                  # Edge codes
    __colors: Tuple[int, int, int, int] # Colors
    __id: int                           # Wang tile id

    def __init__(self, u: PentagridParams, n: Tuple[int, int] = (0, 0)) -> None:
        patch = grid_patch(u, n)
        multiple = [c for c in patch.get_crossings() if c.get_multiplicity() > 2]
        if multiple:
            raise SingularPatchError(patch.get_n(), f"Singular grid patch at n={patch.get_n()} ({multiple}).")
        d = corner_vertex(u, patch.get_n())
        self.__n = patch.get_n()
        self.__tiles = frozenset(dual_tile(c).translate(-d) for c in patch.get_crossings())
        corner = RhombTile((0, 1), -(VPRIME[0] + VPRIME[1]))
        if corner not in self.__tiles:
            raise RuntimeError(f"Corner tile is missing from patch {self.__n}.")
        self.__margins = read_margins(self.__tiles, corner)
        self.__colors = colors_of_margins(self.__margins)
        self.__id = id_of_colors(self.__colors)

    def get_n(self) -> Tuple[int, int]:
        """Returns the rhomb index."""
        return self.__n

    def get_tiles(self) -> FrozenSet[RhombTile]:
        """Returns the canonical tiles."""
        return self.__tiles

    def get_margins(self) -> Margins:
        """Returns the edge codes and the corner tiles."""
        return self.__margins

    def get_colors(self) -> Tuple[int, int, int, int]:
        """Returns the colors ``(c_b, c_t, c_l, c_r)``."""
        return self.__colors

    def get_id(self) -> int:
        """Returns the Wang tile id."""
        return self.__id

    def get_symbol(self) -> Tuple[int, int]:
        """Returns the symbol ``(z, z')`` (see `wang_symbol`)."""
        return wang_symbol(self)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, WangPatch):
            return NotImplemented
        return self.__tiles == other.__tiles

    def __hash__(self) -> int:
        return hash(self.__tiles)

    def __repr__(self) -> str:
        return f"WangPatch(n={self.__n}, id={self.__id}, tiles={len(self.__tiles)})"


def canonical_patch(u: PentagridParams, n: Tuple[int, int] = (0, 0)) -> WangPatch:
    """Returns the canonical Wang patch of ``R_n`` (see `WangPatch`)."""
    return WangPatch(u, n)


def wang_symbol(patch: WangPatch) -> Tuple[int, int]:
    """Returns the symbol ``(z, z')`` of a Wang patch: the number of family 4 trails and family 2 trails of
    the patch minus 1.

    Raises:
        RuntimeError: if a count is not 1 or 2
    """
    z = trail_components(patch.get_tiles(), 4) - 1
    zp = trail_components(patch.get_tiles(), 2) - 1
    if z not in (0, 1) or zp not in (0, 1):
        raise RuntimeError(f"Invalid symbol ({z}, {zp}) of {patch}.")
    return z, zp


def symbol_of_id(tile_id: int) -> Tuple[int, int]:
    """Returns the symbol ``(z, z')`` of a Wang tile from its bottom and left edge codes."""
    codes, _ = edge_codes_and_colors(tile_id)
    letters = [abs(x) for x in codes["b"] + codes["l"]]
    return letters.count(4) - 1, letters.count(2) - 1


def tetragon_vectors(tile_id: int) -> Dict[str, PointV]:
    """Returns the exact edge vectors of the tetragon of a Wang tile: ``v'_0`` (bottom, top) or ``v'_1``
    (left, right) plus the signed edge vectors of the edge code letters.

    Example:
        >>> v = tetragon_vectors(0)
        >>> v["b"] + v["r"] == v["l"] + v["t"]
        True
    """
    codes, _ = edge_codes_and_colors(tile_id)
    result = {}
    for side in PenroseConst.SIDES:
        vector = VPRIME[0] if side in ("b", "t") else VPRIME[1]
        for x in codes[side]:
            vector = vector + VPRIME[x] if x > 0 else vector - VPRIME[-x]
        result[side] = vector
    return result


class TetragonTile(NamedTuple):
    """Tetragon of a Wang tile: id, type and the edge vectors by side."""
    id: int
    type: int
    vectors: Dict[str, PointV]


def tetragon_edges(tile_id: int) -> TetragonTile:
    """Returns the tetragon of a Wang tile.

    Raises:
        ValueError: in case of invalid id
    """
    return TetragonTile(tile_id, TETRAGON_TYPES[tile_id], tetragon_vectors(tile_id))


def derive_tetragon_types() -> Tuple[int, ...]:
    """Returns the tetragon types derived from the vector indices of the colors (types numbered in order of
    first appearance)."""
    types: Dict[Tuple[int, ...], int] = {}
    result = []
    for colors in WANG_COLORS:
        key = tuple(VECTOR_INDEX[c] for c in colors)
        result.append(types.setdefault(key, len(types)))
    return tuple(result)


def tetragon_patch(u: PentagridParams, n: Tuple[int, int]) -> Tuple[PointV, PointV, PointV, PointV]:
    """Returns the tetragon ``d_n, d_{n+e0}, d_{n+e0+e1}, d_{n+e1}`` of the tiling in counterclockwise order."""
    n0, n1 = n
    return (corner_vertex(u, (n0, n1)), corner_vertex(u, (n0 + 1, n1)), corner_vertex(u, (n0 + 1, n1 + 1)),
            corner_vertex(u, (n0, n1 + 1)))


def bent_line_deviation(u: PentagridParams, family: int, k: int, span: Iterable[int]) -> Qr5:
    """Returns the largest distance of the bent grid line ``lambda_{family,k}`` (the polygon line of the
    vertices ``d_n``) from the straight grid line ``l_{family,k}`` over a span of patch indices.

    Raises:
        ValueError: if the family is not 0 or 1
    """
    if family not in (0, 1):
        raise ValueError(f"Invalid bent line family ({family}).")
    result = ZERO
    for i in span:
        n = (k, i) if family == 0 else (i, k)
        distance = abs(dot(V[family], corner_vertex(u, n)) + u[family] - k)
        result = max(result, distance)
    return result


# Bifurcation diagram of R_0 in the (u2, u4) unit square, for normal form parameters
# u = (0, 0, u2, -u2-u4, u4). Affine functions of (u2, u4) are tuples (c0, c2, c4).
Affine = Tuple[Qr5, Qr5, Qr5]

_DOT_OFFSETS = {0: (0, 0, 0), 1: (0, 0, 0), 2: (0, -1, 0), 3: (0, 1, 1), 4: (0, 0, -1)}
_LINE_RANGES = {0: range(0, 2), 1: range(0, 2), 2: range(-2, 3), 3: range(-4, 2), 4: range(-2, 3)}
_SQUARE: Tuple[Affine, ...] = ((ZERO, ONE, ZERO), (ONE, -ONE, ZERO), (ZERO, ZERO, ONE), (ONE, ZERO, -ONE))


def _affine(c0: Any, c2: Any = 0, c4: Any = 0) -> Affine:
    return as_qr5(c0), as_qr5(c2), as_qr5(c4)


def _combine(a: Qr5, x: Affine, b: Qr5, y: Affine) -> Affine:
    return a * x[0] + b * y[0], a * x[1] + b * y[1], a * x[2] + b * y[2]


def _clip_line(line: Affine, constraints: Iterable[Affine]) -> Optional[Tuple[Tuple[Qr5, Qr5], Tuple[Qr5, Qr5]]]:
    """Returns the segment of the line ``c0 + c2*u2 + c4*u4 == 0`` where all constraints are nonnegative."""
    c0, c2, c4 = line
    if c4:
        base, step = (ZERO, -c0 / c4), (ONE, -c2 / c4)
    elif c2:
        base, step = (-c0 / c2, ZERO), (ZERO, ONE)
    else:
        return None
    lo: Optional[Qr5] = None
    hi: Optional[Qr5] = None
    for f0, f2, f4 in constraints:
        g0 = f0 + f2 * base[0] + f4 * base[1]
        g1 = f2 * step[0] + f4 * step[1]
        s = g1.sign()
        if s == 0:
            if g0.sign() < 0:
                return None
            continue
        t = -g0 / g1
        if s > 0:
            lo = t if lo is None or t > lo else lo
        else:
            hi = t if hi is None or t < hi else hi
    if lo is None or hi is None or lo > hi:
        return None
    return (base[0] + lo * step[0], base[1] + lo * step[1]), (base[0] + hi * step[0], base[1] + hi * step[1])


def _normalize(line: Affine) -> Affine:
    c0, c2, c4 = line
    d = c2 if c2 else c4
    return c0 / d, c2 / d, c4 / d


class Wall(NamedTuple):
    """Line of the bifurcation diagram with its segments and concurrency types (e.g. ``013``)."""
    line: Affine
    segments: Tuple[Tuple[Tuple[Qr5, Qr5], Tuple[Qr5, Qr5]], ...]
    types: FrozenSet[str]


def _add_wall(walls: Dict[Affine, Tuple[List, set]], line: Affine, segment: Any, kind: str) -> None:
    """Adds a concurrency segment to the walls keyed by the normalized line."""
    if segment is None or segment[0] == segment[1]:
        return
    entry = walls.setdefault(_normalize(line), ([], set()))
    if segment not in entry[0]:
        entry[0].append(segment)
    entry[1].add(kind)


def _sorted_walls(walls: Dict[Affine, Tuple[List, set]]) -> List[Wall]:
    result = [Wall(key, tuple(segs), frozenset(types)) for key, (segs, types) in walls.items()]
    result.sort(key=lambda w: (w.line[1].get_a(), w.line[1].get_b(), w.line[2].get_a(), w.line[2].get_b(),
                               w.line[0].get_a(), w.line[0].get_b()))
    return result


def derive_walls() -> List[Wall]:
    """Derives the walls of the bifurcation diagram: the parameters where three grid lines are concurrent in
    the closed rhomb ``R_0``."""
    walls: Dict[Affine, Tuple[List, set]] = {}
    for x, y, z in combinations(range(5), 3):
        coeffs = family_coefficients(x, y)
        a_z, b_z = coeffs[z]
        a_0, b_0 = coeffs[0]
        a_1, b_1 = coeffs[1]
        for kx, ky, kz in product(_LINE_RANGES[x], _LINE_RANGES[y], _LINE_RANGES[z]):
            dx = _affine(_DOT_OFFSETS[x][0] + kx, *_DOT_OFFSETS[x][1:])
            dy = _affine(_DOT_OFFSETS[y][0] + ky, *_DOT_OFFSETS[y][1:])
            dz = _affine(_DOT_OFFSETS[z][0] + kz, *_DOT_OFFSETS[z][1:])
            combined = _combine(a_z, dx, b_z, dy)
            line = (combined[0] - dz[0], combined[1] - dz[1], combined[2] - dz[2])
            if not line[1] and not line[2]:
                continue
            d0 = _combine(a_0, dx, b_0, dy)
            d1 = _combine(a_1, dx, b_1, dy)
            constraints = _SQUARE + (d0, (1 - d0[0], -d0[1], -d0[2]), d1, (1 - d1[0], -d1[1], -d1[2]))
            _add_wall(walls, line, _clip_line(line, constraints), f"{x}{y}{z}")
    return _sorted_walls(walls)


# Closed forms of the walls. Grid lines of the families 0 and 1 meet R_0 on its sides only, so a concurrency
# in R_0 is at a corner (families 0 and 1 with a third one), on a side (one of them with two of 2, 3, 4) or a
# 234 concurrency. With the corners a*f1 + b*f0:
# - 5-fold crossings are at the points of {0, 1 - alpha, 1}^2,
# - 012 (014) concurrencies are on the lines u2 (u4) in {0, 1 - alpha, 1},
# - 013 concurrencies are on u2 + u4 == -alpha*(a + b) modulo 1,
# - 234 concurrencies need v0.s + v1.s == 1, they are on the 013 lines of the corners f1 and f0,
# - 0ij and 1ij concurrencies are on the images of the sides of R_0 under
#   p -> M_ij*((k, k') - (v_i.p, v_j.p)), where M_ij maps (u_i, u_j) to (u2, u4).
_CORNER_LEVELS: Tuple[Qr5, ...] = (ZERO, ETA1, ONE)
_ANTI_DIAGONAL_LEVELS: Tuple[Qr5, ...] = (ETA1, ONE, ETA3, ONE + ETA1, ONE + ETA3)
_SIDE_CORNER_LEVELS: Tuple[Qr5, ...] = (ETA1, ONE + ETA1)
_PAIR_MAPS: Dict[Tuple[int, int], Tuple[Tuple[int, int], Tuple[int, int]]] = {
    (2, 4): ((1, 0), (0, 1)),
    (2, 3): ((1, 0), (-1, -1)),
    (3, 4): ((-1, -1), (0, 1)),
}
_SIDES: Tuple[Tuple[PointV, PointV, int], ...] = ((PointV(), F1, 1), (F1, F1 + F0, 0), (F1 + F0, F0, 1),
                                                  (F0, PointV(), 0))


def five_fold_points() -> List[Tuple[Qr5, Qr5]]:
    """Returns the points of the closed (u2, u4) square where ``R_0`` contains a 5-fold crossing."""
    return [(a, b) for a in _CORNER_LEVELS for b in _CORNER_LEVELS]


def _pair_image(p: PointV, pair: Tuple[int, int], levels: Tuple[int, int]) -> Tuple[Qr5, Qr5]:
    """Returns the point (u2, u4) where the grid lines of `pair` at `levels` pass through `p`."""
    (i, j), (k_i, k_j) = pair, levels
    u_i, u_j = k_i - dot(V[i], p), k_j - dot(V[j], p)
    row2, row4 = _PAIR_MAPS[pair]
    return row2[0] * u_i + row2[1] * u_j, row4[0] * u_i + row4[1] * u_j


def closed_form_walls() -> List[Wall]:
    """Returns the walls of the bifurcation diagram from their closed forms (vertical and horizontal lines
    through ``{0, 1 - alpha, 1}``, slope -1 lines and images of the sides of ``R_0``). The result is
    computed without grid line enumeration and agrees with `derive_walls` line by line.

    Example:
        >>> len(closed_form_walls()) == len(derive_walls())
        True
    """
    walls: Dict[Affine, Tuple[List, set]] = {}
    for c in _CORNER_LEVELS:
        for line, kind in ((_affine(-c, 1, 0), "012"), (_affine(-c, 0, 1), "014")):
            _add_wall(walls, line, _clip_line(line, _SQUARE), kind)
    for c in _ANTI_DIAGONAL_LEVELS:
        line = _affine(-c, 1, 1)
        _add_wall(walls, line, _clip_line(line, _SQUARE), "013")
        if c in _SIDE_CORNER_LEVELS:
            _add_wall(walls, line, _clip_line(line, _SQUARE), "234")
    for pair in _PAIR_MAPS:
        for levels in product(range(-4, 4), repeat=2):
            for start, end, family in _SIDES:
                a2, a4 = _pair_image(start, pair, levels)
                b2, b4 = _pair_image(end, pair, levels)
                d2, d4 = b2 - a2, b4 - a4
                line = (a4 * d2 - a2 * d4, d4, -d2)
                # The segment between the images of the two corners.
                constraints = _SQUARE + ((-(a2 * d2 + a4 * d4), d2, d4), (b2 * d2 + b4 * d4, -d2, -d4))
                kind = "".join(sorted(f"{family}{pair[0]}{pair[1]}"))
                _add_wall(walls, line, _clip_line(line, constraints), kind)
    return _sorted_walls(walls)


class BifurcationResult(NamedTuple):
    """Result of a bifurcation classification: a cell with Wang tile id or a boundary point with the multiple
    crossings found in ``R_0``."""
    is_cell: bool
    id: Optional[int] = None
    witnesses: Tuple[Tuple[GridLine, ...], ...] = ()


def classify_bifurcation(u2: Any, u4: Any) -> BifurcationResult:
    """Classifies a point of the half-open square ``[0, 1)^2`` of (u2, u4): the Wang tile id of the canonical
    patch of ``R_0`` for the parameters ``(0, 0, u2, -u2-u4, u4)`` or a boundary point if ``R_0`` contains a
    crossing of multiplicity 3 or more (including grid lines through its corners).

    Raises:
        ValueError: if the point is outside [0, 1)^2

    Example:
        >>> classify_bifurcation(Fraction(1, 10), Fraction(1, 10)).is_cell
        True
    """
    u2, u4 = as_qr5(u2), as_qr5(u4)
    if not (ZERO <= u2 < ONE and ZERO <= u4 < ONE):
        raise ValueError(f"Invalid bifurcation point ({u2}, {u4}).")
    u = make_params((0, 0, u2, -u2 - u4, u4))
    patch = grid_patch(u, (0, 0))
    multiple = tuple(c.get_incident() for c in patch.get_crossings() if c.get_multiplicity() > 2)
    if multiple:
        return BifurcationResult(False, witnesses=multiple)
    return BifurcationResult(True, id=WangPatch(u, (0, 0)).get_id())


class BifurcationDiagram:
    """Arrangement of the bifurcation walls in the (u2, u4) unit square with the Wang tile id of every cell.
    The walls come from their closed forms. Cells are found by a slab sweep over the full wall lines, every face
    of the line arrangement is classified once by the exact canonical patch of a sample point.

    Example:
        An example about the use of the class::

            >>> d = bifurcation_diagram()
            >>> d.locate(Fraction(1, 10), Fraction(1, 10)) is not None
            True
    """
    __walls: List[Wall]                         # Walls with segments
    __lines: List[Affine]                       # Exact lines of the arrangement
    __line_array: np.ndarray                    # Float lines (L, 3)
    __faces: Dict[bytes, int]                   # Sign vector -> Wang tile id
    __canon: Dict[int, WangPatch]               # Canonical patch by id
    __samples: Dict[int, Tuple[Qr5, Qr5]]       # Sample point by id

    def __init__(self) -> None:
        self.__walls = closed_form_walls()
        lines = {w.line for w in self.__walls}
        lines.update({_affine(0, 1, 0), _affine(-1, 1, 0), _affine(0, 0, 1), _affine(-1, 0, 1)})
        self.__lines = sorted(lines, key=lambda x: tuple(float(c) for c in x))
        self.__line_array = np.array([[float(c) for c in x] for x in self.__lines])
        self.__faces = {}
        self.__canon = {}
        self.__samples = {}
        self.__build()
        _logger.debug("BifurcationDiagram(): %d walls, %d lines, %d faces, %d ids.", len(self.__walls),
                      len(self.__lines), len(self.__faces), len(self.__canon))

    def __sample_points(self) -> List[Tuple[Qr5, Qr5]]:
        """Returns one exact sample point in every face of the arrangement of full lines."""
        vertical = [x for x in self.__lines if not x[2]]
        other = [x for x in self.__lines if x[2]]
        xs = {ZERO, ONE}
        for c0, c2, _ in vertical:
            x = -c0 / c2
            if ZERO <= x <= ONE:
                xs.add(x)
        for a, b in combinations(other, 2):
            det = a[1] * b[2] - a[2] * b[1]
            if not det:
                continue
            x = (b[0] * a[2] - a[0] * b[2]) / det
            if ZERO <= x <= ONE:
                y = -(a[0] + a[1] * x) / a[2]
                if ZERO <= y <= ONE:
                    xs.add(x)
        xs_sorted = sorted(xs)
        samples = []
        for x0, x1 in zip(xs_sorted, xs_sorted[1:]):
            xm = (x0 + x1) / 2
            ys = {ZERO, ONE}
            for c0, c2, c4 in other:
                y = -(c0 + c2 * xm) / c4
                if ZERO < y < ONE:
                    ys.add(y)
            ys_sorted = sorted(ys)
            samples.extend((xm, (y0 + y1) / 2) for y0, y1 in zip(ys_sorted, ys_sorted[1:]))
        return samples

    def __exact_key(self, u2: Qr5, u4: Qr5) -> Optional[bytes]:
        """Returns the sign vector key of a point, `None` on a line."""
        signs = [(c0 + c2 * u2 + c4 * u4).sign() for c0, c2, c4 in self.__lines]
        if 0 in signs:
            return None
        return np.packbits(np.array(signs) > 0).tobytes()

    def __build(self) -> None:
        samples = self.__sample_points()
        u2f = np.array([float(a) for a, _ in samples])
        u4f = np.array([float(b) for _, b in samples])
        values = self.__line_array[:, 0][None, :] + np.outer(u2f, self.__line_array[:, 1]) + \
            np.outer(u4f, self.__line_array[:, 2])
        near = (np.abs(values) < 1e-9).any(axis=1).tolist()
        packed = np.packbits(values > 0, axis=1)
        for index, (u2, u4) in enumerate(samples):
            key = self.__exact_key(u2, u4) if near[index] else packed[index].tobytes()
            if key is None or key in self.__faces:
                continue
            result = classify_bifurcation(u2, u4)
            if not result.is_cell:
                raise RuntimeError(f"Sample point ({u2}, {u4}) is on a wall {result.witnesses}.")
            self.__faces[key] = result.id
            if result.id not in self.__canon:
                self.__canon[result.id] = canonical_patch(make_params((0, 0, u2, -u2 - u4, u4)))
                self.__samples[result.id] = (u2, u4)

    def get_walls(self) -> List[Wall]:
        """Returns the walls."""
        return self.__walls

    def get_wall_lines(self) -> List[Affine]:
        """Returns the normalized lines of the walls."""
        return [w.line for w in self.__walls]

    def get_ids(self) -> List[int]:
        """Returns the Wang tile ids of the cells."""
        return sorted(self.__canon)

    def get_face_count(self) -> int:
        """Returns the number of faces of the arrangement of full lines."""
        return len(self.__faces)

    def get_canon(self, tile_id: int) -> WangPatch:
        """Returns the canonical patch of a Wang tile id."""
        return self.__canon[tile_id]

    def get_sample(self, tile_id: int) -> Tuple[Qr5, Qr5]:
        """Returns an exact sample point of a Wang tile id."""
        return self.__samples[tile_id]

    def get_edge_vertices(self, side: str) -> List[Qr5]:
        """Returns the points where walls meet a side of the square (``bottom``: u4 == 0, ``left``: u2 == 0,
        ``top``: u4 == 1, ``right``: u2 == 1) as coordinates along the side, including the two ends.

        Raises:
            ValueError: in case of unknown side
        """
        if side not in ("bottom", "left", "top", "right"):
            raise ValueError(f"Invalid side ({side}).")
        fixed = ZERO if side in ("bottom", "left") else ONE
        along = 0 if side in ("bottom", "top") else 1
        result = {ZERO, ONE}
        for wall in self.__walls:
            # Walls on the side itself are skipped.
            if (along == 0 and not wall.line[1]) or (along == 1 and not wall.line[2]):
                continue
            for segment in wall.segments:
                for point in segment:
                    if point[1 - along] == fixed:
                        result.add(point[along])
        return sorted(result)

    def locate(self, u2: Any, u4: Any) -> Optional[int]:
        """Returns the Wang tile id of a point with exact evaluation, `None` on a line of the arrangement."""
        key = self.__exact_key(as_qr5(u2), as_qr5(u4))
        return None if key is None else self.__faces.get(key)

    def locate_many(self, u2: np.ndarray, u4: np.ndarray, guard: float = 1e-9) -> np.ndarray:
        """Returns the Wang tile ids of float points, -1 where the float evaluation is not conclusive. Points
        are evaluated in chunks of `PenroseConst.LOCATE_CHUNK`."""
        u2 = np.asarray(u2, dtype=float).ravel()
        u4 = np.asarray(u4, dtype=float).ravel()
        result = np.empty(u2.size, dtype=np.int64)
        chunk = PenroseConst.LOCATE_CHUNK
        for start in range(0, u2.size, chunk):
            a, b = u2[start:start + chunk], u4[start:start + chunk]
            values = self.__line_array[:, 0][None, :] + np.outer(a, self.__line_array[:, 1]) + \
                np.outer(b, self.__line_array[:, 2])
            undecided = (np.abs(values) < guard).any(axis=1)
            packed = np.packbits(values > 0, axis=1)
            keys, inverse = np.unique(packed, axis=0, return_inverse=True)
            ids = np.array([self.__faces.get(k.tobytes(), -1) for k in keys], dtype=np.int64)
            part = ids[np.asarray(inverse).ravel()]
            part[undecided] = -1
            result[start:start + chunk] = part
        return result


@lru_cache(maxsize=1)
def bifurcation_diagram() -> BifurcationDiagram:
    """Returns the (cached) bifurcation diagram."""
    return BifurcationDiagram()


def enumerate_canon_24() -> List[WangPatch]:
    """Returns the 24 canonical Wang patches ordered by id.

    Raises:
        RuntimeError: if the diagram does not contain exactly 24 ids
    """
    diagram = bifurcation_diagram()
    ids = diagram.get_ids()
    if ids != list(range(24)):
        raise RuntimeError(f"Invalid number of canonical patches ({len(ids)}: {ids}).")
    return [diagram.get_canon(i) for i in ids]


def patch_id(u: PentagridParams, n: Tuple[int, int]) -> int:
    """Returns the Wang tile id of the grid patch ``R_n`` with exact arithmetic.

    Raises:
        SingularPatchError: if the patch is singular
    """
    u2, u4 = shifted_pair(normal_form(u), n)
    result = classify_bifurcation(u2, u4)
    if not result.is_cell:
        raise SingularPatchError(n)
    return result.id


def wang_field(u: PentagridParams, n0_range: range, n1_range: range) -> np.ndarray:
    """Returns the Wang tile ids of the grid patches ``R_n`` for ``n0`` in `n0_range` and ``n1`` in
    `n1_range` (array indexed by ``[n0 - n0_range.start, n1 - n1_range.start]``). Patches are located in the
    bifurcation diagram with floats, undecided points are classified exactly.

    Raises:
        SingularPatchError: if a patch is singular
    """
    diagram = bifurcation_diagram()
    star = normal_form(u)
    n0 = np.array(n0_range, dtype=np.int64)
    n1 = np.array(n1_range, dtype=np.int64)
    alpha = float(ALPHA)
    u2 = np.mod(float(star[2]) + n1 * alpha, 1.0)
    u4 = np.mod(float(star[4]) + n0 * alpha, 1.0)
    grid_u4, grid_u2 = np.meshgrid(u4, u2, indexing="ij")
    field = diagram.locate_many(grid_u2, grid_u4).reshape(len(n0), len(n1))
    undecided = int(np.count_nonzero(field < 0))
    for i0, i1 in zip(*np.nonzero(field < 0)):
        n = (int(n0[i0]), int(n1[i1]))
        a, b = shifted_pair(star, n)
        tile_id = diagram.locate(a, b)
        if tile_id is None:
            result = classify_bifurcation(a, b)
            if not result.is_cell:
                raise SingularPatchError(n)
            tile_id = result.id
        field[i0, i1] = tile_id
    _logger.debug("wang_field(): %d patches, %d exact evaluations.", field.size, undecided)
    return field


def wang_frequencies(field: np.ndarray) -> np.ndarray:
    """Returns the relative frequencies of the 24 ids in a Wang field."""
    field = np.asarray(field).ravel()
    return np.bincount(field, minlength=24) / field.size


def symbol_field(field: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the symbol fields ``z`` and ``z'`` of a Wang field."""
    symbols = np.array([symbol_of_id(i) for i in range(24)])
    field = np.asarray(field)
    return symbols[field, 0], symbols[field, 1]


def quadrant_symbol(u2: Qr5, u4: Qr5) -> Tuple[int, int]:
    """Returns the symbol ``(z, z')`` of the bifurcation quadrant of a point."""
    return int(u4 >= ETA1), int(u2 >= ETA1)

# End
