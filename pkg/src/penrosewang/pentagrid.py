#
#    Module `pentagrid`: implements the de Bruijn pentagrid (`PentagridParams`, `Window`, `Crossing`,
#    `GridPatch` classes and the crossing enumeration).
#    penrosewang authors (C) 2024.
#
import logging
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple
import numpy as np
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, V, ALPHA, ZERO, as_qr5, dot, express_in, perpendicular, \
    solve_dots, sort_by_angle

_logger = logging.getLogger(__name__)

_VF = np.array([v.to_cartesian() for v in V])
F1 = solve_dots(1, V[0], 0, V[1])
"""Lattice vector dual to `v0`: ``v0.f1 == 1`` and ``v1.f1 == 0``."""
F0 = solve_dots(0, V[0], 1, V[1])
"""Lattice vector dual to `v1`: ``v0.f0 == 0`` and ``v1.f0 == 1``."""


class SingularPatchError(RuntimeError):
    """Raised when a grid patch has a grid line through one of its corners.

    Args:
        n (Tuple[int, int]): index of the singular patch
        message (str): error message
    """
    n: Tuple[int, int]

    def __init__(self, n: Tuple[int, int], message: str = "") -> None:
        self.n = n
        super().__init__(message or f"Singular grid patch at n={n}.")


class GridLine(NamedTuple):
    """Grid line ``{s : v_j.s + u_j == k}``."""
    j: int
    k: int


class PentagridParams:
    """Offset parameters `u = (u_0, ..., u_4)` of a pentagrid. The values are reduced into [0, 1) and their
    sum must be an integer (the parameter space is the 4-torus of sum-zero offsets).

    Args:
        u_raw (Sequence): five exact values (`Qr5`, `Fraction`, `int` or rational strings)

    Raises:
        ValueError: in case of wrong length, float values or non-integer sum

    Example:
        An example about the use of the class::

            >>> from penrosewang import make_params, ALPHA
            >>> u = make_params((0, 0, ALPHA, 0, 1 - ALPHA))
            >>> u[2] == ALPHA
            True
    """
    __u: Tuple[Qr5, ...]        # Reduced offsets
    __uf: Tuple[float, ...]     # Float copies of the offsets

    def __init__(self, u_raw: Sequence[Any]) -> None:

        # Validate input parameters.
        if len(u_raw) != 5:
            raise ValueError(f"Invalid number of parameters ({len(u_raw)}).")
        values = [as_qr5(x) for x in u_raw]
        total = values[0] + values[1] + values[2] + values[3] + values[4]
        if not total.is_integer():
            raise ValueError(f"Invalid parameters, fractional sum ({total.frac()}) is not 0.")

        self.__u = tuple(x.frac() for x in values)
        self.__uf = tuple(float(x) for x in self.__u)

    def get_u(self) -> Tuple[Qr5, ...]:
        """Returns the reduced offsets."""
        return self.__u

    def get_u_float(self) -> Tuple[float, ...]:
        """Returns the offsets as floats."""
        return self.__uf

    def __getitem__(self, j: int) -> Qr5:
        return self.__u[j]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PentagridParams):
            return NotImplemented
        return self.__u == other.__u

    def __hash__(self) -> int:
        return hash(self.__u)

    def __repr__(self) -> str:
        return f"PentagridParams(u=({', '.join(str(x) for x in self.__u)}))"


def make_params(u_raw: Sequence[Any]) -> PentagridParams:
    """Creates pentagrid parameters (see `PentagridParams`)."""
    return PentagridParams(u_raw)


def translate_params(u: PentagridParams, t: PointV) -> PentagridParams:
    """Returns the parameters of the grid translated by `-t`, i.e. ``u_j + v_j.t``. The tiling of the result
    is the tiling of `u` translated by `-t`.

    Example:
        >>> translate_params(make_params((0, 0, 0, 0, 0)), F0).get_u() == (0, 0, ALPHA, 1 - ALPHA, 0)
        True
    """
    return PentagridParams([u[j] + dot(V[j], t) for j in range(5)])


def rotate_params(u: PentagridParams, steps: int) -> PentagridParams:
    """Returns the parameters of the grid rotated by ``steps*72`` degrees counterclockwise: family
    ``l + steps`` takes the offset of family `l`. The tiling of the result is the rotated tiling of `u`."""
    return PentagridParams([u[(l - steps) % 5] for l in range(5)])


def normal_form(u: PentagridParams) -> PentagridParams:
    """Returns the translate of `u` with ``u_0 == u_1 == 0`` (the lattice corner moved to the origin)."""
    return translate_params(u, -(u[0] * F1 + u[1] * F0))


def cocycle_m(s: PointV, u: PentagridParams) -> Tuple[int, ...]:
    """Returns the cell index ``m_j = floor(v_j.s + u_j)`` of a point.

    Raises:
        ValueError: if `s` is on a grid line
    """
    values = [dot(V[j], s) + u[j] for j in range(5)]
    on_lines = [GridLine(j, values[j].floor()) for j in range(5) if values[j].is_integer()]
    if on_lines:
        raise ValueError(f"Invalid point, it is on grid lines ({on_lines}).")
    return tuple(x.floor() for x in values)


class Region:
    """Closed region of the plane with exact and vectorized float membership tests."""

    def contains(self, s: PointV) -> bool:
        """Exact membership test."""
        raise NotImplementedError

    def contains_float(self, xs: np.ndarray, ys: np.ndarray, slack: float) -> np.ndarray:
        """Vectorized float membership test of the region grown by `slack` (shrunk if negative)."""
        raise NotImplementedError

    def get_bounds(self) -> Tuple[float, float, float, float]:
        """Returns the Cartesian bounding box ``(xmin, ymin, xmax, ymax)``."""
        raise NotImplementedError

    def translate(self, t: PointV) -> "Region":
        """Returns the region translated by `t`."""
        raise NotImplementedError


class Window(Region):
    """Closed parallelogram ``{s : lo_a <= a.s <= hi_a, lo_b <= b.s <= hi_b}`` of the plane.

    Args:
        a (PointV): first normal vector
        lo_a (Qr5): lower bound along `a`
        hi_a (Qr5): upper bound along `a`
        b (PointV): second normal vector (not parallel to `a`)
        lo_b (Qr5): lower bound along `b`
        hi_b (Qr5): upper bound along `b`

    Raises:
        ValueError: in case of an empty window or parallel normals
    """
    __a: PointV                 # First normal vector
    __b: PointV                 # Second normal vector
    __bounds: Tuple[Qr5, Qr5, Qr5, Qr5]   # lo_a, hi_a, lo_b, hi_b
    __af: np.ndarray            # Float normal vectors and bounds
    __bf: np.ndarray
    __fbounds: Tuple[float, float, float, float]
    __corners: Optional[Tuple[PointV, ...]]

    def __init__(self, a: PointV, lo_a: Any, hi_a: Any, b: PointV, lo_b: Any, hi_b: Any) -> None:
        lo_a, hi_a, lo_b, hi_b = as_qr5(lo_a), as_qr5(hi_a), as_qr5(lo_b), as_qr5(hi_b)

        # Validate input parameters.
        if lo_a >= hi_a or lo_b >= hi_b:
            raise ValueError(f"Invalid empty window ([{lo_a}, {hi_a}] x [{lo_b}, {hi_b}]).")
        self.__a = a
        self.__b = b
        self.__bounds = (lo_a, hi_a, lo_b, hi_b)
        self.__af = np.array(a.to_cartesian())
        self.__bf = np.array(b.to_cartesian())
        self.__fbounds = (float(lo_a), float(hi_a), float(lo_b), float(hi_b))
        self.__corners = None
        # Parallel normals would give an unbounded region.
        self.get_corners()

    @classmethod
    def around(cls, radius: Any, center: Optional[PointV] = None) -> "Window":
        """Returns the window ``|x| <= radius, |y| <= radius*sin(72)`` around a center point, where the
        second bound is the `v1` coordinate of the point.

        Example:
            >>> w = Window.around(3)
            >>> w.contains(PointV(0, 0))
            True
        """
        r = as_qr5(radius)
        win = cls(V[0], -r, r, F0, -r, r)
        return win if center is None else win.translate(center)

    @classmethod
    def rhomb(cls, u: PentagridParams, n: Tuple[int, int]) -> "Window":
        """Returns the closed rhomb ``R_n`` bounded by the grid lines ``l_{0,n0}``, ``l_{0,n0+1}``,
        ``l_{1,n1}`` and ``l_{1,n1+1}``."""
        return cls(V[0], n[0] - u[0], n[0] + 1 - u[0], V[1], n[1] - u[1], n[1] + 1 - u[1])

    def get_normals(self) -> Tuple[PointV, PointV]:
        """Returns the two normal vectors."""
        return self.__a, self.__b

    def get_limits(self) -> Tuple[Qr5, Qr5, Qr5, Qr5]:
        """Returns the bounds ``(lo_a, hi_a, lo_b, hi_b)``."""
        return self.__bounds

    def get_corners(self) -> Tuple[PointV, ...]:
        """Returns the four corners counterclockwise, starting at the ``(lo_a, lo_b)`` corner."""
        if self.__corners is None:
            lo_a, hi_a, lo_b, hi_b = self.__bounds
            corners = [solve_dots(lo_a, self.__a, lo_b, self.__b), solve_dots(hi_a, self.__a, lo_b, self.__b),
                       solve_dots(hi_a, self.__a, hi_b, self.__b), solve_dots(lo_a, self.__a, hi_b, self.__b)]
            # Keep counterclockwise order.
            x = [c.to_cartesian() for c in corners]
            area = sum(x[i][0] * x[(i + 1) % 4][1] - x[(i + 1) % 4][0] * x[i][1] for i in range(4))
            if area < 0:
                corners = [corners[0], corners[3], corners[2], corners[1]]
            self.__corners = tuple(corners)
        return self.__corners

    def contains(self, s: PointV) -> bool:
        lo_a, hi_a, lo_b, hi_b = self.__bounds
        da = dot(self.__a, s)
        if da < lo_a or da > hi_a:
            return False
        db = dot(self.__b, s)
        return lo_b <= db <= hi_b

    def contains_float(self, xs: np.ndarray, ys: np.ndarray, slack: float) -> np.ndarray:
        lo_a, hi_a, lo_b, hi_b = self.__fbounds
        sa = slack * float(np.hypot(*self.__af))
        sb = slack * float(np.hypot(*self.__bf))
        da = xs * self.__af[0] + ys * self.__af[1]
        db = xs * self.__bf[0] + ys * self.__bf[1]
        return (da >= lo_a - sa) & (da <= hi_a + sa) & (db >= lo_b - sb) & (db <= hi_b + sb)

    def get_bounds(self) -> Tuple[float, float, float, float]:
        points = np.array([c.to_cartesian() for c in self.get_corners()])
        return (float(points[:, 0].min()), float(points[:, 1].min()),
                float(points[:, 0].max()), float(points[:, 1].max()))

    def translate(self, t: PointV) -> "Window":
        da, db = dot(self.__a, t), dot(self.__b, t)
        lo_a, hi_a, lo_b, hi_b = self.__bounds
        return Window(self.__a, lo_a + da, hi_a + da, self.__b, lo_b + db, hi_b + db)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Window):
            return NotImplemented
        return self.get_corners() == other.get_corners()

    def __hash__(self) -> int:
        return hash(self.get_corners())

    def __repr__(self) -> str:
        return f"Window(corners={self.get_corners()})"


class Crossing:
    """Point where two or more grid lines meet.

    Args:
        u (PentagridParams): grid parameters
        incident (Sequence[GridLine]): the incident grid lines
        levels (Sequence[int]): line index `k_j` for incident families, ``floor(v_j.s + u_j)`` otherwise
        point (Optional[PointV]): exact position if already known
    """
    __params: PentagridParams           # Grid parameters
    __incident: Tuple[GridLine, ...]    # Incident lines, sorted by family
    __levels: Tuple[int, ...]           # Level of the crossing in all five families
    __point: Optional[PointV]           # Lazy exact position

    def __init__(self, u: PentagridParams, incident: Sequence[GridLine], levels: Sequence[int],
                 point: Optional[PointV] = None) -> None:
        self.__params = u
        self.__incident = tuple(sorted(incident))
        self.__levels = tuple(levels)
        self.__point = point

    def get_point(self) -> PointV:
        """Returns the exact position of the crossing."""
        if self.__point is None:
            a, b = self.__incident[0], self.__incident[1]
            u = self.__params
            self.__point = solve_dots(a.k - u[a.j], V[a.j], b.k - u[b.j], V[b.j])
        return self.__point

    def get_params(self) -> PentagridParams:
        """Returns the grid parameters."""
        return self.__params

    def get_incident(self) -> Tuple[GridLine, ...]:
        """Returns the incident grid lines sorted by family."""
        return self.__incident

    def get_families(self) -> Tuple[int, ...]:
        """Returns the families of the incident lines."""
        return tuple(line.j for line in self.__incident)

    def get_multiplicity(self) -> int:
        """Returns the number of incident grid lines."""
        return len(self.__incident)

    def get_levels(self) -> Tuple[int, ...]:
        """Returns the levels of the crossing in all five families."""
        return self.__levels

    def get_low_cell(self, x: int, y: int) -> Tuple[int, ...]:
        """Returns the cell index with ``m_x == k_x - 1`` and ``m_y == k_y - 1`` for two incident families.
        The dual vertex of this cell is the anchor of the rhomb of the two families."""
        m = list(self.__levels)
        m[x] -= 1
        m[y] -= 1
        return tuple(m)

    def get_cells(self) -> List[Tuple[int, ...]]:
        """Returns the cell indices around the crossing in counterclockwise order. The first cell is the
        sector after the direction of smallest angle."""
        families = self.get_families()
        directions = []
        for j in families:
            g = perpendicular(V[j])
            directions.extend((g, -g))
        directions = sort_by_angle(directions)
        cells = []
        for i, d in enumerate(directions):
            sample = d + directions[(i + 1) % len(directions)]
            m = list(self.__levels)
            for j in families:
                if dot(V[j], sample).sign() < 0:
                    m[j] -= 1
            cells.append(tuple(m))
        return cells

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Crossing):
            return NotImplemented
        return self.__params == other.__params and self.__incident == other.__incident

    def __hash__(self) -> int:
        return hash(self.__incident)

    def __lt__(self, other: "Crossing") -> bool:
        return self.__incident < other.__incident

    def __repr__(self) -> str:
        return f"Crossing(incident={list(self.__incident)}, multiplicity={self.get_multiplicity()})"


@lru_cache(maxsize=None)
def family_coefficients(i: int, j: int) -> Tuple[Tuple[Qr5, Qr5], ...]:
    """Returns the coefficients ``(a_l, b_l)`` of ``v_l == a_l*v_i + b_l*v_j`` for all five families."""
    return tuple(express_in(V[l], V[i], V[j]) for l in range(5))


@lru_cache(maxsize=None)
def _pair_data(i: int, j: int) -> Tuple[Tuple[Tuple[Qr5, Qr5], ...], np.ndarray]:
    """Returns the family coefficients and the float inverse of the matrix with rows v_i and v_j."""
    return family_coefficients(i, j), np.linalg.inv(np.array([_VF[i], _VF[j]]))


def _family_ranges(u: PentagridParams, region: Region) -> Tuple[np.ndarray, np.ndarray]:
    """Returns safe line index ranges of the five families for the bounding box of a region."""
    xmin, ymin, xmax, ymax = region.get_bounds()
    corners = np.array([[xmin, ymin], [xmax, ymin], [xmin, ymax], [xmax, ymax]])
    proj = corners @ _VF.T + np.array(u.get_u_float())
    return np.floor(proj.min(axis=0)).astype(np.int64) - 1, np.ceil(proj.max(axis=0)).astype(np.int64) + 1


def crossings_in_region(u: PentagridParams, region: Region) -> List[Crossing]:
    """Enumerates every grid crossing in a closed region. Candidates are generated with floats, every
    near-degenerate decision (a third line close to the crossing, a crossing close to the boundary) is
    re-evaluated exactly. Each crossing is reported once.

    Args:
        u (PentagridParams): grid parameters
        region (Region): closed region

    Returns:
        List[Crossing]: crossings sorted by their incident lines
    """
    guard = PenroseConst.FLOAT_GUARD
    uf = np.array(u.get_u_float())
    kmin, kmax = _family_ranges(u, region)
    result: List[Crossing] = []

    for i, j in combinations(range(5), 2):
        coeffs, inverse = _pair_data(i, j)
        ki, kj = np.meshgrid(np.arange(kmin[i], kmax[i] + 1), np.arange(kmin[j], kmax[j] + 1), indexing="ij")
        ki, kj = ki.ravel(), kj.ravel()
        points = inverse @ np.vstack((ki - uf[i], kj - uf[j]))
        outer = region.contains_float(points[0], points[1], guard)
        index = np.nonzero(outer)[0]
        if index.size == 0:
            continue
        inner = region.contains_float(points[0, index], points[1, index], -guard).tolist()
        values = _VF @ points[:, index] + uf[:, None]
        floors = np.floor(values).astype(np.int64).T.tolist()
        near = (np.abs(values - np.rint(values)) < guard).T.tolist()
        kis, kjs = ki[index].tolist(), kj[index].tolist()

        for col, (k_i, k_j) in enumerate(zip(kis, kjs)):
            levels = floors[col]
            levels[i], levels[j] = k_i, k_j
            incident = [GridLine(i, k_i), GridLine(j, k_j)]
            near_col = near[col]
            if any(near_col[l] for l in range(5) if l not in (i, j)):
                c_i, c_j = k_i - u[i], k_j - u[j]
                for l in range(5):
                    if l in (i, j) or not near_col[l]:
                        continue
                    a, b = coeffs[l]
                    value = a * c_i + b * c_j + u[l]
                    if value.is_integer():
                        incident.append(GridLine(l, int(value.get_a())))
                        levels[l] = int(value.get_a())
                    else:
                        levels[l] = value.floor()
                # A multiple crossing is reported from its two smallest families only.
                families = sorted(line.j for line in incident)
                if families[0] != i or families[1] != j:
                    continue
            crossing = Crossing(u, incident, levels)
            if not inner[col] and not region.contains(crossing.get_point()):
                continue
            result.append(crossing)

    result.sort()
    _logger.debug("crossings_in_region(): %d crossings found.", len(result))
    return result


def crossings_in_window(u: PentagridParams, window: Region) -> List[Crossing]:
    """Enumerates every grid crossing in a closed window (see `crossings_in_region`).

    Example:
        >>> c = crossings_in_window(make_params((0, 0, 0, 0, 0)), Window.around(1))
        >>> max(x.get_multiplicity() for x in c)
        5
    """
    return crossings_in_region(u, window)


def spine_family(families: Iterable[int]) -> int:
    """Returns the middle family of a 3-fold crossing: the family `x` where the other two families are
    ``x-1, x+1`` or ``x-2, x+2`` (modulo 5).

    Raises:
        ValueError: if the input is not three different families
    """
    families = sorted(set(families))
    if len(families) != 3 or any(f not in range(5) for f in families):
        raise ValueError(f"Invalid family triple ({families}).")
    for x in families:
        offsets = sorted((f - x) % 5 for f in families if f != x)
        if offsets in ([1, 4], [2, 3]):
            return x
    raise RuntimeError(f"No middle family in {families}.")


@lru_cache(maxsize=256)
def cartwheel_center(u: PentagridParams) -> Optional[PointV]:
    """Returns the 5-fold crossing of a pentagrid or `None`. A pentagrid has at most one: for the levels
    ``k_0, k_1`` of its family 0 and 1 lines, the ``sqrt(5)`` parts of ``v_2.s + u_2`` and ``v_4.s + u_4``
    must vanish, a linear system with a unique solution.

    Example:
        >>> cartwheel_center(make_params((0, 0, 0, 0, 0))).is_zero()
        True
    """
    coeffs = family_coefficients(0, 1)
    rows = []
    for j in (2, 4):
        a, b = coeffs[j]
        c = u[j] - a * u[0] - b * u[1]
        rows.append((a.get_b(), b.get_b(), -c.get_b()))
    (a2, b2, c2), (a4, b4, c4) = rows
    det = a2 * b4 - a4 * b2
    k0 = (c2 * b4 - c4 * b2) / det
    k1 = (a2 * c4 - a4 * c2) / det
    if k0.denominator != 1 or k1.denominator != 1:
        return None
    center = solve_dots(k0 - u[0], V[0], k1 - u[1], V[1])
    if not all((dot(V[j], center) + u[j]).is_integer() for j in range(5)):
        return None
    return center


class ScanResult(NamedTuple):
    """Result of a singularity scan: kind (`PenroseConst.SCAN_*`), spine line of a worm, center of a
    cartwheel."""
    kind: int
    spine: Optional[GridLine] = None
    center: Optional[PointV] = None

    def get_name(self) -> str:
        """Returns the name of the result kind."""
        return PenroseConst.SCAN_NAMES[self.kind]


def scan_crossings(crossings: Iterable[Crossing]) -> ScanResult:
    """Classifies a set of crossings as nonsingular, worm or cartwheel. Without a 5-fold crossing, 3-fold
    crossings on spines through the 5-fold crossing of the grid are half-worms of a cartwheel whose center
    is outside of the set.

    Raises:
        RuntimeError: if 3-fold crossings are found on different spines not meeting in a 5-fold crossing, or
            more than one 5-fold crossing is found
    """
    centers: List[PointV] = []
    spines = set()
    u: Optional[PentagridParams] = None
    for c in crossings:
        mult = c.get_multiplicity()
        if mult == 5:
            centers.append(c.get_point())
        elif mult == 3:
            x = spine_family(c.get_families())
            spines.add(next(line for line in c.get_incident() if line.j == x))
            u = c.get_params()
        elif mult != 2:
            raise RuntimeError(f"Invalid crossing multiplicity ({mult}).")
    if len(centers) > 1:
        raise RuntimeError(f"More than one 5-fold crossing ({centers}).")
    if centers:
        return ScanResult(PenroseConst.SCAN_CARTWHEEL, center=centers[0])
    if not spines:
        return ScanResult(PenroseConst.SCAN_NONSINGULAR)
    center = cartwheel_center(u)
    if center is not None and all(dot(V[line.j], center) + u[line.j] == line.k for line in spines):
        _logger.debug("scan_crossings(): %d half-worms of the cartwheel at %s.", len(spines), center)
        return ScanResult(PenroseConst.SCAN_CARTWHEEL, center=center)
    if len(spines) > 1:
        raise RuntimeError(f"Invalid singular configuration, 3-fold crossings on different spines ({spines}).")
    return ScanResult(PenroseConst.SCAN_WORM, spine=spines.pop())


def singularity_scan(u: PentagridParams, window: Region) -> ScanResult:
    """Classifies the grid in a window as nonsingular, worm (with spine line) or cartwheel (with center).

    Example:
        >>> singularity_scan(make_params((0, 0, 0, 0, 0)), Window.around(2)).get_name()
        'cartwheel'
    """
    return scan_crossings(crossings_in_region(u, window))


def grid_corner(u: PentagridParams, n: Tuple[int, int]) -> PointV:
    """Returns the lower left corner ``b_n`` of the rhomb ``R_n``."""
    return (n[0] - u[0]) * F1 + (n[1] - u[1]) * F0


def corner_values(u: PentagridParams, n: Tuple[int, int], j: int) -> List[Qr5]:
    """Returns ``v_j.s + u_j`` at the four corners of ``R_n`` (counterclockwise from ``b_n``)."""
    b = dot(V[j], grid_corner(u, n)) + u[j]
    e1, e0 = dot(V[j], F1), dot(V[j], F0)
    return [b, b + e1, b + e1 + e0, b + e0]


def count_family_lines(u: PentagridParams, n: Tuple[int, int], j: int) -> int:
    """Returns the number of family `j` grid lines meeting the interior of ``R_n``.

    Raises:
        SingularPatchError: if a family `j` line passes through a corner of ``R_n``
    """
    values = corner_values(u, n, j)
    if any(x.is_integer() for x in values):
        raise SingularPatchError(n, f"Grid line of family {j} through a corner of R_{n}.")
    lo, hi = min(values), max(values)
    return hi.floor() - lo.floor()


class GridPatch:
    """Crossings and cells of the pentagrid inside the closed rhomb ``R_n``.

    Args:
        u (PentagridParams): grid parameters
        n (Tuple[int, int]): rhomb index
    """
    __params: PentagridParams                       # Grid parameters
    __n: Tuple[int, int]                            # Rhomb index
    __crossings: List[Crossing]                     # Crossings in the closed rhomb
    __cells: Dict[Tuple[int, ...], PointV]          # Cells in the rhomb with an exact sample point

    def __init__(self, u: PentagridParams, n: Tuple[int, int]) -> None:
        self.__params = u
        self.__n = (int(n[0]), int(n[1]))
        self.__crossings = crossings_in_region(u, Window.rhomb(u, self.__n))
        vertices: Dict[Tuple[int, ...], List[PointV]] = {}
        for c in self.__crossings:
            for m in c.get_cells():
                if m[0] == self.__n[0] and m[1] == self.__n[1]:
                    vertices.setdefault(m, []).append(c.get_point())
        self.__cells = {m: _average(points) for m, points in vertices.items()}

    def get_params(self) -> PentagridParams:
        """Returns the grid parameters."""
        return self.__params

    def get_n(self) -> Tuple[int, int]:
        """Returns the rhomb index."""
        return self.__n

    def get_crossings(self) -> List[Crossing]:
        """Returns the crossings in the closed rhomb."""
        return self.__crossings

    def get_cells(self) -> List[Tuple[int, ...]]:
        """Returns the cell indices of the cells inside the rhomb."""
        return sorted(self.__cells)

    def get_cell_point(self, m: Tuple[int, ...]) -> PointV:
        """Returns an exact point of the interior of a cell (average of its crossing vertices)."""
        return self.__cells[m]

    def get_max_multiplicity(self) -> int:
        """Returns the largest crossing multiplicity in the rhomb."""
        return max((c.get_multiplicity() for c in self.__crossings), default=0)

    def get_symbol(self) -> Tuple[int, int]:
        """Returns the symbol ``(z, z')``: number of family 4 and family 2 lines through the rhomb minus 1."""
        return (count_family_lines(self.__params, self.__n, 4) - 1,
                count_family_lines(self.__params, self.__n, 2) - 1)

    def __repr__(self) -> str:
        return f"GridPatch(n={self.__n}, crossings={len(self.__crossings)}, cells={len(self.__cells)})"


def _average(points: Sequence[PointV]) -> PointV:
    """Returns the exact average of points."""
    p = sum((x.get_p() for x in points), ZERO)
    q = sum((x.get_q() for x in points), ZERO)
    return PointV(p / len(points), q / len(points))


def grid_patch(u: PentagridParams, n: Tuple[int, int]) -> GridPatch:
    """Returns the grid patch in ``R_n`` (see `GridPatch`)."""
    return GridPatch(u, n)


def lattice_translation(n: Tuple[int, int]) -> PointV:
    """Returns the translation ``s_n = n0*f1 + n1*f0`` which moves ``R_0`` of ``K^{s_n} u`` to ``R_n`` of `u`."""
    return n[0] * F1 + n[1] * F0


def shifted_pair(u: PentagridParams, n: Tuple[int, int]) -> Tuple[Qr5, Qr5]:
    """Returns ``({u2 + n1*alpha}, {u4 + n0*alpha})`` for normal form parameters (``u0 == u1 == 0``)."""
    return (u[2] + n[1] * ALPHA).frac(), (u[4] + n[0] * ALPHA).frac()

# End
