#
#    Module `render`: implements SVG drawings of Penrose tilings with optional overlays (grid lines, Wang
#    tile ids, tetragons, strips).
#    penrosewang authors (C) 2024.
#
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple
import numpy as np
import svgwrite
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import V
from penrosewang.pentagrid import Region, SingularPatchError
from penrosewang.duality import PenroseTiling, RhombTile, materialize
from penrosewang.wang import patch_id, tetragon_patch, TETRAGON_TYPES
from penrosewang.expansive import StripRegion

_logger = logging.getLogger(__name__)

LAYER_GRIDLINES: str = "gridlines"
LAYER_RHOMBS: str = "rhombs"
LAYER_WANGIDS: str = "wangids"
LAYER_TETRAGONS: str = "tetragons"
LAYER_STRIP: str = "strip"
LAYERS: Tuple[str, ...] = (LAYER_GRIDLINES, LAYER_RHOMBS, LAYER_TETRAGONS, LAYER_WANGIDS, LAYER_STRIP)
"""Layer names in drawing order."""

_THICK_FILL = "#f4c542"
_THIN_FILL = "#4287f5"
_FILLED_FILL = "#e0603c"
_GRID_COLORS = ("#d62728", "#2ca02c", "#9467bd", "#8c564b", "#17becf")
_TETRAGON_COLORS = ("#fbb4ae", "#b3cde3", "#ccebc5", "#decbe4", "#fed9a6", "#ffffcc", "#e5d8bd", "#fddaec",
                    "#f2f2f2", "#b3e2cd", "#fdcdac")


class _Canvas:
    """Maps tiling coordinates to SVG coordinates (y axis upwards, fixed scale)."""
    __xmin: float
    __ymax: float
    __scale: float
    __pad: float

    def __init__(self, bounds: Tuple[float, float, float, float], scale: float, pad: float = 10.0) -> None:
        self.__xmin, _, _, self.__ymax = bounds
        self.__scale = scale
        self.__pad = pad
        self.width = (bounds[2] - bounds[0]) * scale + 2 * pad
        self.height = (bounds[3] - bounds[1]) * scale + 2 * pad

    def map(self, p: Sequence[float]) -> Tuple[float, float]:
        return ((p[0] - self.__xmin) * self.__scale + self.__pad,
                (self.__ymax - p[1]) * self.__scale + self.__pad)

    def map_all(self, points: Iterable[Sequence[float]]) -> List[Tuple[float, float]]:
        return [self.map(p) for p in points]


def _draw_gridlines(dwg: svgwrite.Drawing, group, canvas: _Canvas, x: PenroseTiling,
                    bounds: Tuple[float, float, float, float]) -> int:
    u = x.get_params().get_u_float()
    sx, sy = x.get_shift().to_cartesian()
    corners = np.array([[bounds[0], bounds[1]], [bounds[2], bounds[1]], [bounds[2], bounds[3]],
                        [bounds[0], bounds[3]]]) - np.array([sx, sy])
    reach = math.hypot(bounds[2] - bounds[0], bounds[3] - bounds[1])
    count = 0
    for j in range(5):
        vj = np.array(V[j].to_cartesian())
        perp = np.array([-vj[1], vj[0]])
        values = corners @ vj + u[j]
        for k in range(math.ceil(values.min()), math.floor(values.max()) + 1):
            base = (k - u[j]) * vj + np.array([sx, sy])
            start, end = base - reach * perp, base + reach * perp
            group.add(dwg.line(canvas.map(start), canvas.map(end), stroke=_GRID_COLORS[j], stroke_width=0.5))
            count += 1
    return count


def _draw_rhombs(dwg: svgwrite.Drawing, group, canvas: _Canvas, tiles: Iterable[RhombTile]) -> None:
    for t in tiles:
        if t.get_origin() != PenroseConst.ORIGIN_DUAL:
            fill = _FILLED_FILL
        else:
            fill = _THICK_FILL if t.is_thick() else _THIN_FILL
        points = canvas.map_all(v.to_cartesian() for v in t.get_ccw_vertices())
        group.add(dwg.polygon(points, fill=fill, fill_opacity=0.8, stroke="black", stroke_width=0.5))


def _patch_range(x: PenroseTiling, bounds: Tuple[float, float, float, float], j: int) -> range:
    u = x.get_params().get_u_float()
    sx, sy = x.get_shift().to_cartesian()
    vj = np.array(V[j].to_cartesian())
    corners = np.array([[bounds[0], bounds[1]], [bounds[2], bounds[1]], [bounds[2], bounds[3]],
                        [bounds[0], bounds[3]]]) - np.array([sx, sy])
    values = corners @ vj + u[j]
    return range(math.floor(values.min()) - 1, math.ceil(values.max()) + 1)


def _draw_patches(dwg: svgwrite.Drawing, outlines, labels, canvas: _Canvas, x: PenroseTiling,
                  bounds: Tuple[float, float, float, float]) -> int:
    u = x.get_params()
    shift = x.get_shift()
    count = 0
    for n0 in _patch_range(x, bounds, 0):
        for n1 in _patch_range(x, bounds, 1):
            try:
                tile_id = patch_id(u, (n0, n1))
                corners = [(v + shift).to_cartesian() for v in tetragon_patch(u, (n0, n1))]
            except SingularPatchError:
                continue
            cx, cy = np.mean(corners, axis=0)
            if not (bounds[0] <= cx <= bounds[2] and bounds[1] <= cy <= bounds[3]):
                continue
            if outlines is not None:
                outlines.add(dwg.polygon(canvas.map_all(corners), fill=_TETRAGON_COLORS[TETRAGON_TYPES[tile_id]],
                                         fill_opacity=0.5, stroke="black", stroke_width=1.5))
            if labels is not None:
                px, py = canvas.map((cx, cy))
                labels.add(dwg.text(str(tile_id), insert=(px, py), text_anchor="middle",
                                    dominant_baseline="central", font_size="10px", font_family="monospace"))
            count += 1
    return count


def _draw_strip(dwg: svgwrite.Drawing, group, canvas: _Canvas, strip: StripRegion) -> None:
    dx, dy = strip.get_direction().to_cartesian()
    cx, cy = strip.get_center().to_cartesian()
    length, r = float(strip.get_length()), float(strip.get_r())
    corners = [(cx + sa * length * dx - sb * r * dy, cy + sa * length * dy + sb * r * dx)
               for sa, sb in ((-1, -1), (1, -1), (1, 1), (-1, 1))]
    group.add(dwg.polygon(canvas.map_all(corners), fill="none", stroke="#e31a1c", stroke_width=2,
                          stroke_dasharray="6,3"))


def render(x: PenroseTiling, window: Region, layers: Sequence[str] = (LAYER_RHOMBS,), scale: float = 40.0,
           strip: Optional[StripRegion] = None) -> svgwrite.Drawing:
    """Renders the tiles of a tiling in a window as an SVG drawing.

    Args:
        x (PenroseTiling): tiling
        window (Region): window of the tiling
        layers (Sequence[str]): layers to draw (see `LAYERS`)
        scale (float): pixels per unit length
        strip (Optional[StripRegion]): strip drawn by the strip layer

    Returns:
        svgwrite.Drawing: the drawing

    Raises:
        ValueError: in case of unknown layer, missing strip or empty window

    Example:
        >>> x = PenroseTiling(make_params((0, 0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))))
        >>> render(x, Window.around(3)).tostring().startswith("<svg")
        True
    """
    # Validate input parameters.
    for layer in layers:
        if layer not in LAYERS:
            raise ValueError(f"Invalid layer ({layer}).")
    if LAYER_STRIP in layers and strip is None:
        raise ValueError("Missing strip for the strip layer.")
    if scale <= 0:
        raise ValueError(f"Invalid scale ({scale}).")
    tiles = materialize(x, window)
    if not tiles:
        raise ValueError(f"Empty window ({window}).")

    bounds = window.get_bounds()
    canvas = _Canvas(bounds, scale)
    dwg = svgwrite.Drawing(size=(f"{canvas.width:.1f}px", f"{canvas.height:.1f}px"), profile="full")
    clip = dwg.defs.add(dwg.clipPath(id="window"))
    lx, ly = canvas.map((bounds[0], bounds[3]))
    clip.add(dwg.rect(insert=(lx, ly), size=(canvas.width - 20.0, canvas.height - 20.0)))
    for layer in LAYERS:
        if layer not in layers:
            continue
        group = dwg.g(id=layer, clip_path="url(#window)")
        if layer == LAYER_GRIDLINES:
            _draw_gridlines(dwg, group, canvas, x, bounds)
        elif layer == LAYER_RHOMBS:
            _draw_rhombs(dwg, group, canvas, sorted(tiles, key=RhombTile.sort_key))
        elif layer == LAYER_TETRAGONS:
            _draw_patches(dwg, group, None, canvas, x, bounds)
        elif layer == LAYER_WANGIDS:
            _draw_patches(dwg, None, group, canvas, x, bounds)
        else:
            _draw_strip(dwg, group, canvas, strip)
        dwg.add(group)
    _logger.debug("render(): %d tiles, layers %s.", len(tiles), list(layers))
    return dwg


def write_svg(dwg: svgwrite.Drawing, filename: str) -> None:
    """Writes a drawing to a file."""
    dwg.saveas(filename, pretty=True)
    _logger.info("SVG file %s written.", filename)

# End
