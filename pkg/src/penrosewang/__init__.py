#
#    Package `penrosewang`
#    penrosewang authors (C) 2024.
#
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, DirectionV, ZERO, ONE, SQRT5, GAMMA, ALPHA, ETA1, ETA2, ETA3, V, \
    VPRIME, qr5_arith, qr5_sign_floor, as_qr5, dot, perpendicular
from penrosewang.pentagrid import F0, F1, SingularPatchError, GridLine, PentagridParams, Region, Window, Crossing, \
    ScanResult, GridPatch, make_params, translate_params, rotate_params, normal_form, cocycle_m, crossings_in_region, \
    crossings_in_window, singularity_scan, cartwheel_center, grid_patch, grid_corner, lattice_translation, shifted_pair
from penrosewang.duality import RhombTile, PolygonDual, WormFill, CartwheelFill, PenroseTiling, TilingAudit, \
    dual_vertex, dual_tile, dual_polygon, dual_patch, cartwheel_pattern, cartwheel_perturbation, worm_perturbation, \
    materialize, audit_tiling, same_tiles
from penrosewang.wang import BT_WORDS, LR_WORDS, WANG_COLORS, TETRAGON_TYPES, WangTile, WangPatch, Margins, \
    TetragonTile, Wall, BifurcationResult, BifurcationDiagram, wang_tiles, sft_adjacency, is_valid_configuration, \
    canonical_patch, wang_symbol, tetragon_edges, tetragon_patch, bent_line_deviation, derive_walls, \
    closed_form_walls, \
    classify_bifurcation, bifurcation_diagram, enumerate_canon_24, patch_id, wang_field, wang_frequencies, \
    five_fold_points, corner_vertex
from penrosewang.sturmian import SturmianWord, CircleInterval, SymbolGrid, sturmian_word, recover_parameter, \
    is_balanced, tensor_grid, read_symbol_grid
from penrosewang.expansive import DegenerateFrameError, CoverageGapError, DirectionVerdict, StripRegion, Strip, \
    Reconstruction, WormFlipAudit, direction_transform, classify_direction, strip_extract, reconstruct_from_strip, \
    find_filled_hexagons, read_worm_filling, cartwheel_candidates, observed_cartwheel_signs, \
    worm_flip_counterexample, non_expansive_slopes, frame_rotation
from penrosewang.render import LAYERS, render, write_svg
from penrosewang.utils import parse_qr5, parse_qr5_list, parse_direction

__all__ = ["PenroseConst",
           "Qr5", "PointV", "DirectionV", "ZERO", "ONE", "SQRT5", "GAMMA", "ALPHA", "ETA1", "ETA2", "ETA3", "V",
           "VPRIME", "qr5_arith", "qr5_sign_floor", "as_qr5", "dot", "perpendicular",
           "F0", "F1", "SingularPatchError", "GridLine", "PentagridParams", "Region", "Window", "Crossing",
           "ScanResult", "GridPatch", "make_params", "translate_params", "rotate_params", "normal_form", "cocycle_m",
           "crossings_in_region", "crossings_in_window", "singularity_scan", "cartwheel_center", "grid_patch",
           "grid_corner", "lattice_translation", "shifted_pair",
           "RhombTile", "PolygonDual", "WormFill", "CartwheelFill", "PenroseTiling", "TilingAudit", "dual_vertex",
           "dual_tile", "dual_polygon", "dual_patch", "cartwheel_pattern", "cartwheel_perturbation",
           "worm_perturbation", "materialize", "audit_tiling", "same_tiles",
           "BT_WORDS", "LR_WORDS", "WANG_COLORS", "TETRAGON_TYPES", "WangTile", "WangPatch", "Margins",
           "TetragonTile", "Wall", "BifurcationResult", "BifurcationDiagram", "wang_tiles", "sft_adjacency",
           "is_valid_configuration", "canonical_patch", "wang_symbol", "tetragon_edges", "tetragon_patch",
           "bent_line_deviation", "derive_walls", "closed_form_walls", "five_fold_points", "classify_bifurcation",
           "bifurcation_diagram",
           "enumerate_canon_24", "patch_id", "wang_field", "wang_frequencies", "corner_vertex",
           "SturmianWord", "CircleInterval", "SymbolGrid", "sturmian_word", "recover_parameter", "is_balanced",
           "tensor_grid", "read_symbol_grid",
           "DegenerateFrameError", "CoverageGapError", "DirectionVerdict", "StripRegion", "Strip", "Reconstruction",
           "WormFlipAudit", "direction_transform", "classify_direction", "strip_extract", "reconstruct_from_strip",
           "find_filled_hexagons", "read_worm_filling", "cartwheel_candidates", "observed_cartwheel_signs",
           "worm_flip_counterexample", "non_expansive_slopes", "frame_rotation",
           "LAYERS", "render", "write_svg",
           "parse_qr5", "parse_qr5_list", "parse_direction"]
