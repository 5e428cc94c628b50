#
#    Module `cli`: implements the command line interface of `penrosewang` package.
#    penrosewang authors (C) 2024.
#
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, NoReturn, Optional, Sequence
import numpy as np
from rich import box
from rich import print as rprint
from rich.console import Console, Group
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import V
from penrosewang.pentagrid import Window, SingularPatchError, make_params, singularity_scan
from penrosewang.duality import PenroseTiling, WormFill, CartwheelFill, audit_tiling
from penrosewang.wang import WANG_COLORS, TETRAGON_TYPES, classify_bifurcation, edge_codes_and_colors, \
    format_word, quadrant_symbol, sft_adjacency, symbol_of_id, tetragon_vectors, wang_field, wang_frequencies, \
    is_valid_configuration
from penrosewang.sturmian import sturmian_word, recover_parameter
from penrosewang.expansive import StripRegion, classify_direction, direction_transform, strip_extract, \
    reconstruct_from_strip, worm_flip_counterexample
from penrosewang.render import LAYERS, LAYER_STRIP, render, write_svg
from penrosewang.utils import parse_qr5, parse_qr5_list, parse_direction, qr5_to_json, point_to_json, envelope, \
    error_envelope

_logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class _Parser(argparse.ArgumentParser):
    """Argument parser reporting errors with an exception."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _range(text: str) -> range:
    """Parses a half-open integer range ``start:stop``."""
    try:
        start, stop = (int(x) for x in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid range ({text}), use start:stop") from e
    if stop <= start:
        raise argparse.ArgumentTypeError(f"empty range ({text})")
    return range(start, stop)


def _exact(text: str) -> Any:
    try:
        return parse_qr5(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _params(text: str) -> Any:
    try:
        return make_params(parse_qr5_list(text, 5))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _filling(text: str) -> Any:
    if text in ("auto", "none"):
        return text
    if text in ("worm+", "worm-"):
        return WormFill(1 if text[-1] == "+" else -1)
    if text.startswith("cartwheel:") and text[10:].isdigit() and 0 <= int(text[10:]) <= 9:
        return CartwheelFill(int(text[10:]))
    raise argparse.ArgumentTypeError(f"invalid filling ({text}), use auto, none, worm+, worm- or cartwheel:K")


def _layers(text: str) -> List[str]:
    layers = [x.strip() for x in text.split(",") if x.strip()]
    for layer in layers:
        if layer not in LAYERS:
            raise argparse.ArgumentTypeError(f"invalid layer ({layer}), use {','.join(LAYERS)}")
    return layers


def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser of the command line interface."""
    parser = _Parser(prog="penrosewang", description="Penrose tilings, pentagrids and the Penrose Wang tiles.")
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="logging level (-v info, -vv debug)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="render a Penrose tiling as SVG")
    p.add_argument("--u", type=_params, required=True, help="five grid parameters, e.g. 0,0,a,0,1-a")
    p.add_argument("--window", type=_exact, default=parse_qr5("10"), help="window radius")
    p.add_argument("--fill", type=_filling, default="auto", help="auto, none, worm+, worm- or cartwheel:K")
    p.add_argument("--layers", type=_layers, default=["rhombs"], help=f"comma separated layers of {LAYERS}")
    p.add_argument("--scale", type=float, default=40.0, help="pixels per unit length")
    p.add_argument("--out", help="output SVG file")

    p = sub.add_parser("classify", help="classify a point of the bifurcation square")
    p.add_argument("--u2", type=_exact, required=True)
    p.add_argument("--u4", type=_exact, required=True)

    p = sub.add_parser("wangfield", help="Wang tile ids of grid patches")
    p.add_argument("--u", type=_params, required=True)
    p.add_argument("--n0", type=_range, default=range(0, 20), help="start:stop")
    p.add_argument("--n1", type=_range, default=range(0, 20), help="start:stop")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("sft", help="adjacency matrices of the Wang shift")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    sub.add_parser("tetragons", help="tetragon edge vectors and types of the Wang tiles")

    p = sub.add_parser("sturmian", help="golden Sturmian words")
    p.add_argument("--u", type=_exact, help="parameter of the word")
    p.add_argument("--n", type=_range, default=range(0, 40), help="start:stop")
    p.add_argument("--variant", choices=(PenroseConst.VARIANT_PLUS, PenroseConst.VARIANT_MINUS),
                   default=PenroseConst.VARIANT_PLUS)
    p.add_argument("--recover", help="binary word to recover the parameter from")

    for name, text in (("strip", "tiles of a strip"), ("reconstruct", "reconstruct a tiling from a strip")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--u", type=_params, required=True)
        p.add_argument("--fill", type=_filling, default="auto")
        p.add_argument("--slope", required=True, help="slope literal, inf, perp:j or vec:p,q")
        p.add_argument("--mode", choices=(PenroseConst.FRAME_LATTICE, PenroseConst.FRAME_TILING),
                       default=PenroseConst.FRAME_LATTICE)
        p.add_argument("--r", type=_exact, default=parse_qr5(str(PenroseConst.DEFAULT_R1)), help="half-width")
        p.add_argument("--length", type=_exact, default=parse_qr5("60"), help="half-length")
        if name == "strip":
            p.add_argument("--out", help="output SVG file")

    p = sub.add_parser("wormdemo", help="two worm fillings equal on a strip")
    p.add_argument("--j", type=int, choices=range(5), default=0)
    p.add_argument("--r", type=int, default=10)
    p.add_argument("--radius", type=int, default=60)
    p.add_argument("--out", help="output SVG file prefix")

    p = sub.add_parser("expansive", help="classify a direction")
    p.add_argument("--slope", required=True, help="slope literal, inf, perp:j or vec:p,q")
    p.add_argument("--mode", choices=(PenroseConst.FRAME_LATTICE, PenroseConst.FRAME_TILING),
                   default=PenroseConst.FRAME_LATTICE)

    p = sub.add_parser("tables", help="edge codes and colors of the Wang tiles")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    return parser


def _tiling(u: Any, fill: Any, window: Any) -> PenroseTiling:
    """Returns a tiling, an automatic filling is chosen by the singularities of the window."""
    if fill == "none":
        return PenroseTiling(u)
    if fill != "auto":
        return PenroseTiling(u, fill)
    scan = singularity_scan(u, window)
    if scan.kind == PenroseConst.SCAN_CARTWHEEL:
        return PenroseTiling(u, CartwheelFill(0))
    if scan.kind == PenroseConst.SCAN_WORM:
        return PenroseTiling(u, WormFill(1))
    return PenroseTiling(u)


def _filling_name(x: PenroseTiling) -> str:
    filling = x.get_filling()
    if isinstance(filling, WormFill):
        return "worm+" if filling.sign > 0 else "worm-"
    if isinstance(filling, CartwheelFill):
        return f"cartwheel:{filling.k}"
    return "none"


def _matrix_text(matrix: np.ndarray, separator: str) -> str:
    return "\n".join(separator.join(str(int(x)) for x in row) for row in matrix)


def cmd_generate(args: argparse.Namespace) -> Dict[str, Any]:
    window = Window.around(args.window)
    x = _tiling(args.u, args.fill, window)
    tiles = x.materialize(window)
    audit = audit_tiling(tiles)
    dwg = render(x, window, args.layers, args.scale)
    if args.out:
        write_svg(dwg, args.out)
    shapes = {(t.get_family(), t.get_origin() != PenroseConst.ORIGIN_DUAL) for t in tiles}
    return {"tiles": len(tiles), "filling": _filling_name(x), "shapes": len(shapes),
            "scan": singularity_scan(args.u, window).get_name(), "valid": audit.is_valid(), "out": args.out}


def cmd_classify(args: argparse.Namespace) -> Dict[str, Any]:
    result = classify_bifurcation(args.u2, args.u4)
    if not result.is_cell:
        return {"cell": False, "witnesses": [[list(line) for line in w] for w in result.witnesses]}
    z, zp = symbol_of_id(result.id)
    return {"cell": True, "id": result.id, "symbol": [z, zp], "quadrant": list(quadrant_symbol(args.u2, args.u4)),
            "colors": list(WANG_COLORS[result.id])}


def cmd_wangfield(args: argparse.Namespace) -> Dict[str, Any]:
    field = wang_field(args.u, args.n0, args.n1)
    freq = wang_frequencies(field)
    return {"n0": [args.n0.start, args.n0.stop], "n1": [args.n1.start, args.n1.stop], "field": field.tolist(),
            "valid": is_valid_configuration(field), "frequencies": [round(float(f), 6) for f in freq]}


def cmd_sft(args: argparse.Namespace) -> Dict[str, Any]:
    h, v = sft_adjacency()
    return {"horizontal": h.astype(int).tolist(), "vertical": v.astype(int).tolist(),
            "horizontal_pairs": int(h.sum()), "vertical_pairs": int(v.sum())}


def cmd_tetragons(args: argparse.Namespace) -> Dict[str, Any]:
    rows = []
    for tile_id in range(24):
        vectors = tetragon_vectors(tile_id)
        rows.append({"id": tile_id, "type": TETRAGON_TYPES[tile_id],
                     "vectors": {side: list(vectors[side].to_cartesian()) for side in PenroseConst.SIDES}})
    return {"tiles": rows, "types": len(set(TETRAGON_TYPES))}


def cmd_sturmian(args: argparse.Namespace) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    if args.u is None and args.recover is None:
        raise ValueError("Missing --u or --recover.")
    if args.u is not None:
        word = sturmian_word(args.u, args.variant, args.n)
        result["word"] = str(word)
        result["n"] = [args.n.start, args.n.stop]
    if args.recover is not None:
        if set(args.recover) - {"0", "1"}:
            raise ValueError(f"Invalid binary word ({args.recover}).")
        interval = recover_parameter([int(c) for c in args.recover], args.variant)
        result["interval"] = {"lo": qr5_to_json(interval.get_lo()), "hi": qr5_to_json(interval.get_hi()),
                              "length": float(interval.get_length())}
    return result


def _strip(args: argparse.Namespace):
    d = parse_direction(args.slope, args.mode)
    region = StripRegion(d, args.r, args.length)
    x = _tiling(args.u, args.fill, region.grow(PenroseConst.STRIP_MARGIN))
    return x, region, strip_extract(x, d, args.r, args.length)


def cmd_strip(args: argparse.Namespace) -> Dict[str, Any]:
    x, region, strip = _strip(args)
    if args.out:
        write_svg(render(x, Window.around(args.length + 1), ["rhombs", LAYER_STRIP], strip=region),
                  args.out)
    verdict = classify_direction(strip.get_direction())
    return {"tiles": len(strip.get_tiles()), "expansive": verdict.expansive, "family": verdict.family,
            "filling": _filling_name(x), "out": args.out}


def cmd_reconstruct(args: argparse.Namespace) -> Dict[str, Any]:
    _, _, strip = _strip(args)
    rec = reconstruct_from_strip(strip)
    return {"tile_id": rec.tile_id, "patches": rec.patches,
            "u2": {"lo": qr5_to_json(rec.u2.get_lo()), "hi": qr5_to_json(rec.u2.get_hi()),
                   "length": float(rec.u2.get_length())},
            "u4": {"lo": qr5_to_json(rec.u4.get_lo()), "hi": qr5_to_json(rec.u4.get_hi()),
                   "length": float(rec.u4.get_length())},
            "anchor_vertex": point_to_json(rec.anchor_vertex), "t0": list(rec.t0),
            "n0_span": list(rec.n0_span), "n1_span": list(rec.n1_span)}


def cmd_wormdemo(args: argparse.Namespace) -> Dict[str, Any]:
    audit = worm_flip_counterexample(args.j, args.r, args.radius)
    if args.out:
        center = -(args.r + 2) * V[args.j]
        for name, x in (("plus", audit.plus), ("minus", audit.minus)):
            window = Window.around(args.r + 4, center)
            write_svg(render(x, window, ["gridlines", "rhombs"]), f"{args.out}-{name}.svg")
    return {"family": audit.family, "r": audit.r, "strips_equal": audit.strips_equal,
            "tilings_differ": audit.tilings_differ, "strip_tiles": audit.strip_tiles,
            "differing_tiles": audit.differing_tiles, "max_spine_distance": audit.max_spine_distance}


def cmd_expansive(args: argparse.Namespace) -> Dict[str, Any]:
    d = parse_direction(args.slope, args.mode)
    verdict = classify_direction(d)
    slope = direction_transform(d, PenroseConst.FRAME_LATTICE).get_slope()
    return {"verdict": "expansive" if verdict.expansive else "non-expansive", "family": verdict.family,
            "lattice_slope": None if slope is None else qr5_to_json(slope)}


def cmd_tables(args: argparse.Namespace) -> Dict[str, Any]:
    rows = []
    for tile_id in range(24):
        codes, colors = edge_codes_and_colors(tile_id)
        rows.append({"id": tile_id, "colors": list(colors),
                     "codes": {side: format_word(codes[side]) for side in PenroseConst.SIDES}})
    return {"tiles": rows}


_COMMANDS = {"generate": cmd_generate, "classify": cmd_classify, "wangfield": cmd_wangfield, "sft": cmd_sft,
             "tetragons": cmd_tetragons, "sturmian": cmd_sturmian, "strip": cmd_strip,
             "reconstruct": cmd_reconstruct, "wormdemo": cmd_wormdemo, "expansive": cmd_expansive,
             "tables": cmd_tables}


def _print_result(command: str, args: argparse.Namespace, result: Dict[str, Any]) -> None:
    """Prints a command result in human readable form."""
    fmt = getattr(args, "format", "text")
    if command == "wangfield":
        print(_matrix_text(np.array(result["field"]), "," if fmt == "csv" else " "))
        return
    if command == "sft":
        separator = "," if fmt == "csv" else ""
        print(_matrix_text(np.array(result["horizontal"]), separator))
        print()
        print(_matrix_text(np.array(result["vertical"]), separator))
        return
    if command == "expansive":
        print(result["verdict"] if result["family"] is None else f"{result['verdict']} (family {result['family']})")
        return
    if command == "tables":
        if fmt == "csv":
            print("id,b,t,l,r,c_b,c_t,c_l,c_r")
            for row in result["tiles"]:
                print(",".join([str(row["id"])] + [row["codes"][s] for s in PenroseConst.SIDES] +
                               [str(c) for c in row["colors"]]))
            return
        table = Table(border_style="gray30", box=box.MINIMAL)
        table.add_column("id", justify="right", style="bold orange1")
        for side in PenroseConst.SIDES:
            table.add_column(side, justify="left", style="bold orchid")
        table.add_column("colors", justify="left", style="bold green")
        for row in result["tiles"]:
            table.add_row(str(row["id"]), *[row["codes"][s] for s in PenroseConst.SIDES],
                          " ".join(str(c) for c in row["colors"]))
        rprint(Panel(table, title="penrosewang: Wang tiles", title_align="left", border_style="gray30",
                     expand=False))
        return
    if command == "tetragons":
        table = Table(border_style="gray30", box=box.MINIMAL)
        table.add_column("id", justify="right", style="bold orange1")
        table.add_column("type", justify="right", style="bold orchid")
        for side in PenroseConst.SIDES:
            table.add_column(side, justify="right", style="bold sky_blue2")
        for row in result["tiles"]:
            table.add_row(str(row["id"]), str(row["type"]),
                          *[f"({row['vectors'][s][0]:.4f}, {row['vectors'][s][1]:.4f})" for s in PenroseConst.SIDES])
        panel = Panel(f"[markdown.strong]There are [bold sky_blue2]{result['types']}[/] tetragon types[/]",
                      box=box.MINIMAL, expand=False)
        rprint(Panel(Group(panel, table), title="penrosewang: tetragons", title_align="left",
                     border_style="gray30", expand=False))
        return
    table = Table(border_style="gray30", box=box.MINIMAL)
    table.add_column("Attribute", justify="left", style="steel_blue1")
    table.add_column("Value", justify="left", style="orchid")
    for key, value in result.items():
        if isinstance(value, dict) and "exact" in value:
            value = value["exact"]
        elif isinstance(value, dict) and "lo" in value:
            value = f"[{value['lo']['exact']}, {value['hi']['exact']}) length {value['length']:.6f}"
        table.add_row(key, str(value))
    rprint(Panel(table, title=f"penrosewang: {command}", title_align="left", border_style="gray30", expand=False))


def setup_logging(verbose: int) -> None:
    """Sets up logging with a rich handler on the standard error."""
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", force=True,
                        handlers=[RichHandler(console=Console(stderr=True), show_path=False)])


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the command line interface.

    Returns:
        int: exit status (0 success, 1 failure, 2 invalid command line)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(json.dumps(error_envelope("usage", str(e)), sort_keys=True), file=sys.stderr)
        return 2
    setup_logging(args.verbose)
    try:
        result = _COMMANDS[args.command](args)
    except (ValueError, RuntimeError, SingularPatchError) as e:
        _logger.debug("Command %s failed.", args.command, exc_info=True)
        print(json.dumps(error_envelope(type(e).__name__, str(e), args.command), sort_keys=True), file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(envelope(args.command, result), indent=2, sort_keys=True))
    else:
        _print_result(args.command, args, result)
    return 0


if __name__ == '__main__':
    sys.exit(main())

# End
