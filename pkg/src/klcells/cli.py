"""Command-line interface.

Subcommands cover word reduction, ball enumeration, KL polynomials and mu,
cell classification and reports, distinguished involutions, W-graph export
and comparison, Hecke structure-constant rows and the boundedness check, the
partition verification suite, and the tessellation renderer.  Groups come
from --polygon N or a JSON group file; words are 1-based comma-separated
lists on the command line.  Set KLCELLS_CACHE to a directory to persist the
KL table between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys as _sysmod

from . import cells as cellsmod
from . import hecke as heckemod
from . import tessellate as tessmod
from . import wgraph as wgraphmod
from .coxeter import CoxeterSystem, GENERAL, POLYGON, make_polygon_group, make_right_angled
from .klpoly import KLTable
from .wordgeom import decompose


def _load_group(args) -> CoxeterSystem:
    if args.polygon is not None:
        return make_polygon_group(args.polygon)
    if args.group:
        with open(args.group) as fh:
            spec = json.load(fh)
        if spec.get("type") == "polygon":
            return make_polygon_group(int(spec["n"]))
        if spec.get("type") == "general":
            return make_right_angled(
                int(spec["n"]), [tuple(p) for p in spec.get("commuting", [])]
            )
        raise ValueError(f"unknown group type {spec.get('type')!r}")
    raise ValueError("a group is required: --polygon N or --group FILE")


def _parse_word(sys: CoxeterSystem, text: str):
    text = (text or "").strip()
    if not text or text == "e":
        return ()
    letters = tuple(int(tok) - 1 for tok in text.replace(" ", "").split(","))
    return sys.check_word(letters)


def _word_str(w) -> str:
    return ",".join(str(s + 1) for s in w) if w else "e"


def _cache_path(sys: CoxeterSystem) -> str | None:
    root = os.environ.get("KLCELLS_CACHE")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    if sys.kind == POLYGON:
        name = f"polygon-{sys.n}.json"
    else:
        key = "-".join(f"{a}.{b}" for a, b in sorted(sys.commuting))
        name = f"general-{sys.n}-{abs(hash(key)) % 10**8}.json"
    return os.path.join(root, name)


def _table_for(sys: CoxeterSystem) -> KLTable:
    table = KLTable(sys)
    path = _cache_path(sys)
    if path and os.path.exists(path):
        table.load(path)
    return table


def _save_table(table: KLTable) -> None:
    path = _cache_path(table.sys)
    if path:
        table.dump(path)


def _emit(args, text_line: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text_line)


def _parse_cell(sys: CoxeterSystem, text: str) -> cellsmod.CellLabel:
    text = text.strip()
    if text == "unit":
        return cellsmod.unit_label()
    kind, _, rest = text.partition(":")
    if kind == "typeI":
        return cellsmod.type_i(int(rest) - 1)
    if kind == "typeII":
        return cellsmod.type_ii(sys.reduce(_parse_word(sys, rest)))
    raise ValueError(f"cannot parse cell spec {text!r}")


def cmd_reduce(args) -> int:
    sys = _load_group(args)
    x = sys.reduce(_parse_word(sys, args.word))
    _emit(args, _word_str(x), {"word": [s + 1 for s in x], "length": len(x)})
    return 0


def cmd_ball(args) -> int:
    sys = _load_group(args)
    ball = sys.ball(args.radius, max_size=args.limit)
    if args.format == "json":
        print(json.dumps({"count": len(ball), "elements": [[s + 1 for s in w] for w in ball]}))
    else:
        print(f"{len(ball)} elements")
        for w in ball:
            print(_word_str(w))
    return 0


def cmd_kl(args) -> int:
    sys = _load_group(args)
    table = _table_for(sys)
    y = sys.reduce(_parse_word(sys, args.y))
    w = sys.reduce(_parse_word(sys, args.w))
    p = table.kl_poly(y, w)
    _save_table(table)
    _emit(args, str(p), {"y": [s + 1 for s in y], "w": [s + 1 for s in w], "poly": dict(p.coeffs)})
    return 0


def cmd_mu(args) -> int:
    sys = _load_group(args)
    table = _table_for(sys)
    y = sys.reduce(_parse_word(sys, args.y))
    w = sys.reduce(_parse_word(sys, args.w))
    m = table.mu(y, w)
    _save_table(table)
    _emit(args, str(m), {"mu": m})
    return 0


def cmd_classify(args) -> int:
    sys = _load_group(args)
    x = sys.reduce(_parse_word(sys, args.word))
    label = cellsmod.classify_left(sys, x)
    _emit(args, str(label), label.to_json())
    return 0


def cmd_cells_report(args) -> int:
    sys = _load_group(args)
    counts: dict[str, int] = {}
    for x in sys.ball(args.radius):
        key = str(cellsmod.classify_left(sys, x))
        counts[key] = counts.get(key, 0) + 1
    if args.format == "json":
        print(json.dumps({"radius": args.radius, "cells": counts}, sort_keys=True))
    else:
        for label in sorted(counts):
            print(f"{label}: {counts[label]}")
    return 0


def cmd_distinguished(args) -> int:
    sys = _load_group(args)
    table = _table_for(sys)
    out = heckemod.distinguished_involutions(sys, args.radius, table=table)
    _save_table(table)
    if args.format == "json":
        print(json.dumps([[s + 1 for s in w] for w in out]))
    else:
        for w in out:
            print(_word_str(w))
    return 0


def cmd_verify(args) -> int:
    sys = _load_group(args)
    table = _table_for(sys)
    report = cellsmod.verify_partition(sys, table, args.radius)
    _save_table(table)
    if args.format == "json":
        print(json.dumps(report.to_json(), default=str, sort_keys=True))
    else:
        status = "pass" if report.passed else "FAIL"
        print(
            f"{status}: {report.element_count} elements, "
            f"{report.type_i_labels} typeI labels, "
            f"{report.type_ii_labels} typeII labels, "
            f"{report.two_sided_classes} two-sided classes, "
            f"{report.mu_edges} mu-edges"
        )
        for f in report.failures:
            print(f"  failure: {f}")
    return 0 if report.passed else 1


def cmd_decompose(args) -> int:
    sys = _load_group(args)
    x = sys.reduce(_parse_word(sys, args.word))
    dec = decompose(sys, x)
    if args.format == "json":
        print(json.dumps(dec.to_json()))
    else:
        bits = []
        for part in dec.to_json():
            tag = "seg" if part["kind"] == "segment" else "block"
            bits.append(f"{tag}({','.join(map(str, part['word']))})")
        print(" ".join(bits) if bits else "e")
    return 0


def cmd_wgraph(args) -> int:
    sys = _load_group(args)
    table = _table_for(sys)
    if args.wgraph_cmd == "export":
        label = _parse_cell(sys, args.cell)
        graph = wgraphmod.build_wgraph(sys, table, label, args.depth)
        data = wgraphmod.export(graph, args.export_format)
        _save_table(table)
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(data)
            print(f"wrote {args.out}")
        else:
            _sysmod.stdout.write(data.decode())
        return 0
    if args.wgraph_cmd == "compare":
        la = _parse_cell(sys, args.cell_a)
        lb = _parse_cell(sys, args.cell_b)
        ga = wgraphmod.build_wgraph(sys, table, la, args.depth)
        gb = wgraphmod.build_wgraph(sys, table, lb, args.depth)
        _save_table(table)
        profile_a = _graph_profile(ga)
        profile_b = _graph_profile(gb)
        same = profile_a == profile_b
        payload = {
            "a": profile_a,
            "b": profile_b,
            "profiles_match": same,
            "note": "profile agreement is evidence, not an equivalence proof",
        }
        if args.format == "json":
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"a: {profile_a}")
            print(f"b: {profile_b}")
            print(f"profiles match: {same} (no equivalence is asserted)")
        return 0
    raise ValueError("unknown wgraph subcommand")


def _graph_profile(graph) -> dict:
    by_len: dict[int, int] = {}
    for v in graph.vertices:
        by_len[len(v.element)] = by_len.get(len(v.element), 0) + 1
    return {
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "cycle_census": wgraphmod.cycle_census(graph),
        "by_length": {str(k): v for k, v in sorted(by_len.items())},
    }


def cmd_hecke(args) -> int:
    sys = _load_group(args)
    if args.hecke_cmd == "f-row":
        x = sys.reduce(_parse_word(sys, args.x))
        y = sys.reduce(_parse_word(sys, args.y))
        row = heckemod.f_consts(sys, x, y)
        _print_row(args, row)
        return 0
    if args.hecke_cmd == "h-row":
        table = _table_for(sys)
        x = sys.reduce(_parse_word(sys, args.x))
        y = sys.reduce(_parse_word(sys, args.y))
        row = heckemod.h_consts(table, x, y)
        _save_table(table)
        _print_row(args, row)
        return 0
    if args.hecke_cmd == "bound-check":
        n_bound = args.n_bound if args.n_bound is not None else heckemod.bound_N(sys)
        report = heckemod.boundedness_check(sys, args.radius, n_bound)
        if args.format == "json":
            print(json.dumps(report.to_json(), sort_keys=True))
        else:
            status = "pass" if report.passed else "FAIL"
            print(
                f"{status}: N={report.n_bound} radius={report.radius} "
                f"pairs={report.pairs_checked} worst v-exponent={report.worst_exponent}"
            )
            if not report.passed and report.witness:
                x, y, z = report.witness
                print(
                    f"  witness: x={_word_str(x)} y={_word_str(y)} z={_word_str(z)}"
                )
        return 0 if report.passed else 1
    if args.hecke_cmd == "distinguished":
        return cmd_distinguished(args)
    raise ValueError("unknown hecke subcommand")


def _print_row(args, row) -> None:
    if args.format == "json":
        print(
            json.dumps(
                {
                    "kind": row.kind,
                    "x": [s + 1 for s in row.x],
                    "y": [s + 1 for s in row.y],
                    "row": {
                        _word_str(z): str(c) for z, c in sorted(row.row.items())
                    },
                },
                sort_keys=True,
            )
        )
    else:
        for z in row.support():
            print(f"{_word_str(z)}: {row.row[z]}")


def cmd_tessellate(args) -> int:
    sys = _load_group(args)
    data = tessmod.tessellate(sys, args.depth)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {args.out}")
    else:
        _sysmod.stdout.write(data.decode())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klcells",
        description="exact cell computations in right-angled Coxeter groups",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for parallel-capable passes (current passes run serially)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_common(p):
        p.add_argument("--polygon", type=int, default=None, help="use the polygon group P_n")
        p.add_argument("--group", default=None, help="JSON group-spec file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("reduce", help="canonical form of a word")
    add_common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("ball", help="enumerate elements up to a length")
    add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{y,w}")
    add_common(p)
    p.add_argument("--y", default="")
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("mu", help="mu(y,w)")
    add_common(p)
    p.add_argument("--y", default="")
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("classify", help="left cell of an element")
    add_common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="segment/block decomposition")
    add_common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cells-report", help="cell census over a ball")
    add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_cells_report)

    p = sub.add_parser("distinguished", help="distinguished involutions up to a length")
    add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_distinguished)

    p = sub.add_parser("verify", help="run the cell-partition verification suite")
    add_common(p)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wgraph", help="W-graph export and comparison")
    wsub = p.add_subparsers(dest="wgraph_cmd", required=True)
    pe = wsub.add_parser("export")
    add_common(pe)
    pe.add_argument("--cell", required=True, help="unit | typeI:g | typeII:word")
    pe.add_argument("--depth", type=int, required=True)
    pe.add_argument("--export-format", choices=("dot", "json"), default="dot")
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_wgraph)
    pc = wsub.add_parser("compare")
    add_common(pc)
    pc.add_argument("--cell-a", required=True)
    pc.add_argument("--cell-b", required=True)
    pc.add_argument("--depth", type=int, required=True)
    pc.set_defaults(func=cmd_wgraph)

    p = sub.add_parser("hecke", help="structure constants and boundedness")
    hsub = p.add_subparsers(dest="hecke_cmd", required=True)
    pf = hsub.add_parser("f-row")
    add_common(pf)
    pf.add_argument("--x", required=True)
    pf.add_argument("--y", required=True)
    pf.set_defaults(func=cmd_hecke)
    ph = hsub.add_parser("h-row")
    add_common(ph)
    ph.add_argument("--x", required=True)
    ph.add_argument("--y", required=True)
    ph.set_defaults(func=cmd_hecke)
    pb = hsub.add_parser("bound-check")
    add_common(pb)
    pb.add_argument("--radius", type=int, required=True)
    pb.add_argument("--n-bound", type=int, default=None)
    pb.set_defaults(func=cmd_hecke)
    pd = hsub.add_parser("distinguished")
    add_common(pd)
    pd.add_argument("--radius", type=int, required=True)
    pd.set_defaults(func=cmd_hecke, hecke_cmd="distinguished")

    p = sub.add_parser("tessellate", help="render the Poincare-disk tessellation")
    add_common(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tessellate)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=_sysmod.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
