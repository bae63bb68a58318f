"""Command line front end: generate, bound, compare, exactness.

All randomness sits behind one seed that is echoed in the output, so
every run can be reproduced bit for bit.  Exit status 0 means success,
1 an input or computation error, 2 a strict-mode failure (method
disagreement or an indeterminate verdict).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .bounds import (bezout_bound, bregman_minc_bound,
                     felsner_zickfeld_bound, is_planar)
from .catalog import lookup, names
from .exactness import OracleConfig, is_mbezout_exact
from .graphs import (Graph, GraphFormatError, InvalidBaseError,
                     NoBaseCliqueError, enumerate_fixed_bases,
                     format_edge_list, generation_tally, graph_to_json,
                     henneberg_generate, load_graph, parse_edge_list,
                     validate_base)
from .orientations import mbezout_via_orientations
from .permanent import build_mbezout_matrix, mbezout_via_permanent


def _add_graph_options(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="NAME",
                     help="named graph: " + ", ".join(names()))
    src.add_argument("--file", metavar="PATH",
                     help="edge list or JSON file")
    src.add_argument("--edges", metavar="LIST",
                     help="inline edges, e.g. '1-2,1-3,2-3'")
    p.add_argument("-n", type=int, default=None,
                   help="vertex count (inferred when omitted)")
    p.add_argument("-d", type=int, default=None,
                   help="dimension (default from the named graph, else 2)")


def _parse_inline_edges(text: str, n: Optional[int]) -> Graph:
    edges = []
    for chunk in text.replace(";", ",").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        sep = "-" if "-" in chunk else " "
        parts = [p for p in chunk.split(sep) if p]
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge {chunk!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise GraphFormatError("no edges given")
    top = max(max(e) for e in edges)
    return Graph(n if n is not None else top, tuple(edges))


def _resolve_graph(args) -> tuple[Graph, int, Optional[tuple[int, ...]], str]:
    """Returns (graph, d, default base or None, display name)."""
    if args.graph:
        entry = lookup(args.graph)
        d = args.d if args.d is not None else entry.d
        return entry.graph, d, entry.base, entry.name
    if args.file:
        g, d_file = load_graph(args.file)
        d = args.d if args.d is not None else d_file
        return g, d, None, args.file
    g = _parse_inline_edges(args.edges, args.n)
    d = args.d if args.d is not None else 2
    return g, d, None, "inline"


def _resolve_bases(g: Graph, d: int, spec: Optional[str],
                   default: Optional[tuple[int, ...]]):
    """Base selector: 'all', 'min', explicit 'u,v[,w]', or the
    catalog default when nothing was requested."""
    if spec is None:
        if default is not None:
            return [validate_base(g, d, default)]
        spec = "min"
    if spec == "all":
        bases = enumerate_fixed_bases(g, d)
        if not bases:
            raise NoBaseCliqueError(f"no K_{d} in the graph")
        return bases
    if spec == "min":
        bases = enumerate_fixed_bases(g, d)
        if not bases:
            raise NoBaseCliqueError(f"no K_{d} in the graph")
        best = min(bases,
                   key=lambda b: mbezout_via_orientations(g, d, b).value)
        return [best]
    verts = tuple(int(x) for x in spec.replace("-", ",").split(",") if x)
    return [validate_base(g, d, verts)]


def cmd_generate(args) -> int:
    if args.tally:
        tally = generation_tally(args.d, args.n)
        if args.format == "json":
            print(json.dumps({"d": args.d, "n": args.n, "tally": tally},
                             sort_keys=True))
        else:
            total = sum(tally.values())
            print(f"graphs with {args.n} vertices in dimension "
                  f"{args.d}: {total}")
            for key in sorted(tally):
                print(f"  {key}: {tally[key]}")
        return 0
    moves = tuple(m.strip().upper()
                  for m in args.moves.split(",") if m.strip())
    gs = henneberg_generate(args.d, args.n, moves=moves)
    if args.count_only:
        print(len(gs))
        return 0
    if args.format == "json":
        print(json.dumps([graph_to_json(g, args.d) for g in gs]))
    else:
        for g in gs:
            print(format_edge_list(g, args.d))
            print()
    return 0


def _bound_row(g: Graph, d: int, base, method: str, allow_large: bool):
    row = {"base": list(base)}
    if method in ("orient", "both"):
        row["mB_orient"] = mbezout_via_orientations(g, d, base).value
    if method in ("permanent", "both"):
        bv = mbezout_via_permanent(g, d, base, allow_large=allow_large)
        row["mB_perm"] = bv.value
        row["permanent"] = bv.count
    if method == "both" and row["mB_orient"] != row["mB_perm"]:
        raise RuntimeError(
            f"method disagreement at base {base}: orientations give "
            f"{row['mB_orient']}, permanent gives {row['mB_perm']}")
    row["value"] = row.get("mB_orient", row.get("mB_perm"))
    return row


def cmd_bound(args) -> int:
    g, d, default_base, name = _resolve_graph(args)
    bases = _resolve_bases(g, d, args.base, default_base)
    rows = []
    for base in bases:
        try:
            rows.append(_bound_row(g, d, base, args.method,
                                   args.allow_large))
        except RuntimeError as ex:
            print(str(ex), file=sys.stderr)
            return 2
    if args.emit_matrix:
        for base in bases:
            mat = build_mbezout_matrix(g, d, base)
            print(f"# base {tuple(base)}, columns "
                  f"{[tuple(e) for e in mat.column_edges]}")
            for r in mat.rows:
                print(" ".join(str(x) for x in r))
    if args.format == "json":
        print(json.dumps({"graph": name, "n": g.n, "d": d,
                          "method": args.method, "rows": rows},
                         sort_keys=True))
    else:
        for row in rows:
            extras = ""
            if "permanent" in row:
                extras = f"  (permanent {row['permanent']})"
            print(f"{name} d={d} base={tuple(row['base'])}: "
                  f"{row['value']}{extras}")
    return 0


def cmd_compare(args) -> int:
    g, d, default_base, name = _resolve_graph(args)
    bases = _resolve_bases(g, d, args.base, default_base)
    bez = bezout_bound(g.n, d)
    fieldnames = ["graph", "d", "base", "bezout", "mB_orient",
                  "mB_perm", "bregman_minc", "felsner_zickfeld"]
    out_rows = []
    for base in bases:
        orient = mbezout_via_orientations(g, d, base).value
        perm = mbezout_via_permanent(g, d, base,
                                     allow_large=args.allow_large).value
        if orient != perm:
            print(f"method disagreement at base {tuple(base)}: "
                  f"{orient} vs {perm}", file=sys.stderr)
            return 2
        mat = build_mbezout_matrix(g, d, base)
        bm = bregman_minc_bound(mat.rows, n=g.n, d=d)
        fz = felsner_zickfeld_bound(g, d, base) if is_planar(g) else None
        out_rows.append({
            "graph": name, "d": d,
            "base": "-".join(str(v) for v in base),
            "bezout": bez, "mB_orient": orient, "mB_perm": perm,
            "bregman_minc": bm.decimal,
            "felsner_zickfeld": "" if fz is None else str(fz.value),
        })
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(out_rows)
        sys.stdout.write(buf.getvalue())
    elif args.format == "json":
        print(json.dumps(out_rows, sort_keys=True))
    else:
        for row in out_rows:
            print(f"{row['graph']} d={row['d']} base={row['base']}: "
                  f"bezout={row['bezout']} mB={row['mB_orient']} "
                  f"bregman_minc={row['bregman_minc']} "
                  f"felsner_zickfeld={row['felsner_zickfeld']}")
    return 0


def cmd_exactness(args) -> int:
    g, d, default_base, name = _resolve_graph(args)
    bases = _resolve_bases(g, d, args.base, default_base)
    keep_s = tuple(int(x) for x in args.keep_s.split(",") if x) \
        if args.keep_s else ()
    if args.graph and args.eliminate and not keep_s:
        entry = lookup(args.graph)
        keep_s = entry.keep_s
    oracle = OracleConfig(trials=args.trials, pair_cap=args.pair_cap)
    status = 0
    for base in bases:
        report = is_mbezout_exact(
            g, d, base, flavor=args.flavor,
            conjecture_mode=not args.full, seed=args.seed,
            eliminate=args.eliminate, keep_s=keep_s,
            fix_reflection=args.fix_reflection, oracle=oracle,
            emit_dir=args.emit_systems)
        if args.format == "json":
            print(report.to_json())
        else:
            print(f"{name} d={d} base={tuple(base)} flavor="
                  f"{args.flavor} seed={args.seed}: {report.verdict} "
                  f"({report.elapsed_seconds}s, "
                  f"{len(report.queries)} queries)")
            if report.witness is not None:
                w = report.witness
                print(f"  witness: delta vertices "
                      f"{w.zero_delta_vertices}, extra zeros "
                      f"{w.zero_e_vars}, normal {w.normal}, toric "
                      f"certified {w.toric_certified}")
        if report.verdict == "indeterminate" and args.strict:
            status = 2
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbezout",
        description="Multihomogeneous embedding bounds for minimally "
                    "rigid graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate",
                           help="enumerate rigid graphs by vertex "
                                "insertion moves")
    p_gen.add_argument("-d", type=int, required=True,
                       help="dimension (2 or 3)")
    p_gen.add_argument("-n", type=int, required=True,
                       help="vertex count")
    p_gen.add_argument("--moves", default="H1,H2",
                       help="comma list of allowed moves")
    p_gen.add_argument("--tally", action="store_true",
                       help="print class counts instead of graphs")
    p_gen.add_argument("--count-only", action="store_true")
    p_gen.add_argument("--format", choices=("text", "json"),
                       default="text")
    p_gen.set_defaults(func=cmd_generate)

    p_bound = sub.add_parser("bound",
                             help="embedding bound at chosen bases")
    _add_graph_options(p_bound)
    p_bound.add_argument("--base", default=None,
                         help="'all', 'min', or explicit like '1,2'")
    p_bound.add_argument("--method",
                         choices=("orient", "permanent", "both"),
                         default="orient")
    p_bound.add_argument("--allow-large", action="store_true",
                         help="lift the permanent size cap")
    p_bound.add_argument("--emit-matrix", action="store_true",
                         help="print the 0/1 matrix per base")
    p_bound.add_argument("--format", choices=("text", "json"),
                         default="text")
    p_bound.set_defaults(func=cmd_bound)

    p_cmp = sub.add_parser("compare",
                           help="bound value next to the classical "
                                "upper bounds")
    _add_graph_options(p_cmp)
    p_cmp.add_argument("--base", default=None)
    p_cmp.add_argument("--allow-large", action="store_true")
    p_cmp.add_argument("--format", choices=("text", "csv", "json"),
                       default="csv")
    p_cmp.set_defaults(func=cmd_compare)

    p_ex = sub.add_parser("exactness",
                          help="decide whether the bound is attained")
    _add_graph_options(p_ex)
    p_ex.add_argument("--base", default=None)
    p_ex.add_argument("--flavor", choices=("euclidean", "spherical"),
                      default="euclidean")
    p_ex.add_argument("--full", action="store_true",
                      help="enumerate every slot choice instead of "
                           "the single conjectured one")
    p_ex.add_argument("--seed", type=int, default=0)
    p_ex.add_argument("--trials", type=int, default=3)
    p_ex.add_argument("--pair-cap", type=int, default=20000)
    p_ex.add_argument("--eliminate", action="store_true",
                      help="substitute the magnitude variables away")
    p_ex.add_argument("--keep-s", default="",
                      help="comma list of vertices whose magnitude "
                           "variable survives elimination")
    p_ex.add_argument("--fix-reflection", action="store_true")
    p_ex.add_argument("--emit-systems", metavar="DIR", default=None,
                      help="write every tested face system here")
    p_ex.add_argument("--strict", action="store_true",
                      help="exit 2 on an indeterminate verdict")
    p_ex.add_argument("--format", choices=("text", "json"),
                      default="text")
    p_ex.set_defaults(func=cmd_exactness)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, InvalidBaseError, NoBaseCliqueError,
            KeyError, ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
