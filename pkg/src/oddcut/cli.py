"""Command-line front end.

    oddcut separate INSTANCE POINT [--mode M] [--oracle-check] [--count-maxflows]
    oddcut gomory-hu GRAPH [-X ids] [--oracle-check] [--count-maxflows]
    oddcut tcut GRAPH -T ids [--oracle-check] [--count-maxflows]

Exit status: 0 nothing violated / success, 1 violation found, 2 input
error, 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import cut_weight, format_weight
from .cuttree import gomory_hu
from .formats import FILE_MODES, ParseError, parse_graph, parse_instance, parse_point
from .maxflow import count_maxflows
from .oddcut import minimum_t_cut
from .oracle import TooLarge, bf_min_st_cut, bf_min_t_cut, bf_most_violated_blossom
from .separation import check_degree_and_bounds, separation_report

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


class OracleMismatch(RuntimeError):
    pass


def _set(items) -> str:
    return "{" + ",".join(str(v) for v in items) + "}"


def _ids(arg: str) -> list[str]:
    ids = [s for s in arg.split(",") if s]
    if not ids:
        raise ParseError(None, "empty vertex list")
    return ids


def _lookup(G, ids: list[str]) -> list:
    by_name = {str(v): v for v in G.vertices}
    missing = [i for i in ids if i not in by_name]
    if missing:
        raise ParseError(None, f"unknown vertices {','.join(missing)}")
    return [by_name[i] for i in ids]


def _sorted(vs, G) -> list:
    return sorted(vs, key=G.index)


def cmd_separate(args, out) -> int:
    f = parse_instance(Path(args.instance).read_text())
    if args.mode and args.mode != f.file_mode:
        raise ParseError(None, f"--mode {args.mode} does not match the file mode {f.file_mode}")
    x = parse_point(Path(args.point).read_text(), f)
    inst = f.instance
    G = inst.graph

    bad = check_degree_and_bounds(inst, x)
    if bad:
        for v in bad:
            if v.kind == "degree":
                print(f"DEGREE i={v.where} violation={v.amount}", file=out)
            else:
                print(f"BOUND e={f.eids[v.where]} violation={v.amount}", file=out)
        return EXIT_VIOLATED

    beta, cut = separation_report(inst, x)

    if args.oracle_check:
        try:
            ref = bf_most_violated_blossom(inst, x)
        except TooLarge as exc:
            print(f"oracle check skipped: {exc}", file=sys.stderr)
        else:
            got = None if cut is None else cut.violation
            want = None if ref is None else ref[0]
            if got != want:
                raise OracleMismatch(f"separation found violation {got}, enumeration {want}")

    if cut is None:
        print(f"FEASIBLE beta={format_weight(beta)}", file=out)
        return EXIT_OK
    F = sorted(f.eids[k] for k in cut.F)
    print(
        f"BLOSSOM W={_set(_sorted(cut.W, G))} F={_set(F)} lhs={cut.lhs} rhs={cut.rhs} "
        f"violation={cut.violation} beta={cut.beta}",
        file=out,
    )
    return EXIT_VIOLATED


def cmd_gomory_hu(args, out) -> int:
    wg = parse_graph(Path(args.graph).read_text())
    G = wg.graph
    X = _lookup(G, _ids(args.X)) if args.X is not None else list(G.vertices)
    tree = gomory_hu(G, wg.c, X)
    if args.oracle_check:
        for x, y, value in tree.edges:
            if cut_weight(G, wg.c, tree.induced_cut(x, y)) != value:
                raise OracleMismatch(f"tree edge {x}~{y}: induced cut weight differs from {value}")
            try:
                ref = bf_min_st_cut(G, wg.c, x, y)[0]
            except TooLarge as exc:
                print(f"oracle check skipped: {exc}", file=sys.stderr)
                break
            if ref != value:
                raise OracleMismatch(f"tree edge {x}~{y}: value {value}, enumeration {ref}")
    out.write(tree.dump())
    return EXIT_OK


def cmd_tcut(args, out) -> int:
    wg = parse_graph(Path(args.graph).read_text())
    G = wg.graph
    T = _lookup(G, _ids(args.T))
    if len(set(T)) % 2:
        raise ParseError(None, f"|T| = {len(set(T))} is odd")
    U, value = minimum_t_cut(G, wg.c, T)
    if args.oracle_check:
        try:
            ref = bf_min_t_cut(G, wg.c, T)[0]
        except TooLarge as exc:
            print(f"oracle check skipped: {exc}", file=sys.stderr)
        else:
            if ref != value:
                raise OracleMismatch(f"T-cut value {value}, enumeration {ref}")
    print(f"TCUT U={_set(_sorted(U, G))} value={format_weight(value)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcut", description="Exact blossom separation for b-matching polytopes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-check", action="store_true",
                        help="cross-check against brute-force enumeration when the instance is small enough")
    common.add_argument("--count-maxflows", action="store_true",
                        help="print the number of max-flow computations")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("separate", parents=[common], help="find a most violated blossom inequality")
    s.add_argument("instance")
    s.add_argument("point")
    s.add_argument("--mode", choices=sorted(FILE_MODES))
    s.set_defaults(func=cmd_separate)

    g = sub.add_parser("gomory-hu", parents=[common], help="print a cut-tree")
    g.add_argument("graph")
    g.add_argument("-X", help="comma-separated terminal vertices (default: all)")
    g.set_defaults(func=cmd_gomory_hu)

    t = sub.add_parser("tcut", parents=[common], help="minimum T-cut")
    t.add_argument("graph")
    t.add_argument("-T", required=True, help="comma-separated vertices of T (even count)")
    t.set_defaults(func=cmd_tcut)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        with count_maxflows() as counter:
            status = args.func(args, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    if args.count_maxflows:
        print(f"maxflows {counter.calls}", file=out)
    return status


if __name__ == "__main__":
    sys.exit(main())
