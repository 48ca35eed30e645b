"""Command line front end: ``tanglefrac <subcommand> ...``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import algebra, bracket
from .bracket import CAP_ENV, CrossingCapError
from .coloring import arcs_of, find_coloring
from .diagram import DiagramError, LinkDiagram, TangleDiagram, format_pd, load_pd

EXIT_IMPOSSIBLE = 2


def _expr_source(arg: str) -> str:
    path = Path(arg)
    if path.is_file():
        lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
        return " ".join(ln for ln in lines if ln)
    return arg


def _load(path: str, kind):
    D = load_pd(path)
    if not isinstance(D, kind):
        want = "tangle" if kind is TangleDiagram else "link"
        raise DiagramError(f"{path}: expected a {want} PD file")
    return D


def _emit(args, pairs):
    if args.kv:
        for key, value in pairs:
            print(f"{key}={value}")


def cmd_eval(args) -> int:
    e = algebra.parse(_expr_source(args.expr))
    frac = algebra.eval_fraction(e)
    if args.brute:
        brute = bracket.invariant(algebra.to_diagram(e))
        if brute != frac:
            print(f"mismatch: compositional {frac}, state sum {brute}", file=sys.stderr)
            return 1
    if args.kv:
        _emit(args, [("fraction", frac), ("num_det", abs(frac.p)), ("den_det", abs(frac.q)),
                     ("gcd", frac.content_gcd()), ("checked", str(args.brute).lower())])
    else:
        print(frac)
    return 0


def cmd_det(args) -> int:
    det = bracket.determinant(_load(args.pd, LinkDiagram))
    if args.kv:
        _emit(args, [("det", det)])
    else:
        print(det)
    return 0


def cmd_invariant(args) -> int:
    frac = bracket.invariant(_load(args.pd, TangleDiagram))
    if args.kv:
        _emit(args, [("fraction", frac), ("gcd", frac.content_gcd())])
    else:
        print(frac)
    return 0


def cmd_obstruct(args) -> int:
    if Path(args.tangle).is_file():
        tangle = _load(args.tangle, TangleDiagram)
    else:
        tangle = algebra.parse(args.tangle)
    link = args.det if args.det is not None else _load(args.link, LinkDiagram)
    report = bracket.obstruct(tangle, link)
    print(report.to_kv() if args.kv else report.to_line())
    return 0 if report.divides else EXIT_IMPOSSIBLE


def cmd_realize(args) -> int:
    e = algebra.realize(args.p, args.q)
    print(algebra.to_text(e))
    if args.emit_pd:
        sys.stdout.write(format_pd(algebra.to_diagram(e)))
    return 0


def cmd_color(args) -> int:
    D = load_pd(args.pd)
    coloring = find_coloring(D, args.mod, same_boundary=args.same_boundary)
    if coloring is None:
        print("none")
        return 0
    arcs = arcs_of(D)
    for i, (edges, color) in enumerate(zip(arcs.arcs, coloring.colors)):
        edge_text = ",".join(map(str, edges)) if edges else "circle"
        if args.kv:
            print(f"arc{i}={color}")
        else:
            print(f"arc {i} [{edge_text}] -> {color}")
    return 0


def cmd_table(args) -> int:
    rows = []
    for raw in Path(args.file).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    for text in rows:
        frac = algebra.eval_fraction(algebra.parse(text))
        if args.kv:
            print(f"expr={text} fraction={frac} num_det={abs(frac.p)} den_det={abs(frac.q)}")
        else:
            print(f"{text}\t{frac}\tdet n(T)={abs(frac.p)}\tdet d(T)={abs(frac.q)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tanglefrac", description=__doc__)
    parser.add_argument("--kv", action="store_true", help="key=value output")
    parser.add_argument("--max-crossings", type=int,
                        help=f"state-sum crossing cap (default ${CAP_ENV} or {bracket.DEFAULT_CAP})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="invariant of a tangle expression")
    p.add_argument("expr", help="expression text or a file containing one")
    p.add_argument("--brute", action="store_true", help="cross-check with the state sum")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("det", help="determinant of a link PD file")
    p.add_argument("pd")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("invariant", help="invariant of a tangle PD file")
    p.add_argument("pd")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("obstruct", help="gcd test for embedding a tangle in a link")
    p.add_argument("--tangle", required=True, help="expression or tangle PD file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--link", help="link PD file")
    group.add_argument("--det", type=int, help="known link determinant")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("realize", help="tangle expression with invariant p/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--emit-pd", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("color", help="Fox coloring modulo a prime")
    p.add_argument("pd")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--same-boundary", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("table", help="closure determinants for a list of expressions")
    p.add_argument("file")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get(CAP_ENV)
    if args.max_crossings is not None:
        os.environ[CAP_ENV] = str(args.max_crossings)
    try:
        return args.func(args)
    except (ValueError, CrossingCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        # main() may be called repeatedly in one process; don't leak the override
        if saved is None:
            os.environ.pop(CAP_ENV, None)
        else:
            os.environ[CAP_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
