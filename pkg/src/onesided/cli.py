"""Command-line front end.

Filling specs are given as ``P Q`` and mean the Dehn filling along the
``(2P, Q)`` curve.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fig8_filling, moebius_tree, oracle
from .errors import SlopeError, UnknownFormat
from .slope_core import quadrant_project


def _vertex_arg(args):
    # genus does not depend on sign, so any quadrant is accepted
    return quadrant_project((args.longitude, args.meridian))


def cmd_genus(args, out):
    print(moebius_tree.genus(_vertex_arg(args)), file=out)


def cmd_path(args, out):
    path = moebius_tree.path_to_root(_vertex_arg(args))
    print(" -> ".join(str(v) for v in path), file=out)


def cmd_children(args, out):
    for w in moebius_tree.children(_vertex_arg(args), args.bound):
        print(w, file=out)


def cmd_tree(args, out):
    out.write(moebius_tree.export_tree(args.bound, args.format))
    if args.format == "json":
        out.write("\n")


def cmd_classify(args, out):
    report = fig8_filling.classify(fig8_filling.FillingSpec(args.p, args.q))
    print(report.to_json() if args.json else report.to_text(), file=out)


def cmd_convert(args, out):
    spec = fig8_filling.FillingSpec(args.p, args.q)
    m = fig8_filling.transition_matrix(spec)
    print(fig8_filling.knot_to_torus((args.longitude, args.meridian), m), file=out)


def cmd_verify(args, out):
    reports = oracle.run_all(args.bound)
    if args.json:
        print(json.dumps({r.name: r.to_dict() for r in reports}), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onesided",
        description="Moebius band tree queries and one-sided splittings of "
                    "even fillings of figure-8 knot space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def slope_args(p):
        p.add_argument("longitude", type=int)
        p.add_argument("meridian", type=int)

    p = sub.add_parser("genus", help="genus of the surface bounded by slope (L,M)")
    slope_args(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("path", help="tree path from (L,M) down to (0,1)")
    slope_args(p)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("children", help="children of (L,M) up to a longitude bound")
    slope_args(p)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_children)

    p = sub.add_parser("tree", help="export the tree up to a longitude bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--format", default="json", help="dot or json")
    p.set_defaults(func=cmd_tree)

    filling_help = "filling along the (2P,Q) curve: give P and Q, not 2P"
    p = sub.add_parser("classify", help="classify splittings of the (2P,Q) filling",
                       description=filling_help)
    p.add_argument("p", type=int, metavar="P")
    p.add_argument("q", type=int, metavar="Q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("convert", help="knot-space slope (L,M) to torus coordinates",
                       description=filling_help)
    p.add_argument("p", type=int, metavar="P")
    p.add_argument("q", type=int, metavar="Q")
    slope_args(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run the brute-force oracle checks")
    p.add_argument("--bound", type=int, default=400)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out) or 0
    except (SlopeError, UnknownFormat, ValueError) as e:
        print(f"error: {e}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
