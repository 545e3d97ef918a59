"""Batch command line: compute, evaluate, and verify Tutte polynomials.

Exit codes: 0 success, 2 parse or usage error, 3 resource budget exceeded,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as cat
from . import engines as eng
from . import families as fam
from . import matroids as mt
from .bipoly import evaluate
from .errors import (
    GraphTooLarge,
    GroundSetTooLarge,
    ParseError,
    ResourceBudgetExceeded,
    SizeBudgetExceeded,
    TuttepolyError,
    UnsupportedWidth,
)
from .formats import (
    parse_graph,
    parse_matrix,
    parse_matroid,
    poly_to_obj,
    render_latex,
    render_text,
)

_BUDGET_ERRORS = (
    GroundSetTooLarge,
    GraphTooLarge,
    ResourceBudgetExceeded,
    SizeBudgetExceeded,
    UnsupportedWidth,
)

# Closed-form producers reachable by name, with the integer flags each needs.
_FAMILIES = {
    "uniform": (fam.uniform, ("r", "n")),
    "cycle": (fam.cycle, ("n",)),
    "complete": (fam.complete_graph, ("n",)),
    "complete-bipartite": (fam.complete_bipartite, ("n", "m")),
    "wheel": (fam.wheel, ("n",)),
    "whirl": (fam.whirl, ("n",)),
    "grid2": (fam.grid2, ("n",)),
    "grid": (eng.transfer_grid, ("m", "n")),
    "catalan": (fam.catalan, ("n",)),
    "multilink": (fam.multilink, ("n",)),
    "sparse-paving": (fam.sparse_paving, ("r", "n", "ch_count")),
    "projective": (fam.projective, ("dim", "q")),
    "affine": (fam.affine, ("dim", "q")),
    "gaussian": (fam.gaussian, ("m", "k", "q")),
}

_RENDERERS = {
    "text": render_text,
    "json": lambda p: json.dumps(poly_to_obj(p)),
    "latex": render_latex,
}


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _pick_input(args):
    picked = [flag for flag in ("family", "matroid", "graph", "matrix")
              if getattr(args, flag) is not None]
    if len(picked) != 1:
        raise ParseError(
            "give exactly one of --family, --matroid, --graph, --matrix"
        )
    return picked[0]


def _input_matroid(args, kind):
    if kind == "matroid":
        return parse_matroid(_read(args.matroid))
    if kind == "graph":
        return mt.Graphic(parse_graph(_read(args.graph)))
    return mt.Linear(parse_matrix(_read(args.matrix)))


def _family_poly(args):
    fn, wanted = _FAMILIES[args.family]
    values = []
    for flag in wanted:
        v = getattr(args, flag)
        if v is None:
            pretty = "--" + flag.replace("_", "-")
            raise ParseError(f"--family {args.family} requires {pretty}")
        values.append(v)
    return fn(*values)


def _engine_poly(m, args):
    if args.engine == "subset":
        return eng.tutte_subset(m, threads=args.threads)
    if args.engine == "dc":
        return eng.tutte_dc(m, budget_nodes=args.budget_nodes)
    if args.engine == "activities":
        return eng.tutte_activities(m)
    return eng.tutte_via_coboundary(m)


def _polynomial(args):
    kind = _pick_input(args)
    if kind == "family":
        return _family_poly(args)
    return _engine_poly(_input_matroid(args, kind), args)


def cmd_compute(args):
    print(_RENDERERS[args.format](_polynomial(args)))
    return 0


def cmd_eval(args):
    print(evaluate(_polynomial(args), args.x, args.y))
    return 0


def cmd_catalog_list(args):
    for name in cat.names():
        print(name)
    return 0


def cmd_catalog_show(args):
    entry = cat.lookup(args.name)
    if args.format == "json":
        print(json.dumps(cat.entry_to_obj(entry), indent=1, sort_keys=True))
        return 0
    print(f"name:       {entry.name}")
    print(f"recipe:     {entry.recipe}")
    print(f"provenance: {entry.provenance}")
    for key in sorted(entry.flags):
        print(f"{key}: {entry.flags[key]}")
    print(f"tutte:      {render_text(entry.ground_truth)}")
    if entry.erratum:
        print(f"erratum:    {entry.erratum['note']}")
        print(f"corrected:  {render_text(entry.erratum['derived_truth'])}")
    return 0


def _verify_line(report):
    k = len(report["routes"])
    if report["matches_truth"]:
        return f"PASS {report['name']} ({k} paths agree with the record)"
    if report["erratum_confirmed"]:
        return (f"ERRATUM-CONFIRMED {report['name']} ({k} paths agree with the "
                f"recorded correction, not the recorded misprint)")
    return f"FAIL {report['name']} ({k} paths)"


def cmd_catalog_verify(args):
    selected = None if args.name == "all" else [args.name]
    reports = cat.verify_all(selected)
    if args.format == "json":
        out = [
            {
                "name": r["name"],
                "ok": r["ok"],
                "matches_truth": r["matches_truth"],
                "erratum_confirmed": r["erratum_confirmed"],
                "routes_agree": r["routes_agree"],
                "basis_count": r["basis_count"],
                "routes": {label: render_text(p)
                           for label, p in r["routes"].items()},
            }
            for r in reports
        ]
        print(json.dumps(out, indent=1, sort_keys=True))
    else:
        for r in reports:
            print(_verify_line(r))
    return 0 if all(r["ok"] for r in reports) else 4


def _add_input_flags(p):
    p.add_argument("--family", choices=sorted(_FAMILIES))
    p.add_argument("--matroid", metavar="FILE", help="matroid JSON file")
    p.add_argument("--graph", metavar="FILE", help="edge-list graph file")
    p.add_argument("--matrix", metavar="FILE", help="GF(p) matrix file")
    p.add_argument("--engine", default="dc",
                   choices=["subset", "dc", "activities", "coboundary"])
    for flag in ("--n", "--m", "--r", "--q", "--k", "--dim", "--ch-count"):
        p.add_argument(flag, type=int)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget-nodes", type=int, default=eng.DEFAULT_BUDGET)


def _parser():
    top = argparse.ArgumentParser(
        prog="tuttepoly",
        description="Exact Tutte polynomials of graphs and matroids.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print a Tutte polynomial")
    _add_input_flags(p_compute)
    p_compute.add_argument("--format", default="text",
                           choices=["text", "json", "latex"])
    p_compute.set_defaults(func=cmd_compute)

    p_eval = sub.add_parser("eval", help="evaluate at an exact rational point")
    _add_input_flags(p_eval)
    p_eval.add_argument("--x", type=_rational, required=True,
                        metavar="P/Q", help='rational, e.g. "2" or "1/3"')
    p_eval.add_argument("--y", type=_rational, required=True, metavar="P/Q")
    p_eval.set_defaults(func=cmd_eval)

    p_cat = sub.add_parser("catalog", help="named-matroid corpus")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    p_list = cat_sub.add_parser("list", help="print every entry name")
    p_list.set_defaults(func=cmd_catalog_list)
    p_show = cat_sub.add_parser("show", help="print one entry")
    p_show.add_argument("name")
    p_show.add_argument("--format", default="text", choices=["text", "json"])
    p_show.set_defaults(func=cmd_catalog_show)
    p_verify = cat_sub.add_parser(
        "verify", help="recompute an entry (or all) along every route"
    )
    p_verify.add_argument("name", help='entry name or "all"')
    p_verify.add_argument("--format", default="text",
                          choices=["text", "json"])
    p_verify.set_defaults(func=cmd_catalog_verify)

    return top


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except _BUDGET_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TuttepolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
