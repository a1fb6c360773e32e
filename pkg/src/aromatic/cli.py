"""Command-line surface: parse expressions, apply operations, verify.

Every subcommand prints a deterministic expansion (terms sorted by canonical
encoding, rationals as ``p/q``).  ``--json`` switches to the JSON export
``{"terms": {term: "p/q"}}``; ``--golden FILE`` compares the output against a
stored expansion and exits nonzero on mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import embedding as emb
from . import forests as fo
from . import multiindices as mi
from . import verify as ver
from .algebra import HopfStructure, LinComb
from .grammar import ParseError, parse, parse_element


def _colors_of(args) -> tuple | None:
    if args.colors is None:
        return ()  # only undecorated vertices/letters accepted
    return tuple(args.colors.split(","))


def _enum_colors(args) -> tuple:
    if args.colors is None:
        return (None,)
    return tuple(args.colors.split(","))


def _lincomb_json(lc: LinComb) -> str:
    terms = {k.key: str(v) for k, v in sorted(lc.terms.items(), key=lambda kv: kv[0].key)}
    return json.dumps(terms, sort_keys=True)


def _emit(args, text: str) -> int:
    if args.golden:
        try:
            with open(args.golden, "r", encoding="utf-8") as fh:
                expected = fh.read().rstrip("\n")
        except OSError as exc:
            print(f"error: cannot read golden file: {exc}", file=sys.stderr)
            return 2
        if text.rstrip("\n") != expected:
            print("golden mismatch:", file=sys.stderr)
            print(f"  expected: {expected}", file=sys.stderr)
            print(f"  got:      {text}", file=sys.stderr)
            return 3
        return 0
    print(text)
    return 0


def _emit_lincomb(args, lc: LinComb) -> int:
    return _emit(args, _lincomb_json(lc) if args.json else lc.render())


def _one_tree(lc: LinComb, what: str):
    for k in lc:
        if len(k.trees) != 1:
            raise ValueError(f"{what} expects aromatic trees, got {k.key!r}")
    return lc


def _forest_kind(text: str) -> str:
    stripped = text.lstrip(" \t-0123456789/")
    return "clumped" if stripped.startswith("(") else "forest"


def _monomial_kind(text: str) -> str:
    stripped = text.lstrip(" \t-0123456789/")
    return "cmi" if stripped.startswith("(") else "ami"


HOPF_FLAVORS = {
    "bck-aro": ("forest", lambda a, b: a.mul(b), fo.bck_aro, fo.AF_UNIT),
    "bck-cl": ("clumped", lambda a, b: a.mul(b), fo.bck_cl, fo.CF_UNIT),
    "lot-aro": ("ami", lambda a, b: a.mul(b), mi.lot_aro, mi.AMI_UNIT),
    "lot-cl": ("cmi", lambda a, b: a.mul(b), mi.lot_cl, mi.CMI_UNIT),
}


def _cmd_graft(args) -> int:
    colors = _colors_of(args)
    x = _one_tree(parse("forest", args.x, colors), "graft")
    y = _one_tree(parse("forest", args.y, colors), "graft")
    out = LinComb.zero()
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            out = out + fo.graft(k1, k2) * (c1 * c2)
    return _emit_lincomb(args, out)


def _cmd_div(args) -> int:
    x = _one_tree(parse("forest", args.x, _colors_of(args)), "div")
    return _emit_lincomb(args, x.apply(fo.divergence))


def _cmd_trace(args) -> int:
    x = _one_tree(parse("forest", args.x, _colors_of(args)), "trace")
    return _emit_lincomb(args, x.apply(fo.trace))


def _cmd_sigma(args) -> int:
    text = args.x
    if "x(" in text:
        kind = _monomial_kind(text)
    else:
        kind = _forest_kind(text)
    obj = parse_element(kind, text, _colors_of(args))
    return _emit(args, json.dumps({"sigma": obj.sigma()}) if args.json else str(obj.sigma()))


def _cmd_coproduct(args) -> int:
    kind, _, coproduct, _ = HOPF_FLAVORS[args.command]
    x = parse(kind, args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(coproduct))


def _cmd_gl(args) -> int:
    kind = _forest_kind(args.x)
    if kind != _forest_kind(args.y):
        raise ValueError("gl expects both arguments in the same flavor")
    colors = _colors_of(args)
    x = parse(kind, args.x, colors)
    y = parse(kind, args.y, colors)
    out = LinComb.zero()
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            out = out + fo.gl_star(k1, k2) * (c1 * c2)
    return _emit_lincomb(args, out)


def _cmd_psi_star(args) -> int:
    x = parse("forest", args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(fo.psi_star))


def _cmd_phi_star(args) -> int:
    x = parse("ami", args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(mi.phi_star))


def _cmd_phi(args) -> int:
    kind = _forest_kind(args.x)
    x = parse(kind, args.x, _colors_of(args))
    return _emit_lincomb(args, x.map_keys(emb.phi))


def _cmd_embed_aro(args) -> int:
    x = parse("ami", args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(emb.j_aro))


def _cmd_embed_cl(args) -> int:
    x = parse("cmi", args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(emb.j_cl))


def _cmd_embed_bar(args) -> int:
    x = parse("monomial", args.x, _colors_of(args))
    return _emit_lincomb(args, x.apply(lambda m: emb.j_bar(m, args.kind)))


def _cmd_enumerate(args) -> int:
    elems = fo.enumerate_forests(args.order, args.kind, _enum_colors(args))
    if args.json:
        return _emit(args, json.dumps([e.key for e in elems]))
    return _emit(args, "\n".join(e.key for e in elems) if elems else "(none)")


def _cmd_antipode(args) -> int:
    kind, product, coproduct, unit = HOPF_FLAVORS[args.coproduct]
    hopf = HopfStructure(args.coproduct, product, coproduct, unit)
    x = parse(kind, args.x, _colors_of(args))
    return _emit_lincomb(args, hopf.antipode(x))


def _cmd_verify(args) -> int:
    names = args.checks.split(",") if args.checks else None
    reports = ver.run_all(names, args.max_order)
    lines = [r.to_json() if args.json else r.line() for r in reports]
    code = _emit(args, "\n".join(lines))
    if code:
        return code
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="aromatic",
        description="Exact computations with aromatic/clumped forests and multi-indices.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *positional):
        p = sub.add_parser(name, help=help_)
        for arg in positional:
            p.add_argument(arg)
        p.add_argument("--colors", help="comma-separated decoration names")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--golden", metavar="FILE", help="compare output against FILE")
        p.set_defaults(fn=fn)
        return p

    add("graft", _cmd_graft, "pre-Lie grafting of aromatic trees", "x", "y")
    add("div", _cmd_div, "divergence of an aromatic tree", "x")
    add("trace", _cmd_trace, "trace of a one-free-edge aromatic tree", "x")
    add("sigma", _cmd_sigma, "symmetry coefficient of an element", "x")
    add("bck-aro", _cmd_coproduct, "BCK coproduct on aromatic forests", "x")
    add("bck-cl", _cmd_coproduct, "BCK coproduct on clumped forests", "x")
    add("lot-aro", _cmd_coproduct, "LOT coproduct on aromatic monomials", "x")
    add("lot-cl", _cmd_coproduct, "LOT coproduct on clumped monomials", "x")
    add("gl", _cmd_gl, "Grossman-Larson product", "x", "y")
    add("psi-star", _cmd_psi_star, "adjoint of the clump-forgetting projection", "x")
    add("phi-star", _cmd_phi_star, "adjoint of the monomial clump projection", "x")
    add("phi", _cmd_phi, "fertility map", "x")
    add("embed-aro", _cmd_embed_aro, "embed aromatic monomials into forests", "x")
    add("embed-cl", _cmd_embed_cl, "embed clumped monomials into clumped forests", "x")
    p = add("embed-bar", _cmd_embed_bar, "free-edge embedding of one monomial", "x")
    p.add_argument("--kind", choices=("aroma", "tree"), required=True)
    p = add("enumerate", _cmd_enumerate, "enumerate a basis slice")
    p.add_argument("--kind", required=True,
                   choices=("tree", "aroma", "aromatic-tree", "forest", "clumped"))
    p.add_argument("--order", type=int, required=True)
    p = add("antipode", _cmd_antipode, "recursive antipode", "x")
    p.add_argument("--coproduct", choices=tuple(HOPF_FLAVORS), required=True)
    p = add("verify", _cmd_verify, "run the verification suite")
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--max-order", type=int, help="override every check's degree bound")
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: parse error at {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
