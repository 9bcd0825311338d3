"""torictop: JSON-in, JSON-out command line front end.

Every verb prints a single JSON document on stdout and exits 0; bad
input exits 2, violated preconditions exit 3 and size guards exit 4,
each with a machine readable {"error": code, "detail": text} document.
Output is deterministic: identical invocations produce byte-identical
bytes (the fan test-vector battery is fixed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import facering, fans, jsonio, momentangle, polytopes, simplicial, svgfig
from .errors import InputError, PreconditionError, SizeGuardError, ToricTopError

__all__ = ["main"]


def _emit(obj) -> int:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    return 0


def _ints(text):
    try:
        return [int(x) for x in str(text).split(",") if x != ""]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _frac(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fan_arg(args):
    return jsonio.multifan_from_json(_load(args.fan))


def _poly_arg(args):
    return jsonio.multipolytope_from_json(_load(args.poly))


def _loop_arg(args):
    return jsonio.loop_from_json(_load(args.loop))


def _cmd_hvec(args):
    if args.f is not None:
        h = simplicial.h_from_f(_ints(args.f))
        return _emit({"h": list(h.entries)})
    f = simplicial.f_from_h(_ints(args.h))
    return _emit({"f": list(f.entries)})


def _cmd_check_g(args):
    rep = simplicial.check_g_conditions(_ints(args.h))
    return _emit({"ds": rep.ds, "monotone": rep.monotone,
                  "pseudopower": rep.pseudopower, "pass": rep.passes})


def _cmd_check_cellsphere(args):
    rep = simplicial.check_cell_sphere(_ints(args.h))
    return _emit({"symmetric": rep.symmetric, "nonnegative": rep.nonnegative,
                  "middle_parity": rep.middle_parity, "pass": rep.passes})


def _cmd_check_ds(args):
    ok = simplicial.check_generalized_ds(_ints(args.h), args.chi)
    return _emit({"holds": ok})


def _cmd_fan_validate(args):
    rep = fans.validate(_fan_arg(args))
    return _emit({"simplicial": rep.simplicial, "nonsingular": rep.nonsingular,
                  "complete": rep.complete, "euler": rep.euler})


def _cmd_fan_std(args):
    params = json.loads(args.params) if args.params else {}
    if not isinstance(params, dict):
        raise InputError("--params must be a JSON object, e.g. '{\"n\": 2}'")
    mf = fans.standard_fan(args.kind, **params)
    return _emit(jsonio.multifan_to_json(mf))


def _cmd_fan_iso(args):
    a = jsonio.multifan_from_json(_load(args.fan_a))
    b = jsonio.multifan_from_json(_load(args.fan_b))
    g = fans.fans_isomorphic(a, b)
    return _emit({"isomorphic": g is not None,
                  "matrix": [list(row) for row in g] if g is not None else None})


def _cmd_todd(args):
    return _emit({"todd": fans.todd_genus(_fan_arg(args))})


def _cmd_cox_kernel(args):
    basis = fans.cox_kernel(_fan_arg(args))
    return _emit({"rank": len(basis), "basis": [list(v) for v in basis]})


def _cmd_facering(args):
    K = jsonio.complex_from_json(_load(args.complex))
    return _emit(jsonio.presentation_to_json(facering.face_ring_presentation(K)))


def _cmd_dj(args):
    return _emit(jsonio.presentation_to_json(facering.dj_presentation(_fan_arg(args))))


def _cmd_betti(args):
    dims = facering.betti_numbers(_fan_arg(args))
    return _emit({"betti": list(dims)})


def _cmd_posetring(args):
    poset = jsonio.poset_from_json(_load(args.poset))
    return _emit(jsonio.presentation_to_json(facering.poset_face_ring(poset)))


def _cmd_hirzebruch_class(args):
    return _emit({"class": facering.hirzebruch_ring_class(args.a)})


def _cmd_boundary_loop(args):
    loop = polytopes.boundary_loop(_poly_arg(args))
    return _emit({"loop": jsonio.loop_to_json(loop)})


def _cmd_winding(args):
    loop = _loop_arg(args)
    x, y = _ints(args.point)
    return _emit({"winding": polytopes.winding_number(loop, (x, y))})


def _cmd_count(args):
    count, points = polytopes.count_lattice_points(_poly_arg(args))
    return _emit({"count": count, "points": [list(u) for u in points]})


def _cmd_ehrhart(args):
    poly = polytopes.ehrhart(_poly_arg(args))
    return _emit({"coefficients": [_frac(c) for c in poly.coefficients]})


def _cmd_pick(args):
    rep = polytopes.pick_check(_loop_arg(args))
    return _emit({"area": _frac(rep.area), "interior": rep.interior,
                  "boundary": rep.boundary, "holds": rep.holds})


def _cmd_solid_angle(args):
    total = polytopes.solid_angle_count(_loop_arg(args))
    return _emit({"sum": _frac(total)})


def _cmd_index(args):
    ls = polytopes.equivariant_index(_poly_arg(args), args.convention)
    return _emit({"terms": jsonio.laurent_to_json(ls),
                  "coefficient_sum": ls.coefficient_sum()})


def _cmd_twelve(args):
    polygon = [tuple(p) for p in _load(args.polygon)]
    rep = polytopes.dual_polygon_twelve(polygon)
    return _emit({"b": rep.b, "b_dual": rep.b_dual, "sum": rep.total})


def _cmd_zk(args):
    K = jsonio.complex_from_json(_load(args.complex))
    if args.homology:
        result = momentangle.homology(momentangle.zk_chain_complex(K))
        return _emit(jsonio.homology_to_json(result))
    cells = momentangle.zk_cells(K)
    counts = {}
    for c in cells:
        counts[c.dim] = counts.get(c.dim, 0) + 1
    return _emit({"cells": [counts.get(d, 0) for d in range(max(counts) + 1)]})


def _cmd_wedge(args):
    rep = momentangle.verify_wedge(args.m, args.k)
    return _emit({"match": rep.match, "betti": list(rep.betti)})


def _cmd_render(args):
    if args.fan:
        obj = jsonio.multifan_from_json(_load(args.fan))
    elif args.poly:
        obj = jsonio.multipolytope_from_json(_load(args.poly))
    elif args.loop:
        obj = jsonio.loop_from_json(_load(args.loop))
    else:
        raise InputError("render needs one of --fan, --poly or --loop")
    svgfig.render_svg(obj, path=args.out, heatmap=args.heatmap)
    return _emit({"written": args.out})


def _build_parser():
    parser = argparse.ArgumentParser(prog="torictop", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, **flags):
        p = sub.add_parser(name)
        for flag, kwargs in flags.items():
            p.add_argument(f"--{flag.replace('_', '-')}", **kwargs)
        p.set_defaults(fn=fn)
        return p

    verb("hvec", _cmd_hvec, f={"default": None}, h={"default": None})
    verb("check-g", _cmd_check_g, h={"required": True})
    verb("check-cellsphere", _cmd_check_cellsphere, h={"required": True})
    verb("check-ds", _cmd_check_ds, h={"required": True}, chi={"required": True, "type": int})
    verb("fan-validate", _cmd_fan_validate, fan={"required": True})
    verb("fan-std", _cmd_fan_std, kind={"required": True}, params={"default": None})
    verb("fan-iso", _cmd_fan_iso, fan_a={"required": True}, fan_b={"required": True})
    verb("todd", _cmd_todd, fan={"required": True})
    verb("cox-kernel", _cmd_cox_kernel, fan={"required": True})
    verb("facering", _cmd_facering, complex={"required": True})
    verb("dj", _cmd_dj, fan={"required": True})
    verb("betti", _cmd_betti, fan={"required": True})
    verb("posetring", _cmd_posetring, poset={"required": True})
    verb("hirzebruch-class", _cmd_hirzebruch_class, a={"required": True, "type": int})
    verb("boundary-loop", _cmd_boundary_loop, poly={"required": True})
    verb("winding", _cmd_winding, loop={"required": True}, point={"required": True})
    verb("count", _cmd_count, poly={"required": True})
    verb("ehrhart", _cmd_ehrhart, poly={"required": True})
    verb("pick", _cmd_pick, loop={"required": True})
    verb("solid-angle", _cmd_solid_angle, loop={"required": True})
    verb("index", _cmd_index, poly={"required": True},
         convention={"default": "closed_convex",
                     "choices": ["closed_convex", "open_interior"]})
    verb("twelve", _cmd_twelve, polygon={"required": True})
    verb("zk", _cmd_zk, complex={"required": True},
         homology={"action": "store_true"})
    verb("wedge", _cmd_wedge, m={"required": True, "type": int},
         k={"required": True, "type": int})
    verb("render", _cmd_render, fan={"default": None}, poly={"default": None},
         loop={"default": None}, out={"required": True},
         heatmap={"action": "store_true"})
    return parser


def _fail(code: int, label: str, detail: str) -> int:
    sys.stdout.write(json.dumps({"error": label, "detail": detail},
                                separators=(",", ":")) + "\n")
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a usage message for unknown verbs/flags
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except SizeGuardError as exc:
        return _fail(4, "size_guard", str(exc))
    except PreconditionError as exc:
        return _fail(3, "precondition", str(exc))
    except (InputError, ToricTopError) as exc:
        return _fail(2, "invalid_input", str(exc))


if __name__ == "__main__":
    sys.exit(main())
