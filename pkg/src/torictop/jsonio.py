"""JSON schemas for the shared object types.

- complex:        {"m": int, "facets": [[int]]}
- (multi-)fan:    {"n": int, "rays": [[int]], "faces": [[int]],
                   "weights": [{"face": [int], "wp": int, "wm": int}]}
                  (weights omitted means an ordinary fan)
- multi-polytope: fan schema plus "support": [int]
- presentation:   {"gens": [{"name": str, "deg": int}],
                   "rels": [[{"coef": int, "mono": [[gen, power]]}]]}
- Laurent sum:    [{"u": [int], "c": int}] sorted lexicographically
- homology:       {"betti": [int], "torsion": [[int]]}
- poset:          {"elements": [str], "less": [[str, str]]}

Loaders accept ghost vertices so that explicitly stored complexes round
trip unchanged.
"""

from __future__ import annotations

from .errors import InputError
from .facering import Polynomial, RingPresentation
from .fans import Fan, MultiFan, RaySet
from .momentangle import HomologyResult
from .polytopes import LaurentSum, MultiPolytope, OrientedLoop
from .simplicial import SimplicialComplex, SimplicialPoset

__all__ = [
    "complex_to_json", "complex_from_json",
    "multifan_to_json", "multifan_from_json",
    "multipolytope_to_json", "multipolytope_from_json",
    "presentation_to_json", "presentation_from_json",
    "laurent_to_json", "laurent_from_json",
    "homology_to_json", "loop_from_json", "loop_to_json",
    "poset_from_json",
]


def _require(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"missing key {key!r} in {kind} data")
    return data[key]


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"m": K.m, "facets": [list(f) for f in K.facets]}


def complex_from_json(data) -> SimplicialComplex:
    m = _require(data, "m", "complex")
    facets = _require(data, "facets", "complex")
    return SimplicialComplex.from_facets(m, facets, allow_ghost_vertices=True)


def multifan_to_json(mf: MultiFan) -> dict:
    out = {
        "n": mf.n,
        "rays": [list(r) for r in mf.rays.rays],
        "faces": [list(f) for f in mf.complex.facets],
    }
    if not isinstance(mf, Fan):
        out["weights"] = [{"face": list(f), "wp": wp, "wm": wm}
                          for f, (wp, wm) in sorted(mf.weights.items())]
    return out


def multifan_from_json(data) -> MultiFan:
    n = _require(data, "n", "fan")
    rays = RaySet(n, _require(data, "rays", "fan"))
    faces = _require(data, "faces", "fan")
    complex = SimplicialComplex.from_facets(len(rays), faces, allow_ghost_vertices=True)
    if "weights" in data:
        weights = {tuple(sorted(w["face"])): (w["wp"], w["wm"]) for w in data["weights"]}
        return MultiFan(complex, rays, weights)
    return Fan(complex, rays)


def multipolytope_to_json(p: MultiPolytope) -> dict:
    out = multifan_to_json(p.multifan)
    out["support"] = list(p.support)
    return out


def multipolytope_from_json(data) -> MultiPolytope:
    support = _require(data, "support", "multi-polytope")
    return MultiPolytope(multifan_from_json(data), support)


def presentation_to_json(pres: RingPresentation) -> dict:
    rels = []
    for rel in pres.relations:
        terms = []
        for exps, coef in rel.terms:
            mono = [[i, e] for i, e in enumerate(exps) if e]
            terms.append({"coef": coef, "mono": mono})
        rels.append(terms)
    return {
        "gens": [{"name": n, "deg": d} for n, d in pres.generators],
        "rels": rels,
    }


def presentation_from_json(data) -> RingPresentation:
    gens = [(g["name"], g["deg"]) for g in _require(data, "gens", "presentation")]
    m = len(gens)
    rels = []
    for terms in _require(data, "rels", "presentation"):
        poly = {}
        for term in terms:
            exps = [0] * m
            for i, e in term["mono"]:
                exps[i] += e
            key = tuple(exps)
            poly[key] = poly.get(key, 0) + term["coef"]
        rels.append(Polynomial(m, poly))
    return RingPresentation(gens, rels)


def laurent_to_json(ls: LaurentSum) -> list:
    return [{"u": list(u), "c": c} for u, c in ls.terms]


def laurent_from_json(data) -> LaurentSum:
    return LaurentSum({tuple(t["u"]): t["c"] for t in data})


def homology_to_json(h: HomologyResult) -> dict:
    return {"betti": list(h.betti), "torsion": [list(t) for t in h.torsion]}


def loop_to_json(loop: OrientedLoop) -> list:
    out = []
    for x, y in loop.vertices:
        out.append([_frac_str(x), _frac_str(y)])
    return out


def loop_from_json(data) -> OrientedLoop:
    from fractions import Fraction
    return OrientedLoop([(Fraction(str(x)), Fraction(str(y))) for x, y in data])


def _frac_str(x):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poset_from_json(data) -> SimplicialPoset:
    elements = _require(data, "elements", "poset")
    less = [tuple(pair) for pair in _require(data, "less", "poset")]
    return SimplicialPoset(elements, less)
