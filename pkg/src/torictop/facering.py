"""Face rings, quotient presentations and graded dimension counts.

The face ring of a simplicial complex K has one degree-2 generator per
vertex and one squarefree monomial relation per minimal non-face.  For
a complete nonsingular fan the cohomology of the associated manifold is
the face ring modulo the linear forms sum_i <u, v_i> t_i, and its even
Betti numbers read off the h-vector of K; both routes are implemented
here and cross-checked by exact linear algebra on the monomial basis.
Simplicial posets get the Stanley ring: one generator per face, and the
relation t_F t_G = t_(F meet G) * sum of t_E over the minimal common
upper bounds E (zero when F and G have none).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InputError, PreconditionError
from .fans import MultiFan, is_complete, validate
from .intlinalg import rank_sparse, smith_invariant_factors
from .simplicial import (
    SimplicialComplex,
    SimplicialPoset,
    f_vector,
    h_from_f,
    minimal_nonfaces,
)

__all__ = [
    "Polynomial", "RingPresentation", "GradedDims",
    "face_ring_presentation", "dj_presentation", "betti_numbers",
    "standard_monomial_count", "poset_face_ring",
    "hirzebruch_ring_class", "substitution_isomorphism_exists",
]


class Polynomial:
    """An integer polynomial in named generators, stored as a sorted
    tuple of (exponent tuple, coefficient) terms."""

    __slots__ = ("terms", "ngens")

    def __init__(self, ngens, terms):
        ngens = int(ngens)
        cleaned = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coef in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != ngens:
                raise InputError("exponent tuple length must match generator count")
            if any(e < 0 for e in exps):
                raise InputError("exponents must be nonnegative")
            coef = int(coef)
            if coef:
                cleaned[exps] = cleaned.get(exps, 0) + coef
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "terms",
                           tuple(sorted((e, c) for e, c in cleaned.items() if c)))

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    def degree_under(self, gen_degrees):
        degs = {sum(e * d for e, d in zip(exps, gen_degrees)) for exps, _ in self.terms}
        return degs

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def render(self, names):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.terms:
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            mono = "*".join(factors) if factors else "1"
            if coef == 1 and factors:
                parts.append(mono)
            elif coef == -1 and factors:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coef}*{mono}" if factors else str(coef))
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out


@dataclass(frozen=True)
class RingPresentation:
    """Graded generators (name, even degree) and integer polynomial
    relations, each homogeneous for the generator degrees."""
    generators: tuple
    relations: tuple

    def __init__(self, generators, relations):
        gens = tuple((str(n), int(d)) for n, d in generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise InputError("generator names must be unique")
        for _, d in gens:
            if d <= 0 or d % 2:
                raise InputError("generator degrees must be positive and even")
        degrees = [d for _, d in gens]
        rels = tuple(relations)
        for rel in rels:
            if not isinstance(rel, Polynomial) or rel.ngens != len(gens):
                raise InputError("relations must be Polynomials in the generators")
            if len(rel.degree_under(degrees)) > 1:
                raise InputError(f"relation {rel.render(names)} is not homogeneous")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)

    def render(self):
        names = [n for n, _ in self.generators]
        gens = ", ".join(f"{n} (deg {d})" for n, d in self.generators)
        rels = "; ".join(r.render(names) for r in self.relations) or "none"
        return f"generators: {gens}\nrelations: {rels}"


@dataclass(frozen=True)
class GradedDims:
    """Dimension counts indexed by degree."""
    dims: tuple

    def __init__(self, dims):
        object.__setattr__(self, "dims", tuple(int(d) for d in dims))

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    def __getitem__(self, i):
        return self.dims[i]


def _mono(ngens, support, coef=1):
    exps = [0] * ngens
    for i in support:
        exps[i] += 1
    return (tuple(exps), coef)


def face_ring_presentation(K: SimplicialComplex) -> RingPresentation:
    """Generators t_1..t_m in degree 2; one squarefree monomial relation
    per minimal non-face."""
    m = K.m
    gens = [(f"t{i}", 2) for i in range(1, m + 1)]
    rels = [Polynomial(m, [_mono(m, [i - 1 for i in nf])])
            for nf in minimal_nonfaces(K)]
    return RingPresentation(gens, rels)


def dj_presentation(fan: MultiFan) -> RingPresentation:
    """Quotient presentation of the cohomology of the toric manifold of a
    complete nonsingular fan: the face ring relations together with the
    n linear forms sum_i v_i[j] u_i obtained from the dual basis."""
    report = validate(fan)
    if not (report.complete and report.nonsingular and fan.is_ordinary()):
        raise PreconditionError("presentation needs a complete nonsingular ordinary fan")
    m, n = fan.m, fan.n
    gens = [(f"u{i}", 2) for i in range(1, m + 1)]
    rels = [Polynomial(m, [_mono(m, [i - 1 for i in nf])])
            for nf in minimal_nonfaces(fan.complex)]
    for j in range(n):
        terms = []
        for i in range(m):
            c = fan.rays[i][j]
            if c:
                terms.append(_mono(m, [i], c))
        rels.append(Polynomial(m, terms))
    return RingPresentation(gens, rels)


def betti_numbers(fan: MultiFan) -> GradedDims:
    """Even Betti numbers of the toric manifold: b_{2i} equals the i-th
    entry of the h-vector of the underlying complex, and the total is
    the number of top cones."""
    if not is_complete(fan):
        raise PreconditionError("Betti numbers need a complete fan")
    h = h_from_f(f_vector(fan.complex))
    return GradedDims(h.entries)


def _face_monomials(K: SimplicialComplex, degree: int):
    """Monomials of the given total degree whose support is a face."""
    out = []

    def extend(exps, start, remaining, support):
        if remaining == 0:
            out.append(tuple(exps))
            return
        for v in range(start, K.m + 1):
            if not K.has_face(support + (v,)):
                continue
            for e in range(1, remaining + 1):
                extend(exps[:v - 1] + [e] + exps[v:], v + 1, remaining - e,
                       support + (v,))

    extend([0] * K.m, 1, degree, ())
    return out


def standard_monomial_count(K: SimplicialComplex, linear_forms, degree_bound: int) -> GradedDims:
    """Graded ranks of the face ring modulo the given linear forms, in
    topological degrees 0, 2, ..., degree_bound, by exact row reduction
    over the monomial basis (monomials supported on faces of K).

    This is the independent oracle for Betti numbers: the degree-d piece
    of the ideal is spanned by (linear form) x (monomial of degree d-1),
    and the quotient dimension is the monomial count minus the exact
    rank of that span.
    """
    if degree_bound < 0 or degree_bound % 2:
        raise InputError("degree bound must be a nonnegative even number")
    forms = [tuple(int(c) for c in form) for form in linear_forms]
    for form in forms:
        if len(form) != K.m:
            raise InputError("each linear form needs one coefficient per vertex")
    dims = [1]
    for d in range(1, degree_bound // 2 + 1):
        basis = _face_monomials(K, d)
        col = {exps: i for i, exps in enumerate(basis)}
        entries = {}
        row = 0
        for form in forms:
            for b in _face_monomials(K, d - 1):
                wrote = False
                for i, c in enumerate(form):
                    if not c:
                        continue
                    exps = b[:i] + (b[i] + 1,) + b[i + 1:]
                    if exps in col:
                        entries[(row, col[exps])] = c
                        wrote = True
                if wrote:
                    row += 1
        rank = rank_sparse(entries, row, len(basis)) if entries else 0
        dims.append(len(basis) - rank)
    return GradedDims(dims)


def poset_face_ring(P: SimplicialPoset) -> RingPresentation:
    """Stanley's face ring of a simplicial poset.

    One generator per nonbottom element F, of degree twice its rank; the
    bottom maps to 1.  For every incomparable pair F, G the relation is

        t_F t_G - t_(F meet G) * sum over minimal common upper bounds E of t_E,

    where the meet is the unique maximal common lower bound (it exists
    whenever some upper bound does, because lower intervals are Boolean)
    and an empty sum makes the product zero.
    """
    elems = sorted((e for e in P.elements if e != P.bottom),
                   key=lambda e: (P.rank[e], str(e)))
    pos = {e: i for i, e in enumerate(elems)}
    ngens = len(elems)
    gens = [(f"t_{e}", 2 * P.rank[e]) for e in elems]
    rels = []
    for x, y in itertools.combinations(elems, 2):
        if P.leq(x, y) or P.leq(y, x):
            continue
        ubs = [e for e in P.elements if P.leq(x, e) and P.leq(y, e)]
        product = _mono(ngens, [pos[x], pos[y]])
        if not ubs:
            rels.append(Polynomial(ngens, [product]))
            continue
        lbs = [e for e in P.elements if P.leq(e, x) and P.leq(e, y)]
        maximal_lbs = [e for e in lbs if not any(e != f and P.leq(e, f) for f in lbs)]
        if len(maximal_lbs) != 1:
            raise InputError("meet is not unique; the poset is not simplicial")
        meet = maximal_lbs[0]
        min_ubs = [e for e in ubs if not any(e != f and P.leq(f, e) for f in ubs)]
        terms = [product]
        for e in min_ubs:
            support = [pos[e]] if meet == P.bottom else [pos[meet], pos[e]]
            terms.append(_mono(ngens, support, -1))
        rels.append(Polynomial(ngens, terms))
    return RingPresentation(gens, rels)


def hirzebruch_ring_class(a: int) -> str:
    """Cohomology ring class of the Hirzebruch surface with twist a.

    In Z[x, y]/(x^2, y^2 + a x y) the square of alpha x + beta y reduces
    to (2 alpha beta - a beta^2) xy, so the square-zero classes form the
    union of the line through x and the line through (a, 2)/gcd(2, a).
    The sublattice they generate has index 1 in degree two when a is
    even and index 2 when a is odd; the index is the ring invariant, so
    two surfaces have isomorphic rings exactly when their twists agree
    mod 2."""
    a = int(a)
    g1 = (1, 0)
    if a % 2 == 0:
        g2 = (a // 2, 1)
    else:
        g2 = (a, 2)
    index = abs(g1[0] * g2[1] - g1[1] * g2[0])
    return "even" if index == 1 else "odd"


def substitution_isomorphism_exists(a: int, b: int, bound: int = 10) -> bool:
    """Brute-force oracle: search for a graded ring isomorphism from
    Z[x,y]/(x^2, y^2 + a xy) to Z[x,y]/(x^2, y^2 + b xy) given by
    x -> p x + q y, y -> r x + s y with |entries| <= bound.

    In the target ring every degree-2 class reduces against x^2 = 0 and
    y^2 = -b xy to a multiple of xy, so the two relation images vanish
    exactly when their xy coefficients do; the search enumerates the
    full substitution grid with numpy."""
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    p, q, r, s = np.meshgrid(rng, rng, rng, rng, indexing="ij", sparse=True)
    det = p * s - q * r
    rel1 = 2 * p * q - b * q * q
    rel2 = 2 * r * s - b * s * s + a * (p * s + q * r) - a * b * q * s
    ok = (np.abs(det) == 1) & (rel1 == 0) & (rel2 == 0)
    return bool(np.any(ok))
