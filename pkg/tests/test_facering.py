import itertools
import random

import pytest

from torictop.errors import InputError, PreconditionError
from torictop.facering import (
    GradedDims,
    Polynomial,
    RingPresentation,
    betti_numbers,
    dj_presentation,
    face_ring_presentation,
    hirzebruch_ring_class,
    poset_face_ring,
    standard_monomial_count,
    substitution_isomorphism_exists,
)
from torictop.fans import bott_fan, cp_fan, hirzebruch_fan, sphere_fan
from torictop.simplicial import (
    SimplicialComplex,
    SimplicialPoset,
    minimal_nonfaces,
    standard_complex,
)


def mono(ngens, *support, coef=1):
    exps = [0] * ngens
    for i in support:
        exps[i] += 1
    return Polynomial(ngens, [(tuple(exps), coef)])


def linear(ngens, coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c:
            exps = [0] * ngens
            exps[i] = 1
            terms.append((tuple(exps), c))
    return Polynomial(ngens, terms)


def test_face_ring_examples():
    pres = face_ring_presentation(standard_complex("boundary_of_simplex", 2))
    assert pres.generators == (("t1", 2), ("t2", 2), ("t3", 2))
    assert set(pres.relations) == {mono(3, 0, 1, 2)}

    cycle = SimplicialComplex.from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    pres = face_ring_presentation(cycle)
    assert set(pres.relations) == {mono(4, 0, 2), mono(4, 1, 3)}

    full = SimplicialComplex.from_facets(4, [(1, 2, 3, 4)])
    assert face_ring_presentation(full).relations == ()


def test_dj_presentation_examples():
    pres = dj_presentation(cp_fan(2))
    assert set(pres.relations) == {
        mono(3, 0, 1, 2),
        linear(3, [1, 0, -1]),
        linear(3, [0, 1, -1]),
    }
    for a in (-2, 0, 1, 3):
        pres = dj_presentation(hirzebruch_fan(a))
        assert set(pres.relations) == {
            mono(4, 0, 2),
            mono(4, 1, 3),
            linear(4, [1, 0, -1, 0]),
            linear(4, [0, 1, a, -1]),
        }
    pres = dj_presentation(bott_fan(2))
    assert set(pres.relations) == {
        mono(4, 0, 2),
        mono(4, 1, 3),
        linear(4, [1, 0, -1, 0]),
        linear(4, [0, 1, 0, -1]),
    }


def test_dj_needs_complete_nonsingular():
    from torictop.fans import Fan, RaySet
    half = Fan(SimplicialComplex.from_facets(2, [(1, 2)]), RaySet(2, [(1, 0), (0, 1)]))
    with pytest.raises(PreconditionError):
        dj_presentation(half)
    with pytest.raises(PreconditionError):
        dj_presentation(sphere_fan(2))


def test_betti_examples():
    assert list(betti_numbers(cp_fan(2))) == [1, 1, 1]
    for a in range(-5, 6):
        assert list(betti_numbers(hirzebruch_fan(a))) == [1, 2, 1]
    assert list(betti_numbers(bott_fan(3))) == [1, 3, 3, 1]
    with pytest.raises(PreconditionError):
        from torictop.fans import Fan, RaySet
        betti_numbers(Fan(SimplicialComplex.from_facets(2, [(1, 2)]),
                          RaySet(2, [(1, 0), (0, 1)])))


def _linear_forms(fan):
    return [[fan.rays[i][j] for i in range(fan.m)] for j in range(fan.n)]


def test_monomial_count_oracle_matches_betti():
    fan_list = [cp_fan(1), cp_fan(2), cp_fan(3), cp_fan(4),
                hirzebruch_fan(-2), hirzebruch_fan(1), hirzebruch_fan(5),
                bott_fan(2, [[3]]), bott_fan(3, [[1, -1], [2]])]
    for fan in fan_list:
        expected = list(betti_numbers(fan))
        dims = standard_monomial_count(fan.complex, _linear_forms(fan), 2 * fan.n)
        assert list(dims) == expected, fan


def test_betti_palindromic_and_sums_to_top_faces():
    for fan in (cp_fan(2), cp_fan(5), hirzebruch_fan(4), bott_fan(3), bott_fan(4)):
        b = list(betti_numbers(fan))
        assert b == b[::-1]
        assert sum(b) == len(fan.top_faces)


def test_monomial_count_plain_face_ring():
    two = standard_complex("disjoint_points", 2)
    dims = standard_monomial_count(two, [], 8)
    assert list(dims) == [1, 2, 2, 2, 2]


def test_monomial_count_rejects_odd_bound():
    with pytest.raises(InputError):
        standard_monomial_count(standard_complex("disjoint_points", 2), [], 3)


def test_poset_face_ring_two_gon():
    P = SimplicialPoset(
        ["o", "F", "G", "p", "q"],
        [("o", "F"), ("o", "G"), ("o", "p"), ("o", "q"),
         ("F", "p"), ("G", "p"), ("F", "q"), ("G", "q")])
    pres = poset_face_ring(P)
    assert pres.generators == (("t_F", 2), ("t_G", 2), ("t_p", 4), ("t_q", 4))
    tf_tg = Polynomial(4, [((1, 1, 0, 0), 1), ((0, 0, 1, 0), -1), ((0, 0, 0, 1), -1)])
    tp_tq = Polynomial(4, [((0, 0, 1, 1), 1)])
    assert set(pres.relations) == {tf_tg, tp_tq}


def test_poset_ring_no_join_gives_zero_product():
    P = SimplicialPoset.from_complex(standard_complex("disjoint_points", 2))
    pres = poset_face_ring(P)
    assert len(pres.relations) == 1
    (rel,) = pres.relations
    assert rel.terms == (((1, 1), 1),)


def _substituted_exponents(P, gen_faces, exps):
    total = {}
    for face, e in zip(gen_faces, exps):
        for v in face:
            total[v] = total.get(v, 0) + e
    return total


def _divisible_by_nonface(exponents, nonfaces):
    support = {v for v, e in exponents.items() if e}
    return any(set(nf) <= support for nf in nonfaces)


def _small_complex_corpus():
    yield standard_complex("boundary_of_simplex", 2)
    yield standard_complex("join_of_s0", 2)
    yield standard_complex("skeleton", 4, 2)
    yield standard_complex("disjoint_points", 3)
    yield SimplicialComplex.from_facets(5, [(1, 2, 3), (3, 4), (4, 5), (1, 5)])
    rng = random.Random(8)
    for _ in range(6):
        m = rng.randint(3, 6)
        facets = []
        for _ in range(rng.randint(2, 5)):
            size = rng.randint(1, min(3, m))
            facets.append(tuple(sorted(rng.sample(range(1, m + 1), size))))
        yield SimplicialComplex.from_facets(m, facets, allow_ghost_vertices=True)


def test_poset_ring_of_face_poset_reduces_to_stanley_reisner():
    """Substituting t_F -> prod of vertex variables must turn every
    relation into either an identity or a monomial lying in the
    Stanley-Reisner ideal, and every minimal non-face must occur."""
    for K in _small_complex_corpus():
        P = SimplicialPoset.from_complex(K)
        pres = poset_face_ring(P)
        # generator order inside poset_face_ring: by (rank, str)
        gen_faces = sorted((e for e in P.elements if e != ()),
                           key=lambda e: (P.rank[e], str(e)))
        assert len(gen_faces) == len(pres.generators)
        nonfaces = minimal_nonfaces(K)
        covered = set()
        for rel in pres.relations:
            images = {}
            for exps, coef in rel.terms:
                key = tuple(sorted(_substituted_exponents(P, gen_faces, exps).items()))
                images[key] = images.get(key, 0) + coef
            images = {k: v for k, v in images.items() if v}
            if not images:
                continue  # relation maps to zero: an identity after substitution
            # surviving terms must each lie in the Stanley-Reisner ideal
            for key, _ in images.items():
                exponents = dict(key)
                assert _divisible_by_nonface(exponents, nonfaces), (K, rel.terms)
                for nf in nonfaces:
                    if set(nf) <= {v for v, e in exponents.items() if e}:
                        covered.add(nf)
        assert covered == set(nonfaces), K


def test_presentation_validation():
    with pytest.raises(InputError):
        RingPresentation([("x", 2), ("x", 2)], [])
    with pytest.raises(InputError):
        RingPresentation([("x", 3)], [])
    with pytest.raises(InputError):
        # x^2 + x is not homogeneous when deg x = 2
        RingPresentation([("x", 2)], [Polynomial(1, [((2,), 1), ((1,), 1)])])


def test_polynomial_render():
    p = Polynomial(2, [((1, 1), 1), ((0, 2), -3)])
    assert p.render(["x", "y"]) == "-3*y^2 + x*y"
    assert Polynomial(2, []).render(["x", "y"]) == "0"


def test_hirzebruch_class_examples():
    assert hirzebruch_ring_class(2) == hirzebruch_ring_class(0) == "even"
    assert hirzebruch_ring_class(1) == hirzebruch_ring_class(3) == "odd"
    assert hirzebruch_ring_class(0) != hirzebruch_ring_class(1)
    assert hirzebruch_ring_class(-7) == "odd"


def test_hirzebruch_class_matches_substitution_search():
    for a, b in itertools.product(range(-8, 9), repeat=2):
        same = hirzebruch_ring_class(a) == hirzebruch_ring_class(b)
        assert substitution_isomorphism_exists(a, b) == same, (a, b)


def test_graded_dims_container():
    d = GradedDims((1, 2, 1))
    assert list(d) == [1, 2, 1] and len(d) == 3 and d[1] == 2
