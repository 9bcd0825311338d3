import random
from math import comb

import pytest

from torictop.errors import InputError
from torictop.simplicial import (
    FVector,
    HVector,
    SimplicialComplex,
    SimplicialPoset,
    binomial_decomposition,
    check_cell_sphere,
    check_g_conditions,
    check_generalized_ds,
    euler_relation_check,
    f_from_h,
    f_vector,
    h_from_f,
    minimal_nonfaces,
    pseudopower,
    standard_complex,
    vertex_count_lower_bound_ok,
)


def expand_h_polynomial(f_entries):
    """Independent oracle: literally expand (t-1)^n + f_0 (t-1)^{n-1} + ...
    by integer convolution and read off the coefficients."""
    n = len(f_entries)
    ext = [1] + list(f_entries)

    def times_t_minus_1(poly):
        out = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            out[i] += c          # * t
            out[i + 1] -= c      # * (-1)
        return out

    total = [0] * (n + 1)
    for i, coef in enumerate(ext):
        term = [coef]
        for _ in range(n - i):
            term = times_t_minus_1(term)
        term = [0] * (n + 1 - len(term)) + term
        total = [a + b for a, b in zip(total, term)]
    return tuple(total)


# ---------------------------------------------------------------------------
# complexes and face vectors
# ---------------------------------------------------------------------------

def test_boundary_of_simplex_faces():
    K = standard_complex("boundary_of_simplex", 2)
    assert K.faces == frozenset({(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)})
    assert K.dim == 1


def test_skeleton_faces():
    K = standard_complex("skeleton", 4, 2)
    assert all(len(f) <= 2 for f in K.faces)
    assert len(K.faces_of_cardinality(2)) == 6


def test_join_of_s0_is_cross_polytope():
    K = standard_complex("join_of_s0", 2)
    assert f_vector(K).entries == (4, 4)
    K3 = standard_complex("join_of_s0", 3)
    assert f_vector(K3).entries == (6, 12, 8)


def test_f_vector_examples():
    assert f_vector(standard_complex("boundary_of_simplex", 2)).entries == (3, 3)
    single = SimplicialComplex(1, [(), (1,)])
    assert f_vector(single).entries == (1,)


def test_complex_validation():
    with pytest.raises(InputError):
        SimplicialComplex(3, [(), (1,), (2,)])  # ghost vertex 3
    SimplicialComplex(3, [(), (1,), (2,)], allow_ghost_vertices=True)
    with pytest.raises(InputError):
        SimplicialComplex(2, [(), (1, 2)])  # not downward closed
    K = SimplicialComplex.from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert len(K.faces) == 9
    assert K.facets == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_complex_immutable_and_hashable():
    K = standard_complex("boundary_of_simplex", 2)
    with pytest.raises(AttributeError):
        K.m = 5
    assert K == standard_complex("boundary_of_simplex", 2)
    assert hash(K) == hash(standard_complex("boundary_of_simplex", 2))


def test_h_from_f_examples():
    assert h_from_f(FVector(2, (3, 3))).entries == (1, 1, 1)
    assert h_from_f(FVector(3, (6, 12, 8))).entries == (1, 3, 3, 1)
    assert h_from_f(FVector(1, (2,))).entries == (1, 1)


def test_h_from_f_matches_expansion_oracle():
    rng = random.Random(17)
    for _ in range(150):
        n = rng.randint(0, 8)
        f = tuple(rng.randint(0, 40) for _ in range(n))
        assert h_from_f(FVector(n, f)).entries == expand_h_polynomial(f)


def test_f_h_round_trip():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(0, 12)
        f = FVector(n, tuple(rng.randint(0, 10 ** 6) for _ in range(n)))
        assert f_from_h(h_from_f(f)) == f


def test_euler_relation():
    assert euler_relation_check(FVector(2, (3, 3)))
    assert euler_relation_check(FVector(3, (6, 12, 8)))
    assert not euler_relation_check(FVector(2, (5, 4)))


def test_spheres_satisfy_euler():
    for n in range(1, 7):
        assert euler_relation_check(f_vector(standard_complex("boundary_of_simplex", n)))
        assert euler_relation_check(f_vector(standard_complex("join_of_s0", n)))


def test_boundary_simplex_h_all_ones():
    for n in range(1, 13):
        h = h_from_f(f_vector(standard_complex("boundary_of_simplex", n)))
        assert h.entries == (1,) * (n + 1)


# ---------------------------------------------------------------------------
# binomial machinery
# ---------------------------------------------------------------------------

def test_binomial_decomposition_examples():
    assert binomial_decomposition(28, 4) == [6, 5, 3]
    assert binomial_decomposition(10, 2) == [5]
    for i in range(1, 9):
        assert binomial_decomposition(1, i) == [i]
    with pytest.raises(InputError):
        binomial_decomposition(0, 2)
    with pytest.raises(InputError):
        binomial_decomposition(5, 0)


def test_binomial_decomposition_resums_exhaustively():
    # full sweep: every a <= 10^5 and i <= 10 reproduces a, with the
    # strictly decreasing shape a_i > a_{i-1} > ... >= j >= 1
    for i in range(1, 11):
        for a in range(1, 100001):
            parts = binomial_decomposition(a, i)
            assert sum(comb(x, i - t) for t, x in enumerate(parts)) == a
            assert all(parts[t] > parts[t + 1] for t in range(len(parts) - 1))
            assert parts[-1] >= i - len(parts) + 1 >= 1


def test_pseudopower_examples():
    assert pseudopower(28, 4) == 40
    assert pseudopower(10, 2) == 20
    assert pseudopower(0, 3) == 0
    with pytest.raises(InputError):
        pseudopower(-1, 2)


def test_pseudopower_monotone_sweep():
    # consecutive comparisons give the full a <= b <= 300 claim
    for i in range(1, 9):
        prev = pseudopower(0, i)
        for a in range(1, 301):
            cur = pseudopower(a, i)
            assert prev <= cur
            prev = cur


# ---------------------------------------------------------------------------
# characterization checks
# ---------------------------------------------------------------------------

def test_g_conditions():
    assert check_g_conditions(HVector((1, 1, 1))).passes
    assert check_g_conditions(HVector((1, 3, 3, 1))).passes
    rep = check_g_conditions(HVector((1, 0, 1)))
    assert rep.ds and not rep.monotone and not rep.passes
    with pytest.raises(InputError):
        check_g_conditions(HVector((2, 1, 2)))


def test_g_conditions_on_simplex_boundaries():
    for n in range(1, 13):
        h = h_from_f(f_vector(standard_complex("boundary_of_simplex", n)))
        assert check_g_conditions(h).passes


def test_cell_sphere_conditions():
    assert check_cell_sphere(HVector((1, 0, 2, 0, 1))).passes
    rep = check_cell_sphere(HVector((1, 0, 1, 0, 1)))
    assert rep.symmetric and rep.nonnegative and not rep.middle_parity
    rep = check_cell_sphere(HVector((1, -1, 1)))
    assert not rep.nonnegative and not rep.passes


def test_generalized_dehn_sommerville():
    torus_h = h_from_f(FVector(3, (7, 21, 14)))
    assert torus_h.entries == (1, 4, 10, -1)
    assert check_generalized_ds(torus_h, 0)
    rp2_h = h_from_f(FVector(3, (6, 15, 10)))
    assert rp2_h.entries == (1, 3, 6, 0)
    assert check_generalized_ds(rp2_h, 1)
    assert not check_generalized_ds(torus_h, 2)


def test_generalized_ds_reduces_to_symmetry_for_spheres():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 7)
        h = HVector((1,) + tuple(rng.randint(-3, 5) for _ in range(n - 1)) + (1,)
                    if n >= 1 else (1,))
        chi_sphere = 1 + (-1) ** (n - 1)
        sym = all(h.entries[i] == h.entries[n - i] for i in range(n + 1))
        assert check_generalized_ds(h, chi_sphere) == sym


def test_vertex_count_lint():
    assert vertex_count_lower_bound_ok(FVector(2, (3, 3)))
    assert not vertex_count_lower_bound_ok(FVector(2, (2, 1)))


# ---------------------------------------------------------------------------
# minimal non-faces and posets
# ---------------------------------------------------------------------------

def test_minimal_nonfaces():
    assert minimal_nonfaces(standard_complex("boundary_of_simplex", 2)) == [(1, 2, 3)]
    cycle = SimplicialComplex.from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert minimal_nonfaces(cycle) == [(1, 3), (2, 4)]
    full = SimplicialComplex.from_facets(3, [(1, 2, 3)])
    assert minimal_nonfaces(full) == []
    ghost = SimplicialComplex(1, [()], allow_ghost_vertices=True)
    assert minimal_nonfaces(ghost) == [(1,)]


def test_disjoint_points():
    K = standard_complex("disjoint_points", 3)
    assert f_vector(K).entries == (3,)
    assert minimal_nonfaces(K) == [(1, 2), (1, 3), (2, 3)]


def test_poset_from_complex_is_valid():
    for K in (standard_complex("boundary_of_simplex", 2),
              standard_complex("join_of_s0", 2),
              standard_complex("skeleton", 4, 2)):
        P = SimplicialPoset.from_complex(K)
        assert P.bottom == ()
        assert max(P.rank.values()) == K.dim + 1


def test_two_gon_poset():
    P = SimplicialPoset(
        ["o", "F", "G", "p", "q"],
        [("o", "F"), ("o", "G"), ("o", "p"), ("o", "q"),
         ("F", "p"), ("G", "p"), ("F", "q"), ("G", "q")])
    assert P.rank == {"o": 0, "F": 1, "G": 1, "p": 2, "q": 2}
    assert P.leq("F", "p") and not P.leq("p", "q")


def test_poset_validation_rejects_non_boolean():
    # interval of size 3 cannot be Boolean
    with pytest.raises(InputError):
        SimplicialPoset(["o", "a", "F"], [("o", "a"), ("o", "F"), ("a", "F")])
    # two bottom elements
    with pytest.raises(InputError):
        SimplicialPoset(["a", "b"], [])
    # cycle
    with pytest.raises(InputError):
        SimplicialPoset(["a", "b"], [("a", "b"), ("b", "a")])
