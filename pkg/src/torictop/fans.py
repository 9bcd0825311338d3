"""Fans and multi-fans over the integer lattice Z^n.

A multi-fan is a simplicial complex K on {1..m} of dimension n-1, one
primitive ray vector per vertex, and a pair of nonnegative weights
(w+, w-) on every top face; its cones may overlap.  An ordinary fan is
the special case w+ = 1, w- = 0 with non-overlapping cones.

The degree of a generic vector v is the sum of w(I) = w+(I) - w-(I)
over the top cones whose interior contains v.  For a complete multi-fan
this degree is independent of v and equals the Todd genus of any torus
manifold realizing the multi-fan; for fans of toric manifolds it is 1.
Completeness is tested by ridge pairing plus degree constancy on a
fixed deterministic battery of 64 integer test vectors, which is exact
per evaluation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    GenericityViolation,
    InputError,
    NotCompleteError,
    PreconditionError,
)
from .intlinalg import (
    integer_kernel_basis,
    inverse_rational,
    is_basis_extendable,
    is_primitive,
    mat_det,
    mat_vec,
    rank_int,
    solve_unique,
)
from .simplicial import SimplicialComplex, f_vector, standard_complex

__all__ = [
    "RaySet", "MultiFan", "Fan", "validate", "FanReport",
    "cone_contains", "degree_at", "todd_genus", "is_complete",
    "battery_vectors", "standard_fan", "cp_fan", "hirzebruch_fan",
    "bott_fan", "sphere_fan", "winding2_demo_fan",
    "fans_isomorphic", "verify_fan_isomorphism", "cox_kernel",
]

_BATTERY_SIZE = 64
_BATTERY_SEED = 0x70121C
_BATTERY_BOUND = 1000


class RaySet:
    """An ordered list of m primitive nonzero vectors in Z^n."""

    __slots__ = ("n", "rays")

    def __init__(self, n, rays):
        n = int(n)
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        for r in rays:
            if len(r) != n:
                raise InputError(f"ray {r} does not have {n} coordinates")
            if all(x == 0 for x in r):
                raise InputError("rays must be nonzero")
            if not is_primitive(r):
                raise InputError(f"ray {r} is not primitive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rays", rays)

    def __setattr__(self, *args):
        raise AttributeError("RaySet is immutable")

    def __len__(self):
        return len(self.rays)

    def __getitem__(self, i):
        return self.rays[i]

    def __eq__(self, other):
        return isinstance(other, RaySet) and self.n == other.n and self.rays == other.rays

    def __hash__(self):
        return hash((self.n, self.rays))

    def __repr__(self):
        return f"RaySet(n={self.n}, m={len(self.rays)})"


class MultiFan:
    """Simplicial complex + rays + weights on top faces.

    The complex must have dimension n-1 and the rays of every face must
    be linearly independent over Q (simpliciality); both are enforced at
    construction.  ``weights`` maps each top face (cardinality-n face)
    to a pair (w_plus, w_minus) of nonnegative integers.
    """

    __slots__ = ("complex", "rays", "weights")

    def __init__(self, complex: SimplicialComplex, rays: RaySet, weights):
        if not isinstance(complex, SimplicialComplex):
            raise InputError("expected a SimplicialComplex")
        if not isinstance(rays, RaySet):
            rays = RaySet(len(rays[0]) if rays else 0, rays)
        if complex.m != len(rays):
            raise InputError("one ray per vertex is required")
        n = rays.n
        if complex.dim != n - 1:
            raise InputError(f"complex dimension {complex.dim} must be n-1 = {n - 1}")
        for f in complex.facets:
            cols = [rays[i - 1] for i in f]
            if rank_int([[c[j] for c in cols] for j in range(n)]) != len(f):
                raise InputError(f"rays of face {f} are linearly dependent")
        top = set(complex.faces_of_cardinality(n))
        w = {}
        for face, pair in dict(weights).items():
            face = tuple(sorted(face))
            if face not in top:
                raise InputError(f"weight given for non-top face {face}")
            wp, wm = int(pair[0]), int(pair[1])
            if wp < 0 or wm < 0:
                raise InputError("weights must be nonnegative")
            w[face] = (wp, wm)
        if set(w) != top:
            missing = sorted(top - set(w))
            raise InputError(f"missing weights for top faces {missing}")
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "weights", dict(sorted(w.items())))

    def __setattr__(self, *args):
        raise AttributeError("MultiFan is immutable")

    @property
    def n(self):
        return self.rays.n

    @property
    def m(self):
        return len(self.rays)

    @property
    def top_faces(self):
        return sorted(self.weights)

    def w(self, face):
        wp, wm = self.weights[tuple(sorted(face))]
        return wp - wm

    def is_ordinary(self):
        return all(pair == (1, 0) for pair in self.weights.values())

    def face_rays(self, face):
        return [self.rays[i - 1] for i in face]

    def __eq__(self, other):
        return (isinstance(other, MultiFan) and self.complex == other.complex
                and self.rays == other.rays and self.weights == other.weights)

    def __hash__(self):
        return hash((self.complex, self.rays, tuple(sorted(self.weights.items()))))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m}, top faces={len(self.weights)})"


class Fan(MultiFan):
    """An ordinary fan: all weights (1, 0) and non-overlapping cones.

    Non-overlap is certified through the degree function: every battery
    vector must see degree 0 or 1.  (A complete fan sees 1 everywhere,
    an incomplete one sees both values.)
    """

    def __init__(self, complex, rays, weights=None):
        if weights is None:
            n = rays.n if isinstance(rays, RaySet) else len(rays[0])
            weights = {f: (1, 0) for f in complex.faces_of_cardinality(n)}
        super().__init__(complex, rays, weights)
        if not self.is_ordinary():
            raise InputError("a Fan carries weights (1, 0) on every top face")
        for v in battery_vectors(self):
            if degree_at(self, v) not in (0, 1):
                raise InputError("cones overlap; not an ordinary fan")


def cone_contains(rays, v):
    """Locate v relative to the simplicial cone spanned by the given rays.

    Solves v = sum r_i v_i exactly over Q.  Returns "interior" when all
    r_i > 0, "boundary" when all r_i >= 0 with a zero, else "outside"
    (including v outside the linear span).
    """
    rays = [tuple(r) for r in rays]
    if not rays:
        return "boundary" if all(x == 0 for x in v) else "outside"
    n = len(rays[0])
    a = [[r[j] for r in rays] for j in range(n)]
    sol = solve_unique(a, list(v))
    if sol is None:
        return "outside"
    if all(x > 0 for x in sol):
        return "interior"
    if all(x >= 0 for x in sol):
        return "boundary"
    return "outside"


def _walls(mf: MultiFan):
    return mf.complex.faces_of_cardinality(mf.n - 1)


def _is_generic(mf: MultiFan, v) -> bool:
    if all(x == 0 for x in v):
        return False
    for wall in _walls(mf):
        if cone_contains(mf.face_rays(wall), v) != "outside":
            return False
    return True


def degree_at(mf: MultiFan, v):
    """Sum of w(I) over the top faces whose open cone contains v.

    Raises GenericityViolation when v lies in a cone of dimension n-1;
    callers must perturb, the function never does so silently.
    """
    if not _is_generic(mf, v):
        raise GenericityViolation(f"vector {tuple(v)} lies on a wall of the multi-fan")
    total = 0
    for face in mf.top_faces:
        if cone_contains(mf.face_rays(face), v) == "interior":
            total += mf.w(face)
    return total


def battery_vectors(mf: MultiFan):
    """The deterministic battery of 64 generic integer test vectors.

    Drawn from a fixed seed with coordinates in [-1000, 1000]; draws
    landing on a wall of this multi-fan are discarded and redrawn, which
    keeps the battery reproducible for a given multi-fan.
    """
    rng = random.Random(_BATTERY_SEED)
    out = []
    attempts = 0
    while len(out) < _BATTERY_SIZE:
        v = tuple(rng.randint(-_BATTERY_BOUND, _BATTERY_BOUND) for _ in range(mf.n))
        attempts += 1
        if attempts > 100000:
            raise PreconditionError("could not find generic battery vectors")
        if _is_generic(mf, v):
            out.append(v)
    return out


def todd_genus(mf: MultiFan) -> int:
    """The common degree over the whole battery; raises NotCompleteError
    when the degree varies (the multi-fan cannot be complete)."""
    values = {degree_at(mf, v) for v in battery_vectors(mf)}
    if len(values) != 1:
        raise NotCompleteError(f"degree takes several values {sorted(values)}")
    return values.pop()


def is_complete(mf: MultiFan) -> bool:
    """Ridge pairing with multiplicity plus degree constancy.

    Every (n-1)-face must lie in top faces of total weight exactly two,
    and the degree must be the same at all 64 battery vectors; for an
    ordinary Fan that common degree must moreover be 1.
    """
    tops = mf.top_faces
    for ridge in _walls(mf):
        total = sum(mf.w(t) for t in tops if set(ridge) <= set(t))
        if total != 2:
            return False
    try:
        d = todd_genus(mf)
    except NotCompleteError:
        return False
    if isinstance(mf, Fan) and d != 1:
        return False
    return True


@dataclass(frozen=True)
class FanReport:
    simplicial: bool
    nonsingular: bool
    complete: bool
    euler: int


def validate(mf: MultiFan) -> FanReport:
    """Recompute the basic dictionary entries for a (multi-)fan:
    simpliciality, nonsingularity (each cone's generators extend to a
    Z-basis; for top cones |det| = 1), completeness and the Euler
    characteristic (number of top faces)."""
    n = mf.n
    simplicial = True
    nonsingular = True
    for face in mf.complex.facets:
        cols = mf.face_rays(face)
        mat = [[c[j] for c in cols] for j in range(n)]
        if rank_int(mat) != len(face):
            simplicial = False
            nonsingular = False
            continue
        if not is_basis_extendable(cols):
            nonsingular = False
    return FanReport(
        simplicial=simplicial,
        nonsingular=nonsingular,
        complete=is_complete(mf),
        euler=len(mf.top_faces),
    )


# ---------------------------------------------------------------------------
# standard constructors
# ---------------------------------------------------------------------------

def _e(n, k):
    return tuple(int(i == k) for i in range(n))


def cp_fan(n: int) -> Fan:
    """The fan of complex projective n-space: rays e_1, ..., e_n and
    (-1, ..., -1), complex the boundary of an n-simplex."""
    if n < 1:
        raise InputError("cp fan needs n >= 1")
    rays = [_e(n, k) for k in range(n)] + [tuple([-1] * n)]
    return Fan(standard_complex("boundary_of_simplex", n), RaySet(n, rays))


def hirzebruch_fan(a: int) -> Fan:
    """The fan of the Hirzebruch surface with twist a: rays (1,0), (0,1),
    (-1,a), (0,-1) on the four-cycle 1-2-3-4.  These are the unique
    complete nonsingular four-ray data, up to lattice automorphism, that
    are exchanged by the reflection a <-> -a."""
    rays = [(1, 0), (0, 1), (-1, int(a)), (0, -1)]
    complex = SimplicialComplex.from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    return Fan(complex, RaySet(2, rays))


def bott_fan(n: int, twists=None) -> Fan:
    """The fan of a height-n Bott tower.  Vertices k and n+k carry the
    rays x_k = e_k and y_k = -e_k + sum_{j>k} c_{kj} e_j; the complex is
    the n-fold join of two points.  ``twists`` is a lower-triangular
    list of rows [c_{k,k+1}, ..., c_{k,n}] for k = 1..n-1; all zeros
    gives the fan of a product of n projective lines.
    """
    if n < 1:
        raise InputError("bott fan needs n >= 1")
    if twists is None:
        twists = [[0] * (n - k) for k in range(1, n)]
    twists = [list(map(int, row)) for row in twists]
    if len(twists) not in (n - 1, n):
        raise InputError("twists must have one row per level below the top")
    for k, row in enumerate(twists, start=1):
        if len(row) != n - k:
            raise InputError(f"twist row {k} must have {n - k} entries")
    rays = [_e(n, k) for k in range(n)]
    for k in range(1, n + 1):
        y = [0] * n
        y[k - 1] = -1
        if k <= len(twists):
            for off, c in enumerate(twists[k - 1], start=k):
                y[off] += c
        rays.append(tuple(y))
    return Fan(standard_complex("join_of_s0", n), RaySet(n, rays))


def sphere_fan(n: int) -> MultiFan:
    """The multi-fan of the 2n-sphere: the full simplex on {1..n} with
    rays e_i and a single top face of weight w+ = w- = 1, so w = 0."""
    if n < 1:
        raise InputError("sphere multi-fan needs n >= 1")
    faces = [f for k in range(n + 1) for f in itertools.combinations(range(1, n + 1), k)]
    complex = SimplicialComplex(n, faces)
    rays = RaySet(n, [_e(n, k) for k in range(n)])
    return MultiFan(complex, rays, {tuple(range(1, n + 1)): (1, 1)})


_WINDING2_RAYS = ((1, 0), (-1, 1), (0, -1), (1, 1), (-1, 0), (0, -1), (1, -1))


def winding2_demo_fan() -> MultiFan:
    """A planar multi-fan of degree two: seven rays sweeping 720 degrees,
    every consecutive pair unimodular and positively oriented, weight 1
    on each of the seven cones {i, i+1} (indices mod 7).

    Unimodularity and the winding number of the ray loop are asserted at
    construction; the loop through the ray tips winds twice around the
    origin because the seven positive turns sum to two full revolutions.
    """
    rays = _WINDING2_RAYS
    for i in range(7):
        a, b = rays[i], rays[(i + 1) % 7]
        if mat_det([[a[0], b[0]], [a[1], b[1]]]) != 1:
            raise InputError("winding2 construction broken: non-unimodular pair")
    from .polytopes import OrientedLoop, winding_number
    if winding_number(OrientedLoop(rays), (0, 0)) != 2:
        raise InputError("winding2 construction broken: ray loop does not wind twice")
    facets = [(i + 1, (i + 1) % 7 + 1) for i in range(7)]
    complex = SimplicialComplex.from_facets(7, facets)
    weights = {tuple(sorted(f)): (1, 0) for f in facets}
    return MultiFan(complex, RaySet(2, rays), weights)


def standard_fan(kind: str, **params) -> MultiFan:
    """Dispatch to the named constructors: cp(n), hirzebruch(a),
    bott(n, twists), s2n(n), winding2_demo()."""
    if kind == "cp":
        return cp_fan(params["n"])
    if kind == "hirzebruch":
        return hirzebruch_fan(params["a"])
    if kind == "bott":
        return bott_fan(params["n"], params.get("twists"))
    if kind == "s2n":
        return sphere_fan(params["n"])
    if kind == "winding2_demo":
        return winding2_demo_fan()
    raise InputError(f"unknown standard fan kind {kind!r}")


# ---------------------------------------------------------------------------
# isomorphism and quotient kernels
# ---------------------------------------------------------------------------

def _ray_index(mf: MultiFan):
    index = {}
    for i, r in enumerate(mf.rays.rays, start=1):
        if r in index:
            raise PreconditionError("repeated rays; not an ordinary fan")
        index[r] = i
    return index


def verify_fan_isomorphism(a: MultiFan, b: MultiFan, g) -> bool:
    """Check that the integer matrix g is a lattice automorphism carrying
    the rays of `a` onto the rays of `b` and inducing an isomorphism of
    the underlying complexes."""
    if abs(mat_det(g)) != 1:
        return False
    try:
        index_b = _ray_index(b)
    except PreconditionError:
        return False
    if a.m != b.m:
        return False
    vertex_map = {}
    for i, r in enumerate(a.rays.rays, start=1):
        img = mat_vec(g, r)
        if img not in index_b:
            return False
        vertex_map[i] = index_b[img]
    if len(set(vertex_map.values())) != a.m:
        return False
    mapped = {tuple(sorted(vertex_map[i] for i in f)) for f in a.complex.faces}
    return mapped == set(b.complex.faces)


def fans_isomorphic(a: MultiFan, b: MultiFan):
    """Search for g in GL(n, Z) with g . rays(a) = rays(b) inducing a
    complex isomorphism; returns the witness matrix (tuple of rows) or
    None.  Both fans must be complete and nonsingular.

    The search is anchored on the lexicographically first top cone of
    `a`; candidate images (top cone of `b`, generator ordering) are
    tried in lexicographic order and the first verified witness is
    returned, so a fan compared with itself yields the identity.
    """
    for name, f in (("first", a), ("second", b)):
        rep = validate(f)
        if not (rep.complete and rep.nonsingular):
            raise PreconditionError(f"{name} fan must be complete and nonsingular")
    if a.n != b.n or a.m != b.m:
        return None
    if f_vector(a.complex).entries != f_vector(b.complex).entries:
        return None
    n = a.n
    anchor = a.top_faces[0]
    cols_a = [a.rays[i - 1] for i in anchor]
    a_mat = [[c[j] for c in cols_a] for j in range(n)]
    a_inv = inverse_rational(a_mat)
    for target in b.top_faces:
        for perm in itertools.permutations(target):
            cols_b = [b.rays[i - 1] for i in perm]
            b_mat = [[c[j] for c in cols_b] for j in range(n)]
            g_rat = [[sum(b_mat[i][k] * a_inv[k][j] for k in range(n)) for j in range(n)]
                     for i in range(n)]
            if any(x.denominator != 1 for row in g_rat for x in row):
                continue
            g = tuple(tuple(int(x) for x in row) for row in g_rat)
            if verify_fan_isomorphism(a, b, g):
                return g
    return None


def cox_kernel(fan: MultiFan):
    """Basis of the rank-(m-n) kernel of the ray matrix Z^m -> Z^n,
    e_i -> v_i, computed by exact Smith reduction.  These are the
    characters of the subgroup one quotients by in the homogeneous
    coordinate construction."""
    n, m = fan.n, fan.m
    rows = [[fan.rays[i][j] for i in range(m)] for j in range(n)]
    if rank_int(rows) != n:
        raise PreconditionError("rays do not span Q^n")
    basis = integer_kernel_basis(rows)
    if len(basis) != m - n:
        raise PreconditionError("kernel rank mismatch")
    return basis
