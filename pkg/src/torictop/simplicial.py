"""Simplicial complexes, simplicial posets and face-number vectors.

Vertices are the integers 1..m.  Faces are stored as sorted tuples and a
complex is closed under taking subsets, so the empty face belongs to
every nonempty complex.  The f-vector counts faces by dimension, the
h-vector is its binomial transform

    h_0 t^n + ... + h_n  =  (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1},

and the classification checks below (Euler relation, the three
g-theorem conditions, the simplicial cell sphere conditions and the
generalized Dehn-Sommerville identity) are all exact integer tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import InputError

__all__ = [
    "SimplicialComplex", "SimplicialPoset", "FVector", "HVector",
    "f_vector", "h_from_f", "f_from_h", "euler_relation_check",
    "binomial_decomposition", "pseudopower", "check_g_conditions",
    "check_cell_sphere", "check_generalized_ds", "standard_complex",
    "minimal_nonfaces", "vertex_count_lower_bound_ok",
    "GConditionReport", "CellSphereReport",
]


def _as_face(face):
    t = tuple(sorted(set(int(v) for v in face)))
    if len(t) != len(tuple(face)):
        raise InputError(f"face {face!r} has repeated vertices")
    return t


class SimplicialComplex:
    """An abstract simplicial complex on the vertex set {1..m}.

    Immutable after construction.  By default every singleton must be a
    face (no ghost vertices); pass ``allow_ghost_vertices=True`` to relax
    this, e.g. for the complex {∅} on one vertex.
    """

    __slots__ = ("m", "faces")

    def __init__(self, m, faces, *, allow_ghost_vertices=False):
        m = int(m)
        if m < 0:
            raise InputError("vertex count must be nonnegative")
        fs = frozenset(_as_face(f) for f in faces)
        for f in fs:
            if f and (f[0] < 1 or f[-1] > m):
                raise InputError(f"face {f} is not within 1..{m}")
            for k in range(len(f)):
                sub = f[:k] + f[k + 1:]
                if sub not in fs:
                    raise InputError(f"complex is not closed under subsets: {sub} missing")
        if fs and () not in fs:
            raise InputError("the empty face must belong to a nonempty complex")
        if not allow_ghost_vertices:
            for i in range(1, m + 1):
                if (i,) not in fs:
                    raise InputError(f"ghost vertex {i}: singleton is not a face")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "faces", fs)

    def __setattr__(self, *args):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, m, facets, *, allow_ghost_vertices=False):
        """Build the downward closure of the given generating faces."""
        faces = set()
        for f in facets:
            f = _as_face(f)
            for k in range(len(f) + 1):
                faces.update(itertools.combinations(f, k))
        if not facets:
            faces = set()
        return cls(m, faces, allow_ghost_vertices=allow_ghost_vertices)

    @property
    def dim(self):
        return max((len(f) for f in self.faces), default=0) - 1

    @property
    def facets(self):
        """Inclusion-maximal faces, sorted."""
        out = [f for f in self.faces
               if not any(f != g and set(f) <= set(g) for g in self.faces)]
        return sorted(out)

    def faces_of_cardinality(self, k):
        return sorted(f for f in self.faces if len(f) == k)

    def has_face(self, face):
        return tuple(sorted(face)) in self.faces

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.m == other.m and self.faces == other.faces)

    def __hash__(self):
        return hash((self.m, self.faces))

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, {len(self.faces)} faces, dim={self.dim})"


@dataclass(frozen=True)
class FVector:
    """Face counts (f_0, ..., f_{n-1}); entry i counts i-dimensional faces."""
    n: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.n:
            raise InputError("f-vector length must equal n")
        if any(x < 0 for x in self.entries):
            raise InputError("f-vector entries must be nonnegative")


@dataclass(frozen=True)
class HVector:
    """Entries (h_0, ..., h_n); may be negative for non-sphere complexes."""
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries:
            raise InputError("h-vector must be nonempty")

    @property
    def n(self):
        return len(self.entries) - 1


def f_vector(K: SimplicialComplex) -> FVector:
    """Count faces by dimension; entry i counts faces of cardinality i+1."""
    n = K.dim + 1
    counts = [0] * n
    for f in K.faces:
        if f:
            counts[len(f) - 1] += 1
    return FVector(n, tuple(counts))


def h_from_f(f) -> HVector:
    """Binomial transform: h_k = sum_i (-1)^{k-i} C(n-i, k-i) f_{i-1}, f_{-1} = 1."""
    f = f if isinstance(f, FVector) else FVector(len(f), tuple(f))
    n = f.n
    ext = (1,) + f.entries
    h = []
    for k in range(n + 1):
        h.append(sum((-1) ** (k - i) * comb(n - i, k - i) * ext[i]
                     for i in range(k + 1)))
    return HVector(tuple(h))


def f_from_h(h) -> FVector:
    """Inverse transform: f_{i-1} = sum_k C(n-k, i-k) h_k."""
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    n = h.n
    ext = [sum(comb(n - k, i - k) * h.entries[k] for k in range(i + 1))
           for i in range(n + 1)]
    if ext[0] != 1:
        raise InputError("leading coefficient is not 1; not an f-polynomial")
    return FVector(n, tuple(ext[1:]))


def euler_relation_check(f) -> bool:
    """Whether f_0 - f_1 + ... + (-1)^{n-1} f_{n-1} = 1 + (-1)^{n-1},
    the Euler characteristic of an (n-1)-sphere."""
    f = f if isinstance(f, FVector) else FVector(len(f), tuple(f))
    lhs = sum((-1) ** i * x for i, x in enumerate(f.entries))
    return lhs == 1 + (-1) ** (f.n - 1)


def binomial_decomposition(a: int, i: int):
    """Greedy expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)
    with a_i > a_{i-1} > ... > a_j >= j >= 1.  Returns [a_i, ..., a_j]."""
    if a < 1 or i < 1:
        raise InputError("binomial decomposition needs a >= 1 and i >= 1")
    out = []
    rem = a
    k = i
    while rem > 0:
        # largest x with C(x, k) <= rem, by doubling plus bisection
        lo, hi = k, k + 1
        while comb(hi, k) <= rem:
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if comb(mid, k) <= rem:
                lo = mid
            else:
                hi = mid
        out.append(lo)
        rem -= comb(lo, k)
        k -= 1
    return out


def pseudopower(a: int, i: int) -> int:
    """The Macaulay shift a^<i>: each C(a_j, j) becomes C(a_j + 1, j + 1).
    By convention 0^<i> = 0."""
    if a < 0:
        raise InputError("pseudopower needs a >= 0")
    if a == 0:
        return 0
    parts = binomial_decomposition(a, i)
    return sum(comb(x + 1, i - t + 1) for t, x in enumerate(parts))


@dataclass(frozen=True)
class GConditionReport:
    ds: bool          # h_i = h_{n-i}
    monotone: bool    # 1 = h_0 <= h_1 <= ... <= h_[n/2]
    pseudopower: bool # h_{i+1} - h_i <= (h_i - h_{i-1})^<i>

    @property
    def passes(self):
        return self.ds and self.monotone and self.pseudopower


def check_g_conditions(h) -> GConditionReport:
    """Evaluate the three conditions characterizing h-vectors of simplicial
    convex polytopes.  Each is reported separately."""
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    e = h.entries
    n = h.n
    if e[0] != 1:
        raise InputError("g-theorem conditions require h_0 = 1")
    ds = all(e[i] == e[n - i] for i in range(n + 1))
    half = n // 2
    monotone = all(e[i] <= e[i + 1] for i in range(half))
    pp = True
    for i in range(1, half):
        g = e[i] - e[i - 1]
        if g < 0:
            # pseudopower is undefined for negative differences; the
            # condition can only hold together with monotonicity
            pp = False
            break
        if e[i + 1] - e[i] > pseudopower(g, i):
            pp = False
            break
    return GConditionReport(ds, monotone, pp)


@dataclass(frozen=True)
class CellSphereReport:
    symmetric: bool      # h_i = h_{n-i}
    nonnegative: bool    # h_i >= 0
    middle_parity: bool  # n even and some h_j = 0 implies h_{n/2} even

    @property
    def passes(self):
        return self.symmetric and self.nonnegative and self.middle_parity


def check_cell_sphere(h) -> CellSphereReport:
    """The three conditions characterizing h-vectors of simplicial cell
    spheres of dimension n-1."""
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    e = h.entries
    n = h.n
    if e[0] != 1:
        raise InputError("cell sphere conditions require h_0 = 1")
    symmetric = all(e[i] == e[n - i] for i in range(n + 1))
    nonnegative = all(x >= 0 for x in e)
    parity = True
    if n % 2 == 0 and any(e[j] == 0 for j in range(1, n)):
        parity = e[n // 2] % 2 == 0
    return CellSphereReport(symmetric, nonnegative, parity)


def check_generalized_ds(h, chi_N: int) -> bool:
    """Dehn-Sommerville for a simplicial cell decomposition of a closed
    manifold N of dimension n-1:

        h_{n-i} - h_i = (-1)^i (chi(N) - chi(S^{n-1})) C(n, i)

    for all 1 <= i <= n, where chi(S^{n-1}) = 1 + (-1)^{n-1}."""
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    e = h.entries
    n = h.n
    chi_sphere = 1 + (-1) ** (n - 1)
    return all(e[n - i] - e[i] == (-1) ** i * (chi_N - chi_sphere) * comb(n, i)
               for i in range(1, n + 1))


def vertex_count_lower_bound_ok(f) -> bool:
    """Polytopality lint: an n-dimensional convex polytope has f_0 >= n+1."""
    f = f if isinstance(f, FVector) else FVector(len(f), tuple(f))
    return f.n == 0 or f.entries[0] >= f.n + 1


def standard_complex(kind: str, *params) -> SimplicialComplex:
    """Named complexes:

    - boundary_of_simplex(n): proper subsets of {1..n+1}, an (n-1)-sphere
    - skeleton(m, k): all subsets of {1..m} of cardinality <= k
    - join_of_s0(n): n-fold join of two points, the boundary of the
      n-dimensional cross-polytope (vertex i pairs with vertex n+i)
    - disjoint_points(m): m isolated vertices
    """
    if kind == "boundary_of_simplex":
        (n,) = params
        if n < 0:
            raise InputError("boundary_of_simplex needs n >= 0")
        m = n + 1
        faces = [f for k in range(m) for f in itertools.combinations(range(1, m + 1), k)]
        return SimplicialComplex(m, faces)
    if kind == "skeleton":
        m, k = params
        if not 0 <= k <= m:
            raise InputError("skeleton needs 0 <= k <= m")
        faces = [f for j in range(k + 1) for f in itertools.combinations(range(1, m + 1), j)]
        return SimplicialComplex(m, faces, allow_ghost_vertices=(k == 0))
    if kind == "join_of_s0":
        (n,) = params
        if n < 1:
            raise InputError("join_of_s0 needs n >= 1")
        m = 2 * n
        faces = []
        for choice in itertools.product((None, 0, 1), repeat=n):
            face = tuple(sorted(i + 1 + n * c for i, c in enumerate(choice) if c is not None))
            faces.append(face)
        return SimplicialComplex(m, faces)
    if kind == "disjoint_points":
        (m,) = params
        if m < 1:
            raise InputError("disjoint_points needs m >= 1")
        return SimplicialComplex(m, [()] + [(i,) for i in range(1, m + 1)])
    raise InputError(f"unknown standard complex kind {kind!r}")


def minimal_nonfaces(K: SimplicialComplex):
    """Inclusion-minimal subsets of {1..m} that are not faces of K.

    A set of cardinality s is a minimal non-face exactly when it is not a
    face but all its (s-1)-subsets are."""
    out = []
    verts = range(1, K.m + 1)
    for s in range(1, K.m + 1):
        for cand in itertools.combinations(verts, s):
            if cand in K.faces:
                continue
            if all(cand[:k] + cand[k + 1:] in K.faces for k in range(s)):
                out.append(cand)
    return sorted(out)


class SimplicialPoset:
    """A finite poset with a bottom element all of whose lower intervals
    are Boolean lattices; equivalently the face poset of a simplicial
    cell complex.  The rank of an element is the cardinality of the
    corresponding simplex."""

    __slots__ = ("elements", "below", "rank", "bottom")

    def __init__(self, elements, less_pairs):
        elements = list(elements)
        if len(set(elements)) != len(elements):
            raise InputError("poset elements must be distinct")
        idx = {e: i for i, e in enumerate(elements)}
        below = {e: set() for e in elements}
        for a, b in less_pairs:
            if a not in idx or b not in idx:
                raise InputError(f"order pair ({a!r}, {b!r}) uses unknown elements")
            if a == b:
                raise InputError("order must be strict")
            below[b].add(a)
        # transitive closure
        changed = True
        while changed:
            changed = False
            for e in elements:
                extra = set()
                for d in below[e]:
                    extra |= below[d]
                if not extra <= below[e]:
                    below[e] |= extra
                    changed = True
        for e in elements:
            if e in below[e]:
                raise InputError("order relation contains a cycle")
        bottoms = [e for e in elements if not below[e]]
        if len(bottoms) != 1 or any(bottoms[0] not in below[e] for e in elements if e != bottoms[0]):
            raise InputError("poset must have a unique bottom element")
        bottom = bottoms[0]
        # a Boolean lower interval of rank r has size 2^r
        rank = {}
        for e in elements:
            size = len(below[e]) + 1
            r = size.bit_length() - 1
            if 1 << r != size:
                raise InputError(f"lower interval of {e!r} has size {size}, not a power of two")
            rank[e] = r
        atoms = {e for e in elements if rank[e] == 1}
        for e in elements:
            interval = below[e] | {e}
            e_atoms = sorted(interval & atoms, key=lambda x: str(x))
            if len(e_atoms) != rank[e]:
                raise InputError(f"lower interval of {e!r} is not Boolean")
            seen = {}
            for d in interval:
                key = frozenset(a for a in e_atoms if a == d or a in below[d])
                if key in seen:
                    raise InputError(f"lower interval of {e!r} is not Boolean")
                seen[key] = d
            # order must agree with subset order on atom sets
            for k1, d1 in seen.items():
                for k2, d2 in seen.items():
                    if (d1 == d2 or d1 in below[d2]) != (k1 <= k2):
                        raise InputError(f"lower interval of {e!r} is not Boolean")
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "below", {e: frozenset(s) for e, s in below.items()})
        object.__setattr__(self, "rank", dict(rank))
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, *args):
        raise AttributeError("SimplicialPoset is immutable")

    def leq(self, a, b):
        return a == b or a in self.below[b]

    @classmethod
    def from_complex(cls, K: SimplicialComplex) -> "SimplicialPoset":
        """The face poset of a simplicial complex, ordered by inclusion."""
        faces = sorted(K.faces, key=lambda f: (len(f), f))
        pairs = [(f, g) for f in faces for g in faces
                 if f != g and set(f) <= set(g)]
        return cls(faces, pairs)

    def __repr__(self):
        top = max(self.rank.values(), default=0)
        return f"SimplicialPoset({len(self.elements)} elements, rank <= {top})"
