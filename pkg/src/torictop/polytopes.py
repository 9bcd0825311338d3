"""Lattice polytopes and planar multi-polytopes, with exact counting.

A multi-polytope is a multi-fan together with one integer support number
a_i per ray, defining the hyperplane H_i = {u : <u, v_i> = a_i}.  For a
planar multi-fan whose top faces form a cycle, the pairwise hyperplane
intersections trace an oriented, possibly self-intersecting boundary
loop; lattice points are then counted with the winding number of that
loop as multiplicity.  Convex polytopes are the ordinary-fan case and
get honest Ehrhart polynomials, Pick's identity, polar duals and the
twelve-point theorem.  All arithmetic is integer or Fraction exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .angles import ExactAngle, angular_key, ccw_sector
from .errors import (
    InputError,
    NotReflexiveError,
    PointOnBoundaryError,
    PreconditionError,
    UnboundedRegionError,
)
from .fans import Fan, MultiFan, battery_vectors, degree_at
from .intlinalg import integer_kernel_basis, solve_unique

__all__ = [
    "MultiPolytope", "OrientedLoop", "EhrhartPolynomial", "LaurentSum",
    "boundary_loop", "winding_number", "is_simple_polygon",
    "count_lattice_points", "ehrhart", "pick_check", "PickReport",
    "solid_angle_count", "equivariant_index", "dual_polygon_twelve",
    "TwelveReport", "enumerate_reflexive_polygons", "shoelace_area",
    "convex_hull",
]


def _pt(p):
    if len(p) != 2:
        raise InputError("expected a point in the plane")
    return (Fraction(p[0]), Fraction(p[1]))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b):
    """Whether p lies on the closed segment [a, b], exactly."""
    if _cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


@dataclass(frozen=True)
class OrientedLoop:
    """A closed polygonal loop with exact rational vertices.

    The loop may repeat vertices and self-intersect; only consecutive
    coincident vertices are forbidden.  The edge list closes up from the
    last vertex back to the first.
    """
    vertices: tuple

    def __init__(self, vertices):
        vs = tuple(_pt(v) for v in vertices)
        if len(vs) < 3:
            raise InputError("a loop needs at least three vertices")
        for i, v in enumerate(vs):
            if v == vs[(i + 1) % len(vs)]:
                raise InputError("consecutive loop vertices must be distinct")
        object.__setattr__(self, "vertices", vs)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self):
        return OrientedLoop(tuple(reversed(self.vertices)))

    def contains_point(self, p):
        p = _pt(p)
        return any(_on_segment(p, a, b) for a, b in self.edges())

    def __len__(self):
        return len(self.vertices)


def _as_loop(loop) -> OrientedLoop:
    return loop if isinstance(loop, OrientedLoop) else OrientedLoop(loop)


def winding_number(loop, point) -> int:
    """Signed crossing count of the loop around the point, exact.

    Uses the standard half-open upward/downward crossing rule; raises
    PointOnBoundaryError when the point lies on the loop."""
    loop = _as_loop(loop)
    p = _pt(point)
    if loop.contains_point(p):
        raise PointOnBoundaryError(f"point {point} lies on the loop")
    wn = 0
    for a, b in loop.edges():
        if a[1] <= p[1]:
            if b[1] > p[1] and _cross(a, b, p) > 0:
                wn += 1
        elif b[1] <= p[1] and _cross(a, b, p) < 0:
            wn -= 1
    return wn


def shoelace_area(loop) -> Fraction:
    """Signed area; for self-intersecting loops this is the integral of
    the winding number, i.e. the multiplicity-weighted area."""
    loop = _as_loop(loop)
    total = Fraction(0)
    for a, b in loop.edges():
        total += a[0] * b[1] - a[1] * b[0]
    return total / 2


def _segments_cross(a, b, c, d):
    """Whether closed segments [a,b] and [c,d] share a point."""
    d1 = _cross(c, d, a)
    d2 = _cross(c, d, b)
    d3 = _cross(a, b, c)
    d4 = _cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != d2 and d3 != d4:
        return True
    return (_on_segment(a, c, d) or _on_segment(b, c, d)
            or _on_segment(c, a, b) or _on_segment(d, a, b))


def is_simple_polygon(loop) -> bool:
    """Whether the loop is a simple polygon: non-adjacent edges disjoint,
    adjacent edges meeting only at their shared vertex."""
    loop = _as_loop(loop)
    edges = loop.edges()
    k = len(edges)
    for i in range(k):
        a, b = edges[i]
        for j in range(i + 1, k):
            c, d = edges[j]
            adjacent = (j == i + 1) or (i == 0 and j == k - 1)
            if adjacent:
                # the two edges may only meet in their shared vertex
                shared = b if j == i + 1 else a
                if any(_on_segment(p, c, d) for p in (a, b) if p != shared):
                    return False
                if any(_on_segment(p, a, b) for p in (c, d) if p != shared):
                    return False
            elif _segments_cross(a, b, c, d):
                return False
    return True


# ---------------------------------------------------------------------------
# multi-polytopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiPolytope:
    """A multi-fan plus one integer support number per ray."""
    multifan: MultiFan
    support: tuple

    def __init__(self, multifan, support):
        if not isinstance(multifan, MultiFan):
            raise InputError("expected a MultiFan")
        support = tuple(int(x) for x in support)
        if len(support) != multifan.m:
            raise InputError("one support number per ray is required")
        object.__setattr__(self, "multifan", multifan)
        object.__setattr__(self, "support", support)

    @property
    def n(self):
        return self.multifan.n

    def dilate(self, q: int) -> "MultiPolytope":
        return MultiPolytope(self.multifan, tuple(q * a for a in self.support))


def boundary_loop(p: MultiPolytope) -> OrientedLoop:
    """The oriented boundary of a planar multi-polytope.

    The top faces of the multi-fan must form a single cycle through the
    vertices; each consecutive pair {i, j} contributes the exact solution
    of <u, v_i> = a_i, <u, v_j> = a_j.  The traversal starts at the
    smallest vertex and is oriented so that the first cone (v_i, v_j) is
    positively oriented, matching the multi-fan's own orientation.
    """
    mf = p.multifan
    if mf.n != 2:
        raise InputError("boundary loops exist only for planar multi-polytopes")
    tops = mf.top_faces
    nbrs = {}
    for i, j in tops:
        nbrs.setdefault(i, []).append(j)
        nbrs.setdefault(j, []).append(i)
    for v, ns in nbrs.items():
        if len(ns) != 2:
            raise InputError(f"vertex {v} lies in {len(ns)} top faces; need a cycle")
    start = min(nbrs)
    cycle = [start, sorted(nbrs[start])[0]]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = next(x for x in nbrs[cur] if x != prev)
        if nxt == start:
            break
        cycle.append(nxt)
    if len(cycle) != len(tops):
        raise InputError("top faces form more than one cycle; not supported")
    r0, r1 = mf.rays[cycle[0] - 1], mf.rays[cycle[1] - 1]
    if r0[0] * r1[1] - r0[1] * r1[0] < 0:
        cycle = [cycle[0]] + cycle[1:][::-1]
    points = []
    for t in range(len(cycle)):
        i, j = cycle[t], cycle[(t + 1) % len(cycle)]
        vi, vj = mf.rays[i - 1], mf.rays[j - 1]
        sol = solve_unique([list(vi), list(vj)], [p.support[i - 1], p.support[j - 1]])
        if sol is None:
            raise InputError(f"hyperplanes of face {{{i},{j}}} are parallel")
        points.append(tuple(sol))
    return OrientedLoop(points)


# ---------------------------------------------------------------------------
# convex regions from support numbers
# ---------------------------------------------------------------------------

def _inequalities(p: MultiPolytope):
    # <u, v_i> <= a_i for every ray
    return [(tuple(r), int(a)) for r, a in zip(p.multifan.rays.rays, p.support)]


def _fm_eliminate(ineqs, k):
    zero, pos, neg = [], [], []
    for coeffs, rhs in ineqs:
        c = coeffs[k]
        if c == 0:
            zero.append((coeffs, rhs))
        elif c > 0:
            pos.append((coeffs, rhs))
        else:
            neg.append((coeffs, rhs))
    out = list(zero)
    for pc, pr in pos:
        for nc, nr in neg:
            f_p, f_n = -nc[k], pc[k]
            coeffs = tuple(f_p * a + f_n * b for a, b in zip(pc, nc))
            g = 0
            for x in coeffs:
                g = gcd(g, x)
            rhs = f_p * pr + f_n * nr
            if g > 1:
                # integer normalization keeps numbers small; safe since
                # dividing both sides of <= by a positive integer needs
                # floor only at the very end, and we only test signs
                if all(x % g == 0 for x in coeffs) and rhs % g == 0:
                    coeffs = tuple(x // g for x in coeffs)
                    rhs //= g
            out.append((coeffs, rhs))
    return out


def _fm_feasible(ineqs, n) -> bool:
    cur = ineqs
    for k in range(n):
        cur = _fm_eliminate(cur, k)
        cur = [iq for iq in cur if any(iq[0])] + \
              [iq for iq in cur if not any(iq[0])]
    return all(rhs >= 0 for coeffs, rhs in cur if not any(coeffs))


def _coordinate_bounds(ineqs, n, j):
    """Exact (lower, upper) bounds of coordinate j over the region, via
    Fourier-Motzkin elimination of the other variables.  A missing bound
    comes back as None."""
    cur = ineqs
    for k in range(n):
        if k != j:
            cur = _fm_eliminate(cur, k)
    lo, hi = None, None
    for coeffs, rhs in cur:
        c = coeffs[j]
        if c > 0:
            val = Fraction(rhs, c)
            hi = val if hi is None else min(hi, val)
        elif c < 0:
            val = Fraction(rhs, c)
            lo = val if lo is None else max(lo, val)
        elif rhs < 0:
            return (Fraction(1), Fraction(0))  # infeasible: empty interval
    return lo, hi


def _has_recession_ray(p: MultiPolytope) -> bool:
    n = p.n
    base = [(tuple(r), 0) for r in p.multifan.rays.rays]
    for j in range(n):
        for s in (1, -1):
            # seek d with <d, v_i> <= 0 and s * d_j >= 1
            e = tuple(-s * int(i == j) for i in range(n))
            if _fm_feasible(base + [(e, -1)], n):
                return True
    return False


def _feasible(p: MultiPolytope) -> bool:
    return _fm_feasible(_inequalities(p), p.n)


def polytope_vertices(p: MultiPolytope):
    """All vertices of the convex region {<u, v_i> <= a_i}, as exact
    rational points, from the feasible intersections of n hyperplanes."""
    n, m = p.n, p.multifan.m
    ineqs = _inequalities(p)
    verts = set()
    for combo in itertools.combinations(range(m), n):
        rows = [list(ineqs[i][0]) for i in combo]
        rhs = [ineqs[i][1] for i in combo]
        try:
            sol = solve_unique(rows, rhs)
        except InputError:
            continue
        if sol is None:
            continue
        if all(sum(c * x for c, x in zip(coeffs, sol)) <= b for coeffs, b in ineqs):
            verts.add(tuple(sol))
    return sorted(verts)


def count_lattice_points(p: MultiPolytope):
    """Exact closed count of lattice points in the convex region cut out
    by the support numbers, plus the sorted point list.  The region must
    be bounded; an empty region counts zero."""
    n = p.n
    ineqs = _inequalities(p)
    if not _fm_feasible(ineqs, n):
        return 0, []
    if _has_recession_ray(p):
        raise UnboundedRegionError("support inequalities cut out an unbounded region")
    boxes = []
    for j in range(n):
        lo, hi = _coordinate_bounds(ineqs, n, j)
        if lo is None or hi is None:
            raise UnboundedRegionError("support inequalities cut out an unbounded region")
        boxes.append(range(ceil(lo), floor(hi) + 1))
    pts = []
    for u in itertools.product(*boxes):
        if all(sum(c * x for c, x in zip(coeffs, u)) <= b for coeffs, b in ineqs):
            pts.append(u)
    pts.sort()
    return len(pts), pts


# ---------------------------------------------------------------------------
# Ehrhart polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EhrhartPolynomial:
    """Coefficients a_0, ..., a_n of the lattice point count of q-fold
    dilations; exact rationals, degree exactly n."""
    coefficients: tuple

    def __init__(self, coefficients):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs or coeffs[-1] == 0:
            raise InputError("Ehrhart polynomial must have exact degree n")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, q):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc


def _interpolate(points):
    """Exact polynomial interpolation; returns ascending coefficients."""
    k = len(points)
    rows = [[Fraction(x) ** j for j in range(k)] for x, _ in points]
    rhs = [y for _, y in points]
    sol = solve_unique(rows, rhs)
    return tuple(sol)


def _facet_vertex_sets(p, verts):
    out = []
    for i, (coeffs, rhs) in enumerate(_inequalities(p)):
        on = [v for v in verts if sum(c * x for c, x in zip(coeffs, v)) == rhs]
        out.append(on)
    return out


def _order_cyclically_2d(points):
    """Order planar rational points counterclockwise around their mean."""
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)

    def norm(p):
        dx, dy = p[0] - cx, p[1] - cy
        den = dx.denominator * dy.denominator
        return (int(dx * den), int(dy * den))

    return sorted(points, key=lambda p: angular_key(norm(p)))


def polytope_volume(p: MultiPolytope) -> Fraction:
    """Exact volume for n <= 3 from vertex data (shoelace in the plane,
    outward facet cones in space)."""
    n = p.n
    verts = polytope_vertices(p)
    if not verts:
        return Fraction(0)
    if n == 1:
        return max(v[0] for v in verts) - min(v[0] for v in verts)
    if n == 2:
        ordered = _order_cyclically_2d(verts)
        return abs(shoelace_area(OrientedLoop(ordered)))
    if n == 3:
        total = Fraction(0)
        for i, face_verts in enumerate(_facet_vertex_sets(p, verts)):
            if len(face_verts) < 3:
                continue
            normal = p.multifan.rays[i]
            b1, b2 = integer_kernel_basis([list(normal)])
            det3 = (b1[0] * (b2[1] * normal[2] - b2[2] * normal[1])
                    - b1[1] * (b2[0] * normal[2] - b2[2] * normal[0])
                    + b1[2] * (b2[0] * normal[1] - b2[1] * normal[0]))
            if det3 < 0:
                b1, b2 = b2, b1
            base = face_verts[0]
            plane = []
            for v in face_verts:
                d = [v[t] - base[t] for t in range(3)]
                ab = solve_unique([[b1[t], b2[t]] for t in range(3)], d)
                plane.append((v, (ab[0], ab[1])))
            center = _mean2([q for _, q in plane])
            plane.sort(key=lambda pv: angular_key(_rat_dir(pv[1], center)))
            ordered = [v for v, _ in plane]
            for t in range(1, len(ordered) - 1):
                a, b, c = ordered[0], ordered[t], ordered[t + 1]
                total += (a[0] * (b[1] * c[2] - b[2] * c[1])
                          - a[1] * (b[0] * c[2] - b[2] * c[0])
                          + a[2] * (b[0] * c[1] - b[1] * c[0]))
        return total / 6
    raise PreconditionError("volume oracle is limited to n <= 3")


def _mean2(points):
    k = len(points)
    return (sum(p[0] for p in points) / k, sum(p[1] for p in points) / k)


def _rat_dir(p, center):
    dx, dy = p[0] - center[0], p[1] - center[1]
    den = dx.denominator * dy.denominator
    return (int(dx * den), int(dy * den))


def relative_boundary_volume(p: MultiPolytope) -> Fraction:
    """Sum over facets of their volume normalized so a fundamental cell
    of the facet's own lattice has volume one (n <= 3).  For a polygon
    this is the number of boundary lattice points."""
    n = p.n
    verts = polytope_vertices(p)
    total = Fraction(0)
    if n == 1:
        return Fraction(2) if len(verts) >= 2 else Fraction(0)
    if n == 2:
        for i, face_verts in enumerate(_facet_vertex_sets(p, verts)):
            uniq = sorted(set(face_verts))
            if len(uniq) != 2:
                continue
            (x1, y1), (x2, y2) = uniq
            normal = p.multifan.rays[i]
            (b1,) = integer_kernel_basis([list(normal)])
            t1 = _coordinate_along(b1, (x2 - x1, y2 - y1))
            total += abs(t1)
        return total
    if n == 3:
        for i, face_verts in enumerate(_facet_vertex_sets(p, verts)):
            uniq = sorted(set(face_verts))
            if len(uniq) < 3:
                continue
            normal = p.multifan.rays[i]
            b1, b2 = integer_kernel_basis([list(normal)])
            base = uniq[0]
            plane = []
            for v in uniq:
                d = [v[t] - base[t] for t in range(3)]
                ab = solve_unique([[b1[t], b2[t]] for t in range(3)], d)
                plane.append((ab[0], ab[1]))
            center = _mean2(plane)
            plane.sort(key=lambda q: angular_key(_rat_dir(q, center)))
            total += abs(shoelace_area(OrientedLoop(plane)))
        return total
    raise PreconditionError("boundary volume oracle is limited to n <= 3")


def _coordinate_along(direction, vec):
    idx = next(i for i, x in enumerate(direction) if x)
    return Fraction(vec[idx], direction[idx])


def ehrhart(p: MultiPolytope) -> EhrhartPolynomial:
    """Interpolate the lattice point counts of the dilations q P at
    q = 1..n+1, verify the count at q = n+2, and check the classical
    coefficient identities: a_0 = 1, a_n the volume and a_{n-1} half the
    relative boundary volume (the latter two for n <= 3, where the
    independent vertex-based oracles apply)."""
    n = p.n
    verts = polytope_vertices(p)
    if not verts:
        raise PreconditionError("empty polytope has no Ehrhart polynomial")
    for v in verts:
        if any(x.denominator != 1 for x in v):
            raise InputError(f"non-integral vertex {tuple(v)}")
    counts = []
    for q in range(1, n + 2):
        c, _ = count_lattice_points(p.dilate(q))
        counts.append((q, Fraction(c)))
    coeffs = _interpolate(counts)
    poly = EhrhartPolynomial(coeffs)
    check, _ = count_lattice_points(p.dilate(n + 2))
    if poly(n + 2) != check:
        raise PreconditionError("count at q = n + 2 deviates from the interpolation")
    if poly.coefficients[0] != 1:
        raise PreconditionError("constant term is not 1")
    if n <= 3:
        vol = polytope_volume(p)
        if vol == 0:
            raise PreconditionError("polytope is not full-dimensional")
        if poly.coefficients[-1] != vol:
            raise PreconditionError("leading coefficient differs from the volume")
        if poly.coefficients[-2] != relative_boundary_volume(p) / 2:
            raise PreconditionError("next coefficient differs from half the boundary volume")
    return poly


# ---------------------------------------------------------------------------
# Pick's identity and the solid angle sum
# ---------------------------------------------------------------------------

def _lattice_loop(loop) -> OrientedLoop:
    loop = _as_loop(loop)
    for v in loop.vertices:
        if v[0].denominator != 1 or v[1].denominator != 1:
            raise InputError("polygon vertices must be lattice points")
    return loop


def _lattice_bbox(loop, pad=0):
    xs = [v[0] for v in loop.vertices]
    ys = [v[1] for v in loop.vertices]
    return (range(ceil(min(xs)) - pad, floor(max(xs)) + 1 + pad),
            range(ceil(min(ys)) - pad, floor(max(ys)) + 1 + pad))


@dataclass(frozen=True)
class PickReport:
    area: Fraction
    interior: int
    boundary: int
    holds: bool


def pick_check(polygon) -> PickReport:
    """Verify Pick's identity Area = #interior + #boundary/2 - 1 on a
    simple lattice polygon, with all three quantities computed by
    independent means: shoelace area, winding-number interior count and
    gcd-based boundary count."""
    loop = _lattice_loop(polygon)
    if not is_simple_polygon(loop):
        raise PreconditionError("Pick's identity needs a simple polygon")
    area = abs(shoelace_area(loop))
    boundary = 0
    for a, b in loop.edges():
        boundary += gcd(int(abs(b[0] - a[0])), int(abs(b[1] - a[1])))
    interior = 0
    bx, by = _lattice_bbox(loop)
    for u in itertools.product(bx, by):
        pu = _pt(u)
        if loop.contains_point(pu):
            continue
        if winding_number(loop, pu) != 0:
            interior += 1
    holds = area == interior + Fraction(boundary, 2) - 1
    return PickReport(area, interior, boundary, holds)


def _boundary_directions(loop, u):
    """Primitive directions of the loop's passages through u."""
    dirs = set()
    for a, b in loop.edges():
        if not _on_segment(u, a, b):
            continue
        if u != a:
            dirs.add(_primitive_dir((a[0] - u[0], a[1] - u[1])))
        if u != b:
            dirs.add(_primitive_dir((b[0] - u[0], b[1] - u[1])))
    return sorted(dirs, key=angular_key)


def _primitive_dir(d):
    den = d[0].denominator * d[1].denominator if isinstance(d[0], Fraction) else 1
    x, y = int(d[0] * den), int(d[1] * den)
    g = gcd(abs(x), abs(y))
    return (x // g, y // g)


def _first_hit(loop, u, direction):
    """Smallest t > 0 at which u + t * direction meets the loop."""
    best = None
    dx, dy = Fraction(direction[0]), Fraction(direction[1])
    for a, b in loop.edges():
        ex, ey = b[0] - a[0], b[1] - a[1]
        denom = dx * ey - dy * ex
        wx, wy = a[0] - u[0], a[1] - u[1]
        if denom != 0:
            t = (wx * ey - wy * ex) / denom
            s = (wx * dy - wy * dx) / denom
            if t > 0 and 0 <= s <= 1:
                best = t if best is None else min(best, t)
        else:
            # parallel edge: relevant only when collinear with the ray
            if wx * dy - wy * dx == 0:
                for v in (a, b):
                    if dx != 0:
                        t = (v[0] - u[0]) / dx
                    else:
                        t = (v[1] - u[1]) / dy
                    if t > 0:
                        best = t if best is None else min(best, t)
    return best


def _sector_winding(loop, u, probe):
    t = _first_hit(loop, u, probe)
    step = Fraction(1) if t is None else t / 2
    q = (u[0] + step * probe[0], u[1] + step * probe[1])
    return winding_number(loop, q)


def _solid_angle_at(loop, u) -> ExactAngle:
    dirs = _boundary_directions(loop, u)
    if len(dirs) == 1:
        d = dirs[0]
        probe = (-d[1], d[0])
        return ExactAngle(_sector_winding(loop, u, probe))
    total = ExactAngle(0)
    k = len(dirs)
    for i in range(k):
        d1, d2 = dirs[i], dirs[(i + 1) % k]
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross > 0:
            probe = (d1[0] + d2[0], d1[1] + d2[1])
        elif cross < 0:
            probe = (-(d1[0] + d2[0]), -(d1[1] + d2[1]))
        else:
            probe = (-d1[1], d1[0])
        wn = _sector_winding(loop, u, probe)
        if wn:
            total = total + ccw_sector(d1, d2) * wn
    return total


def solid_angle_count(loop) -> Fraction:
    """Sum of the solid angle weights over all lattice points.

    Off the loop the weight is the winding number; on the loop it is the
    normalized angular measure of the loop around the point, assembled
    from exact sector data.  Arctangent atoms from the vertex angles
    cancel in the total for lattice-vertex loops; if a residue remains
    (possible for non-lattice rational vertices) an error carrying the
    symbolic leftover is raised rather than an approximation returned.
    """
    loop = _as_loop(loop)
    total = ExactAngle(0)
    bx, by = _lattice_bbox(loop)
    for u in itertools.product(bx, by):
        pu = _pt(u)
        if loop.contains_point(pu):
            total = total + _solid_angle_at(loop, pu)
        else:
            wn = winding_number(loop, pu)
            if wn:
                total = total + ExactAngle(wn)
    return total.as_fraction()


# ---------------------------------------------------------------------------
# equivariant index sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentSum:
    """A finite integer combination of lattice characters t^u."""
    terms: tuple  # sorted ((coords...), coefficient) pairs, no zeros

    def __init__(self, terms):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        cleaned = {}
        for u, c in items:
            u = tuple(int(x) for x in u)
            c = int(c)
            if c:
                cleaned[u] = cleaned.get(u, 0) + c
        pairs = tuple(sorted((u, c) for u, c in cleaned.items() if c))
        object.__setattr__(self, "terms", pairs)

    def as_dict(self):
        return dict(self.terms)

    def coefficient_sum(self):
        return sum(c for _, c in self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)


def _check_convex(p: MultiPolytope):
    mf = p.multifan
    if not mf.is_ordinary():
        raise PreconditionError("closed convex indexing needs an ordinary fan")
    if not isinstance(mf, Fan):
        for v in battery_vectors(mf):
            if degree_at(mf, v) not in (0, 1):
                raise PreconditionError("cones overlap; the multi-polytope is not convex")


def equivariant_index(p: MultiPolytope, convention: str) -> LaurentSum:
    """Lattice character sums attached to a multi-polytope.

    - ``closed_convex``: sum of t^u over the closed convex region (the
      section count of an ample line bundle); convex input only.
    - ``open_interior``: sum of m(u) t^u over lattice points off the
      boundary loop, with m(u) the winding number; any planar
      multi-polytope qualifies.
    """
    if convention == "closed_convex":
        _check_convex(p)
        if not _feasible(p):
            return LaurentSum({})
        _, pts = count_lattice_points(p)
        return LaurentSum({u: 1 for u in pts})
    if convention == "open_interior":
        loop = boundary_loop(p)
        terms = {}
        bx, by = _lattice_bbox(loop)
        for u in itertools.product(bx, by):
            pu = _pt(u)
            if loop.contains_point(pu):
                continue
            wn = winding_number(loop, pu)
            if wn:
                terms[u] = wn
        return LaurentSum(terms)
    raise InputError(f"unknown index convention {convention!r}")


# ---------------------------------------------------------------------------
# reflexive polygons and the twelve-point theorem
# ---------------------------------------------------------------------------

def convex_hull(points):
    """Counterclockwise convex hull of integer points (monotone chain);
    collinear points in the middle of edges are dropped."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _strictly_inside_hull(hull, u):
    k = len(hull)
    return all(_cross(hull[i], hull[(i + 1) % k], u) > 0 for i in range(k))


def _interior_lattice_points(hull):
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    out = []
    for u in itertools.product(range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1)):
        if _strictly_inside_hull(hull, u):
            out.append(u)
    return out


def _boundary_count(hull):
    k = len(hull)
    return sum(gcd(abs(hull[(i + 1) % k][0] - hull[i][0]),
                   abs(hull[(i + 1) % k][1] - hull[i][1])) for i in range(k))


@dataclass(frozen=True)
class TwelveReport:
    b: int
    b_dual: int
    total: int


def dual_polygon_twelve(polygon) -> TwelveReport:
    """Polar dual of a reflexive polygon and the twelve-point identity.

    The polygon must be convex with exactly one interior lattice point,
    which is translated to the origin.  The dual vertex attached to the
    edge from A to B solves <u, A> = <u, B> = -1; all these must be
    lattice points, otherwise the polygon is not reflexive.  Returns the
    boundary lattice point counts b, b* and their sum, asserting b + b*
    = 12."""
    hull = convex_hull(polygon)
    if len(hull) < 3:
        raise InputError("need a two-dimensional polygon")
    interior = _interior_lattice_points(hull)
    if len(interior) != 1:
        raise NotReflexiveError(f"polygon has {len(interior)} interior lattice points, not 1")
    cx, cy = interior[0]
    hull = [(x - cx, y - cy) for x, y in hull]
    k = len(hull)
    dual = []
    for i in range(k):
        a, b = hull[i], hull[(i + 1) % k]
        sol = solve_unique([list(a), list(b)], [-1, -1])
        if sol is None:
            raise NotReflexiveError("edge endpoints are collinear with the origin")
        if any(x.denominator != 1 for x in sol):
            raise NotReflexiveError(f"dual vertex {tuple(sol)} is not a lattice point")
        dual.append((int(sol[0]), int(sol[1])))
    dual_hull = convex_hull(dual)
    if len(dual_hull) != len(dual):
        raise NotReflexiveError("dual vertices are not in convex position")
    b = _boundary_count(hull)
    b_dual = _boundary_count(dual_hull)
    total = b + b_dual
    if total != 12:
        raise PreconditionError(f"twelve-point identity failed: {b} + {b_dual} = {total}")
    return TwelveReport(b, b_dual, total)


def _gl2_equivalent(p, q) -> bool:
    """Whether two origin-centered polygons differ by a matrix in GL(2,Z).
    Anchored on an edge of p: the image of a consecutive vertex pair must
    be a consecutive pair of q, in either orientation."""
    if len(p) != len(q):
        return False
    a, b = p[0], p[1]
    det_p = a[0] * b[1] - a[1] * b[0]
    k = len(q)
    candidates = []
    for i in range(k):
        c, d = q[i], q[(i + 1) % k]
        candidates.append((c, d))
        candidates.append((d, c))
    for c, d in candidates:
        det_q = c[0] * d[1] - c[1] * d[0]
        if abs(det_q) != abs(det_p):
            continue
        # g [a b] = [c d]  (columns), g = [c d] adj([a b]) / det
        adj = ((b[1], -b[0]), (-a[1], a[0]))
        num = (
            (c[0] * adj[0][0] + d[0] * adj[1][0], c[0] * adj[0][1] + d[0] * adj[1][1]),
            (c[1] * adj[0][0] + d[1] * adj[1][0], c[1] * adj[0][1] + d[1] * adj[1][1]),
        )
        if any(x % det_p for row in num for x in row):
            continue
        g = tuple(tuple(x // det_p for x in row) for row in num)
        gd = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        if abs(gd) != 1:
            continue
        image = {(g[0][0] * x + g[0][1] * y, g[1][0] * x + g[1][1] * y) for x, y in p}
        if image == set(q):
            return True
    return False


_REFLEXIVE_CACHE = {}


def enumerate_reflexive_polygons(bound=2):
    """Exhaustive search for lattice polygons with the origin as unique
    interior lattice point and vertices in [-bound, bound]^2, classified
    up to GL(2,Z).  With the default bound this yields the sixteen
    reflexive polygons.

    A convex lattice polygon with a single interior point has at most
    six vertices (the hexagon is extremal), so vertex subsets up to size
    six exhaust the search space.
    """
    if bound in _REFLEXIVE_CACHE:
        return _REFLEXIVE_CACHE[bound]
    pts = [(x, y) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)
           if (x, y) != (0, 0)]
    seen = set()
    reps = []
    for size in range(3, 7):
        for combo in itertools.combinations(pts, size):
            hull = convex_hull(combo)
            if len(hull) != size:
                continue
            key = tuple(hull)
            if key in seen:
                continue
            seen.add(key)
            if not _strictly_inside_hull(hull, (0, 0)):
                continue
            if _interior_lattice_points(hull) != [(0, 0)]:
                continue
            if not any(_gl2_equivalent(hull, rep) for rep in reps):
                reps.append(hull)
    reps.sort(key=lambda h: (len(h), _boundary_count(h), h))
    out = [tuple(h) for h in reps]
    _REFLEXIVE_CACHE[bound] = out
    return out
