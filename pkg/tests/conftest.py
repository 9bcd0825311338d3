"""Shared fixtures: random simple lattice polygons and reflexive classes."""

import random
from fractions import Fraction

import pytest

from torictop.angles import angular_key
from torictop.polytopes import (
    OrientedLoop,
    enumerate_reflexive_polygons,
    is_simple_polygon,
    shoelace_area,
)


def make_star_polygon(rng, bound=20, min_pts=5, max_pts=12):
    """A random simple lattice polygon: distinct points get sorted by
    angle around their centroid (one point kept per direction), which
    yields a star-shaped, hence simple, counterclockwise polygon."""
    while True:
        k = rng.randint(min_pts, max_pts)
        pts = {(rng.randint(-bound, bound), rng.randint(-bound, bound))
               for _ in range(k)}
        if len(pts) < 3:
            continue
        cx = Fraction(sum(p[0] for p in pts), len(pts))
        cy = Fraction(sum(p[1] for p in pts), len(pts))
        by_dir = {}
        for p in pts:
            dx, dy = p[0] - cx, p[1] - cy
            if dx == 0 and dy == 0:
                continue
            den = dx.denominator * dy.denominator
            ix, iy = int(dx * den), int(dy * den)
            from math import gcd
            g = gcd(abs(ix), abs(iy))
            key = (ix // g, iy // g)
            dist = dx * dx + dy * dy
            if key not in by_dir or dist > by_dir[key][0]:
                by_dir[key] = (dist, p)
        if len(by_dir) < 3:
            continue
        ordered = [p for _, (_, p) in
                   sorted(by_dir.items(), key=lambda kv: angular_key(kv[0]))]
        loop = OrientedLoop(ordered)
        if shoelace_area(loop) <= 0:
            continue
        if not is_simple_polygon(loop):
            continue
        return loop


@pytest.fixture(scope="session")
def polygon_corpus():
    rng = random.Random(1234)
    return [make_star_polygon(rng) for _ in range(55)]


@pytest.fixture(scope="session")
def reflexive_classes():
    return enumerate_reflexive_polygons()
