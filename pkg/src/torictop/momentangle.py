"""Moment-angle complexes and coordinate subspace arrangement complements.

For a simplicial complex K on {1..m}, the moment-angle complex Z_K is
the union over faces sigma of the products (disk in coordinates of
sigma) x (circle elsewhere) inside the polydisk; it is a deformation
retract of the complement U(K) of the coordinate subspaces indexed by
the non-faces of K.  The product CW structure on the polydisk, with one
point, one circle cell and one disk cell per factor, restricts to Z_K:
a cell is a pair (sigma, tau) of disjoint subsets with sigma a face, of
dimension 2|sigma| + |tau|.  The boundary replaces one disk factor by
its circle with the usual alternating (Koszul) sign.

Integral homology is computed from exact Smith normal forms, and for
skeleta of simplices it is compared against the closed-form wedge
decomposition of U(K) into spheres.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb

from .errors import InputError, SizeGuardError
from .facering import GradedDims
from .intlinalg import smith_invariant_factors
from .simplicial import SimplicialComplex, standard_complex

__all__ = [
    "ZkCell", "ChainComplexZ", "HomologyResult", "WedgeReport",
    "zk_cells", "zk_chain_complex", "homology",
    "uk_wedge_prediction", "verify_wedge",
]

_DEFAULT_CELL_GUARD = 10
_DEFAULT_WEDGE_GUARD = 8


def _size_limit(default: int) -> int:
    value = os.environ.get("TORICTOP_SIZE_GUARD")
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise InputError("TORICTOP_SIZE_GUARD must be an integer") from None


@dataclass(frozen=True)
class ZkCell:
    """A product cell of Z_K: disk coordinates `disks` (a face of K) and
    circle coordinates `circles`, disjoint from the disks."""
    disks: tuple
    circles: tuple

    @property
    def dim(self):
        return 2 * len(self.disks) + len(self.circles)


def zk_cells(K: SimplicialComplex):
    """All cells (sigma, tau) with sigma a face and tau disjoint from it;
    there are sum_sigma 2^(m - |sigma|) of them.  Guarded at m <= 10 by
    default (override with TORICTOP_SIZE_GUARD)."""
    guard = _size_limit(_DEFAULT_CELL_GUARD)
    if K.m > guard:
        raise SizeGuardError(f"m = {K.m} exceeds the cell guard {guard}")
    cells = []
    verts = range(1, K.m + 1)
    for sigma in sorted(K.faces, key=lambda f: (len(f), f)):
        rest = [v for v in verts if v not in sigma]
        for k in range(len(rest) + 1):
            for tau in itertools.combinations(rest, k):
                cells.append(ZkCell(sigma, tau))
    return cells


class ChainComplexZ:
    """Integer cellular chain complex: cells graded by dimension and one
    sparse boundary matrix per positive dimension, with d o d = 0
    verified by exact multiplication at construction."""

    __slots__ = ("cells", "boundaries")

    def __init__(self, cells_by_dim, boundaries):
        object.__setattr__(self, "cells", dict(cells_by_dim))
        object.__setattr__(self, "boundaries", dict(boundaries))
        self._check_dd_zero()

    def __setattr__(self, *args):
        raise AttributeError("ChainComplexZ is immutable")

    def cell_count(self, d):
        return len(self.cells.get(d, ()))

    @property
    def top_dim(self):
        return max(self.cells, default=0)

    def _check_dd_zero(self):
        for d, bd in self.boundaries.items():
            upper = self.boundaries.get(d + 1)
            if not upper:
                continue
            # rows of bd live in dimension d-1, columns in d
            by_col = {}
            for (r, c), v in bd.items():
                by_col.setdefault(c, {})[r] = v
            composite = {}
            for (mid, c), v in upper.items():
                for r, w in by_col.get(mid, {}).items():
                    composite[(r, c)] = composite.get((r, c), 0) + v * w
            if any(composite.values()):
                raise InputError(f"boundary composition is nonzero in dimension {d + 1}")


def zk_chain_complex(K: SimplicialComplex) -> ChainComplexZ:
    """Cellular chain complex of Z_K.  The boundary of (sigma, tau) moves
    one vertex i of sigma into tau with sign (-1)^(number of circle
    coordinates below i); circle cells are cycles."""
    cells = zk_cells(K)
    by_dim = {}
    for cell in cells:
        by_dim.setdefault(cell.dim, []).append(cell)
    index = {}
    for d, cs in by_dim.items():
        cs.sort(key=lambda c: (c.disks, c.circles))
        for i, c in enumerate(cs):
            index[c] = i
    boundaries = {}
    for d, cs in sorted(by_dim.items()):
        if d == 0:
            continue
        entries = {}
        for col, cell in enumerate(cs):
            for i in cell.disks:
                sign = (-1) ** sum(1 for j in cell.circles if j < i)
                target = ZkCell(tuple(x for x in cell.disks if x != i),
                                tuple(sorted(cell.circles + (i,))))
                entries[(index[target], col)] = sign
        if entries:
            boundaries[d] = entries
        else:
            boundaries[d] = {}
    return ChainComplexZ(by_dim, boundaries)


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion coefficients per degree."""
    betti: tuple
    torsion: tuple  # tuple of tuples of invariant factors > 1

    @property
    def euler(self):
        return sum((-1) ** d * b for d, b in enumerate(self.betti))


def homology(C: ChainComplexZ) -> HomologyResult:
    """Integral homology from Smith normal forms: in degree d the rank is
    #cells - rank d_d - rank d_{d+1} and the torsion is the set of
    invariant factors of d_{d+1} exceeding one."""
    top = C.top_dim
    factors = {}
    for d in range(1, top + 1):
        bd = C.boundaries.get(d, {})
        nrows = C.cell_count(d - 1)
        ncols = C.cell_count(d)
        factors[d] = smith_invariant_factors(bd, nrows, ncols) if bd else []
    betti = []
    torsion = []
    for d in range(top + 1):
        rank_here = len(factors.get(d, []))
        rank_up = len(factors.get(d + 1, []))
        betti.append(C.cell_count(d) - rank_here - rank_up)
        torsion.append(tuple(f for f in factors.get(d + 1, []) if f > 1))
    return HomologyResult(tuple(betti), tuple(torsion))


def uk_wedge_prediction(m: int, k: int) -> GradedDims:
    """Reduced Betti numbers of the wedge of spheres homotopy equivalent
    to the complement of all codimension k+1 coordinate subspaces: the
    sphere S^{k+j} occurs C(m, j) C(j-1, k) times for j = k+1..m."""
    if not 1 <= k <= m - 1:
        raise InputError("need 1 <= k <= m - 1")
    dims = [0] * (m + k + 1)
    for j in range(k + 1, m + 1):
        dims[k + j] += comb(m, j) * comb(j - 1, k)
    return GradedDims(tuple(dims))


@dataclass(frozen=True)
class WedgeReport:
    match: bool
    torsion_free: bool
    betti: tuple       # unreduced Betti numbers of Z_K
    predicted: tuple   # reduced Betti numbers from the wedge formula


def verify_wedge(m: int, k: int) -> WedgeReport:
    """Compare the integral homology of Z_(skeleton of a simplex) with
    the wedge-of-spheres prediction.  Guarded at m <= 8 by default."""
    guard = _size_limit(_DEFAULT_WEDGE_GUARD)
    if m > guard:
        raise SizeGuardError(f"m = {m} exceeds the wedge guard {guard}")
    predicted = uk_wedge_prediction(m, k).dims
    K = standard_complex("skeleton", m, k)
    result = homology(zk_chain_complex(K))
    torsion_free = all(not t for t in result.torsion)
    reduced = list(result.betti)
    reduced[0] -= 1
    width = max(len(reduced), len(predicted))
    reduced += [0] * (width - len(reduced))
    padded = list(predicted) + [0] * (width - len(predicted))
    match = torsion_free and reduced == padded
    return WedgeReport(match, torsion_free, result.betti, tuple(predicted))
