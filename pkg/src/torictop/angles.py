"""Exact plane angles measured in turns (full revolutions = 1).

An angle between two rational directions is a rational number of turns
plus an integer combination of arctangent atoms arctan(y/x)/2pi with
0 < y < x coprime.  Directions are first normalized into the half
quadrant 0 <= y <= x by the eight symmetries of the square lattice, so
the atoms are canonical and sums of sector angles cancel exactly
whenever the total is rational.  No angle is ever evaluated numerically.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InputError

__all__ = ["ExactAngle", "direction_angle", "ccw_sector", "angular_key"]


class ExactAngle:
    """turns + sum of integer multiples of arctan atoms, kept exact."""

    __slots__ = ("turns", "atoms")

    def __init__(self, turns=0, atoms=None):
        object.__setattr__(self, "turns", Fraction(turns))
        object.__setattr__(self, "atoms", dict(atoms or {}))
        for k in [k for k, c in self.atoms.items() if c == 0]:
            del self.atoms[k]

    def __setattr__(self, *args):
        raise AttributeError("ExactAngle is immutable")

    def __add__(self, other):
        if isinstance(other, ExactAngle):
            atoms = dict(self.atoms)
            for k, c in other.atoms.items():
                atoms[k] = atoms.get(k, 0) + c
            return ExactAngle(self.turns + other.turns, atoms)
        return ExactAngle(self.turns + Fraction(other), self.atoms)

    __radd__ = __add__

    def __neg__(self):
        return ExactAngle(-self.turns, {k: -c for k, c in self.atoms.items()})

    def __sub__(self, other):
        if not isinstance(other, ExactAngle):
            other = ExactAngle(Fraction(other))
        return self + (-other)

    def __mul__(self, k):
        k = int(k)
        return ExactAngle(self.turns * k, {a: c * k for a, c in self.atoms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ExactAngle):
            return self.turns == other.turns and self.atoms == other.atoms
        return not self.atoms and self.turns == Fraction(other)

    def __hash__(self):
        return hash((self.turns, tuple(sorted(self.atoms.items()))))

    @property
    def is_rational(self):
        return not self.atoms

    def as_fraction(self):
        if self.atoms:
            raise InputError(f"angle has uncancelled arctangent atoms: {sorted(self.atoms)}")
        return self.turns

    def __repr__(self):
        if not self.atoms:
            return f"ExactAngle({self.turns})"
        return f"ExactAngle({self.turns}, atoms={sorted(self.atoms.items())})"


def _primitive(d):
    x, y = int(d[0]), int(d[1])
    if x == 0 and y == 0:
        raise InputError("zero vector has no direction")
    g = gcd(abs(x), abs(y))
    return x // g, y // g


def direction_angle(d) -> ExactAngle:
    """The angle of the ray through d, in [0, 1) turns."""
    x, y = _primitive(d)
    if y == 0:
        return ExactAngle(0 if x > 0 else Fraction(1, 2))
    if x == 0:
        return ExactAngle(Fraction(1, 4) if y > 0 else Fraction(3, 4))
    if y < 0:
        # reflect across the x-axis
        return ExactAngle(1) - direction_angle((x, -y))
    if x < 0:
        # reflect across the y-axis
        return ExactAngle(Fraction(1, 2)) - direction_angle((-x, y))
    if x == y:
        return ExactAngle(Fraction(1, 8))
    if y > x:
        # reflect across the diagonal
        return ExactAngle(Fraction(1, 4)) - direction_angle((y, x))
    return ExactAngle(0, {(x, y): 1})


def angular_key(d):
    """Sort key placing directions in counterclockwise order from the
    positive x-axis, using only integer arithmetic."""
    x, y = _primitive(d)
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1

    class _Key:
        __slots__ = ("x", "y", "half")

        def __init__(self):
            self.x, self.y, self.half = x, y, half

        def __lt__(self, other):
            if self.half != other.half:
                return self.half < other.half
            cross = self.x * other.y - self.y * other.x
            return cross > 0

        def __eq__(self, other):
            return self.half == other.half and self.x * other.y == self.y * other.x

    return _Key()


def ccw_sector(d1, d2) -> ExactAngle:
    """The counterclockwise angle from direction d1 to direction d2,
    normalized into [0, 1) turns (0 when the directions coincide)."""
    p1, p2 = _primitive(d1), _primitive(d2)
    if p1 == p2:
        return ExactAngle(0)
    delta = direction_angle(p2) - direction_angle(p1)
    # direction_angle values lie in [0, 1); add a turn when d2 sits at or
    # before d1 in the counterclockwise order from the positive x-axis
    if angular_key(p2) < angular_key(p1) or angular_key(p2) == angular_key(p1):
        delta = delta + 1
    return delta
