"""Incidence geometry of the affine plane over an odd prime field.

Points, canonical lines (slope/intercept or vertical), shifted parabolas
y = x^2 + t, secants and their quadratic discriminants, and a fully
projective Pascal-hexagon collinearity check (opposite-side meets computed
with cross products, so parallel sides meeting at infinity need no special
case).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ffield import (
    FieldElement,
    MixedModulusError,
    Prime,
    inv,
    sqrt_mod,
)

__all__ = [
    "DegenerateSecantError",
    "AffinePoint",
    "ProjPoint",
    "Line",
    "ParabolaSpec",
    "secant_line",
    "discriminant_shift",
    "line_parabola_intersections",
    "pascal_collinear",
    "pascal_meets_collinear",
]


class DegenerateSecantError(ValueError):
    """A secant through a repeated parameter does not exist."""


def _same_modulus(*elements: FieldElement) -> Prime:
    mod = elements[0].modulus
    for e in elements[1:]:
        if e.modulus.value != mod.value:
            raise MixedModulusError(
                f"mixed moduli {mod.value} and {e.modulus.value}"
            )
    return mod


@dataclass(frozen=True)
class AffinePoint:
    """A point (x, y) of the affine plane over one fixed field."""

    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        _same_modulus(self.x, self.y)

    @property
    def modulus(self) -> Prime:
        return self.x.modulus


@dataclass(frozen=True)
class ProjPoint:
    """Homogeneous coordinates (X : Y : Z), not all zero, stored canonically
    with the last nonzero coordinate scaled to 1 so equality and hashing
    are well defined."""

    X: FieldElement
    Y: FieldElement
    Z: FieldElement

    def __post_init__(self) -> None:
        _same_modulus(self.X, self.Y, self.Z)
        coords = (self.X, self.Y, self.Z)
        last = None
        for c in reversed(coords):
            if c.residue != 0:
                last = c
                break
        if last is None:
            raise ValueError("projective point needs a nonzero coordinate")
        if last.residue != 1:
            s = inv(last)
            object.__setattr__(self, "X", self.X * s)
            object.__setattr__(self, "Y", self.Y * s)
            object.__setattr__(self, "Z", self.Z * s)

    @classmethod
    def from_affine(cls, point: AffinePoint) -> "ProjPoint":
        return cls(point.x, point.y, FieldElement(1, point.modulus))


@dataclass(frozen=True)
class Line:
    """Canonical affine line: y = m*x + c when m is not None, else x = c.

    Both forms are unique per line, so dataclass equality and hashing give
    exact deduplication.
    """

    m: FieldElement | None
    c: FieldElement

    def __post_init__(self) -> None:
        if self.m is not None:
            _same_modulus(self.m, self.c)

    @classmethod
    def slant(cls, m: FieldElement, c: FieldElement) -> "Line":
        return cls(m, c)

    @classmethod
    def vertical(cls, c: FieldElement) -> "Line":
        return cls(None, c)

    @classmethod
    def through(cls, p1: AffinePoint, p2: AffinePoint) -> "Line":
        """The unique line through two distinct points."""
        if p1 == p2:
            raise ValueError("two distinct points required")
        _same_modulus(p1.x, p2.x)
        if p1.x == p2.x:
            return cls(None, p1.x)
        m = (p2.y - p1.y) * inv(p2.x - p1.x)
        return cls(m, p1.y - m * p1.x)

    @property
    def is_vertical(self) -> bool:
        return self.m is None

    def contains(self, point: AffinePoint) -> bool:
        if self.m is None:
            return point.x == self.c
        return point.y == self.m * point.x + self.c


@dataclass(frozen=True)
class ParabolaSpec:
    """The conic {(x, x^2 + shift) : x in F_p} for one vertical shift."""

    shift: FieldElement

    @property
    def modulus(self) -> Prime:
        return self.shift.modulus

    def point_at(self, x: FieldElement | int) -> AffinePoint:
        if isinstance(x, int):
            x = FieldElement(x, self.modulus)
        return AffinePoint(x, x * x + self.shift)

    def points(self) -> list[AffinePoint]:
        return [self.point_at(x) for x in range(self.modulus.value)]

    def contains(self, point: AffinePoint) -> bool:
        return point.y == point.x * point.x + self.shift


def secant_line(a: FieldElement, b: FieldElement, parabola: ParabolaSpec) -> Line:
    """Line through the parabola points with parameters a and b (a != b).

    For y = x^2 + t this is y = (a+b)x - ab + t; never vertical because the
    two x coordinates differ.
    """
    _same_modulus(a, b, parabola.shift)
    if a == b:
        raise DegenerateSecantError(f"repeated parameter {a!r}")
    return Line.slant(a + b, -(a * b) + parabola.shift)


def discriminant_shift(a: FieldElement, b: FieldElement, delta_t: FieldElement) -> FieldElement:
    """Discriminant (a-b)^2 - 4*delta_t of the quadratic that locates where
    the secant at parameters {a, b} of one parabola meets the parabola
    shifted by delta_t.  Its character classifies the intersection:
    +1 two points, 0 tangent, -1 disjoint."""
    _same_modulus(a, b, delta_t)
    d = a - b
    return d * d - 4 * delta_t


def line_parabola_intersections(line: Line, parabola: ParabolaSpec) -> tuple[AffinePoint, ...]:
    """All intersection points of a line with a parabola, ascending by x.

    A vertical line meets y = x^2 + t exactly once.  A slant line leads to
    x^2 - mx + (t - c) = 0, solved by the quadratic formula; a non-residue
    discriminant yields the empty tuple.
    """
    mod = parabola.modulus
    if line.is_vertical:
        return (parabola.point_at(line.c),)
    _same_modulus(line.c, parabola.shift)
    disc = line.m * line.m - 4 * (parabola.shift - line.c)
    roots = sqrt_mod(disc)
    if roots is None:
        return ()
    half = inv(FieldElement(2, mod))
    r = roots[0]
    x1 = (line.m + r) * half
    x2 = (line.m - r) * half
    xs = sorted({x1.residue, x2.residue})
    return tuple(parabola.point_at(x) for x in xs)


def _cross(u, v):
    """Cross product of two 3-vectors of field elements."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _det3(r1, r2, r3) -> FieldElement:
    return (
        r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
        - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
        + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
    )


def pascal_meets_collinear(points: Sequence[AffinePoint]) -> bool:
    """Whether the three opposite-side meets of the hexagon are collinear.

    Hexagon A,B,C,D,E,F in the given order; sides AB..FA; the meets
    AB^DE, BC^EF, CD^FA are computed projectively and tested with a 3x3
    determinant.  No conic membership is assumed here; this is the bare
    incidence computation.
    """
    pts = list(points)
    if len(pts) != 6:
        raise ValueError(f"exactly six points required, got {len(pts)}")
    if len(set(pts)) != 6:
        raise ValueError("hexagon points must be pairwise distinct")
    lifted = [ProjPoint.from_affine(p) for p in pts]
    vecs = [(q.X, q.Y, q.Z) for q in lifted]
    sides = [_cross(vecs[i], vecs[(i + 1) % 6]) for i in range(6)]
    meets = [_cross(sides[i], sides[i + 3]) for i in range(3)]
    return _det3(*meets).residue == 0


def pascal_collinear(
    hexagon: Sequence[AffinePoint],
    parabola: ParabolaSpec,
    order: Sequence[int] | None = None,
) -> bool:
    """Pascal check for six distinct points of one parabola.

    `order`, when given, is a permutation of range(6) applied before the
    sides are formed.  Points off the conic are rejected; use
    pascal_meets_collinear for arbitrary hexagons.
    """
    pts = list(hexagon)
    if len(pts) != 6:
        raise ValueError(f"exactly six points required, got {len(pts)}")
    if order is not None:
        if sorted(order) != list(range(6)):
            raise ValueError(f"order must be a permutation of 0..5, got {order!r}")
        pts = [pts[i] for i in order]
    if len(set(pts)) != 6:
        raise ValueError("hexagon points must be pairwise distinct")
    for p in pts:
        if not parabola.contains(p):
            raise ValueError(f"point {p!r} is not on the parabola")
    return pascal_meets_collinear(pts)
