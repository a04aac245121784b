"""Exact lattice geometry for equilateral triangles and regular tetrahedra.

No floating point is used anywhere in this module: points are integer or
``Fraction`` triples and every test is an exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Literal, NamedTuple, Sequence

from .numtheory import NormRepresentation, is_eisenstein_norm, represent_eisenstein_norm


class LatticePoint(NamedTuple):
    x: int
    y: int
    z: int


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self)

    def to_lattice(self) -> LatticePoint:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coordinates")
        return LatticePoint(*(int(v) for v in self))


Vec = Sequence[int]
ORIGIN = LatticePoint(0, 0, 0)


def sub(p: Vec, q: Vec) -> tuple:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def add(p: Vec, q: Vec) -> tuple:
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


def dot(p: Vec, q: Vec):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross(p: Vec, q: Vec) -> tuple:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def sqdist(p: Vec, q: Vec):
    v = sub(p, q)
    return dot(v, v)


@dataclass(frozen=True)
class LatticeTriangle:
    """An equilateral triangle with integer vertices, vertices sorted."""

    vertices: tuple[LatticePoint, LatticePoint, LatticePoint]
    sq_side: int

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(set(vs)) != 3:
            raise ValueError("vertices must be distinct")
        if any(sqdist(p, q) != self.sq_side for p, q in combinations(vs, 2)):
            raise ValueError(f"{vs} is not equilateral with squared side {self.sq_side}")
        if list(vs) != sorted(vs):
            raise ValueError("vertices must be in lexicographic order")

    @property
    def side_norm(self) -> int:
        """The Eisenstein norm N with ``sq_side == 2 N``."""
        return self.sq_side // 2

    def translated(self, v: Vec) -> "LatticeTriangle":
        return LatticeTriangle(
            tuple(sorted(LatticePoint(*add(p, v)) for p in self.vertices)), self.sq_side
        )

    def anchored(self, at: int = 0) -> "LatticeTriangle":
        """Translate so that vertex ``at`` sits at the origin."""
        p = self.vertices[at]
        return self.translated((-p[0], -p[1], -p[2]))


@dataclass(frozen=True)
class LatticeTetrahedron:
    vertices: tuple[LatticePoint, LatticePoint, LatticePoint, LatticePoint]
    sq_side: int

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(set(vs)) != 4:
            raise ValueError("vertices must be distinct")
        if any(sqdist(p, q) != self.sq_side for p, q in combinations(vs, 2)):
            raise ValueError(f"{vs} is not a regular tetrahedron")
        if list(vs) != sorted(vs):
            raise ValueError("vertices must be in lexicographic order")

    @property
    def edge_multiple(self) -> int:
        """k with ``sq_side == 2 k^2``."""
        return isqrt(self.sq_side // 2)

    def faces(self) -> list[LatticeTriangle]:
        return [LatticeTriangle(f, self.sq_side) for f in combinations(self.vertices, 3)]


def validate_triangle(v1: Vec, v2: Vec, v3: Vec) -> LatticeTriangle | None:
    l2 = sqdist(v1, v2)
    if l2 == 0 or sqdist(v2, v3) != l2 or sqdist(v1, v3) != l2:
        return None
    vs = tuple(sorted(LatticePoint(*v) for v in (v1, v2, v3)))
    return LatticeTriangle(vs, l2)


def validate_tetrahedron(v1: Vec, v2: Vec, v3: Vec, v4: Vec) -> LatticeTetrahedron | None:
    pts = (v1, v2, v3, v4)
    l2 = sqdist(v1, v2)
    if l2 == 0 or any(sqdist(p, q) != l2 for p, q in combinations(pts, 2)):
        return None
    return LatticeTetrahedron(tuple(sorted(LatticePoint(*v) for v in pts)), l2)


def _sign_normalize(n: tuple[int, int, int]) -> tuple[int, int, int]:
    for v in n:
        if v:
            return n if v > 0 else (-n[0], -n[1], -n[2])
    return n


def normal_of_triangle(t: LatticeTriangle | Sequence[Vec]) -> tuple[int, int, int, int]:
    """Primitive normal ``(a, b, c, d)`` of the plane through an origin-anchored triangle.

    The first nonzero component is made positive.  The unreduced normal
    ``P x Q`` has squared length ``3 (l^2 / 2)^2``; this is checked.
    """
    vs = t.vertices if isinstance(t, LatticeTriangle) else tuple(tuple(v) for v in t)
    if tuple(ORIGIN) not in [tuple(v) for v in vs]:
        raise ValueError("triangle must have a vertex at the origin")
    p, q = [v for v in vs if tuple(v) != tuple(ORIGIN)][:2]
    n = cross(p, q)
    if n == (0, 0, 0):
        raise ValueError("degenerate (collinear) triangle")
    l2 = dot(p, p)
    if l2 % 2 or 4 * dot(n, n) != 3 * l2 * l2:
        raise ValueError("not an equilateral lattice triangle")
    g = gcd(gcd(n[0], n[1]), n[2])
    a, b, c = _sign_normalize((n[0] // g, n[1] // g, n[2] // g))
    # unreduced d is l^2/2 and scales with the normal
    d, rem = divmod(l2 // 2, g)
    if rem or a * a + b * b + c * c != 3 * d * d:
        raise ArithmeticError("reduced normal does not solve a^2+b^2+c^2 = 3d^2")
    return (a, b, c, d)


def third_vertex(
    p: Vec, normal: Sequence[int], sign: Literal["plus", "minus", 1, -1] = "plus"
) -> RationalPoint:
    """The point Q completing O, P to an equilateral triangle in the plane.

    ``Q = P/2 +- (P x n) / (2d)`` for a normal ``(a, b, c, d)`` with
    ``a^2 + b^2 + c^2 = 3 d^2`` and ``P`` in the plane.
    """
    a, b, c, d = normal
    if a * a + b * b + c * c != 3 * d * d or d == 0:
        raise ValueError(f"{tuple(normal)} does not satisfy a^2+b^2+c^2 = 3d^2")
    u, v, w = p
    if u == v == w == 0:
        raise ValueError("p must not be the origin")
    if a * u + b * v + c * w != 0:
        raise ValueError(f"{tuple(p)} is not in the plane {a}x + {b}y + {c}z = 0")
    sgn = {"plus": 1, "minus": -1, 1: 1, -1: -1}[sign]
    two_d = 2 * d
    return RationalPoint(
        Fraction(u, 2) + sgn * Fraction(c * v - b * w, two_d),
        Fraction(v, 2) + sgn * Fraction(a * w - c * u, two_d),
        Fraction(w, 2) + sgn * Fraction(b * u - a * v, two_d),
    )


def classify_side(sq_side: int) -> NormRepresentation | None:
    """Witness ``sq_side == 2 (m^2 - mn + n^2)``; None means no lattice
    equilateral triangle has this side."""
    if sq_side < 1:
        raise ValueError("sq_side must be positive")
    if sq_side % 2 or not is_eisenstein_norm(sq_side // 2):
        return None
    return represent_eisenstein_norm(sq_side // 2)


def is_tetra_side_admissible(sq_side: int) -> bool:
    """True iff ``sq_side == 2 k^2``."""
    if sq_side < 1:
        raise ValueError("sq_side must be positive")
    if sq_side % 2:
        return False
    k = isqrt(sq_side // 2)
    return k * k * 2 == sq_side


def tetra_apexes(t: LatticeTriangle) -> list[LatticePoint]:
    """Integer points completing ``t`` to a regular tetrahedron (0, 1 or 2).

    The apex sits over the centroid at height ``l sqrt(2/3)``.  With the
    unreduced normal ``n = (P - O) x (Q - O)``, ``|n| = sqrt(3) k^2`` when
    ``l^2 = 2 k^2``, so the offset along ``n`` is ``2 n / (3 k)`` and the apex
    is rational; otherwise it is irrational and there is none.
    """
    if not is_tetra_side_admissible(t.sq_side):
        return []
    k = isqrt(t.sq_side // 2)
    o, p, q = t.vertices
    pv, qv = sub(p, o), sub(q, o)
    n = cross(pv, qv)
    out = []
    three_k = 3 * k
    for sgn in (1, -1):
        num = [k * (pv[i] + qv[i]) + sgn * 2 * n[i] for i in range(3)]
        if all(x % three_k == 0 for x in num):
            out.append(LatticePoint(*(o[i] + num[i] // three_k for i in range(3))))
    return sorted(out)
