"""Solutions of a^2 + b^2 + c^2 = 3 d^2.

A primitive solution has gcd(a, b, c) = 1.  Then d is odd and so are a, b, c;
the normalized representative strips signs and sorts ``0 < a <= b <= c``.
Every lattice equilateral triangle lies in a plane whose normal is one of the
signed permutations of such a representative.

The three-parameter generator uses the closed form

    d = x1^2 + x2^2 + x3^2,   s = x1 + x2 + x3,
    a = d - 2 x1 s,  b = d - 2 x2 s,  c = d - 2 x3 s.

(The expanded polynomial version of this formula that circulates in print has
a misprinted ``b`` line and an asymmetric ``c`` line; the closed form above is
the one that actually solves the equation.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple


@dataclass(frozen=True, order=True)
class PlaneClass:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * a + b * b + c * c != 3 * d * d:
            raise ValueError(f"{self.as_tuple()} does not satisfy a^2+b^2+c^2 = 3d^2")
        if not 0 < a <= b <= c or d <= 0:
            raise ValueError(f"{self.as_tuple()} is not normalized (need 0 < a <= b <= c, d > 0)")
        if gcd(gcd(a, b), c) != 1:
            raise ValueError(f"{self.as_tuple()} is not primitive")
        if not (a & b & c & d & 1):
            raise ValueError(f"{self.as_tuple()} has an even entry")

    @property
    def normal(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def from_normal(cls, a: int, b: int, c: int) -> "PlaneClass":
        """Normalize any signed, permuted, non-reduced solution."""
        g = gcd(gcd(a, b), c)
        if g == 0:
            raise ValueError("zero normal")
        x, y, z = sorted(abs(v) // g for v in (a, b, c))
        d2, rem = divmod(x * x + y * y + z * z, 3)
        d = isqrt(d2)
        if rem or d * d != d2:
            raise ValueError(f"({a}, {b}, {c}) is not a solution")
        return cls(x, y, z, d)


class ParamTriple(NamedTuple):
    x1: int
    x2: int
    x3: int


class InverseParam(NamedTuple):
    """``x_i = coeffs[i] * sqrt(k)`` reproduces the solution via the closed form."""

    k: int
    coeffs: tuple[Fraction, Fraction, Fraction]


def _check_odd_d(d: int) -> None:
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be an odd positive integer, got {d}")


@lru_cache(maxsize=None)
def _primitive(d: int) -> tuple[PlaneClass, ...]:
    T = 3 * d * d
    out = []
    # all entries are odd; a <= b <= c means 3a^2 <= T and 2b^2 <= T - a^2
    for a in range(1, d + 1, 2):
        if 3 * a * a > T:
            break
        for b in range(a, isqrt((T - a * a) // 2) + 1, 2):
            rest = T - a * a - b * b
            c = isqrt(rest)
            if c * c == rest and c >= b and gcd(gcd(a, b), c) == 1:
                out.append(PlaneClass(a, b, c, d))
    return tuple(out)


def primitive_solutions(d: int) -> list[PlaneClass]:
    """Every normalized primitive solution for this d, sorted."""
    _check_odd_d(d)
    return list(_primitive(d))


def count_primitive(d: int) -> int:
    return len(primitive_solutions(d))


def count_ordered(d: int) -> int:
    """Number of ordered positive triples (a, b, c); permutations counted separately."""
    total = 0
    for p in primitive_solutions(d):
        total += len({(p.a, p.b, p.c), (p.a, p.c, p.b), (p.b, p.a, p.c),
                      (p.b, p.c, p.a), (p.c, p.a, p.b), (p.c, p.b, p.a)})
    return total


def param_solution(t: ParamTriple | tuple[int, int, int]) -> tuple[int, int, int, int]:
    x1, x2, x3 = t
    d = x1 * x1 + x2 * x2 + x3 * x3
    s = x1 + x2 + x3
    return (d - 2 * x1 * s, d - 2 * x2 * s, d - 2 * x3 * s, d)


def invert_param(p: PlaneClass | tuple[int, int, int, int]) -> InverseParam:
    """Recover the parameters of a solution.

    With ``k = (3d - a - b - c) / 2`` the parameters are
    ``x_i = (d - a_i) / (2k) * sqrt(k)``; k = 0 only when a = b = c = d.
    Accepts signed tuples as well as normalized classes, as long as all four
    entries are odd.
    """
    a, b, c, d = p.as_tuple() if isinstance(p, PlaneClass) else p
    if a * a + b * b + c * c != 3 * d * d or d == 0:
        raise ValueError(f"({a}, {b}, {c}, {d}) is not a nonzero solution")
    twice_k = 3 * d - a - b - c
    if twice_k % 2:
        raise ValueError("3d - a - b - c must be even (entries must be odd)")
    k = twice_k // 2
    if k < 0:
        raise ValueError("3d < a + b + c; flip the sign of d")
    if k == 0:
        return InverseParam(0, (Fraction(0), Fraction(0), Fraction(0)))
    return InverseParam(k, tuple(Fraction(d - v, 2 * k) for v in (a, b, c)))


def param_from_inverse(inv: InverseParam) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Evaluate the closed form at ``x_i = q_i sqrt(k)`` without leaving Q.

    Every term of the closed form is quadratic in the x_i, so ``sqrt(k)``
    only ever appears squared.
    """
    k = inv.k
    q1, q2, q3 = inv.coeffs
    d = k * (q1 * q1 + q2 * q2 + q3 * q3)
    s = q1 + q2 + q3
    return (d - 2 * k * q1 * s, d - 2 * k * q2 * s, d - 2 * k * q3 * s, d)


def pell_family(seed_d: int, seed_c: int, count: int) -> list[tuple[int, int]]:
    """Iterate ``(d, c) -> (2d + c, 3d + 2c)``, which preserves ``3d^2 - c^2``."""
    if count < 1:
        raise ValueError("count must be positive")
    out = []
    d, c = seed_d, seed_c
    for _ in range(count):
        d, c = 2 * d + c, 3 * d + 2 * c
        out.append((d, c))
    return out
