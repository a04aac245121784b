"""Two-parameter families of lattice equilateral triangles in a fixed plane.

A family is twelve integers arranged as four vectors ``M, N, X, Y``; for
``(m, n)`` it emits the triangle ``O, P = m M - n N, Q = m X - n Y``.  The
hand-derived families for d <= 9 and the general construction from a
representation ``2 (a^2 + b^2) = s^2 + 3 r^2`` share this shape, so emission
and membership are implemented once.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, NamedTuple, Sequence

from .diophantine import PlaneClass
from .geometry import LatticePoint, LatticeTriangle, cross, dot, validate_triangle
from .numtheory import RSRepresentation, eisenstein_norm, solve_rs
from .symmetry import SymmetryElement

COEFF_NAMES = ("m_u", "m_v", "m_w", "n_u", "n_v", "n_w",
               "m_x", "m_y", "m_z", "n_x", "n_y", "n_z")


class FamilyPoint(NamedTuple):
    m: int
    n: int


class PivotError(ValueError):
    """No coordinate of the normal is coprime to d; the general construction
    does not apply to this plane class."""

    def __init__(self, plane: PlaneClass):
        super().__init__(f"no entry of {plane.as_tuple()} is coprime to d={plane.d}")
        self.plane = plane


@dataclass(frozen=True)
class TriangleFamily:
    plane: PlaneClass
    coeffs: tuple[int, ...]
    rs: RSRepresentation | None = None
    normal: tuple[int, int, int] | None = None
    pivot: int | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.coeffs) != 12:
            raise ValueError("a family has exactly 12 coefficients")
        if self.normal is None:
            object.__setattr__(self, "normal", self.plane.normal)

    @property
    def d(self) -> int:
        return self.plane.d

    @property
    def M(self) -> tuple[int, int, int]:
        return self.coeffs[0:3]

    @property
    def N(self) -> tuple[int, int, int]:
        return self.coeffs[3:6]

    @property
    def X(self) -> tuple[int, int, int]:
        return self.coeffs[6:9]

    @property
    def Y(self) -> tuple[int, int, int]:
        return self.coeffs[9:12]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(COEFF_NAMES, self.coeffs))

    def vertices(self, m: int, n: int) -> tuple[LatticePoint, LatticePoint]:
        M, N, X, Y = self.M, self.N, self.X, self.Y
        P = LatticePoint(*(m * M[i] - n * N[i] for i in range(3)))
        Q = LatticePoint(*(m * X[i] - n * Y[i] for i in range(3)))
        return P, Q

    def transformed(self, g: SymmetryElement) -> "TriangleFamily":
        """Image of the whole family under a cube symmetry."""
        vecs = [g.apply(v) for v in (self.M, self.N, self.X, self.Y)]
        return replace(
            self,
            coeffs=tuple(x for v in vecs for x in v),
            normal=g.apply(self.normal),
        )


def family_identities(f: TriangleFamily) -> dict[str, bool]:
    """Exact checks of the norm, cross-term and orthogonality identities."""
    d2 = f.d * f.d
    n = f.normal
    M, N, X, Y = f.M, f.N, f.X, f.Y
    return {
        "|M|^2=2d^2": dot(M, M) == 2 * d2,
        "|N|^2=2d^2": dot(N, N) == 2 * d2,
        "|X|^2=2d^2": dot(X, X) == 2 * d2,
        "|Y|^2=2d^2": dot(Y, Y) == 2 * d2,
        "M.N=d^2": dot(M, N) == d2,
        "X.Y=d^2": dot(X, Y) == d2,
        "n.M=0": dot(n, M) == 0,
        "n.N=0": dot(n, N) == 0,
        "n.X=0": dot(n, X) == 0,
        "n.Y=0": dot(n, Y) == 0,
    }


def _from_formula(plane: PlaneClass, label: str,
                  formula: Callable[[int, int], tuple[tuple[int, ...], tuple[int, ...]]]) -> TriangleFamily:
    # P = mM - nN, so M = P(1, 0) and N = -P(0, 1)
    P1, Q1 = formula(1, 0)
    P0, Q0 = formula(0, 1)
    coeffs = (*P1, *(-v for v in P0), *Q1, *(-v for v in Q0))
    return TriangleFamily(plane, coeffs, label=label)


def family_d1() -> TriangleFamily:
    """All triangles O, (m, -n, n - m), (m - n, -m, n) in the plane x + y + z = 0."""
    return _from_formula(
        PlaneClass(1, 1, 1, 1), "T_{1,1,1}",
        lambda m, n: ((m, -n, n - m), (m - n, -m, n)),
    )


_SMALL = {
    (3, 1): ((1, 1, 5), lambda m, n: ((4*m - 3*n, m + 3*n, -m), (3*m + n, -3*m + 4*n, -n))),
    (5, 1): ((1, 5, 7), lambda m, n: ((7*m - 4*n, 5*n, -m - 3*n), (3*m - 7*n, 5*m, -4*m + n))),
    (7, 1): ((1, 5, 11), lambda m, n: ((8*m - 9*n, 5*m + 4*n, -3*m - n), (-m - 8*n, 9*m - 5*n, -4*m + 3*n))),
    (9, 1): ((1, 11, 11), lambda m, n: ((11*m - 11*n, 4*m + 5*n, -5*m - 4*n), (-11*n, 9*m - 4*n, -9*m + 5*n))),
    (9, 2): ((5, 7, 13), lambda m, n: ((7*m + 5*n, 8*m - 11*n, -7*m + 4*n), (12*m - 7*n, -3*m - 8*n, -3*m + 7*n))),
}


def family_small(d: int, which: int = 1) -> TriangleFamily:
    """Hand-derived families for d in {3, 5, 7, 9}; ``which`` picks between
    the two classes at d = 9 (1 -> (1, 11, 11), 2 -> (5, 7, 13))."""
    try:
        (a, b, c), formula = _SMALL[(d, which)]
    except KeyError:
        raise ValueError(f"no hand-derived family for d={d}, which={which}") from None
    return _from_formula(PlaneClass(a, b, c, d), f"T_{{{a},{b},{c}}}", formula)


def _general_coeffs(a: int, b: int, c: int, d: int, rs: RSRepresentation) -> tuple[int, ...]:
    q = a * a + b * b
    r, s = rs.r, rs.s

    def exact(num: int, den: int) -> int:
        val, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"coefficient {num}/{den} is not an integer")
        return val

    m_x = exact(-(d * b * (3 * r + s) + a * c * (r - s)), 2 * q)
    n_x = exact(-(r * a * c + d * b * s), q)
    m_y = exact(d * a * (3 * r + s) - b * c * (r - s), 2 * q)
    n_y = exact(d * a * s - b * c * r, q)
    m_z = exact(r - s, 2)
    n_z = r
    m_u = exact(-(r * a * c + d * b * s), q)
    n_u = exact(-(d * b * (s - 3 * r) + a * c * (r + s)), 2 * q)
    m_v = exact(d * a * s - r * b * c, q)
    n_v = exact(d * a * (s - 3 * r) - b * c * (r + s), 2 * q)
    m_w = r
    n_w = exact(r + s, 2)
    return (m_u, m_v, m_w, n_u, n_v, n_w, m_x, m_y, m_z, n_x, n_y, n_z)


def build_family(p: PlaneClass) -> TriangleFamily:
    """General two-parameter family for a primitive plane class.

    The construction needs the entry in the third slot coprime to d; the
    entries are tried in the order c, b, a and the chosen one is moved to the
    third slot, the family built there, and the coordinates permuted back.
    """
    n = p.normal
    for pivot in (2, 1, 0):
        if gcd(n[pivot], p.d) == 1:
            break
    else:
        raise PivotError(p)
    order = [i for i in range(3) if i != pivot] + [pivot]
    a, b, c = (n[i] for i in order)
    rs = solve_rs(a * a + b * b, a, b, c, p.d)
    local = _general_coeffs(a, b, c, p.d, rs)
    coeffs = []
    for k in range(4):
        vec = [0, 0, 0]
        for j, i in enumerate(order):
            vec[i] = local[3 * k + j]
        coeffs.extend(vec)
    fam = TriangleFamily(p, tuple(coeffs), rs=rs, pivot=pivot,
                         label=f"T_{{{p.a},{p.b},{p.c}}}")
    if not all(family_identities(fam).values()):
        raise ArithmeticError(f"family for {p.as_tuple()} violates its identities")
    return fam


def emit_triangle(f: TriangleFamily, pt: FamilyPoint | tuple[int, int]) -> LatticeTriangle:
    m, n = pt
    if m == 0 and n == 0:
        raise ValueError("(m, n) = (0, 0) gives a degenerate triangle")
    P, Q = f.vertices(m, n)
    t = validate_triangle((0, 0, 0), P, Q)
    if t is None or t.sq_side != 2 * f.d * f.d * eisenstein_norm(m, n):
        raise ArithmeticError(f"{f.label} emitted a bad triangle at ({m}, {n})")
    return t


def param_bound(d: int, box: int) -> int:
    """|m|, |n| bound sufficient to reach every family triangle inside [-box, box]^3."""
    return -(-3 * box // d) + 1


def iter_family(f: TriangleFamily, bound: int) -> Iterator[tuple[FamilyPoint, LatticeTriangle]]:
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            if m or n:
                yield FamilyPoint(m, n), emit_triangle(f, (m, n))


def triangles_in_box(f: TriangleFamily, box: int) -> set[LatticeTriangle]:
    out = set()
    for _, t in iter_family(f, param_bound(f.d, box)):
        if all(abs(c) <= box for v in t.vertices for c in v):
            out.add(t)
    return out


def _solve(f: TriangleFamily, X: Sequence[int]) -> tuple[Fraction, Fraction]:
    # X = mM - nN; crossing with N and M isolates each unknown
    K = cross(f.M, f.N)
    kk = dot(K, K)
    m = Fraction(dot(cross(X, f.N), K), kk)
    n = Fraction(-dot(cross(f.M, X), K), kk)
    return m, n


def membership(f: TriangleFamily, t: LatticeTriangle) -> FamilyPoint | None:
    """Parameters ``(m, n)`` at which ``f`` emits ``t``, or None.

    ``t`` must have a vertex at the origin and lie in the family's plane.
    """
    vs = [tuple(v) for v in t.vertices]
    if (0, 0, 0) not in vs:
        raise ValueError("triangle must have a vertex at the origin")
    A, B = [v for v in vs if v != (0, 0, 0)]
    if dot(f.normal, A) or dot(f.normal, B):
        raise ValueError(f"triangle {t.vertices} is not in the plane with normal {f.normal}")
    for first, second in ((A, B), (B, A)):
        m, n = _solve(f, first)
        if m.denominator != 1 or n.denominator != 1:
            continue
        P, Q = f.vertices(int(m), int(n))
        if tuple(P) == first and tuple(Q) == second:
            return FamilyPoint(int(m), int(n))
    return None
