"""Exact integer arithmetic on the quadratic forms behind lattice triangles.

Two conventions for the Eisenstein norm appear in the literature:
``m^2 + mn + n^2`` and ``m^2 - mn + n^2``.  They represent the same set of
integers (substitute ``n -> -n``).  Everything in this package uses
``m^2 - mn + n^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@dataclass(frozen=True)
class NormRepresentation:
    """A witness ``m^2 - mn + n^2 == value``."""

    m: int
    n: int
    value: int

    def __post_init__(self) -> None:
        if self.m * self.m - self.m * self.n + self.n * self.n != self.value:
            raise ValueError(f"({self.m}, {self.n}) does not represent {self.value}")


@dataclass(frozen=True)
class RSRepresentation:
    """A witness ``s^2 + 3 r^2 == 2 q``; r and s share parity."""

    r: int
    s: int
    q: int

    def __post_init__(self) -> None:
        if self.s * self.s + 3 * self.r * self.r != 2 * self.q:
            raise ValueError(f"s^2 + 3r^2 != 2q for {self!r}")
        if (self.r - self.s) % 2:
            raise ValueError("r and s must have the same parity")


def eisenstein_norm(m: int, n: int) -> int:
    return m * m - m * n + n * n


def factorize(t: int) -> Factorization:
    """Prime factorization by trial division."""
    if t < 1:
        raise ValueError(f"factorize needs a positive integer, got {t}")
    out: list[tuple[int, int]] = []
    rest = t
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return Factorization(t, tuple(out))


def is_eisenstein_norm(t: int) -> bool:
    """True iff ``t = m^2 - mn + n^2`` is solvable in integers.

    Decided from the factorization: 2 and every prime ``p = 5 (mod 6)`` must
    occur to an even power.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return True
    for p, e in factorize(t).factors:
        if (p == 2 or p % 6 == 5) and e % 2:
            return False
    return True


def _norm_search_bound(t: int) -> int:
    # ceil(2*sqrt(t/3)) == ceil(sqrt(4t/3)); on 0 <= n <= m the form is >= 3m^2/4
    k = isqrt(4 * t // 3)
    while 3 * k * k < 4 * t:
        k += 1
    return k


def represent_eisenstein_norm(t: int) -> NormRepresentation | None:
    """Smallest witness ``(m, n)`` with ``0 <= n <= m``, or None."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    bound = _norm_search_bound(t)
    for m in range(bound + 1):
        for n in range(m + 1):
            v = m * m - m * n + n * n
            if v == t:
                return NormRepresentation(m, n, t)
            if v > t and n * 2 >= m:
                # the form increases in n once n >= m/2
                break
    return None


def is_sum_of_two_squares(t: int) -> bool:
    """Bounded search for ``t = x^2 + y^2``."""
    if t < 0:
        return False
    for x in range(isqrt(t // 2) + 1):
        y2 = t - x * x
        y = isqrt(y2)
        if y * y == y2:
            return True
    return False


def represent_3x2_minus_y2(t: int) -> tuple[int, int] | None:
    """A witness ``t = 3x^2 - y^2`` with ``x >= 0``, for ``t >= 1``.

    For positive t some solution has ``x <= sqrt(t/2)`` (classical bound on
    fundamental solutions of ``y^2 - 3x^2 = -t`` with unit ``2 + sqrt(3)``),
    so the search below is complete.
    """
    if t < 1:
        raise ValueError("t must be positive")
    for x in range(isqrt(t // 2) + 2):
        y2 = 3 * x * x - t
        if y2 < 0:
            continue
        y = isqrt(y2)
        if y * y == y2:
            return x, y
    return None


def lemma_thebeauty_check(t: int) -> tuple[bool, bool, bool]:
    """Evaluate (t = 3x^2 - y^2 solvable, t = sum of two squares, t = 2*norm).

    The three predicates are computed independently of each other; the
    equivalence of the last two whenever the first holds is what callers test.
    """
    if t < 1:
        raise ValueError("t must be positive")
    is_3x2 = represent_3x2_minus_y2(t) is not None
    is_two_sq = is_sum_of_two_squares(t)
    is_twice = t % 2 == 0 and is_eisenstein_norm(t // 2)
    return is_3x2, is_two_sq, is_twice


def rs_representations(q: int) -> list[tuple[int, int]]:
    """All ``(r, s)`` with ``s^2 + 3 r^2 == 2q``."""
    two_q = 2 * q
    out = []
    rmax = isqrt(two_q // 3)
    for r in range(-rmax, rmax + 1):
        s2 = two_q - 3 * r * r
        s = isqrt(s2)
        if s * s == s2:
            out.append((r, s))
            if s:
                out.append((r, -s))
    return out


def solve_rs(q: int, a: int, b: int, c: int, d: int) -> RSRepresentation:
    """Pick ``2q = s^2 + 3r^2`` with ``(ac) r + (db) s`` and ``(ac) s - 3 (db) r``
    both divisible by ``2q``.

    Exhaustive over all representations; ties broken by ``(|r|, |s|)`` then
    preferring nonnegative signs.
    """
    if q < 1:
        raise ValueError("q must be positive")
    if a * a + b * b + c * c != 3 * d * d:
        raise ValueError(f"({a}, {b}, {c}, {d}) does not satisfy a^2+b^2+c^2 = 3d^2")
    two_q = 2 * q
    A, B = a * c, d * b
    good = [
        (r, s)
        for r, s in rs_representations(q)
        if (A * r + B * s) % two_q == 0 and (A * s - 3 * B * r) % two_q == 0
    ]
    if not good:
        raise ArithmeticError(
            f"no representation of 2*{q} satisfies the congruences for "
            f"({a}, {b}, {c}, {d}); one should always exist when c is coprime to d"
        )
    r, s = min(good, key=lambda rs: (abs(rs[0]), abs(rs[1]), rs[0] < 0, rs[1] < 0))
    return RSRepresentation(r, s, q)
