"""The 48 signed permutations of coordinates (symmetries of the cube fixing O)."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, NamedTuple, Sequence


class SymmetryElement(NamedTuple):
    """``apply(p)[i] == signs[i] * p[perm[i]]``."""

    perm: tuple[int, int, int]
    signs: tuple[int, int, int]

    def apply(self, p: Sequence[int]) -> tuple[int, int, int]:
        return tuple(s * p[i] for s, i in zip(self.signs, self.perm))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        rows = []
        for s, i in zip(self.signs, self.perm):
            row = [0, 0, 0]
            row[i] = s
            rows.append(tuple(row))
        return tuple(rows)

    def determinant(self) -> int:
        # sign of the permutation times the product of signs
        p = self.perm
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        s = self.signs[0] * self.signs[1] * self.signs[2]
        return s * (-1 if inversions % 2 else 1)


@lru_cache(maxsize=None)
def cube_group() -> tuple[SymmetryElement, ...]:
    return tuple(
        SymmetryElement(perm, signs)
        for perm in permutations(range(3))
        for signs in product((1, -1), repeat=3)
    )


def canonical_point_set(points: Iterable[Sequence[int]]) -> tuple[tuple[int, int, int], ...]:
    """Lexicographically least sorted image of a point set under the group."""
    pts = [tuple(p) for p in points]
    return min(tuple(sorted(g.apply(p) for p in pts)) for g in cube_group())


def plane_key(normal: Sequence[int]) -> tuple[int, int, int]:
    """Normal identified with its negation: first nonzero entry positive."""
    for v in normal:
        if v:
            return tuple(normal) if v > 0 else tuple(-x for x in normal)
    return tuple(normal)


def orbit_expand(normal: Sequence[int]) -> list[tuple[int, int, int]]:
    """Distinct planes through O reachable from ``normal`` by signed permutations.

    Accepts a ``PlaneClass`` (uses its ``normal``) or a bare triple.
    """
    n = getattr(normal, "normal", normal)
    return sorted({plane_key(g.apply(n)) for g in cube_group()})


def plane_images(normal: Sequence[int]) -> list[tuple[tuple[int, int, int], SymmetryElement]]:
    """One group element per distinct image plane, with that plane's key."""
    n = getattr(normal, "normal", normal)
    seen: dict[tuple[int, int, int], SymmetryElement] = {}
    for g in cube_group():
        seen.setdefault(plane_key(g.apply(n)), g)
    return sorted(seen.items())
