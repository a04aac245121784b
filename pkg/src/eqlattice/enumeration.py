"""Exact counts of equilateral triangles and regular tetrahedra in {0..n}^3.

``count_et`` has two independent methods:

pair-scan
    For every unordered pair of grid points, find the integer points that
    complete it to an equilateral triangle and count those inside the grid.
    The completions of a pair depend only on its difference vector ``v``, so
    they are computed once per ``v``: every lattice equilateral triangle lies
    in a plane whose primitive normal ``(a, b, c, d)`` has ``d`` dividing
    ``|v|^2 / 2``, and for each such normal orthogonal to ``v`` the two
    candidates come from the rational third-vertex formula.  Each triangle is
    hit once per side, so the incidence total is divisible by 3.

family-cover
    For every plane class and every image plane under the cube group, emit
    the origin-anchored triangles of the two-parameter family that fit in
    ``[-n, n]^3`` and count the translates that fit in the grid.  Each
    triangle is counted once per vertex.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal

import numpy as np

from .diophantine import PlaneClass, primitive_solutions
from .families import FamilyPoint, build_family, emit_triangle
from .geometry import (
    LatticePoint,
    LatticeTetrahedron,
    LatticeTriangle,
    dot,
    is_tetra_side_admissible,
    tetra_apexes,
    third_vertex,
    validate_tetrahedron,
    validate_triangle,
)
from .numtheory import eisenstein_norm
from .symmetry import canonical_point_set, orbit_expand, plane_images

__all__ = [
    "GridSpec", "CountResult", "ProbeReport",
    "count_et", "count_et_bruteforce", "count_rt", "count_rt_bruteforce",
    "iter_triangles", "brute_force_triangles", "brute_force_tetrahedra",
    "third_vertex_offsets", "origin_tetrahedra", "origin_tetra_orbits",
    "conjecture_probe", "orbit_expand", "same_orbit", "brute_force_plane_triangles",
]

Method = Literal["pair-scan", "family-cover", "brute-force"]
BRUTE_FORCE_CAP = 4


@dataclass(frozen=True)
class GridSpec:
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("grid size must be nonnegative")

    @property
    def side(self) -> int:
        return self.n + 1

    def points(self) -> np.ndarray:
        """All grid points, row ``i`` being the i-th point in lexicographic order."""
        r = np.arange(self.side, dtype=np.int64)
        g = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1)
        return g.reshape(-1, 3)

    def index(self, pts: np.ndarray) -> np.ndarray:
        s = self.side
        return (pts[..., 0] * s + pts[..., 1]) * s + pts[..., 2]


def _grid(g: GridSpec | int) -> GridSpec:
    return g if isinstance(g, GridSpec) else GridSpec(g)


@dataclass(frozen=True)
class CountResult:
    n: int
    count: int
    method: str
    elapsed: float
    kind: str = "et"


# ---------------------------------------------------------------- pair-scan


@lru_cache(maxsize=None)
def _normals_with_d(d: int) -> np.ndarray:
    """Every plane through O with primitive normal of this d (one sign each)."""
    keys = set()
    for p in primitive_solutions(d):
        keys.update(orbit_expand(p))
    return np.array(sorted(keys), dtype=np.int64).reshape(-1, 3)


def _odd_divisors(D: int) -> list[int]:
    while D % 2 == 0:
        D //= 2
    small, large = [], []
    k = 1
    while k * k <= D:
        if D % k == 0:
            small.append(k)
            if k * k != D:
                large.append(D // k)
        k += 2
    return small + large[::-1]


@lru_cache(maxsize=None)
def third_vertex_offsets(v: tuple[int, int, int]) -> tuple[tuple[int, int, int], ...]:
    """All integer ``w`` with ``{0, v, w}`` an equilateral triangle, sorted."""
    l2 = dot(v, v)
    if l2 == 0 or l2 % 2:
        return ()
    out = set()
    vv = np.asarray(v, dtype=np.int64)
    for d in _odd_divisors(l2 // 2):
        normals = _normals_with_d(d)
        for a, b, c in normals[normals @ vv == 0].tolist():
            for sign in ("plus", "minus"):
                q = third_vertex(v, (a, b, c, d), sign)
                if q.is_integral():
                    out.add(tuple(int(x) for x in q))
    return tuple(sorted(out))


@lru_cache(maxsize=8)
def _candidate_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Offsets for every difference vector in [-n, n]^3, padded to equal length."""
    span = 2 * n + 1
    r = range(-n, n + 1)
    rows = [third_vertex_offsets((x, y, z)) for x in r for y in r for z in r]
    width = max([len(o) for o in rows] + [1])
    table = np.zeros((span ** 3, width, 3), dtype=np.int64)
    valid = np.zeros((span ** 3, width), dtype=bool)
    for i, offs in enumerate(rows):
        if offs:
            table[i, : len(offs)] = offs
            valid[i, : len(offs)] = True
    return table, valid


def _diff_index(diffs: np.ndarray, n: int) -> np.ndarray:
    span = 2 * n + 1
    s = diffs + n
    return (s[:, 0] * span + s[:, 1]) * span + s[:, 2]


def _scan_partition(n: int, first: range) -> int:
    pts = GridSpec(n).points()
    table, valid = _candidate_table(n)
    total = 0
    for i in first:
        p = pts[i]
        idx = _diff_index(pts[i + 1:] - p, n)
        cand = table[idx] + p
        inside = valid[idx] & ((cand >= 0) & (cand <= n)).all(axis=-1)
        total += int(inside.sum())
    return total


def _partitions(size: int, parts: int) -> list[range]:
    # contiguous blocks of first-point indices, fixed by (size, parts)
    step = -(-size // parts) if size else 1
    return [range(s, min(s + step, size)) for s in range(0, size, step)]


def _pair_scan(n: int, threads: int) -> int:
    if n == 0:
        return 0
    size = (n + 1) ** 3
    _candidate_table(n)
    # more blocks than threads keeps the load even; summation order is fixed
    blocks = _partitions(size, max(1, threads) * 4)
    if threads <= 1:
        partial = [_scan_partition(n, b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partial = list(pool.map(lambda b: _scan_partition(n, b), blocks))
    incidences = sum(partial)
    if incidences % 3:
        raise ArithmeticError(f"pair-scan incidence total {incidences} is not divisible by 3")
    return incidences // 3


def iter_triangles(g: GridSpec | int) -> Iterator[LatticeTriangle]:
    """Every equilateral triangle in the grid, each exactly once."""
    grid = _grid(g)
    n = grid.n
    if n == 0:
        return
    pts = grid.points()
    table, valid = _candidate_table(n)
    for i in range(len(pts)):
        p = pts[i]
        idx = _diff_index(pts[i + 1:] - p, n)
        cand = table[idx] + p
        inside = valid[idx] & ((cand >= 0) & (cand <= n)).all(axis=-1)
        j_idx = np.arange(i + 1, len(pts))[:, None]
        keep = inside & (grid.index(np.clip(cand, 0, n)) > j_idx)
        for jj, kk in zip(*np.nonzero(keep)):
            t = validate_triangle(p.tolist(), pts[i + 1 + jj].tolist(), cand[jj, kk].tolist())
            if t is None:
                raise ArithmeticError("pair-scan produced a non-equilateral triple")
            yield t


# ------------------------------------------------------------ family-cover


def _fit_count(n: int, P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    lo = np.minimum(np.minimum(P, Q), 0)
    hi = np.maximum(np.maximum(P, Q), 0)
    room = np.clip(n + 1 - (hi - lo), 0, None)
    return room.prod(axis=-1)


def _family_cover(n: int) -> int:
    if n == 0:
        return 0
    total = 0
    # primitive d divides l^2/2 <= 3n^2/2
    for d in range(1, 3 * n * n // 2 + 1, 2):
        bound = -(-3 * n // d) + 1
        r = np.arange(-bound, bound + 1, dtype=np.int64)
        mm, nn = (a.ravel() for a in np.meshgrid(r, r, indexing="ij"))
        nz = (mm != 0) | (nn != 0)
        mm, nn = mm[nz, None], nn[nz, None]
        for p in primitive_solutions(d):
            fam = build_family(p)
            for _, g in plane_images(p):
                f = fam.transformed(g)
                P = mm * np.array(f.M) - nn * np.array(f.N)
                Q = mm * np.array(f.X) - nn * np.array(f.Y)
                inbox = (np.abs(P) <= n).all(axis=1) & (np.abs(Q) <= n).all(axis=1)
                total += int(_fit_count(n, P[inbox], Q[inbox]).sum())
    if total % 3:
        raise ArithmeticError(f"family-cover total {total} is not divisible by 3")
    return total // 3


def count_et(g: GridSpec | int, method: Method = "pair-scan", threads: int = 1) -> CountResult:
    """Number of equilateral triangles with all vertices in {0..n}^3."""
    grid = _grid(g)
    t0 = time.perf_counter()
    if method == "pair-scan":
        count = _pair_scan(grid.n, threads)
    elif method == "family-cover":
        count = _family_cover(grid.n)
    elif method == "brute-force":
        return count_et_bruteforce(grid)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountResult(grid.n, count, method, time.perf_counter() - t0)


# ------------------------------------------------------------- brute force


def _sqdist_matrix(pts: np.ndarray) -> np.ndarray:
    diff = pts[:, None, :] - pts[None, :, :]
    return (diff * diff).sum(axis=-1)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"brute force is capped at n={cap}, got n={n}")


def brute_force_triangles(g: GridSpec | int, cap: int = BRUTE_FORCE_CAP) -> list[tuple[int, int, int]]:
    """Index triples ``i < j < k`` of equilateral triangles, by testing every triple."""
    grid = _grid(g)
    _check_cap(grid.n, cap)
    pts = grid.points()
    D = _sqdist_matrix(pts)
    N = len(pts)
    upper = np.triu(np.ones((N, N), dtype=bool), k=1)
    out = []
    for i in range(N):
        row = D[i]
        # (j, k) with i < j < k and all three distances equal
        ok = (row[:, None] == row[None, :]) & (D == row[:, None]) & upper
        ok[: i + 1, :] = False
        for j, k in zip(*np.nonzero(ok)):
            out.append((i, int(j), int(k)))
    return out


def count_et_bruteforce(g: GridSpec | int, cap: int = BRUTE_FORCE_CAP) -> CountResult:
    grid = _grid(g)
    t0 = time.perf_counter()
    count = len(brute_force_triangles(grid, cap))
    return CountResult(grid.n, count, "brute-force", time.perf_counter() - t0)


def brute_force_tetrahedra(g: GridSpec | int, cap: int = BRUTE_FORCE_CAP) -> list[tuple[int, int, int, int]]:
    """Index quadruples of regular tetrahedra: every equilateral triple extended
    by every later grid point."""
    grid = _grid(g)
    _check_cap(grid.n, cap)
    pts = grid.points()
    D = _sqdist_matrix(pts)
    out = []
    for i, j, k in brute_force_triangles(grid, cap):
        l2 = D[i, j]
        ok = (D[i] == l2) & (D[j] == l2) & (D[k] == l2)
        ok[: k + 1] = False
        out.extend((i, j, k, int(m)) for m in np.nonzero(ok)[0])
    return out


def count_rt_bruteforce(g: GridSpec | int, cap: int = BRUTE_FORCE_CAP) -> CountResult:
    grid = _grid(g)
    t0 = time.perf_counter()
    count = len(brute_force_tetrahedra(grid, cap))
    return CountResult(grid.n, count, "brute-force", time.perf_counter() - t0, kind="rt")


# ------------------------------------------------------------- tetrahedra


def count_rt(g: GridSpec | int, method: Method = "pair-scan") -> CountResult:
    """Number of regular tetrahedra with all vertices in {0..n}^3."""
    grid = _grid(g)
    if method == "brute-force":
        return count_rt_bruteforce(grid)
    if method != "pair-scan":
        raise ValueError(f"count_rt supports pair-scan and brute-force, not {method!r}")
    t0 = time.perf_counter()
    n = grid.n
    hits = 0
    for t in iter_triangles(grid):
        if not is_tetra_side_admissible(t.sq_side):
            continue
        for r in tetra_apexes(t):
            if all(0 <= c <= n for c in r):
                hits += 1
    if hits % 4:
        raise ArithmeticError(f"apex incidence total {hits} is not divisible by 4")
    return CountResult(n, hits // 4, method, time.perf_counter() - t0, kind="rt")


def origin_tetrahedra(k: int) -> list[LatticeTetrahedron]:
    """Every regular tetrahedron with a vertex at O and squared side ``2 k^2``."""
    if k < 1:
        raise ValueError("k must be positive")
    l2 = 2 * k * k
    # |coord| <= sqrt(2) k
    b = int(np.floor(np.sqrt(l2))) + 1
    r = np.arange(-b, b + 1)
    cube = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)
    sphere = cube[(cube * cube).sum(axis=1) == l2]
    gram = sphere @ sphere.T
    found = set()
    for i, j in zip(*np.nonzero(np.triu(gram == k * k, k=1))):
        t = validate_triangle((0, 0, 0), sphere[i].tolist(), sphere[j].tolist())
        for apex in tetra_apexes(t):
            found.add(validate_tetrahedron(*t.vertices, apex))
    return sorted(found, key=lambda t: t.vertices)


def _reanchored_canonical(vertices) -> tuple[tuple[int, int, int], ...]:
    return min(
        canonical_point_set([tuple(v[i] - a[i] for i in range(3)) for v in vertices])
        for a in vertices
    )


def origin_tetra_orbits(
    k: int, equivalence: Literal["point", "lattice"] = "point"
) -> list[LatticeTetrahedron]:
    """Representatives of origin-anchored tetrahedra of side ``k sqrt(2)``.

    ``"point"`` groups them under the 48 cube symmetries fixing O.
    ``"lattice"`` also identifies tetrahedra that differ by which vertex sits
    at O, i.e. classes under all isometries of Z^3.  Each representative is
    the least image, so it contains O.
    """
    canon = canonical_point_set if equivalence == "point" else _reanchored_canonical
    if equivalence not in ("point", "lattice"):
        raise ValueError(f"unknown equivalence {equivalence!r}")
    reps = {canon(t.vertices) for t in origin_tetrahedra(k)}
    return [LatticeTetrahedron(tuple(LatticePoint(*p) for p in rep), 2 * k * k)
            for rep in sorted(reps)]


def same_orbit(t1, t2, equivalence: Literal["point", "lattice"] = "point") -> bool:
    canon = canonical_point_set if equivalence == "point" else _reanchored_canonical
    v1 = t1.vertices if hasattr(t1, "vertices") else t1
    v2 = t2.vertices if hasattr(t2, "vertices") else t2
    return canon(v1) == canon(v2)


def brute_force_plane_triangles(normal, box: int) -> set[LatticeTriangle]:
    """Origin-anchored equilateral triangles with both other vertices in the
    plane ``normal . x = 0`` and in ``[-box, box]^3``, by testing every pair."""
    r = np.arange(-box, box + 1, dtype=np.int64)
    cube = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)
    pts = cube[cube @ np.asarray(normal, dtype=np.int64) == 0]
    norms = (pts * pts).sum(axis=1)
    out = set()
    for l2 in np.unique(norms):
        if l2 == 0:
            continue
        shell = pts[norms == l2]
        gram = shell @ shell.T
        for i, j in zip(*np.nonzero(np.triu(2 * gram == l2, k=1))):
            t = validate_triangle((0, 0, 0), shell[i].tolist(), shell[j].tolist())
            if t is None:
                raise ArithmeticError("pair with equal norms and 60 degree angle is not equilateral")
            out.add(t)
    return out


# ------------------------------------------------------------------ probe


@dataclass
class ProbeReport:
    """Outcome of testing square-norm family triangles for an integer apex."""

    bound: int
    mn_bound: int
    checked: int = 0
    with_apex: int = 0
    counterexamples: list[tuple[PlaneClass, FamilyPoint]] = field(default_factory=list)
    skipped_planes: list[PlaneClass] = field(default_factory=list)


def _is_square(x: int) -> bool:
    r = int(np.sqrt(x))
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r * r == x


def conjecture_probe(bound: int, mn_bound: int = 8) -> ProbeReport:
    """Check whether family triangles with ``m^2 - mn + n^2`` a perfect square
    are faces of lattice tetrahedra, for every plane class with d <= bound.

    Counterexamples are recorded, not raised.
    """
    from .families import PivotError

    if bound < 1:
        raise ValueError("bound must be positive")
    report = ProbeReport(bound, mn_bound)
    for d in range(1, bound + 1, 2):
        for p in primitive_solutions(d):
            try:
                fam = build_family(p)
            except PivotError:
                report.skipped_planes.append(p)
                continue
            for m in range(-mn_bound, mn_bound + 1):
                for n in range(-mn_bound, mn_bound + 1):
                    N = eisenstein_norm(m, n)
                    if N == 0 or not _is_square(N):
                        continue
                    report.checked += 1
                    if tetra_apexes(emit_triangle(fam, (m, n))):
                        report.with_apex += 1
                    else:
                        report.counterexamples.append((p, FamilyPoint(m, n)))
    return report
