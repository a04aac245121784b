import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from eqlattice.diophantine import primitive_solutions
from eqlattice.enumeration import brute_force_tetrahedra, brute_force_triangles, GridSpec
from eqlattice.geometry import (
    LatticePoint,
    LatticeTetrahedron,
    LatticeTriangle,
    RationalPoint,
    classify_side,
    cross,
    dot,
    is_tetra_side_admissible,
    normal_of_triangle,
    tetra_apexes,
    third_vertex,
    validate_tetrahedron,
    validate_triangle,
)
from eqlattice.numtheory import is_eisenstein_norm

O = (0, 0, 0)
C = (31, 19, 76)
D = (44, 71, 11)


def tri(*vs):
    t = validate_triangle(*vs)
    assert t is not None
    return t


def test_validate_triangle_examples():
    assert tri(O, (1, 1, 0), (1, 0, 1)).sq_side == 2
    assert validate_triangle(O, (1, 0, 0), (0, 1, 0)) is None
    assert tri(O, C, D).sq_side == 2 * 3549
    assert 3549 == 13 ** 2 * 21  # side 13 sqrt(42)


def test_validate_rejects_degenerate():
    assert validate_triangle(O, O, O) is None


def test_lattice_triangle_invariants():
    with pytest.raises(ValueError):
        LatticeTriangle((LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(0, 1, 0)), 1)
    with pytest.raises(ValueError):
        LatticeTriangle((LatticePoint(1, 1, 0), LatticePoint(0, 0, 0), LatticePoint(1, 0, 1)), 2)


def test_anchoring():
    t = tri((1, 1, 1), (2, 2, 1), (2, 1, 2))
    assert t.anchored(0) == tri(O, (1, 1, 0), (1, 0, 1))


@pytest.mark.parametrize("verts, expected", [
    ((O, (1, -1, 0), (0, -1, 1)), (1, 1, 1, 1)),
    ((O, C, D), (19, -11, -5, 13)),
    ((O, (9, 9, 0), (9, 0, 9)), (1, -1, -1, 1)),
])
def test_normal_of_triangle(verts, expected):
    assert normal_of_triangle(tri(*verts)) == expected


def test_normal_of_table1_row_scaling():
    # unreduced normal has d = l^2 / 2 = 81; reduced by 81
    n = cross((9, 9, 0), (9, 0, 9))
    assert n == (81, -81, -81)


def test_normal_requires_origin():
    with pytest.raises(ValueError):
        normal_of_triangle(tri((1, 1, 1), (2, 2, 1), (2, 1, 2)))


def test_third_vertex_examples():
    assert third_vertex((1, -1, 0), (1, 1, 1, 1), "plus") == RationalPoint(0, -1, 1)
    assert third_vertex((1, -1, 0), (1, 1, 1, 1), "minus") == RationalPoint(1, 0, -1)
    got = {third_vertex(C, (-19, 11, 5, 13), s) for s in ("plus", "minus")}
    assert RationalPoint(*map(Fraction, D)) in got


def test_third_vertex_errors():
    with pytest.raises(ValueError):
        third_vertex(O, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        third_vertex((1, 0, 0), (1, 1, 1, 1))


def _in_plane_points(normal, rng, count):
    # w x n is always an integer point of the plane
    out = []
    while len(out) < count:
        w = tuple(rng.randint(-50, 50) for _ in range(3))
        p = cross(w, normal)
        if p != (0, 0, 0):
            out.append(p)
    return out


def test_third_vertex_relations_random():
    rng = random.Random(1)
    for d in range(1, 16, 2):
        for pc in primitive_solutions(d):
            a, b, c = pc.normal
            for p in _in_plane_points((a, b, c), rng, 100):
                for sign in ("plus", "minus"):
                    q = third_vertex(p, (a, b, c, d), sign)
                    assert dot((a, b, c), q) == 0
                    assert dot(q, q) == dot(p, p)
                    assert dot(p, q) == Fraction(dot(p, p), 2)


@pytest.mark.parametrize("sq, expect", [(2, (1, 0)), (4, None)])
def test_classify_side_examples(sq, expect):
    w = classify_side(sq)
    assert (None if w is None else (w.m, w.n)) == expect


def test_classify_side_7098():
    w = classify_side(7098)
    assert w.m * w.m - w.m * w.n + w.n * w.n == 3549


def test_classify_side_odd():
    assert classify_side(7) is None


def test_tetra_admissible():
    assert is_tetra_side_admissible(2)
    assert is_tetra_side_admissible(162)
    assert not is_tetra_side_admissible(7098)
    assert not is_tetra_side_admissible(4)


def test_tetra_apexes_examples():
    assert (0, 1, 1) in tetra_apexes(tri(O, (1, 1, 0), (1, 0, 1)))
    m = 3
    assert (0, m, m) in tetra_apexes(tri(O, (m, 0, m), (m, m, 0)))
    # regression fixture: only one of the two apexes is a lattice point
    assert tetra_apexes(tri(O, (1, -1, 0), (0, -1, 1))) == [LatticePoint(1, 0, 1)]


def test_tetra_apexes_irrational_side():
    assert tetra_apexes(tri(O, C, D)) == []


@given(st.integers(1, 40))
def test_cube_tetrahedron_family(m):
    t = validate_tetrahedron(O, (m, 0, m), (m, m, 0), (0, m, m))
    assert t is not None and t.sq_side == 2 * m * m


def test_tetrahedron_invariants():
    with pytest.raises(ValueError):
        LatticeTetrahedron(tuple(LatticePoint(*v) for v in sorted([O, (1, 1, 0), (1, 0, 1), (0, 1, 2)])), 2)


def test_brute_force_triangles_satisfy_side_and_plane_rules():
    grid = GridSpec(6)
    pts = grid.points().tolist()
    for i, j, k in brute_force_triangles(grid, cap=6):
        t = tri(pts[i], pts[j], pts[k])
        assert t.sq_side % 2 == 0 and is_eisenstein_norm(t.sq_side // 2)
        a, b, c, d = normal_of_triangle(t.anchored(0))
        assert a * a + b * b + c * c == 3 * d * d


def test_brute_force_tetrahedra_properties():
    grid = GridSpec(5)
    pts = grid.points().tolist()
    quads = brute_force_tetrahedra(grid, cap=5)
    assert quads
    for quad in quads:
        vs = [pts[i] for i in quad]
        t = validate_tetrahedron(*vs)
        assert is_tetra_side_admissible(t.sq_side)
        for face in combinations(vs, 3):
            (fourth,) = [v for v in vs if v not in face]
            assert tuple(fourth) in tetra_apexes(tri(*face))
