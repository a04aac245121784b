import random
from fractions import Fraction
from math import gcd, isqrt

import pytest
from hypothesis import given, strategies as st

from eqlattice.diophantine import (
    PlaneClass,
    count_ordered,
    count_primitive,
    invert_param,
    param_from_inverse,
    param_solution,
    pell_family,
    primitive_solutions,
)

# d = 15 corrected: the printed table has (5, 11, 25), which is not a solution
TABLE3 = {
    1: [(1, 1, 1)],
    3: [(1, 1, 5)],
    5: [(1, 5, 7)],
    7: [(1, 5, 11)],
    9: [(1, 11, 11), (5, 7, 13)],
    11: [(1, 1, 19), (5, 7, 17), (5, 13, 13)],
    13: [(5, 11, 19), (7, 13, 17)],
    15: [(1, 7, 25), (5, 11, 23), (5, 17, 19)],
}


def brute_primitive(d):
    """All 0 < a <= b <= c, gcd 1, over the full cube [1, sqrt(3) d]^3."""
    top = isqrt(3 * d * d)
    return sorted(
        (a, b, c)
        for a in range(1, top + 1)
        for b in range(a, top + 1)
        for c in range(b, top + 1)
        if a * a + b * b + c * c == 3 * d * d and gcd(gcd(a, b), c) == 1
    )


def test_printed_table_entry_is_not_a_solution():
    assert 5 ** 2 + 11 ** 2 + 25 ** 2 != 3 * 15 ** 2
    assert 5 ** 2 + 11 ** 2 + 23 ** 2 == 3 * 15 ** 2


@pytest.mark.parametrize("d", sorted(TABLE3))
def test_primitive_solutions_table(d):
    assert [(p.a, p.b, p.c) for p in primitive_solutions(d)] == TABLE3[d]


@pytest.mark.parametrize("d", [1, 3, 17, 21, 35, 45, 51])
def test_primitive_matches_brute_force(d):
    assert [(p.a, p.b, p.c) for p in primitive_solutions(d)] == brute_primitive(d)


def test_count_primitive_examples():
    assert count_primitive(3) == 1
    assert count_primitive(15) == 3
    assert count_primitive(1003) == 182


def test_count_ordered_1003():
    # permutations counted separately; recorded for the counting convention
    assert count_ordered(1003) == 1080


@pytest.mark.parametrize("d", [0, 2, -3, 10])
def test_rejects_bad_d(d):
    with pytest.raises(ValueError):
        primitive_solutions(d)


def test_all_classes_are_odd_and_primitive():
    for d in range(1, 201, 2):
        for p in primitive_solutions(d):
            assert p.a % 2 and p.b % 2 and p.c % 2
            assert gcd(gcd(p.a, p.b), p.c) == 1


def test_nontrivial_solution_for_every_odd_d():
    for d in range(3, 402, 2):
        assert count_primitive(d) >= 1, d


def test_plane_class_validation():
    with pytest.raises(ValueError):
        PlaneClass(2, 2, 2, 2)
    with pytest.raises(ValueError):
        PlaneClass(5, 1, 7, 5)
    with pytest.raises(ValueError):
        PlaneClass(1, 1, 2, 1)
    assert PlaneClass.from_normal(-19, 11, 5) == PlaneClass(5, 11, 19, 13)
    assert PlaneClass.from_normal(81, -81, -81) == PlaneClass(1, 1, 1, 1)


def test_param_examples():
    assert param_solution((0, 0, 0)) == (0, 0, 0, 0)
    assert param_solution((1, 0, 0)) == (-1, 1, 1, 1)


@given(st.tuples(*[st.integers(-20, 20)] * 3))
def test_param_solves_equation(t):
    a, b, c, d = param_solution(t)
    assert a * a + b * b + c * c == 3 * d * d


def test_param_random_triples():
    rng = random.Random(7)
    for _ in range(10 ** 4):
        a, b, c, d = param_solution(tuple(rng.randint(-1000, 1000) for _ in range(3)))
        assert a * a + b * b + c * c == 3 * d * d


def test_invert_param_example():
    inv = invert_param(PlaneClass(5, 11, 19, 13))
    assert inv.k == 2
    assert inv.coeffs == (Fraction(2), Fraction(1, 2), Fraction(-3, 2))


def test_invert_param_trivial():
    inv = invert_param(PlaneClass(1, 1, 1, 1))
    assert inv.k == 0 and inv.coeffs == (0, 0, 0)


def test_invert_param_roundtrip():
    assert param_from_inverse(invert_param(PlaneClass(1, 1, 5, 3))) == (1, 1, 5, 3)
    for d in range(3, 102, 2):
        for p in primitive_solutions(d):
            assert param_from_inverse(invert_param(p)) == p.as_tuple()


def test_invert_param_integer_params_roundtrip():
    # integer parameters with k a perfect square come back exactly
    for t in [(1, 2, 3), (2, -1, 4), (3, 3, -1)]:
        a, b, c, d = param_solution(t)
        inv = invert_param((a, b, c, d))
        assert param_from_inverse(inv) == (a, b, c, d)


def test_pell_family():
    assert pell_family(7, 1, 1) == [(15, 23)]
    three = pell_family(7, 1, 3)
    assert len(three) == 3
    assert all(3 * d * d - c * c == 146 for d, c in three)
    assert [d for d, _ in three] == sorted({d for d, _ in three})
    assert pell_family(1, 1, 1) == [(3, 5)]
    assert 3 * 9 - 25 == 2


def test_pell_gives_plane_classes():
    # a^2 + b^2 = 146 with (11, 5) pairs with each (d, c) to a solution of the main equation
    for d, c in pell_family(7, 1, 5):
        assert 11 ** 2 + 5 ** 2 + c * c == 3 * d * d
