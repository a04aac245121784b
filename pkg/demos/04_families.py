"""Two-parameter families: every triangle at the origin in a given plane.

For a plane class (a, b, c, d) a family emits O, m M - n N, m X - n Y with
squared side 2 d^2 (m^2 - mn + n^2).
"""
from eqlattice.diophantine import primitive_solutions
from eqlattice.enumeration import brute_force_plane_triangles
from eqlattice.families import (
    build_family,
    emit_triangle,
    family_identities,
    family_small,
    membership,
    triangles_in_box,
)
from eqlattice.geometry import validate_triangle

p = primitive_solutions(9)[1]
fam = build_family(p)
print("class", p.as_tuple(), "r, s =", (fam.rs.r, fam.rs.s))
print("coefficients:", fam.as_dict())
print("identities:", all(family_identities(fam).values()))

# The hand-derived d = 9 family is a different parametrization of the same plane.
hand = family_small(9, 2)
print("hand-derived M, N:", hand.M, hand.N)

for mn in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    t = emit_triangle(fam, mn)
    print(mn, t.vertices, t.sq_side)

# Completeness: nothing in the box escapes the family.
box = 12
got = triangles_in_box(fam, box)
ref = brute_force_plane_triangles(fam.normal, box)
print(f"\nbox {box}: family {len(got)} triangles, brute force {len(ref)}, equal: {got == ref}")

# Going backwards: which (m, n) produced a given triangle?
d13 = [q for q in primitive_solutions(13) if q.normal == (5, 11, 19)][0]
f13 = build_family(d13)
t = emit_triangle(f13, (4, 5))
print("membership of", t.vertices, "->", membership(f13, t))
try:
    membership(f13, validate_triangle((0, 0, 0), (1, -1, 0), (0, -1, 1)))
except ValueError as exc:
    print("a triangle from another plane is rejected:", exc)
