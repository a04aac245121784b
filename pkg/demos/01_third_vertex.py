"""Completing a lattice segment to an equilateral triangle.

Run with ``python3 demos/01_third_vertex.py``.
"""
from fractions import Fraction

from eqlattice.geometry import normal_of_triangle, third_vertex, validate_triangle

# Start with the smallest lattice equilateral triangle: O, (1,-1,0), (0,-1,1).
# Its plane is x + y + z = 0, and the primitive normal comes with a partner d
# satisfying a^2 + b^2 + c^2 = 3 d^2.
tri = validate_triangle((0, 0, 0), (1, -1, 0), (0, -1, 1))
print("triangle:", tri.vertices, "squared side", tri.sq_side)
print("plane class (a, b, c, d):", normal_of_triangle(tri))

# Given one edge O-P and the plane, the third vertex is a rational point.
# Both choices of sign give a valid triangle, one on each side of the edge.
for sign in ("plus", "minus"):
    print(sign, third_vertex((1, -1, 0), (1, 1, 1, 1), sign))

# A larger example with d = 13.  C and D sit on the plane -19x + 11y + 5z = 0.
C, D = (31, 19, 76), (44, 71, 11)
print("\nO, C, D plane class:", normal_of_triangle([(0, 0, 0), C, D]))
Q = third_vertex(C, (-19, 11, 5, 13), "plus")
print("third vertex from C:", Q, "integral:", all(isinstance(q, Fraction) and q.denominator == 1 for q in Q))

# In the plane x + y + z = 0 every completion is integral.  With d = 13 that
# fails: (5, 0, 19) lies on the plane but both completions have denominators.
P = (5, 0, 19)
for sign in ("plus", "minus"):
    print(P, sign, "->", third_vertex(P, (-19, 11, 5, 13), sign))
