"""Regular tetrahedra on the lattice.

A regular tetrahedron with lattice vertices has side k * sqrt(2).  Those with
a vertex at the origin and a fixed k come in a handful of symmetry classes.
"""
from eqlattice.enumeration import conjecture_probe, origin_tetra_orbits, origin_tetrahedra
from eqlattice.geometry import tetra_apexes, validate_triangle

t = validate_triangle((0, 0, 0), (1, -1, 0), (0, -1, 1))
print("apexes over the unit triangle:", tetra_apexes(t))

for k in range(1, 12):
    point = origin_tetra_orbits(k)
    lattice = origin_tetra_orbits(k, equivalence="lattice")
    print(f"k={k:2d}: {len(origin_tetrahedra(k)):4d} tetrahedra at O, "
          f"{len(point)} classes fixing O, {len(lattice)} allowing any anchor vertex")

print("\nk = 9 class representatives:")
for rep in origin_tetra_orbits(9):
    print("  ", [tuple(v) for v in rep.vertices])

# Is every triangle whose side allows it actually a tetrahedron face?
rep = conjecture_probe(9, mn_bound=8)
print(f"\nprobe: {rep.checked} triangles checked, {rep.with_apex} have an apex, "
      f"{len(rep.counterexamples)} counterexamples")
