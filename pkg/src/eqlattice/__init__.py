"""Equilateral triangles and regular tetrahedra with integer coordinates."""

from .diophantine import (
    PlaneClass,
    count_primitive,
    invert_param,
    param_solution,
    pell_family,
    primitive_solutions,
)
from .enumeration import (
    CountResult,
    GridSpec,
    conjecture_probe,
    count_et,
    count_et_bruteforce,
    count_rt,
    iter_triangles,
    origin_tetra_orbits,
)
from .families import (
    FamilyPoint,
    TriangleFamily,
    build_family,
    emit_triangle,
    family_d1,
    family_small,
    membership,
)
from .geometry import (
    LatticePoint,
    LatticeTetrahedron,
    LatticeTriangle,
    RationalPoint,
    classify_side,
    is_tetra_side_admissible,
    normal_of_triangle,
    tetra_apexes,
    third_vertex,
    validate_triangle,
)
from .numtheory import (
    factorize,
    is_eisenstein_norm,
    lemma_thebeauty_check,
    represent_eisenstein_norm,
    solve_rs,
)
from .symmetry import cube_group, orbit_expand

__version__ = "0.1.0"

__all__ = [
    "CountResult",
    "FamilyPoint",
    "GridSpec",
    "LatticePoint",
    "LatticeTetrahedron",
    "LatticeTriangle",
    "PlaneClass",
    "RationalPoint",
    "TriangleFamily",
    "build_family",
    "classify_side",
    "conjecture_probe",
    "count_et",
    "count_et_bruteforce",
    "count_primitive",
    "count_rt",
    "cube_group",
    "emit_triangle",
    "factorize",
    "family_d1",
    "family_small",
    "invert_param",
    "is_eisenstein_norm",
    "is_tetra_side_admissible",
    "iter_triangles",
    "lemma_thebeauty_check",
    "membership",
    "normal_of_triangle",
    "orbit_expand",
    "origin_tetra_orbits",
    "param_solution",
    "pell_family",
    "primitive_solutions",
    "represent_eisenstein_norm",
    "solve_rs",
    "tetra_apexes",
    "third_vertex",
    "validate_triangle",
]
