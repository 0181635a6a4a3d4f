"""Linear sets, scatteredness, and the map psi.

The Gabidulin q-system {(s, s^q, s^(q^2))} and the twisted system
{(x, x^q, x)} both define scattered linear sets in PG(2, 8).  The
F_2-linear map psi raising the third coordinate to q^(k-2) carries one
onto the other, and its matrix carries one intersecting set onto the
other.
"""

from __future__ import annotations

from collections import Counter

from schubertcodes import (
    check_equivalence,
    gabidulin_system,
    is_scattered,
    lift_semilinear,
    linear_set_points,
    make_field,
    norm_one_code,
    psi_map,
    scattered_code,
    twisted_system,
)
from schubertcodes.linear_sets import QSystem

F8 = make_field(2, 3)
for name, system in [("gabidulin", gabidulin_system(3, 3, F8)), ("twisted", twisted_system(3, 3, F8))]:
    pts = linear_set_points(system)
    print(f"{name}: {len(pts)} points, weights {dict(Counter(p.weight for p in pts))}, scattered {is_scattered(system)}")

# a non-scattered system: the first axis carries a point of weight 2
lumpy = QSystem(F8, [(1, 0, 0), (2, 0, 0), (0, 1, 0)])
print("lumpy weights:", [(p.rep, p.weight) for p in linear_set_points(lumpy)])

code, U = norm_one_code(3, 3, F8)
other, U2 = scattered_code(twisted_system(3, 3, F8))
M = lift_semilinear(psi_map(3, 3, F8), 3, F8)
print("psi matrix over F_2:")
print(M)
print("psi carries the norm-1 code onto the twisted code:", check_equivalence(code, U, other, U2, M))
