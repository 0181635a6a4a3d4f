"""The norm-1 construction over F_8 with two blocks.

Each norm-1 element a of F_8 gives a 3-space sigma_a of F_2^6.  All of them
meet U = phi({(s, s^2)}) in a point and pairwise meet in zero, so they
form an intersecting set of the largest possible size.
"""

from __future__ import annotations

from schubertcodes import make_field, norm, norm_one_code, verify_intersecting
from schubertcodes.linalg import intersect

F8 = make_field(2, 3)
print("modulus (constant term first):", list(F8.modulus))

# the norm map F_8 -> F_2 is x * x^2 * x^4; every nonzero element has norm 1
for a in F8.elements():
    print(f"  N({a!r:>12}) = {norm(a).value}")

code, U = norm_one_code(3, 2, F8)
print("\nU =")
print(U.basis)

for label, w in zip(code.labels, code):
    p = intersect(w, U)
    print(f"{label}: pivots {w.pivots}, meets U in {p.to_list()}")

report = verify_intersecting(code, U, ell=1, t=0)
print()
print("\n".join(report.lines()))
