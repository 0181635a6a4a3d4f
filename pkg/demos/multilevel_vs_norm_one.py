"""Multilevel codes inside Omega_{U,1} versus the norm-1 code.

With U the span of the last u coordinates, a multilevel code picks
Schubert cells whose pivot sets are disjoint, fills each with a Ferrers
diagram code, and lifts.  For r < u the cell structure caps its size
below the number of points of U.
"""

from __future__ import annotations

from schubertcodes import make_field, max_multilevel_bound_2k, multilevel_assemble, norm_one_code, verify_intersecting
from schubertcodes.schubert import echelon_ferrers_of

q = 2
for k, r in [(3, 2), (4, 2), (2, 2), (2, 3)]:
    u, n = k, r * k
    ml = multilevel_assemble(k, r, u, 1, 0, q)
    n1, U = norm_one_code(k, r, make_field(q, k))
    cap, cells = max_multilevel_bound_2k(k, r, u, q)
    ok = verify_intersecting(ml, ml.reference, 1, 0).valid and verify_intersecting(n1, U, 1, 0).valid
    print(f"k={k} r={r} u={u}: norm-1 {len(n1):3d}  multilevel {len(ml):3d}  cell bound {cap:3d}  valid {ok}")
    for entry in ml.params["cells"]:
        diagram = echelon_ferrers_of(entry["cell"], n)
        print(f"    cell {entry['cell']}  row dots {list(diagram.row_dots)}  kept {entry['kept']}")
