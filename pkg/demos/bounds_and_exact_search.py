"""Bounds for (l, t)-intersecting sets, checked against exact search.

The exact value m_q(k, r, u, l, t) is a maximum clique in the graph of
k-spaces meeting U in dimension >= l, joined when they meet in
dimension <= t.  At desk scale it sits between the multilevel
construction and the upper bounds.
"""

from __future__ import annotations

from schubertcodes import bounds_table, exact_mq_search, multilevel_assemble

for k, r, u, ell, t, q in [(2, 2, 2, 1, 0, 2), (2, 2, 2, 1, 0, 3), (2, 2, 1, 1, 0, 2), (2, 2, 2, 2, 1, 2), (2, 2, 2, 1, 1, 2)]:
    exact, _ = exact_mq_search(k, r, u, ell, t, q)
    built = len(multilevel_assemble(k, r, u, ell, t, q))
    print(f"q={q} k={k} r={r} u={u} l={ell} t={t}: exact {exact}, multilevel {built}")
    for row in bounds_table(q, k, r, u, ell, t):
        value = "n/a" if row.value is None else row.value
        print(f"    {row.name:<26} {value}{'  (conditional)' if row.conditional else ''}")
