"""Schubert conditions and cells of Gr_q(k, n) with respect to the standard flag.

The standard flag is V_i = span(e_{n-i+1}, ..., e_n).  Pivot vectors and
Schubert conditions are 1-based increasing tuples.  For a subspace W in
RREF, dim(W ∩ V_i) equals the number of pivots among the last i columns,
which is what ties cells to conditions.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from . import _caps
from .ferrers import FerrersDiagram
from .linalg import Subspace, free_positions, intersection_dim, iter_cell


def _check_increasing(seq: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    seq = tuple(int(x) for x in seq)
    if not seq:
        raise ValueError(f"{what} must be non-empty")
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{what} {seq} is not strictly increasing")
    if seq[0] < 1 or seq[-1] > n:
        raise ValueError(f"{what} {seq} leaves the range [1, {n}]")
    return seq


def standard_flag_space(i: int, n: int, q: int) -> Subspace:
    """V_i = span(e_{n-i+1}, ..., e_n)."""
    if not 1 <= i <= n:
        raise ValueError(f"flag index {i} outside [1, {n}]")
    basis = np.zeros((i, n), dtype=np.int64)
    for row in range(i):
        basis[row, n - i + row] = 1
    return Subspace(basis, q, range(n - i + 1, n + 1))


def pivot_to_condition(p: Sequence[int], n: int) -> tuple[int, ...]:
    p = _check_increasing(p, n, "pivot vector")
    k = len(p)
    return tuple(n + 1 - p[k - j] for j in range(1, k + 1))


def condition_to_pivot(d: Sequence[int], n: int) -> tuple[int, ...]:
    d = _check_increasing(d, n, "Schubert condition")
    k = len(d)
    return tuple(n + 1 - d[k - i] for i in range(1, k + 1))


def flag_intersection_dim(w: Subspace, i: int) -> int:
    """dim(W ∩ V_i), read from the pivots of the RREF basis."""
    return sum(1 for p in w.pivots if p > w.n - i)


def satisfies_schubert(w: Subspace, d: Sequence[int]) -> bool:
    d = _check_increasing(d, w.n, "Schubert condition")
    if len(d) != w.dim:
        raise ValueError(f"condition of length {len(d)} for a {w.dim}-subspace")
    return all(flag_intersection_dim(w, di) >= i for i, di in enumerate(d, start=1))


def omega_ul_condition(u: int, ell: int, k: int, n: int) -> tuple[int, ...]:
    """Condition of {W : dim(W ∩ V_u) >= ell} in Gr_q(k, n)."""
    if not (0 <= ell <= min(k, u) and u <= n and 1 <= k <= n):
        raise ValueError(f"invalid parameters u={u}, l={ell}, k={k}, n={n}")
    if u + k - ell > n:
        raise ValueError(f"u + k - l = {u + k - ell} exceeds n = {n}")
    return tuple(range(u - ell + 1, u + 1)) + tuple(range(n - k + ell + 1, n + 1))


def in_omega_ul(w: Subspace, u: Subspace, ell: int) -> bool:
    return intersection_dim(w, u) >= ell


def cell_of(w: Subspace) -> tuple[int, ...]:
    return w.pivots


def cell_size(p: Sequence[int], n: int, q: int) -> int:
    return q ** len(free_positions(p, n))


def enumerate_cell(p: Sequence[int], n: int, q: int) -> Iterator[Subspace]:
    p = _check_increasing(p, n, "pivot vector")
    _caps.check(cell_size(p, n, q), _caps.CELL_ENUM, f"Schubert cell {p}")
    return iter_cell(p, n, q)


def cell_in_omega_ul(p: Sequence[int], n: int, u: int, ell: int) -> bool:
    """Whether the whole cell lies in Omega_{V_u, ell} (cells never straddle)."""
    return sum(1 for x in p if x > n - u) >= ell


def echelon_ferrers_of(p: Sequence[int], n: int) -> FerrersDiagram:
    """Dot pattern of the free entries of the RREF template with pivots p."""
    p = _check_increasing(p, n, "pivot vector")
    pivots = set(p)
    row_dots = [sum(1 for c in range(pi + 1, n + 1) if c not in pivots) for pi in p]
    return FerrersDiagram(row_dots)
