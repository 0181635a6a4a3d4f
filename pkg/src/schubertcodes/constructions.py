"""Maximum intersecting sets from linear sets and from norm-one elements.

Both constructions live in Gr_q(k, rk) and produce pairwise trivially
intersecting k-spaces that all meet a fixed subspace U.
"""

from __future__ import annotations

import warnings
from typing import Callable, Sequence

import numpy as np

from .codes import SubspaceCode
from .fields import FieldCtx, norm_one_elements
from .linalg import Subspace, rank, subspace_from_rows
from .linear_sets import (
    QSystem,
    Vector,
    field_expand_vec,
    field_reduce_point,
    field_reduce_vec,
    gabidulin_system,
    twisted_system,
    weight_one_points,
)

__all__ = [
    "SubspaceCode",
    "check_equivalence",
    "lift_semilinear",
    "norm_one_code",
    "psi_map",
    "scattered_code",
    "sigma_a",
    "twisted_system",
]


def sigma_a(a: int, r: int, ctx: FieldCtx) -> Subspace:
    """phi({(s, a s, s^(q^2), ..., s^(q^(r-1))) : s in F_{q^k}})."""
    rows = []
    for s in ctx.basis():
        v = (s, ctx.mul(a, s)) + tuple(ctx.frob(s, i) for i in range(2, r))
        rows.append(field_reduce_vec(v, ctx))
    return subspace_from_rows(np.array(rows), ctx.q)


def norm_one_code(k: int, r: int, ctx: FieldCtx) -> tuple[SubspaceCode, Subspace]:
    """The spaces phi(sigma_a), N(a) = 1, and the subspace phi(U) they all meet."""
    if ctx.k != k:
        raise ValueError(f"field has degree {ctx.k}, expected {k}")
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    ref = gabidulin_system(k, r, ctx).reduced()
    elems = sorted(a.value for a in norm_one_elements(ctx))
    code = SubspaceCode(
        r * k,
        k,
        ctx.q,
        [sigma_a(a, r, ctx) for a in elems],
        [f"a={a}" for a in elems],
        reference=ref,
        name="norm1",
        params={"q": ctx.q, "k": k, "r": r},
    )
    return code, ref


def scattered_code(system: QSystem) -> tuple[SubspaceCode, Subspace]:
    """Field reductions of the weight-one points of the linear set of ``system``."""
    ctx = system.ctx
    ref = system.reduced()
    points = weight_one_points(system)
    if not points:
        warnings.warn("the linear set has no points of weight 1; the code is empty", stacklevel=2)
    code = SubspaceCode(
        system.r * ctx.k,
        ctx.k,
        ctx.q,
        [field_reduce_point(p.rep, ctx) for p in points],
        [f"P={list(p.rep)}" for p in points],
        reference=ref,
        name="scattered",
        params={"q": ctx.q, "k": ctx.k, "r": system.r, "u": system.u},
    )
    return code, ref


def psi_map(k: int, r: int, ctx: FieldCtx) -> Callable[[Sequence[int]], Vector]:
    """(x_1, ..., x_r) -> (x_1, x_2, x_3^(q^(k-2)), ..., x_r^(q^(k-r+1))).

    Coordinate j >= 3 is raised to q^(k-j+1), with the exponent reduced
    mod k.  The map is F_q-linear and sends (s, s^q, ..., s^(q^(r-1)))
    to (s, s^q, s, ..., s).
    """
    if ctx.k != k:
        raise ValueError(f"field has degree {ctx.k}, expected {k}")
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    powers = [0, 0] + [(k - j + 1) % k for j in range(3, r + 1)]

    def psi(v: Sequence[int]) -> Vector:
        if len(v) != r:
            raise ValueError(f"expected a vector of length {r}")
        return tuple(ctx.frob(int(x), e) for x, e in zip(v, powers))

    return psi


def lift_semilinear(fn: Callable[[Sequence[int]], Vector], r: int, ctx: FieldCtx) -> np.ndarray:
    """The rk x rk matrix M over F_q with phi(fn(v)) = phi(v) @ M.

    Only valid for F_q-linear ``fn``; row i of M is the image of the i-th
    standard basis vector of F_q^{rk}.
    """
    n = r * ctx.k
    rows = []
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        rows.append(field_reduce_vec(fn(field_expand_vec(e, ctx)), ctx))
    return np.array(rows, dtype=np.int64)


def check_equivalence(
    code: SubspaceCode, ref: Subspace, other: SubspaceCode, other_ref: Subspace, matrix
) -> bool:
    """Whether ``matrix`` maps ref onto other_ref and the codewords of ``code`` onto those of ``other``."""
    m = np.asarray(matrix, dtype=np.int64) % code.q
    if m.shape != (code.n, code.n) or rank(m, code.q) != code.n:
        raise ValueError("the map must be an invertible n x n matrix over F_q")
    if ref.image(m) != other_ref:
        return False
    if len(code) != len(other):
        return False
    return {w.image(m) for w in code} == other.as_set()
