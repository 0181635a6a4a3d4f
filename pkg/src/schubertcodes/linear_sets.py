"""Field reduction, Desarguesian spreads, q-systems and linear sets.

Vectors of F_{q^k}^r are tuples of element encodings (see
:mod:`schubertcodes.fields`).  Field reduction expands each coordinate in
the power basis of the field modulus, giving r consecutive blocks of k
coordinates in F_q^{rk}.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _caps
from .fields import FieldCtx
from .linalg import Subspace, intersection_dim, rank, subspace_from_rows

Vector = tuple[int, ...]


def field_reduce_vec(v: Sequence[int], ctx: FieldCtx) -> np.ndarray:
    out = []
    for x in v:
        out.extend(ctx.coeffs(int(x)))
    return np.array(out, dtype=np.int64)


def field_expand_vec(w: Sequence[int], ctx: FieldCtx) -> Vector:
    """Inverse of :func:`field_reduce_vec`."""
    k = ctx.k
    if len(w) % k:
        raise ValueError(f"length {len(w)} is not a multiple of {k}")
    return tuple(ctx.from_coeffs([int(c) for c in w[i : i + k]]) for i in range(0, len(w), k))


def scale_vec(c: int, v: Sequence[int], ctx: FieldCtx) -> Vector:
    return tuple(ctx.mul(c, x) for x in v)


def normalize(v: Sequence[int], ctx: FieldCtx) -> Vector:
    """Projective representative with first nonzero coordinate 1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector has no projective point")
    return scale_vec(ctx.inv(lead), v, ctx)


def field_reduce_point(rep: Sequence[int], ctx: FieldCtx) -> Subspace:
    """The k-dimensional subspace phi(F_{q^k} * rep) of F_q^{rk}."""
    if not any(rep):
        raise ValueError("cannot reduce the zero vector")
    rows = [field_reduce_vec(scale_vec(b, rep, ctx), ctx) for b in ctx.basis()]
    return subspace_from_rows(np.array(rows), ctx.q)


def projective_points(r: int, ctx: FieldCtx) -> Iterator[Vector]:
    """Normalized points of P^{r-1}(F_{q^k}), ordered by position of the leading 1."""
    order = ctx.order
    for lead in range(r):
        for tail in itertools.product(range(order), repeat=r - lead - 1):
            yield (0,) * lead + (1,) + tail


def desarguesian_spread(r: int, k: int, ctx: FieldCtx) -> list[Subspace]:
    if ctx.k != k:
        raise ValueError(f"field has degree {ctx.k}, expected {k}")
    npoints = (ctx.order**r - 1) // (ctx.order - 1)
    _caps.check(npoints, _caps.SUBSPACE_ENUM, "Desarguesian spread")
    return [field_reduce_point(p, ctx) for p in projective_points(r, ctx)]


@dataclass(frozen=True)
class LinearSetPoint:
    rep: Vector
    weight: int


class QSystem:
    """An F_q-subspace of F_{q^k}^r given by an F_q-basis of u vectors."""

    def __init__(self, ctx: FieldCtx, basis: Sequence[Sequence[int]]):
        basis = [tuple(int(x) for x in v) for v in basis]
        if not basis:
            raise ValueError("a q-system needs at least one basis vector")
        r = len(basis[0])
        if any(len(v) != r for v in basis):
            raise ValueError("basis vectors have different lengths")
        for v in basis:
            if any(not 0 <= x < ctx.order for x in v):
                raise ValueError(f"element encoding out of range in {v}")
        self.ctx = ctx
        self.r = r
        self.basis = basis
        self.u = len(basis)
        self.expanded = np.array([field_reduce_vec(v, ctx) for v in basis], dtype=np.int64)
        if rank(self.expanded, ctx.q) != self.u:
            raise ValueError("basis vectors are not F_q-linearly independent")

    def __repr__(self) -> str:
        return f"QSystem(u={self.u}, r={self.r}, q={self.ctx.q}, k={self.ctx.k})"

    def reduced(self) -> Subspace:
        """phi(U) as a u-dimensional subspace of F_q^{rk}."""
        return subspace_from_rows(self.expanded, self.ctx.q)

    def vectors(self) -> Iterator[Vector]:
        """All nonzero vectors of the system."""
        _caps.check(self.ctx.q**self.u, _caps.QSYSTEM_ENUM, "q-system enumeration")
        q = self.ctx.q
        for coeffs in itertools.product(range(q), repeat=self.u):
            if any(coeffs):
                yield field_expand_vec(np.asarray(coeffs, dtype=np.int64) @ self.expanded % q, self.ctx)

    def is_nondegenerate(self) -> bool:
        """Whether the F_{q^k}-span of the system is all of F_{q^k}^r."""
        return _ext_rank([list(v) for v in self.basis], self.ctx) == self.r

    def to_dict(self) -> dict:
        return {"r": self.r, "u": self.u, "basis": [list(v) for v in self.basis]}


def _ext_rank(rows: list[list[int]], ctx: FieldCtx) -> int:
    m = [list(r) for r in rows]
    rk = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = ctx.inv(m[rk][c])
        m[rk] = [ctx.mul(inv, x) for x in m[rk]]
        for i in range(rk + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


def gabidulin_system(k: int, r: int, ctx: FieldCtx) -> QSystem:
    """{(s, s^q, ..., s^(q^(r-1))) : s in F_{q^k}} with the power basis for s."""
    if ctx.k != k:
        raise ValueError(f"field has degree {ctx.k}, expected {k}")
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    return QSystem(ctx, [tuple(ctx.frob(s, i) for i in range(r)) for s in ctx.basis()])


def twisted_system(k: int, r: int, ctx: FieldCtx) -> QSystem:
    """{(x, x^q, x, ..., x) : x in F_{q^k}}."""
    if ctx.k != k:
        raise ValueError(f"field has degree {ctx.k}, expected {k}")
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    return QSystem(ctx, [(s, ctx.frob(s, 1)) + (s,) * (r - 2) for s in ctx.basis()])


def point_weight(system: QSystem, rep: Sequence[int]) -> int:
    """dim_{F_q}(U ∩ <rep>), by explicit rank over F_q."""
    return intersection_dim(system.reduced(), field_reduce_point(rep, system.ctx))


def linear_set_points(system: QSystem) -> list[LinearSetPoint]:
    """Points of the linear set with their weights, sorted by representative."""
    ctx = system.ctx
    hits: dict[Vector, int] = defaultdict(int)
    for v in system.vectors():
        hits[normalize(v, ctx)] += 1
    reduced = system.reduced()
    out = []
    for rep in sorted(hits):
        w = intersection_dim(reduced, field_reduce_point(rep, ctx))
        # each point of weight w absorbs exactly q^w - 1 nonzero vectors
        assert hits[rep] == ctx.q**w - 1, (rep, hits[rep], w)
        out.append(LinearSetPoint(rep, w))
    return out


def weight_one_points(system: QSystem) -> list[LinearSetPoint]:
    return [p for p in linear_set_points(system) if p.weight == 1]


def is_scattered(system: QSystem) -> bool:
    q = system.ctx.q
    return len(linear_set_points(system)) == (q**system.u - 1) // (q - 1)


def scattered_rank_check(u: int, r: int, k: int) -> bool:
    """Necessary condition u <= rk/2 for a scattered linear set of rank u."""
    return 2 * u <= r * k
