from __future__ import annotations

import itertools

import pytest

from schubertcodes.fields import make_field
from schubertcodes.linalg import encode_vector, intersection_dim
from schubertcodes.linear_sets import (
    QSystem,
    desarguesian_spread,
    field_expand_vec,
    field_reduce_point,
    field_reduce_vec,
    gabidulin_system,
    is_scattered,
    linear_set_points,
    point_weight,
    projective_points,
    scattered_rank_check,
    twisted_system,
    weight_one_points,
)


@pytest.mark.parametrize("q,r,k", [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)])
def test_spread_partitions_nonzero_vectors(q, r, k):
    ctx = make_field(q, k)
    spread = desarguesian_spread(r, k, ctx)
    assert len(spread) == (q ** (r * k) - 1) // (q**k - 1)
    seen = set()
    for s in spread:
        assert s.dim == k
        nonzero = s.vector_codes() - {0}
        assert not nonzero & seen
        seen |= nonzero
    assert len(seen) == q ** (r * k) - 1
    assert all(intersection_dim(a, b) == 0 for a, b in itertools.combinations(spread, 2))


def test_field_reduction_roundtrip_and_linearity():
    ctx = make_field(3, 2)
    for v in itertools.product(range(ctx.order), repeat=2):
        w = field_reduce_vec(v, ctx)
        assert field_expand_vec(w, ctx) == v
    a, b = (4, 7), (2, 5)
    s = tuple(ctx.add(x, y) for x, y in zip(a, b))
    assert ((field_reduce_vec(a, ctx) + field_reduce_vec(b, ctx)) % 3 == field_reduce_vec(s, ctx)).all()


def test_point_reduction_is_the_line():
    ctx = make_field(2, 3)
    rep = (1, 5)
    line = {encode_vector(field_reduce_vec((ctx.mul(c, rep[0]), ctx.mul(c, rep[1])), ctx), 2) for c in range(8)}
    assert field_reduce_point(rep, ctx).vector_codes() == line


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_gabidulin_system_is_scattered(q, k):
    ctx = make_field(q, k)
    sysm = gabidulin_system(k, 2, ctx)
    assert sysm.u == k and sysm.is_nondegenerate()
    assert is_scattered(sysm)
    assert len(weight_one_points(sysm)) == (q**k - 1) // (q - 1)


def test_weights_by_independent_count():
    ctx = make_field(2, 3)
    sysm = QSystem(ctx, [(1, 0), (2, 0), (0, 1)])  # contains the F_q-span of {1, x} on the first axis
    pts = linear_set_points(sysm)
    # sum over points of (q^w - 1) counts every nonzero vector of the system
    assert sum(2**p.weight - 1 for p in pts) == 2**3 - 1
    assert {p.rep: p.weight for p in pts}[(1, 0)] == 2
    assert not is_scattered(sysm)
    for p in pts:
        assert point_weight(sysm, p.rep) == p.weight


def test_twisted_system_and_validation():
    ctx = make_field(2, 3)
    tw = twisted_system(3, 3, ctx)
    assert tw.basis[0] == (1, 1, 1)
    assert is_scattered(tw)
    with pytest.raises(ValueError):
        QSystem(ctx, [(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        QSystem(ctx, [(9, 0)])
    assert scattered_rank_check(3, 2, 3) and not scattered_rank_check(4, 2, 3)


def test_projective_points_count():
    ctx = make_field(3, 1)
    assert len(list(projective_points(3, ctx))) == 13
