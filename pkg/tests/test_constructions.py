from __future__ import annotations

import numpy as np
import pytest

from schubertcodes.bounds import upper_bound_basic, verify_intersecting
from schubertcodes.constructions import (
    check_equivalence,
    lift_semilinear,
    norm_one_code,
    psi_map,
    scattered_code,
    sigma_a,
)
from schubertcodes.fields import make_field
from schubertcodes.linalg import intersection_dim, rank
from schubertcodes.linear_sets import (
    QSystem,
    field_reduce_vec,
    gabidulin_system,
    linear_set_points,
    twisted_system,
)


@pytest.mark.parametrize("q,k,r", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 3, 3), (2, 4, 2), (3, 2, 3)])
def test_norm_one_code_is_maximum(q, k, r):
    ctx = make_field(q, k)
    code, ref = norm_one_code(k, r, ctx)
    rep = verify_intersecting(code, ref, 1, 0)
    assert rep.valid and rep.min_distance == 2 * k
    assert len(code) == upper_bound_basic(k, r, k, q)
    assert all(d == 1 for d in rep.reference_dims)


def test_sigma_a_meets_u_in_a_point_of_the_linear_set():
    ctx = make_field(2, 3)
    code, ref = norm_one_code(3, 2, ctx)
    reps = {p.rep for p in linear_set_points(gabidulin_system(3, 2, ctx))}
    assert len(reps) == 7
    # a non-norm-1 element gives a space missing U entirely
    off = sigma_a(0, 2, ctx)
    assert intersection_dim(off, ref) == 0


def test_scattered_code_equals_norm_one_for_r2():
    ctx = make_field(2, 3)
    a, ra = norm_one_code(3, 2, ctx)
    b, rb = scattered_code(gabidulin_system(3, 2, ctx))
    assert ra == rb and a.as_set() == b.as_set()


def test_psi_is_semilinear_lift():
    ctx = make_field(2, 3)
    psi = psi_map(3, 3, ctx)
    m = lift_semilinear(psi, 3, ctx)
    assert rank(m, 2) == 9
    rng = np.random.default_rng(0)
    for _ in range(20):
        v = tuple(int(x) for x in rng.integers(0, 8, size=3))
        assert (field_reduce_vec(psi(v), ctx) == field_reduce_vec(v, ctx) @ m % 2).all()
    # psi carries the Gabidulin system onto the twisted one
    assert gabidulin_system(3, 3, ctx).reduced().image(m) == twisted_system(3, 3, ctx).reduced()


def test_equivalence_and_its_negation():
    ctx = make_field(2, 3)
    code, ref = norm_one_code(3, 3, ctx)
    other, oref = scattered_code(twisted_system(3, 3, ctx))
    m = lift_semilinear(psi_map(3, 3, ctx), 3, ctx)
    assert check_equivalence(code, ref, other, oref, m)
    assert not check_equivalence(code, ref, other, oref, np.eye(9, dtype=np.int64))
    with pytest.raises(ValueError):
        check_equivalence(code, ref, other, oref, np.zeros((9, 9), dtype=np.int64))


def test_empty_scattered_code_warns():
    ctx = make_field(2, 2)
    sysm = QSystem(ctx, [(1, 0), (2, 0)])  # one point of weight 2
    with pytest.warns(UserWarning):
        code, _ = scattered_code(sysm)
    assert len(code) == 0


def test_u1_system_gives_one_codeword():
    ctx = make_field(2, 3)
    code, ref = scattered_code(QSystem(ctx, [(1, 0)]))
    assert len(code) == 1 and verify_intersecting(code, ref, 1, 0).valid


def test_parameter_checks():
    ctx = make_field(2, 3)
    with pytest.raises(ValueError):
        norm_one_code(2, 2, ctx)
    with pytest.raises(ValueError):
        norm_one_code(3, 1, ctx)
    with pytest.raises(ValueError):
        psi_map(3, 1, ctx)
