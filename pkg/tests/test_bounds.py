from __future__ import annotations

import pytest

from schubertcodes.bounds import (
    bounds_table,
    exact_mq_search,
    lower_bound_multilevel,
    sandwich,
    upper_bound_basic,
    upper_bound_general,
    verify_intersecting,
)
from schubertcodes.codes import SubspaceCode
from schubertcodes.constructions import norm_one_code
from schubertcodes.ferrers import multilevel_assemble
from schubertcodes.fields import make_field
from schubertcodes.linalg import intersection_dim, subspace_from_rows
from schubertcodes.schubert import standard_flag_space


def test_simple_bounds():
    assert upper_bound_basic(3, 2, 3, 2) == 7
    assert upper_bound_general(3, 1, 0, 2) == 7
    assert upper_bound_general(3, 1, 1, 2) is None
    assert upper_bound_general(4, 2, 1, 2) == 35
    with pytest.raises(ValueError):
        upper_bound_basic(2, 2, 4, 2)


def test_lower_exponent_for_l_equal_t_plus_one():
    for k, r, u in [(3, 2, 3), (4, 2, 4), (3, 3, 4)]:
        for ell in range(1, min(k, u) + 1):
            assert lower_bound_multilevel(k, r, u, ell, ell - 1) == ell * (u - ell)


def test_bounds_table_rows():
    rows = {r.name: r for r in bounds_table(2, 3, 2, 3, 1, 0)}
    assert rows["upper: points of U"].value == 7
    assert rows["multilevel cells (d=2k)"].value == 5
    assert rows["lower: multilevel q^e"].exponent == 2 and rows["lower: multilevel q^e"].conditional
    rows = {r.name: r for r in bounds_table(2, 3, 2, 3, 1, 1)}
    assert rows["upper: l-spaces of U"].value is None


def test_verify_detects_violations():
    ctx = make_field(2, 3)
    code, ref = norm_one_code(3, 2, ctx)
    assert verify_intersecting(code, ref, 1, 0).valid
    # wrong reference
    rep = verify_intersecting(code, standard_flag_space(3, 6, 2), 1, 0)
    assert not rep.valid
    # overlapping pair
    a = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], 2)
    b = subspace_from_rows([[1, 0, 0, 0], [0, 0, 1, 0]], 2)
    bad = SubspaceCode(4, 2, 2, [a, b])
    rep = verify_intersecting(bad, standard_flag_space(2, 4, 2), 0, 0)
    assert not rep.valid and rep.worst_pair_dim == 1 and rep.min_distance == 2
    assert verify_intersecting(bad, standard_flag_space(2, 4, 2), 0, 1).valid


@pytest.mark.parametrize(
    "k,r,u,ell,t,q,expect",
    [(2, 2, 2, 1, 0, 2, 3), (2, 2, 1, 1, 0, 2, 1), (2, 2, 2, 2, 1, 2, 1), (2, 2, 2, 1, 1, 2, None), (2, 2, 2, 1, 0, 3, 4)],
)
def test_exact_search(k, r, u, ell, t, q, expect):
    size, words = exact_mq_search(k, r, u, ell, t, q)
    U = standard_flag_space(u, r * k, q)
    code = SubspaceCode(r * k, k, q, words)
    assert verify_intersecting(code, U, ell, t).valid and size == len(words)
    if expect is not None:
        assert size == expect
    # constructions never beat the exact value
    ml = multilevel_assemble(k, r, u, ell, t, q)
    assert sandwich([len(ml)], size, upper_bound_general(u, ell, t, q))


def test_exact_search_with_other_reference():
    U = subspace_from_rows([[1, 1, 0, 0], [0, 0, 1, 1]], 2)
    size, words = exact_mq_search(2, 2, 2, 1, 0, 2, reference=U)
    assert size == 3 and all(intersection_dim(w, U) >= 1 for w in words)


def test_exact_search_cap(monkeypatch):
    from schubertcodes import CapExceeded

    monkeypatch.setenv("SSC_MAX_ENUM", "10")
    with pytest.raises(CapExceeded):
        exact_mq_search(2, 2, 2, 1, 0, 2)
