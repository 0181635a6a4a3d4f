from __future__ import annotations

import itertools

import numpy as np
import pytest

from schubertcodes.bounds import verify_intersecting
from schubertcodes.ferrers import (
    FerrersDiagram,
    closed_form_nu_min,
    construct_ferrers_code,
    largest_cell_diagram,
    largest_cell_pivots,
    lift,
    lift_word,
    max_multilevel_bound_2k,
    multilevel_assemble,
    multilevel_bound_2k,
    nu,
    nu_min,
    select_cells,
)
from schubertcodes.linalg import enumerate_pivot_vectors, rank_distance, subspace_distance
from schubertcodes.schubert import cell_in_omega_ul, echelon_ferrers_of, standard_flag_space


def _nu_from_mask(diagram, delta, i):
    m = diagram.mask()
    return int(m[i:, : diagram.cols - (delta - 1 - i)].sum())


def test_diagram_validation_and_mask():
    d = FerrersDiagram([3, 3, 1])
    assert d.rows == 3 and d.cols == 3 and d.n_dots == 7
    assert d.mask()[2].tolist() == [False, False, True]
    with pytest.raises(ValueError):
        FerrersDiagram([1, 2])


def test_nu_against_mask_counts():
    rng = np.random.default_rng(5)
    for _ in range(200):
        rows = sorted(rng.integers(0, 7, size=int(rng.integers(1, 6))).tolist(), reverse=True)
        if rows[0] == 0:
            continue
        d = FerrersDiagram(rows)
        for delta in range(1, min(d.rows, d.cols) + 1):
            for i in range(delta):
                assert nu(d, delta, i) == _nu_from_mask(d, delta, i)


def test_full_rectangle_is_singleton_bound():
    # an m x n full diagram gives max(m,n)(min(m,n) - delta + 1)
    for m, n, delta in [(2, 3, 2), (3, 3, 2), (3, 4, 3), (2, 2, 1)]:
        d = FerrersDiagram([n] * m)
        assert nu_min(d, delta) == max(m, n) * (min(m, n) - delta + 1)


@pytest.mark.parametrize("k,r", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_largest_cell_is_the_largest_cell(k, r):
    n = r * k
    for u in range(1, n // 2 + 1):
        for ell in range(1, min(k, u) + 1):
            p = largest_cell_pivots(k, r, u, ell)
            assert cell_in_omega_ul(p, n, u, ell)
            assert echelon_ferrers_of(p, n) == largest_cell_diagram(k, r, u, ell)
            best = max(
                echelon_ferrers_of(c, n).n_dots
                for c in enumerate_pivot_vectors(k, n)
                if cell_in_omega_ul(c, n, u, ell)
            )
            assert largest_cell_diagram(k, r, u, ell).n_dots == best


def test_closed_form_small_sweep():
    for k, r in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        for u in range(1, r * k // 2 + 1):
            for ell in range(1, min(k, u) + 1):
                for t in range(k):
                    d = largest_cell_diagram(k, r, u, ell)
                    assert closed_form_nu_min(k, r, u, ell, t) == nu_min(d, k - t)


def test_largest_cell_rejects_bad_params():
    with pytest.raises(ValueError):
        largest_cell_diagram(3, 1, 1, 1)
    with pytest.raises(ValueError):
        closed_form_nu_min(3, 2, 4, 1, 0)  # u > rk/2


DIAGRAMS = [[3, 3, 2], [2, 1], [3, 3], [4, 2, 2], [2, 2, 1], [3, 2, 1]]


@pytest.mark.parametrize("rows", DIAGRAMS)
@pytest.mark.parametrize("method", ["mrd-restrict", "greedy", "exhaustive", "auto"])
def test_ferrers_codes_are_valid(rows, method):
    d = FerrersDiagram(rows)
    for delta in range(1, min(d.rows, d.cols) + 1):
        if method == "exhaustive" and 2 ** d.n_dots > 2**10:
            continue
        code = construct_ferrers_code(d, delta, 2, method=method)
        assert code.is_supported()
        assert code.min_distance() >= delta
        assert code.size <= 2**code.bound_exponent


def test_auto_meets_bound_on_small_diagrams():
    for rows in DIAGRAMS:
        d = FerrersDiagram(rows)
        for delta in range(1, min(d.rows, d.cols) + 1):
            assert construct_ferrers_code(d, delta, 2).meets_bound, (rows, delta)


def test_greedy_seeds_differ_but_stay_valid():
    d = FerrersDiagram([3, 3, 2])
    for seed in range(3):
        c = construct_ferrers_code(d, 2, 2, method="greedy", seed=seed)
        assert c.min_distance() >= 2


def test_lift_doubles_rank_distance():
    p, n, q = (1, 2, 4), 6, 2
    d = echelon_ferrers_of(p, n)
    code = construct_ferrers_code(d, 2, q, method="greedy")
    lifted = lift(code, p, n)
    assert len(lifted) == code.size
    for (a, sa), (b, sb) in itertools.combinations(zip(code.words, lifted.codewords), 2):
        assert subspace_distance(sa, sb) == 2 * rank_distance(a, b, q)
    with pytest.raises(ValueError):
        lift(code, (1, 3, 4), n)
    with pytest.raises(ValueError):
        lift_word(np.ones((3, 3), dtype=np.int64), p, n, q)  # entry off the diagram


def test_multilevel_example_size():
    code = multilevel_assemble(3, 2, 3, 1, 0, 2)
    assert len(code) == 5
    rep = verify_intersecting(code, standard_flag_space(3, 6, 2), 1, 0)
    assert rep.valid and rep.min_distance == 6


@pytest.mark.parametrize(
    "k,r,u,ell,t,q",
    [(2, 2, 2, 1, 0, 2), (3, 2, 3, 2, 1, 2), (3, 2, 2, 1, 1, 2), (2, 3, 3, 1, 0, 2), (2, 2, 2, 2, 1, 3), (4, 2, 3, 1, 2, 2)],
)
def test_multilevel_always_valid(k, r, u, ell, t, q):
    code = multilevel_assemble(k, r, u, ell, t, q)
    assert verify_intersecting(code, code.reference, ell, t).valid
    assert code.params["discarded"] >= 0


def test_select_cells_pairwise_compatible():
    cells = select_cells(3, 2, 3, 1, 1)
    assert all(len(set(a) & set(b)) <= 1 for a, b in itertools.combinations(cells, 2))


def test_multilevel_bound():
    val, cells = max_multilevel_bound_2k(3, 2, 3, 2)
    assert val == 5 and multilevel_bound_2k(cells, 2, 6, 3) == 5
    # exhaustive check over all disjoint families of cells ending in the last u slots
    n, k, u = 6, 3, 3
    ends = [p for p in enumerate_pivot_vectors(k, n) if p[-1] > n - u]
    best = 0
    for s in (1, 2):
        for fam in itertools.combinations(ends, s):
            if all(not set(a) & set(b) for a, b in itertools.combinations(fam, 2)):
                best = max(best, multilevel_bound_2k(fam, 2, n, u))
    assert best == val
    with pytest.raises(ValueError):
        multilevel_bound_2k([(1, 2, 4), (1, 5, 6)], 2, 6, 3)


def test_batched_rank_matches_scalar_rank():
    from schubertcodes.ferrers import batched_rank, small_rank

    rng = np.random.default_rng(11)
    for q in (2, 3, 5):
        mats = rng.integers(0, q, size=(300, 3, 4))
        mats[::7] = 0
        assert batched_rank(mats, q).tolist() == [small_rank(m.tolist(), q) for m in mats]


def test_raw_exhaustive_search_is_maximum():
    from schubertcodes.ferrers import _DotSpace, _exhaustive

    # brute force over all codes containing zero on a 4-dot diagram
    d = FerrersDiagram([2, 2])
    space = _DotSpace(d, 2)
    best = _exhaustive(space, 2, 0)
    far = [i for i in range(space.size) if space.ranks[i] >= 2]
    top = 1
    for size in range(len(far), 0, -1):
        for sub in itertools.combinations(far, size):
            if all(space.ranks[space.diff_codes(space.digits[[a]], space.digits[b])[0]] >= 2 for a, b in itertools.combinations(sub, 2)):
                top = size + 1
                break
        if top > 1:
            break
    assert len(best) == top == 4
