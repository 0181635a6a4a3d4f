from __future__ import annotations

import itertools

import pytest

from schubertcodes import fields as F
from schubertcodes.fields import FieldCtx, make_field

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)]


def _remainder(a, m, q):
    # coefficient lists, constant first; m monic
    a = list(a)
    while len(a) >= len(m):
        c = a[-1]
        shift = len(a) - len(m)
        for i, x in enumerate(m):
            a[shift + i] = (a[shift + i] - c * x) % q
        a.pop()
    return a


def _irreducible_by_trial_division(mod, q):
    # monic of degree k is irreducible iff no monic factor of degree 1..k//2 divides it
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            if not any(_remainder(mod, list(tail) + [1], q)):
                return False
    return True


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_rabin_matches_trial_division(q, k):
    for tail in itertools.product(range(q), repeat=k):
        mod = list(tail) + [1]
        assert F.is_irreducible(mod, q) == _irreducible_by_trial_division(mod, q), mod


def test_default_moduli():
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 1).modulus == (0, 1)


def test_bad_fields():
    with pytest.raises(ValueError):
        make_field(4, 2)
    with pytest.raises(ValueError):
        FieldCtx(2, 2, [1, 0, 1])  # (x+1)^2
    with pytest.raises(ValueError):
        FieldCtx(2, 2, [1, 1, 0])


@pytest.mark.parametrize("q,k", SMALL)
def test_field_axioms_exhaustive(q, k):
    ctx = make_field(q, k)
    n = ctx.order
    for a in range(n):
        assert ctx.add(a, ctx.neg(a)) == 0
        assert ctx.mul(a, 1) == a
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    # multiplicative group is cyclic of order n - 1
    assert all(ctx.pow(a, n - 1) == 1 for a in range(1, n))
    sample = range(min(n, 9))
    for a, b, c in itertools.product(sample, repeat=3):
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))


@pytest.mark.parametrize("q,k", SMALL)
def test_frobenius_and_norm(q, k):
    ctx = make_field(q, k)
    for a in range(ctx.order):
        assert ctx.frob(a, k) == a
        assert ctx.frob(a, 1) == ctx.pow(a, q)
        # norm is the product of the conjugates and lies in F_q
        prod = 1
        for i in range(k):
            prod = ctx.mul(prod, ctx.frob(a, i))
        assert ctx.norm_int(a) == prod < q


@pytest.mark.parametrize("q,k", SMALL)
def test_linearized_kernel_against_root_search(q, k):
    ctx = make_field(q, k)
    for a in ctx.elements():
        roots = [x for x in range(ctx.order) if ctx.sub(ctx.frob(x, 1), ctx.mul(a.value, x)) == 0]
        dim = len(F.linearized_kernel(a))
        assert len(roots) == q**dim
        assert (dim == 1) == (F.norm(a).value == 1)


def test_hilbert90_root():
    ctx = make_field(2, 4)
    for a in F.norm_one_elements(ctx):
        beta = F.hilbert90_root(a)
        assert beta**(ctx.order - 1 - (ctx.q - 1)) == a  # beta^(1-q)
    with pytest.raises(ValueError):
        F.hilbert90_root(ctx(0))


def test_element_api():
    ctx = make_field(3, 2)
    x = ctx.gen
    assert x * x == ctx(2)  # x^2 = -1
    assert (x + 1) * (x + 2) == x * x + 2  # x^2 + 3x + 2
    assert F.frobenius(x) == x**3
    assert ctx.from_dict(ctx.to_dict()) == ctx
    assert repr(x + 1) == "x + 1"
