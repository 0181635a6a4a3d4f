"""Arithmetic in F_q (q prime) and its extensions F_{q^k}.

Elements of F_{q^k} are coefficient vectors in the power basis
{1, a, ..., a^(k-1)} of a root ``a`` of the field modulus.  The canonical
integer encoding reads the coefficients as base-q digits, constant term
least significant, so ``x**2 + 1`` over F_3 is ``1 + 0*3 + 1*9 = 10``.

The hot paths work directly on integer encodings through a
:class:`FieldCtx`; :class:`ExtElement` wraps an encoding with operator
overloads for readable code.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import _caps


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_q as coefficient lists, constant term first -------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: list[int], m: Sequence[int], q: int) -> list[int]:
    a = _trim([c % q for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], q - 2, q)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % q
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % q
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], m: Sequence[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, m, q)


def _poly_powmod(a: list[int], e: int, m: Sequence[int], q: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), m, q)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, q)
        base = _poly_mulmod(base, base, m, q)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, q)
    return a


def _poly_sub(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % q for x, y in zip(a, b)])


def is_irreducible(modulus: Sequence[int], q: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_q."""
    m = _trim([c % q for c in modulus])
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(q^i) mod m, computed by repeated q-th powering
    frob = [x]
    for _ in range(k):
        frob.append(_poly_powmod(frob[-1], q, m, q))
    if _poly_sub(frob[k], x, q):
        return False
    for p in prime_factors(k):
        g = _poly_gcd(m, _poly_sub(frob[k // p], x, q), q)
        if len(g) > 1:
            return False
    return True


def encode_coeffs(coeffs: Sequence[int], q: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * q + c
    return value


def decode_coeffs(value: int, q: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        value, r = divmod(value, q)
        out.append(r)
    return out


class FieldCtx:
    """The field F_{q^k} = F_q[x]/(modulus).

    ``modulus`` is the full monic coefficient list of length k + 1,
    constant term first.  It is checked for irreducibility on construction.
    """

    def __init__(self, q: int, k: int, modulus: Sequence[int]):
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus {list(modulus)} is not monic of degree {k}")
        if any(not 0 <= c < q for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {q})")
        if not is_irreducible(modulus, q):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{q}")
        self.q = q
        self.k = k
        self.modulus = modulus
        self.order = q**k

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and (self.q, self.k, self.modulus) == (
            other.q,
            other.k,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.q, self.k, self.modulus))

    def to_dict(self) -> dict:
        return {"q": self.q, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> FieldCtx:
        if "modulus" in d and d["modulus"] is not None:
            return cls(int(d["q"]), int(d["k"]), d["modulus"])
        return make_field(int(d["q"]), int(d["k"]))

    # --- integer-level arithmetic -------------------------------------------

    def coeffs(self, a: int) -> list[int]:
        return decode_coeffs(a, self.q, self.k)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return encode_coeffs([c % self.q for c in coeffs], self.q)

    def add(self, a: int, b: int) -> int:
        q = self.q
        if q == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % q
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            out += ((x + y) % q) * place
            place *= q
        return out

    def neg(self, a: int) -> int:
        q = self.q
        if q == 2:
            return a
        out, place = 0, 1
        while a:
            a, x = divmod(a, q)
            out += ((-x) % q) * place
            place *= q
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply by a prime-field scalar."""
        c %= self.q
        if c == 0:
            return 0
        if c == 1:
            return a
        return self.from_coeffs([c * x for x in self.coeffs(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.q
        if self.q == 2:
            mod = self._modulus_int
            k = self.k
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a >> k & 1:
                    a ^= mod
            return out
        prod = _poly_mulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.q)
        return encode_coeffs(prod, self.q)

    @cached_property
    def _modulus_int(self) -> int:
        return encode_coeffs(self.modulus, self.q)

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]] | None:
        # exp/log tables over a primitive element; only for small fields
        n = self.order - 1
        if self.k == 1 or self.order > _caps.FIELD_EXHAUSTIVE:
            return None
        factors = prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // p) != 1 for p in factors):
                break
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        exp[n:] = exp[:n]
        return exp, log

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        tables = self._tables
        if tables is None:
            return self._mul_raw(a, b)
        exp, log = tables
        return exp[log[a] + log[b]]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        tables = self._tables
        if tables is None:
            if self.k == 1:
                return pow(a, e, self.q)
            return self._pow_raw(a, e)
        exp, log = tables
        return exp[log[a] * e % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.order - 2)

    def frob(self, a: int, i: int = 1) -> int:
        """a ** (q ** i), with i reduced mod k."""
        i %= self.k
        if i == 0 or a == 0:
            return a
        tables = self._tables
        if tables is None:
            for _ in range(i):
                a = self.pow(a, self.q)
            return a
        exp, log = tables
        return exp[log[a] * pow(self.q, i, self.order - 1) % (self.order - 1)]

    def norm_int(self, a: int) -> int:
        if a == 0:
            return 0
        return self.pow(a, (self.order - 1) // (self.q - 1))

    # --- element-level API --------------------------------------------------

    def __call__(self, value: int | Sequence[int]) -> ExtElement:
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.order:
                raise ValueError(f"encoding {v} out of range for F_{self.q}^{self.k}")
            return ExtElement(self, v)
        return ExtElement(self, self.from_coeffs(value))

    @property
    def zero(self) -> ExtElement:
        return ExtElement(self, 0)

    @property
    def one(self) -> ExtElement:
        return ExtElement(self, 1)

    @property
    def gen(self) -> ExtElement:
        """The root of the modulus (``x`` in the power basis)."""
        if self.k == 1:
            return ExtElement(self, (-self.modulus[0]) % self.q)
        return ExtElement(self, self.q)

    def elements(self) -> Iterator[ExtElement]:
        for v in range(self.order):
            yield ExtElement(self, v)

    def basis(self) -> list[int]:
        """Encodings of the power basis 1, a, ..., a^(k-1)."""
        return [self.q**j for j in range(self.k)]


class ExtElement:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.coeffs(self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 else f"{c}*{mono}" if i else str(c))
        return " + ".join(reversed(terms)) or "0"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.q if self.value < self.ctx.q else False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def _coerce(self, other) -> int:
        if isinstance(other, ExtElement):
            if other.ctx != self.ctx:
                raise ValueError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.q
        raise TypeError(f"cannot combine ExtElement with {type(other).__name__}")

    def __add__(self, other) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.sub(self.value, self._coerce(other)))

    def __rsub__(self, other) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.sub(self._coerce(other), self.value))

    def __neg__(self) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> ExtElement:
        return self * inv(ExtElement(self.ctx, self._coerce(other)))

    def __pow__(self, e: int) -> ExtElement:
        return ExtElement(self.ctx, self.ctx.pow(self.value, e))


def make_field(q: int, k: int) -> FieldCtx:
    """Build F_{q^k} over the smallest monic irreducible modulus.

    "Smallest" means smallest base-q integer encoding with the constant
    term least significant, e.g. ``x^3 + x + 1`` for (2, 3) and ``x^2 + 1``
    for (3, 2).  For k = 1 the modulus is ``x``.
    """
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if not 1 <= k <= 16:
        raise ValueError(f"extension degree must be in [1, 16], got {k}")
    for tail in range(q**k):
        modulus = decode_coeffs(tail, q, k) + [1]
        if is_irreducible(modulus, q):
            return FieldCtx(q, k, modulus)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{q}")


def add(x: ExtElement, y: ExtElement) -> ExtElement:
    return x + y


def mul(x: ExtElement, y: ExtElement) -> ExtElement:
    return x * y


def inv(x: ExtElement) -> ExtElement:
    return ExtElement(x.ctx, x.ctx.inv(x.value))


def power(x: ExtElement, e: int) -> ExtElement:
    return x**e


def frobenius(x: ExtElement, i: int = 1) -> ExtElement:
    if i < 0:
        raise ValueError("Frobenius iterate count must be non-negative")
    return ExtElement(x.ctx, x.ctx.frob(x.value, i))


def norm(x: ExtElement) -> ExtElement:
    """Field norm to F_q; the result has no terms above the constant."""
    return ExtElement(x.ctx, x.ctx.norm_int(x.value))


def norm_one_elements(ctx: FieldCtx) -> set[ExtElement]:
    _caps.check(ctx.order, _caps.FIELD_EXHAUSTIVE, "norm-one enumeration")
    return {ExtElement(ctx, v) for v in range(1, ctx.order) if ctx.norm_int(v) == 1}


def _kernel_rows(m: list[list[int]], q: int) -> list[list[int]]:
    """Basis of {v : v @ m = 0} over F_q; plain Python since k is tiny."""
    k = len(m)
    # solve m^T x = 0 by reducing the columns of m
    a = [[m[i][j] % q for i in range(k)] for j in range(len(m[0]))]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv_lead = pow(a[r][c], q - 2, q)
        a[r] = [x * inv_lead % q for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = []
    for free in (c for c in range(k) if c not in pivots):
        v = [0] * k
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-a[row][free]) % q
        out.append(v)
    return out


def linearized_kernel(a: ExtElement) -> list[ExtElement]:
    """F_q-basis of the roots of x^q - a*x in F_{q^k}.

    The map x -> x^q - a x is F_q-linear, so its kernel is read off from
    the k x k matrix of its action on the power basis.
    """
    ctx = a.ctx
    rows = []
    for b in ctx.basis():
        image = ctx.sub(ctx.frob(b, 1), ctx.mul(a.value, b))
        rows.append(ctx.coeffs(image))
    return [ExtElement(ctx, ctx.from_coeffs(v)) for v in _kernel_rows(rows, ctx.q)]


def hilbert90_root(a: ExtElement) -> ExtElement:
    """Return beta != 0 with beta^(1-q) == a; requires norm(a) == 1."""
    if norm(a).value != 1:
        raise ValueError(f"{a!r} does not have norm 1")
    roots = linearized_kernel(a)
    # any nonzero root x of x^q = a x gives beta = 1/x
    return inv(roots[0])
