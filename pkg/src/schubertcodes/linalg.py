"""Matrices and subspaces over a prime field F_q.

Matrices are plain ``numpy`` integer arrays with entries in ``[0, q)``.
A :class:`Subspace` stores its reduced row echelon basis, which makes
equality and hashing canonical: two subspaces are equal exactly when
their RREF bases agree entry by entry.

Pivot columns returned by :func:`rref` are 0-based (array indices);
``Subspace.pivots`` is 1-based, matching the usual pivot-vector notation
for Schubert cells.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _caps

BITSET_AMBIENT = 2**16


def as_matrix(m, q: int) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    return a % q


def rref(m, q: int) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form over F_q.

    Returns the row-equivalent RREF (same shape as ``m``, zero rows last),
    the 0-based pivot columns, and the rank.
    """
    a = as_matrix(m, q).copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = a[r] * pow(lead, q - 2, q) % q
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots, r


def rank(m, q: int) -> int:
    a = as_matrix(m, q)
    if a.size == 0:
        return 0
    return rref(a, q)[2]


def nullspace(m, q: int) -> np.ndarray:
    """Basis (as rows) of {x : m @ x = 0} over F_q."""
    a = as_matrix(m, q)
    ncols = a.shape[1]
    r, pivots, rk = rref(a, q)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % q
    return basis


def rank_distance(a, b, q: int) -> int:
    a = as_matrix(a, q)
    b = as_matrix(b, q)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return rank((a - b) % q, q)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def encode_vector(v: Iterable[int], q: int) -> int:
    """Base-q integer of a vector, first coordinate most significant."""
    out = 0
    for x in v:
        out = out * q + int(x)
    return out


class Subspace:
    """A subspace of F_q^n held by its canonical RREF basis."""

    __slots__ = ("q", "n", "basis", "pivots", "_key")

    def __init__(self, basis: np.ndarray, q: int, pivots: Sequence[int] | None = None):
        # trusted constructor: basis must already be a full-rank RREF
        basis = np.asarray(basis, dtype=np.int64)
        basis.setflags(write=False)
        self.q = q
        self.n = basis.shape[1]
        self.basis = basis
        if pivots is None:
            pivots = [int(np.flatnonzero(row)[0]) + 1 for row in basis]
        self.pivots = tuple(pivots)
        self._key = (q, self.n, basis.shape[0], basis.tobytes())

    @classmethod
    def zero(cls, n: int, q: int) -> Subspace:
        return cls(np.zeros((0, n), dtype=np.int64), q, ())

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: Subspace) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.pivots, tuple(self.basis.ravel().tolist()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n}, q={self.q}, rows={self.to_list()})"

    def to_list(self) -> list[list[int]]:
        return self.basis.tolist()

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(1, -1) % self.q
        if not v.any():
            return True
        return rank(np.vstack([self.basis, v]), self.q) == self.dim

    def vectors(self) -> Iterator[np.ndarray]:
        """All q^dim vectors of the subspace."""
        if self.dim == 0:
            yield np.zeros(self.n, dtype=np.int64)
            return
        for coeffs in itertools.product(range(self.q), repeat=self.dim):
            yield np.asarray(coeffs, dtype=np.int64) @ self.basis % self.q

    def vector_codes(self) -> frozenset[int]:
        return frozenset(self._vector_code_array().tolist())

    def _vector_code_array(self) -> np.ndarray:
        q = self.q
        weights = q ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        if self.dim == 0:
            return np.zeros(1, dtype=np.int64)
        grid = (np.arange(q**self.dim, dtype=np.int64)[:, None] // q ** np.arange(self.dim - 1, -1, -1)) % q
        return (grid @ self.basis % q) @ weights

    def vector_bitset(self) -> int:
        """Bit c is set when the vector with base-q code c lies in the subspace."""
        mask = np.zeros(self.q**self.n, dtype=bool)
        mask[self._vector_code_array()] = True
        return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")

    def image(self, matrix) -> Subspace:
        """Image under the linear map v -> v @ matrix."""
        if self.dim == 0:
            return Subspace.zero(np.asarray(matrix).shape[1], self.q)
        return subspace_from_rows(self.basis @ as_matrix(matrix, self.q) % self.q, self.q, allow_zero=True)


def subspace_from_rows(m, q: int, allow_zero: bool = False) -> Subspace:
    a = as_matrix(m, q)
    if a.size == 0:
        if allow_zero:
            return Subspace.zero(a.shape[1], q)
        raise ValueError("rowspace is the zero space")
    r, pivots, rk = rref(a, q)
    if rk == 0 and not allow_zero:
        raise ValueError("rowspace is the zero space")
    return Subspace(r[:rk], q, [p + 1 for p in pivots])


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.n != v.n or u.q != v.q:
        raise ValueError(f"ambient mismatch: F_{u.q}^{u.n} vs F_{v.q}^{v.n}")


def span_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return subspace_from_rows(np.vstack([u.basis, v.basis]), u.q, allow_zero=True)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V by Zassenhaus: RREF of [[U, U], [V, 0]]."""
    _check_ambient(u, v)
    n, q = u.n, u.q
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(n, q)
    top = np.hstack([u.basis, u.basis])
    bottom = np.hstack([v.basis, np.zeros_like(v.basis)])
    r, pivots, rk = rref(np.vstack([top, bottom]), q)
    tail = [i for i, p in enumerate(pivots) if p >= n]
    if not tail:
        return Subspace.zero(n, q)
    return subspace_from_rows(r[tail, n:], q)


def intersection_dim(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return 0
    return u.dim + v.dim - rank(np.vstack([u.basis, v.basis]), u.q)


def pairwise_intersection_dims(words: Sequence[Subspace]) -> Iterator[tuple[int, int, int]]:
    """(i, j, dim(W_i ∩ W_j)) for i < j.

    Small ambient spaces use vector-set bitsets, where |W ∩ W'| = q^dim;
    larger ones fall back to ranks.
    """
    if not words:
        return
    q, n = words[0].q, words[0].n
    if q**n <= BITSET_AMBIENT:
        bits = [w.vector_bitset() for w in words]
        log = {q**d: d for d in range(n + 1)}
        for i, bi in enumerate(bits):
            for j in range(i + 1, len(bits)):
                yield i, j, log[(bi & bits[j]).bit_count()]
    else:
        for i, a in enumerate(words):
            for j in range(i + 1, len(words)):
                yield i, j, intersection_dim(a, words[j])


def subspace_distance(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return 2 * (u.dim - intersection_dim(u, v))


def enumerate_pivot_vectors(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All 1-based pivot vectors of k x n RREF matrices, lexicographically."""
    return itertools.combinations(range(1, n + 1), k)


def free_positions(pivots: Sequence[int], n: int) -> list[tuple[int, int]]:
    """0-based (row, col) slots left free by an RREF template with these pivots."""
    pivot_cols = {p - 1 for p in pivots}
    out = []
    for i, p in enumerate(pivots):
        for c in range(p, n):
            if c not in pivot_cols:
                out.append((i, c))
    return out


def cell_template(pivots: Sequence[int], n: int) -> np.ndarray:
    t = np.zeros((len(pivots), n), dtype=np.int64)
    for i, p in enumerate(pivots):
        t[i, p - 1] = 1
    return t


def iter_cell(pivots: Sequence[int], n: int, q: int) -> Iterator[Subspace]:
    """Subspaces with exactly these pivots; top-left free slot most significant."""
    slots = free_positions(pivots, n)
    template = cell_template(pivots, n)
    rows = np.array([s[0] for s in slots], dtype=np.intp)
    cols = np.array([s[1] for s in slots], dtype=np.intp)
    piv = tuple(pivots)
    for values in itertools.product(range(q), repeat=len(slots)):
        b = template.copy()
        if slots:
            b[rows, cols] = values
        yield Subspace(b, q, piv)


def enumerate_subspaces(k: int, n: int, q: int) -> Iterator[Subspace]:
    """Every k-subspace of F_q^n exactly once.

    Order: pivot vectors lexicographically, then free-entry assignments
    with the top-left free slot most significant (the order of
    ``Subspace.sort_key``).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    _caps.check(gaussian_binomial(n, k, q), _caps.SUBSPACE_ENUM, f"Gr_{q}({k},{n})")
    for p in enumerate_pivot_vectors(k, n):
        yield from iter_cell(p, n, q)


def random_matrix(rng: np.random.Generator, rows: int, cols: int, q: int) -> np.ndarray:
    return rng.integers(0, q, size=(rows, cols), dtype=np.int64)


def random_subspace(rng: np.random.Generator, k: int, n: int, q: int) -> Subspace:
    while True:
        s = subspace_from_rows(random_matrix(rng, k, n, q), q, allow_zero=True)
        if s.dim == k:
            return s


def random_invertible(rng: np.random.Generator, n: int, q: int) -> np.ndarray:
    while True:
        m = random_matrix(rng, n, n, q)
        if rank(m, q) == n:
            return m
