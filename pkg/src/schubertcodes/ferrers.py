"""Ferrers diagram rank-metric codes, lifting, and the multilevel construction.

A Ferrers diagram is stored as its per-row dot counts from the top.  Rows
are right-justified: in a diagram with ``cols`` columns, row i holds a dot
in column j exactly when ``j >= cols - row_dots[i]`` (0-based).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _caps
from .clique import max_clique
from .codes import SubspaceCode
from .linalg import Subspace, cell_template, intersection_dim, nullspace, rref


class FerrersDiagram:
    __slots__ = ("row_dots",)

    def __init__(self, row_dots: Iterable[int]):
        row_dots = tuple(int(x) for x in row_dots)
        if any(x < 0 for x in row_dots):
            raise ValueError(f"negative dot count in {row_dots}")
        if any(b > a for a, b in zip(row_dots, row_dots[1:])):
            raise ValueError(f"row dot counts {row_dots} are not non-increasing")
        self.row_dots = row_dots

    @property
    def rows(self) -> int:
        return len(self.row_dots)

    @property
    def cols(self) -> int:
        return self.row_dots[0] if self.row_dots else 0

    @property
    def n_dots(self) -> int:
        return sum(self.row_dots)

    def mask(self) -> np.ndarray:
        m = np.zeros((self.rows, self.cols), dtype=bool)
        for i, d in enumerate(self.row_dots):
            if d:
                m[i, self.cols - d :] = True
        return m

    def dot_positions(self) -> list[tuple[int, int]]:
        """Dots in row-major order."""
        return [(i, j) for i, d in enumerate(self.row_dots) for j in range(self.cols - d, self.cols)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FerrersDiagram) and self.row_dots == other.row_dots

    def __hash__(self) -> int:
        return hash(self.row_dots)

    def __repr__(self) -> str:
        return f"FerrersDiagram({list(self.row_dots)})"

    def __str__(self) -> str:
        return "\n".join(" " * (self.cols - d) * 2 + "* " * d for d in self.row_dots)

    def to_dict(self) -> dict:
        return {"rowDots": list(self.row_dots)}


def nu(diagram: FerrersDiagram, delta: int, i: int) -> int:
    """Dots outside the first i rows and outside the rightmost delta-1-i columns."""
    if not 0 <= i <= delta - 1:
        raise ValueError(f"index {i} outside [0, {delta - 1}]")
    keep_cols = diagram.cols - (delta - 1 - i)
    total = 0
    for d in diagram.row_dots[i:]:
        # dots of this row occupy columns [cols - d, cols)
        total += max(0, min(diagram.cols, keep_cols) - (diagram.cols - d))
    return total


def nu_min(diagram: FerrersDiagram, delta: int) -> int:
    if delta < 1:
        raise ValueError(f"minimum distance must be >= 1, got {delta}")
    return min(nu(diagram, delta, i) for i in range(delta))


def singleton_bound(diagram: FerrersDiagram, delta: int) -> int:
    """Exponent e of the size bound q^e for codes on ``diagram`` at rank distance ``delta``."""
    return nu_min(diagram, delta)


def _check_lt_params(k: int, r: int, u: int, ell: int, t: int | None = None) -> None:
    if k < 2 or r < 2:
        raise ValueError(f"need k, r >= 2, got k={k}, r={r}")
    if not 1 <= ell <= min(k, u):
        raise ValueError(f"need 1 <= l <= min(k, u), got l={ell}, k={k}, u={u}")
    if 2 * u > r * k:
        raise ValueError(f"need u <= rk/2, got u={u}, rk={r * k}")
    if t is not None and not 0 <= t <= k - 1:
        raise ValueError(f"need 0 <= t <= k-1, got t={t}")


def largest_cell_diagram(k: int, r: int, u: int, ell: int) -> FerrersDiagram:
    """Diagram of the largest cell of Omega_{U,l}: k-l full rows of (r-1)k dots over l rows of u-l dots."""
    _check_lt_params(k, r, u, ell)
    return FerrersDiagram([(r - 1) * k] * (k - ell) + [u - ell] * ell)


def largest_cell_pivots(k: int, r: int, u: int, ell: int) -> tuple[int, ...]:
    n = r * k
    return tuple(range(1, k - ell + 1)) + tuple(range(n - u + 1, n - u + ell + 1))


def closed_form_nu_min(k: int, r: int, u: int, ell: int, t: int) -> int:
    """Case formulas for nu_min of :func:`largest_cell_diagram` at distance k - t."""
    _check_lt_params(k, r, u, ell, t)
    s = t + 1
    if s >= ell + k - u:
        nu_first = (r * k - k - u + ell) * (k - ell) + k * (s - ell - k + u)
    else:
        nu_first = (r * k - 2 * k + s) * (k - ell)
    if s >= ell:
        nu_last = ell * (u - ell) + (r - 1) * k * (s - ell)
    else:
        nu_last = s * (u - ell)
    terms = [nu_first, nu_last]
    # nu_{k-l}: only when t + 1 < l
    if s < ell:
        terms.append(0 if s <= 2 * ell - u else ell * (u - 2 * ell + s))
    # nu_{k+l-t-1-u}: only when t + 1 < l + k - u
    if s < ell + k - u:
        terms.append(0 if s <= 2 * ell - u else ((r - 1) * k - u + ell) * (u + s - 2 * ell))
    return min(terms)


# --- rank-metric codes on a diagram ----------------------------------------


def small_rank(rows: Sequence[Sequence[int]], q: int) -> int:
    """Rank of a small integer matrix over F_q (pure Python)."""
    m = [[x % q for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], q - 2, q)
        prow = [x * inv % q for x in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, len(m)):
            f = m[r][c]
            if f:
                m[r] = [(x - f * y) % q for x, y in zip(m[r], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass
class FerrersCode:
    """Matrices supported on ``diagram`` with designed minimum rank distance ``delta``."""

    diagram: FerrersDiagram
    words: list[np.ndarray]
    delta: int
    q: int
    method: str = ""
    notes: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def log_size(self) -> float:
        return math.log(self.size, self.q) if self.size else float("-inf")

    @property
    def bound_exponent(self) -> int:
        return singleton_bound(self.diagram, self.delta)

    @property
    def meets_bound(self) -> bool:
        return self.size == self.q**self.bound_exponent

    def min_distance(self) -> int:
        """Minimum pairwise rank distance; min(rows, cols) for fewer than two words."""
        best = min(self.diagram.rows, self.diagram.cols) if self.words else 0
        for a, b in itertools.combinations(self.words, 2):
            best = min(best, small_rank(((a - b) % self.q).tolist(), self.q))
        return best

    def is_supported(self) -> bool:
        off = ~self.diagram.mask()
        return all(not w[off].any() for w in self.words)


def batched_rank(mats: np.ndarray, q: int) -> np.ndarray:
    """Ranks over F_q of a stack of equally shaped matrices, shape (N, m, n)."""
    m = np.array(mats, dtype=np.int64) % q
    n_mats, n_rows, n_cols = m.shape
    inv = np.array([0] + [pow(x, q - 2, q) for x in range(1, q)], dtype=np.int64)
    used = np.zeros((n_mats, n_rows), dtype=bool)
    ranks = np.zeros(n_mats, dtype=np.int64)
    for c in range(n_cols):
        cand = (m[:, :, c] != 0) & ~used
        idx = np.flatnonzero(cand.any(axis=1))
        if idx.size == 0:
            continue
        piv = cand[idx].argmax(axis=1)
        prow = m[idx, piv] * inv[m[idx, piv, c]][:, None] % q
        factors = m[idx, :, c].copy()
        factors[np.arange(idx.size), piv] = 0
        m[idx] = (m[idx] - factors[:, :, None] * prow[:, None, :]) % q
        m[idx, piv] = prow
        used[idx, piv] = True
        ranks[idx] += 1
    return ranks


class _DotSpace:
    """Supported matrices indexed by their base-q digit code over the dots.

    Word i has digit vector ``digits[i]`` (first dot most significant), the
    order of ``itertools.product``.  Ranks of all words are tabulated once,
    so the rank of a difference is a table lookup.
    """

    def __init__(self, diagram: FerrersDiagram, q: int):
        self.diagram = diagram
        self.q = q
        self.positions = diagram.dot_positions()
        d = len(self.positions)
        self.size = q**d
        self.weights = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
        self.digits = (np.arange(self.size, dtype=np.int64)[:, None] // self.weights) % q
        mats = np.zeros((self.size, diagram.rows, diagram.cols), dtype=np.int64)
        if d:
            rows, cols = zip(*self.positions)
            mats[:, list(rows), list(cols)] = self.digits
        self.ranks = batched_rank(mats, q) if self.size else np.zeros(0, dtype=np.int64)

    def matrix(self, digits: Sequence[int]) -> np.ndarray:
        m = np.zeros((self.diagram.rows, self.diagram.cols), dtype=np.int64)
        for (i, j), x in zip(self.positions, digits):
            m[i, j] = x
        return m

    def diff_codes(self, block: np.ndarray, word: np.ndarray) -> np.ndarray:
        """Codes of ``block[i] - word`` for a block of digit rows."""
        return ((block - word) % self.q) @ self.weights


EXHAUSTIVE_WORDS = 2**10
GREEDY_WORDS = 2**16
MRD_WORDS = 2**16


def _gabidulin_matrices(rows: int, cols: int, delta: int, q: int) -> list[np.ndarray]:
    """F_q-basis of a Gabidulin MRD code of rows x cols matrices at rank distance delta."""
    from .fields import make_field

    if rows > cols:
        return [m.T.copy() for m in _gabidulin_matrices(cols, rows, delta, q)]
    dim = rows - delta + 1
    if dim <= 0 or rows == 0:
        return []
    ctx = make_field(q, cols)
    points = ctx.basis()[:rows]
    out = []
    for j in range(dim):
        twisted = [ctx.frob(g, j) for g in points]
        for b in ctx.basis():
            out.append(np.array([ctx.coeffs(ctx.mul(b, g)) for g in twisted], dtype=np.int64))
    return out


def _mrd_restrict(diagram: FerrersDiagram, delta: int, q: int) -> list[np.ndarray]:
    rows, cols = diagram.rows, diagram.cols
    zero = np.zeros((rows, cols), dtype=np.int64)
    if delta > min(rows, cols):
        return [zero]
    basis = _gabidulin_matrices(rows, cols, delta, q)
    flat = np.array([m.ravel() for m in basis], dtype=np.int64)
    off = ~diagram.mask().ravel()
    if off.any():
        combos = nullspace(flat[:, off].T, q)
        sub = combos @ flat % q if combos.size else np.zeros((0, flat.shape[1]), dtype=np.int64)
    else:
        sub = flat
    if sub.shape[0]:
        r, _, rk = rref(sub, q)
        sub = r[:rk]
    dim = sub.shape[0]
    _caps.check(q**dim, _caps.cap(MRD_WORDS), "restricted MRD subcode")
    words = []
    for coeffs in itertools.product(range(q), repeat=dim):
        vec = np.asarray(coeffs, dtype=np.int64) @ sub % q if dim else np.zeros(rows * cols, dtype=np.int64)
        words.append(vec.reshape(rows, cols))
    return words


def _greedy(space: _DotSpace, delta: int, seed: int) -> list[tuple[int, ...]]:
    order = np.arange(space.size)
    if seed:
        order = np.random.default_rng(seed).permutation(space.size)
    chosen = np.empty_like(space.digits)
    m = 0
    for i in order:
        w = space.digits[i]
        if m and (space.ranks[space.diff_codes(chosen[:m], w)] < delta).any():
            continue
        chosen[m] = w
        m += 1
    return [tuple(int(x) for x in row) for row in chosen[:m]]


def _bitset(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _exhaustive(space: _DotSpace, delta: int, at_least: int) -> list[tuple[int, ...]] | None:
    """Maximum code containing the zero word, or None if smaller than ``at_least``."""
    # codes are translation invariant, so fix the zero word
    far = np.flatnonzero(space.ranks >= delta)
    block = space.digits[far]
    adj = []
    for i in range(far.size):
        ok = space.ranks[space.diff_codes(block, block[i])] >= delta
        ok[i] = False
        adj.append(_bitset(ok))
    bound = space.q ** singleton_bound(space.diagram, delta)
    clique = max_clique(adj, lower=max(0, at_least - 2), upper=bound - 1)
    if len(clique) + 1 < at_least:
        return None
    zero = tuple([0] * len(space.positions))
    return [zero] + [tuple(int(x) for x in block[i]) for i in clique]


METHODS = ("auto", "mrd-restrict", "greedy", "exhaustive")


def construct_ferrers_code(
    diagram: FerrersDiagram, delta: int, q: int, method: str = "auto", seed: int = 0
) -> FerrersCode:
    """Build a code on ``diagram`` with minimum rank distance >= ``delta``.

    ``mrd-restrict`` takes the subcode of a Gabidulin code that vanishes
    off the diagram; ``greedy`` scans supported matrices (lexicographically
    for seed 0, in a seeded random order otherwise); ``exhaustive`` finds a
    maximum code by clique search.  ``auto`` starts from ``mrd-restrict``
    and, if that falls short of the Singleton-like bound, tries the
    searches allowed by the size caps, keeping the largest result.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if delta < 1:
        raise ValueError(f"minimum distance must be >= 1, got {delta}")
    if diagram.n_dots == 0:
        return FerrersCode(diagram, [np.zeros((diagram.rows, diagram.cols), dtype=np.int64)], delta, q, method)
    bound = q ** singleton_bound(diagram, delta)
    n_words = q**diagram.n_dots

    def from_digits(space, ds):
        return [space.matrix(d) for d in ds]

    if method == "mrd-restrict":
        return FerrersCode(diagram, _mrd_restrict(diagram, delta, q), delta, q, method)
    if method == "greedy":
        _caps.check(n_words, _caps.cap(GREEDY_WORDS), "greedy Ferrers search")
        space = _DotSpace(diagram, q)
        return FerrersCode(diagram, from_digits(space, _greedy(space, delta, seed)), delta, q, method)
    if method == "exhaustive":
        _caps.check(n_words, _caps.cap(EXHAUSTIVE_WORDS), "exhaustive Ferrers search")
        # seed with the MRD subcode; if it meets the bound it is already maximum
        seed_code = _mrd_restrict(diagram, delta, q)
        if len(seed_code) < bound:
            space = _DotSpace(diagram, q)
            found = _exhaustive(space, delta, len(seed_code) + 1)
            if found is not None:
                return FerrersCode(diagram, from_digits(space, found), delta, q, method)
        return FerrersCode(diagram, seed_code, delta, q, method, {"seed": "mrd-restrict"})

    best = FerrersCode(diagram, _mrd_restrict(diagram, delta, q), delta, q, "mrd-restrict")
    if best.size < bound and n_words <= _caps.cap(EXHAUSTIVE_WORDS):
        space = _DotSpace(diagram, q)
        found = _exhaustive(space, delta, best.size + 1)
        if found is not None:
            best = FerrersCode(diagram, from_digits(space, found), delta, q, "exhaustive")
    elif best.size < bound and n_words <= _caps.cap(GREEDY_WORDS):
        space = _DotSpace(diagram, q)
        words = _greedy(space, delta, seed)
        if len(words) > best.size:
            best = FerrersCode(diagram, from_digits(space, words), delta, q, "greedy")
    return best


# --- lifting and multilevel assembly ----------------------------------------


def lift_word(word: np.ndarray, p: Sequence[int], n: int, q: int) -> Subspace:
    """RREF subspace with pivots p whose free entries are read from ``word``."""
    pivots = set(p)
    tail = [c for c in range(p[0] + 1, n + 1) if c not in pivots]  # 1-based diagram columns
    basis = cell_template(p, n)
    for i, pi in enumerate(p):
        for j, c in enumerate(tail):
            if c > pi:
                basis[i, c - 1] = word[i, j] % q
            elif word[i, j] % q:
                raise ValueError(f"word has an entry off the diagram at ({i}, {j})")
    return Subspace(basis, q, tuple(p))


def lift(code: FerrersCode, p: Sequence[int], n: int) -> SubspaceCode:
    from .schubert import echelon_ferrers_of

    p = tuple(p)
    if echelon_ferrers_of(p, n) != code.diagram:
        raise ValueError(f"diagram {code.diagram!r} does not match the cell {p} in F_q^{n}")
    words = [lift_word(w, p, n, code.q) for w in code.words]
    return SubspaceCode(n, len(p), code.q, words, [f"cell {list(p)}"] * len(words))


def _ferrers_exponent(p: Sequence[int], n: int, delta: int) -> int:
    from .schubert import echelon_ferrers_of

    return singleton_bound(echelon_ferrers_of(p, n), delta)


def select_cells(k: int, r: int, u: int, ell: int, t: int) -> list[tuple[int, ...]]:
    """Greedy cell choice for the multilevel construction inside Omega_{V_u, l}.

    Candidate cells are ranked by their Singleton-like exponent (largest
    first, ties broken by pivot vector).  A cell is taken when its pivot
    set shares at most t positions with every cell already taken, i.e. the
    identifying vectors are at Hamming distance >= 2(k - t).
    """
    from .linalg import enumerate_pivot_vectors
    from .schubert import cell_in_omega_ul

    n = r * k
    delta = k - t
    cands = [p for p in enumerate_pivot_vectors(k, n) if cell_in_omega_ul(p, n, u, ell)]
    cands.sort(key=lambda p: (-_ferrers_exponent(p, n, delta), p))
    chosen: list[tuple[int, ...]] = []
    for p in cands:
        if all(len(set(p) & set(c)) <= t for c in chosen):
            chosen.append(p)
    return chosen


def multilevel_assemble(
    k: int,
    r: int,
    u: int,
    ell: int,
    t: int,
    q: int,
    cells: Sequence[Sequence[int]] | None = None,
    method: str = "auto",
    seed: int = 0,
) -> SubspaceCode:
    """Multilevel (l, t)-intersecting set with respect to U = rowsp(0 | Id_u).

    Each selected cell receives a Ferrers code at rank distance k - t which
    is lifted; the union is then re-checked pairwise and any codeword that
    would drop the subspace distance below 2(k - t) is discarded.
    """
    from .schubert import cell_in_omega_ul, echelon_ferrers_of, standard_flag_space

    _check_lt_params(k, r, u, ell, t)
    n = r * k
    delta = k - t
    if cells is None:
        cells = select_cells(k, r, u, ell, t)
    cells = [tuple(p) for p in cells]
    for p in cells:
        if len(p) != k or not cell_in_omega_ul(p, n, u, ell):
            raise ValueError(f"cell {list(p)} is not a cell of Omega_(U,{ell}) in Gr({k},{n})")
    code = SubspaceCode(
        n,
        k,
        q,
        reference=standard_flag_space(u, n, q),
        name="multilevel",
        params={"q": q, "k": k, "r": r, "u": u, "l": ell, "t": t},
    )
    discarded = 0
    per_cell = []
    word_cells: list[tuple[int, ...]] = []
    for p in cells:
        fc = construct_ferrers_code(echelon_ferrers_of(p, n), delta, q, method=method, seed=seed)
        kept = 0
        # same-cell pairs are safe because lifting doubles rank distance, and
        # cells sharing <= t pivots are safe by the identifying-vector bound
        risky = [c for c, cp in zip(code.codewords, word_cells) if len(set(cp) & set(p)) > t]
        for w in fc.words:
            s = lift_word(w, p, n, q)
            if s in code:
                continue
            if all(intersection_dim(s, c) <= t for c in risky):
                word_cells.append(p)
                code.add(s, f"cell {list(p)}")
                kept += 1
            else:
                discarded += 1
        per_cell.append({"cell": list(p), "ferrersSize": fc.size, "boundExponent": fc.bound_exponent, "kept": kept})
    code.params["cells"] = per_cell
    code.params["discarded"] = discarded
    return code


def _last_pivot_slot(p: Sequence[int], n: int) -> int:
    return n - p[-1] + 1


def multilevel_bound_2k(cells: Sequence[Sequence[int]], q: int, n: int, u: int) -> int:
    """Upper bound sum q^(j_i - 1) for a distance-2k multilevel code on these cells.

    j_i = n - (last pivot of cell i) + 1 counts the last pivot's slot among
    the final u coordinates from the right, so cell i's bottom row carries
    j_i - 1 dots.
    """
    cells = [tuple(p) for p in cells]
    if not cells:
        return 0
    k = len(cells[0])
    if any(len(p) != k for p in cells):
        raise ValueError("cells of different dimensions")
    for p in cells:
        if p[-1] <= n - u:
            raise ValueError(f"cell {list(p)} has its last pivot outside the last {u} coordinates")
    for a, b in itertools.combinations(cells, 2):
        if set(a) & set(b):
            raise ValueError(f"cells {list(a)} and {list(b)} share a pivot position")
    if len(cells) > min(u, n // k):
        raise ValueError(f"{len(cells)} cells exceed min(u, r) = {min(u, n // k)}")
    return sum(q ** (_last_pivot_slot(p, n) - 1) for p in cells)


def max_multilevel_bound_2k(k: int, r: int, u: int, q: int) -> tuple[int, list[tuple[int, ...]]]:
    """Largest value of :func:`multilevel_bound_2k` over admissible cell families.

    Returns the value and one family of pairwise pivot-disjoint cells
    attaining it.  Cells sorted by last pivot L_1 < ... < L_s can be made
    disjoint iff i*k <= L_i for all i, so only the last pivots need to be
    searched.
    """
    n = r * k
    slots = range(n - u + 1, n + 1)
    best_val, best_last = 0, ()
    for s in range(1, min(u, r) + 1):
        for last in itertools.combinations(slots, s):
            if all((i + 1) * k <= lp for i, lp in enumerate(last)):
                val = sum(q ** (n - lp) for lp in last)
                if val > best_val:
                    best_val, best_last = val, last
    cells = []
    used: set[int] = set()
    for lp in best_last:
        free = [c for c in range(1, lp) if c not in used][: k - 1]
        cell = tuple(free) + (lp,)
        used.update(cell)
        cells.append(cell)
    return best_val, cells
