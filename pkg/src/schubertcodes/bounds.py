"""Size bounds for (l, t)-intersecting sets and an exact verifier.

``m_q(k, r, u, l, t)`` is the largest number of k-subspaces of F_q^{rk}
that each meet a fixed u-space U in dimension >= l and pairwise meet in
dimension <= t.  The (1, 0) case is the plain intersecting set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import _caps
from .clique import max_clique
from .codes import SubspaceCode
from .ferrers import closed_form_nu_min, max_multilevel_bound_2k
from .linalg import BITSET_AMBIENT, Subspace, enumerate_subspaces, gaussian_binomial, intersection_dim, pairwise_intersection_dims


@dataclass
class VerificationReport:
    valid: bool
    size: int
    min_distance: int
    worst_pair_dim: int
    reference_dims: list[int]
    k: int
    ell: int
    t: int
    bounds: dict[str, tuple[int | None, bool | None]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "size": self.size,
            "minDistance": self.min_distance,
            "worstPairIntersectionDim": self.worst_pair_dim,
            "perCodewordUIntersectionDims": self.reference_dims,
            "boundComparisons": {
                name: {"value": v, "met": met} for name, (v, met) in self.bounds.items()
            },
        }

    def lines(self) -> list[str]:
        out = [
            f"valid                 {'yes' if self.valid else 'NO'}",
            f"size                  {self.size}",
            f"minimum distance      {self.min_distance}",
            f"worst pair dim        {self.worst_pair_dim}  (allowed <= {self.t})",
            f"min dim with U        {min(self.reference_dims) if self.reference_dims else '-'}  (required >= {self.ell})",
        ]
        for name, (v, met) in self.bounds.items():
            shown = "n/a" if v is None else str(v)
            words = ("  reached", "  below") if name.startswith("lower") else ("  attained", "  not attained")
            verdict = "" if met is None else words[0 if met else 1]
            out.append(f"{name:<22}{shown}{verdict}")
        return out


def upper_bound_basic(k: int, r: int, u: int, q: int) -> int:
    """(q^u - 1)/(q - 1), the number of points of a u-space."""
    if not 1 <= u < r * k:
        raise ValueError(f"need 1 <= u < rk, got u={u}, rk={r * k}")
    return (q**u - 1) // (q - 1)


def upper_bound_general(u: int, ell: int, t: int, q: int) -> int | None:
    """Gaussian binomial (u choose l)_q when t + 1 <= l, else None."""
    if t + 1 > ell:
        return None
    return gaussian_binomial(u, ell, q)


def lower_bound_multilevel(k: int, r: int, u: int, ell: int, t: int, q: int | None = None) -> int:
    """Exponent e with m_q >= q^e, assuming every Ferrers diagram admits an optimal code."""
    return closed_form_nu_min(k, r, u, ell, t)


def verify_intersecting(code: SubspaceCode, reference: Subspace, ell: int, t: int) -> VerificationReport:
    """Exact check of the (l, t)-intersecting property of ``code`` w.r.t. ``reference``."""
    if reference.n != code.n or reference.q != code.q:
        raise ValueError(f"ambient mismatch: code in F_{code.q}^{code.n}, U in F_{reference.q}^{reference.n}")
    k = code.k
    words = code.codewords
    dims_ok = all(w.dim == k for w in words)
    ref_dims = [intersection_dim(w, reference) for w in words]
    worst = max((d for _, _, d in pairwise_intersection_dims(words)), default=0)
    # singleton or empty codes: distance reported as 2k by convention
    min_dist = 2 * (k - worst)
    valid = dims_ok and all(d >= ell for d in ref_dims) and worst <= t
    if valid:
        assert min_dist >= 2 * (k - t)
    report = VerificationReport(valid, len(words), min_dist, worst, ref_dims, k, ell, t)

    q, u = code.q, reference.dim
    if code.n % k == 0 and u >= 1:
        r = code.n // k
        if ell == 1 and t == 0 and u < code.n:
            b = upper_bound_basic(k, r, u, q)
            report.bounds["upper (points of U)"] = (b, len(words) == b)
        g = upper_bound_general(u, ell, t, q)
        report.bounds["upper (l-spaces of U)"] = (g, None if g is None else len(words) == g)
        if 1 <= ell <= min(k, u) and 2 * u <= code.n:
            e = lower_bound_multilevel(k, r, u, ell, t)
            report.bounds["lower q^e (conj.)"] = (q**e, len(words) >= q**e)
    return report


def exact_mq_search(
    k: int, r: int, u: int, ell: int, t: int, q: int, reference: Subspace | None = None
) -> tuple[int, list[Subspace]]:
    """m_q(k, r, u, l, t) by maximum clique search, with one optimal code.

    Vertices are the k-spaces meeting U in dimension >= l, edges join
    pairs meeting in dimension <= t.  U defaults to the span of the last u
    coordinates.
    """
    from .schubert import standard_flag_space

    n = r * k
    _caps.check(gaussian_binomial(n, k, q), _caps.EXACT_SEARCH, f"exact search over Gr_{q}({k},{n})")
    if reference is None:
        reference = standard_flag_space(u, n, q)
    if reference.dim != u or reference.n != n:
        raise ValueError(f"reference must be a {u}-subspace of F_q^{n}")
    verts = [w for w in enumerate_subspaces(k, n, q) if intersection_dim(w, reference) >= ell]
    if q**n <= BITSET_AMBIENT:
        # |W ∩ W'| = q^dim, read off vector-set bitsets
        bitsets = [w.vector_bitset() for w in verts]
        limit = q**t
        adj = [0] * len(verts)
        for i in range(len(verts)):
            bi = bitsets[i]
            row = 0
            for j in range(i + 1, len(verts)):
                if (bi & bitsets[j]).bit_count() <= limit:
                    row |= 1 << j
                    adj[j] |= 1 << i
            adj[i] |= row
    else:
        adj = [0] * len(verts)
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if intersection_dim(verts[i], verts[j]) <= t:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    clique = max_clique(adj)
    return len(clique), [verts[i] for i in clique]


@dataclass
class BoundRow:
    name: str
    value: int | None
    exponent: int | None = None
    conditional: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "exponent": self.exponent,
            "conditional": self.conditional,
            "note": self.note,
        }


def bounds_table(q: int, k: int, r: int, u: int, ell: int, t: int) -> list[BoundRow]:
    """Every bound that applies at these parameters."""
    rows: list[BoundRow] = []
    if ell == 1 and t == 0:
        rows.append(BoundRow("upper: points of U", upper_bound_basic(k, r, u, q)))
    g = upper_bound_general(u, ell, t, q)
    rows.append(BoundRow("upper: l-spaces of U", g, note="" if g is not None else "needs t + 1 <= l"))
    if t == 0 and ell == 1:
        val, cells = max_multilevel_bound_2k(k, r, u, q)
        rows.append(BoundRow("multilevel cells (d=2k)", val, note=f"cells {[list(c) for c in cells]}"))
    e = lower_bound_multilevel(k, r, u, ell, t)
    rows.append(
        BoundRow("lower: multilevel q^e", q**e, exponent=e, conditional=True, note="assumes optimal Ferrers codes exist")
    )
    return rows


def sandwich(sizes: Sequence[int], exact: int, upper: int | None) -> bool:
    return all(s <= exact for s in sizes) and (upper is None or exact <= upper)
