"""Constant-dimension subspace codes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .linalg import Subspace, intersection_dim


@dataclass
class SubspaceCode:
    """An ordered, duplicate-free family of k-subspaces of F_q^n.

    ``labels`` optionally records where each codeword came from (a norm-1
    element, a linear-set point, a Schubert cell); ``reference`` is the
    subspace U the code is meant to be intersecting with respect to.
    """

    n: int
    k: int
    q: int
    codewords: list[Subspace] = field(default_factory=list)
    labels: list[str | None] = field(default_factory=list)
    reference: Subspace | None = None
    name: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        words, labels = self.codewords, self.labels or [None] * len(self.codewords)
        self.codewords, self.labels = [], []
        self._index: dict[Subspace, int] = {}
        dropped = 0
        for w, lab in zip(words, labels):
            if not self._append(w, lab):
                dropped += 1
        if dropped:
            warnings.warn(f"dropped {dropped} duplicate codeword(s)", stacklevel=2)

    def _append(self, w: Subspace, label: str | None) -> bool:
        if w.n != self.n or w.dim != self.k or w.q != self.q:
            raise ValueError(f"codeword {w!r} is not a {self.k}-subspace of F_{self.q}^{self.n}")
        if w in self._index:
            return False
        self._index[w] = len(self.codewords)
        self.codewords.append(w)
        self.labels.append(label)
        return True

    def add(self, w: Subspace, label: str | None = None) -> bool:
        """Append a codeword; returns False if it was already present."""
        return self._append(w, label)

    def extend(self, words: Iterable[Subspace]) -> None:
        for w in words:
            self._append(w, None)

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.codewords)

    def __contains__(self, w: object) -> bool:
        return w in self._index

    def as_set(self) -> frozenset[Subspace]:
        return frozenset(self.codewords)

    def label_of(self, w: Subspace) -> str | None:
        return self.labels[self._index[w]]

    def min_distance(self) -> int:
        """Minimum subspace distance; 2k for codes with fewer than two words."""
        worst = 0
        for i, a in enumerate(self.codewords):
            for b in self.codewords[i + 1 :]:
                worst = max(worst, intersection_dim(a, b))
        return 2 * (self.k - worst)
