"""Exact maximum clique by branch and bound with greedy-colouring bounds.

Graphs are adjacency bitsets: ``adj[v]`` is an int whose bit ``w`` is set
when v and w are adjacent.  Vertices are renumbered by non-increasing
degree so that colouring proceeds from the densest part of the graph,
which keeps the search deterministic for a given input order.
"""

from __future__ import annotations

from typing import Sequence


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _colour_sort(p: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colours: list[int] = []
    colour = 0
    uncoloured = p
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


class _Reached(Exception):
    pass


def max_clique(adj: Sequence[int], lower: int = 0, upper: int | None = None) -> list[int]:
    """Return the vertices of one maximum clique (sorted).

    ``lower`` is a known clique size; the search only reports cliques
    strictly larger, returning ``[]`` if none exists.  ``upper`` is a
    proven bound on the clique number: the search stops as soon as a
    clique of that size is found.
    """
    n = len(adj)
    if n == 0:
        return []
    deg = [bin(a).count("1") for a in adj]
    perm = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(perm)}
    radj = [0] * n
    for v in range(n):
        bits = 0
        for w in _bits(adj[v]):
            if w != v:
                bits |= 1 << pos[w]
        radj[pos[v]] = bits

    best: list[int] = []
    best_size = lower

    def expand(clique: list[int], p: int) -> None:
        nonlocal best, best_size
        order, colours = _colour_sort(p, radj)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colours[idx] <= best_size:
                return
            v = order[idx]
            clique.append(v)
            newp = p & radj[v]
            if newp:
                expand(clique, newp)
            elif len(clique) > best_size:
                best = list(clique)
                best_size = len(clique)
                if upper is not None and best_size >= upper:
                    raise _Reached
            clique.pop()
            p &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
    except _Reached:
        pass
    return sorted(perm[v] for v in best)


def adjacency_from_predicate(items: Sequence, adjacent) -> list[int]:
    adj = [0] * len(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if adjacent(items[i], items[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj
