"""Exact small-instance oracles: dicoloring verification, dichromatic
number, maximum acyclic set, chromatic number and independence number.

These are the ground truth the approximation bounds are tested against.
They are exhaustive searches and refuse instances beyond configured
size guards rather than silently hanging.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graphs import (
    CycleCertificate,
    Digraph,
    UndirectedGraph,
    bits,
    find_cycle,
    is_acyclic,
    set_of,
    underlying_and_predicates,
)

DICHROMATIC_LIMIT = 24
ACYCLIC_LIMIT = 28
CHROMATIC_LIMIT = 24
INDEPENDENCE_LIMIT = 28


class InstanceTooLargeError(Exception):
    """Raised when an exact search is asked to exceed its size guard."""


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise InstanceTooLargeError(
            f"instance too large for exact {what}: n={n} exceeds guard {limit}"
        )


@dataclass(frozen=True)
class Dicoloring:
    """Total map vertex -> color id.  Validity is checked, never assumed."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    k = num_colors

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Dicoloring":
        if len(mapping) != n or set(mapping) != set(range(n)):
            raise ValueError("coloring is not total on 0..n-1")
        return cls(tuple(mapping[v] for v in range(n)))

    def normalized(self) -> "Dicoloring":
        """Relabel color ids to 0..k-1 without gaps, by first appearance."""
        remap: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return Dicoloring(tuple(out))

    def class_masks(self) -> dict[int, int]:
        masks: dict[int, int] = {}
        for v, c in enumerate(self.colors):
            masks[c] = masks.get(c, 0) | (1 << v)
        return masks


@dataclass(frozen=True)
class AcyclicSetWitness:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


def verify_dicoloring(D: Digraph, coloring: Dicoloring):
    """None if every color class induces an acyclic subdigraph, else the
    offending (color id, CycleCertificate)."""
    if len(coloring.colors) != D.n:
        raise ValueError("coloring is not total on V(D)")
    for c, mask in sorted(coloring.class_masks().items()):
        cyc = find_cycle(D, mask)
        if cyc is not None:
            return c, CycleCertificate(cyc)
    return None


def _closes_cycle(D: Digraph, class_mask: int, v: int) -> bool:
    """Would adding v to the class create a monochromatic cycle?

    True iff some in-neighbor of v inside the class is reachable from an
    out-neighbor of v inside the class (digons included via the direct
    overlap test).
    """
    start = D.out_mask(v) & class_mask
    if not start:
        return False
    targets = D.in_mask(v) & class_mask
    if start & targets:
        return True
    reached = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            nxt |= D.out_mask(w) & class_mask
        nxt &= ~reached
        if not nxt:
            return False
        if nxt & targets:
            return True
        reached |= nxt
        frontier = nxt
    return False


def is_k_dicolorable(
    D: Digraph, k: int, max_n: int = DICHROMATIC_LIMIT
) -> Dicoloring | None:
    """A valid dicoloring with at most k classes, or None.

    Exact backtracking over class assignments.  Symmetry is broken by
    never opening more than one new class at a time (the smallest-id
    unassigned vertex of each so-far-unused class is forced), and
    per-class acyclicity is maintained incrementally.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _guard(D.n, max_n, "dicolorability")
    n = D.n
    if n == 0:
        return Dicoloring(())
    # high-degree vertices first: they constrain the search hardest
    order = sorted(range(n), key=lambda v: (-(D.out_degree(v) + D.in_degree(v)), v))
    assign = [-1] * n
    class_masks = [0] * k
    used = 0

    def bt(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        limit = min(used + 1, k)
        for c in range(limit):
            if _closes_cycle(D, class_masks[c], v):
                continue
            opened = c == used
            assign[v] = c
            class_masks[c] |= 1 << v
            if opened:
                used += 1
            if bt(i + 1):
                return True
            if opened:
                used -= 1
            class_masks[c] ^= 1 << v
            assign[v] = -1
        return False

    if not bt(0):
        return None
    return Dicoloring(tuple(assign))


def dichromatic_number(
    D: Digraph, max_n: int = DICHROMATIC_LIMIT
) -> tuple[int, Dicoloring]:
    """Smallest k admitting a valid k-dicoloring, with a witness."""
    _guard(D.n, max_n, "dichromatic number")
    if D.n == 0:
        return 0, Dicoloring(())
    if not isinstance(is_acyclic(D), CycleCertificate):
        return 1, Dicoloring((0,) * D.n)
    k = 2
    while True:
        col = is_k_dicolorable(D, k, max_n=max_n)
        if col is not None:
            return k, col
        k += 1


def max_acyclic_set(D: Digraph, max_n: int = ACYCLIC_LIMIT) -> AcyclicSetWitness:
    """Maximum-cardinality vertex set inducing an acyclic subdigraph.

    Branch and bound on the complement: the excluded vertices form a
    directed feedback vertex set, and each branching step destroys one
    witness cycle.  The witness has size n - |minimum FVS|.
    """
    _guard(D.n, max_n, "maximum acyclic set")
    n = D.n
    best_mask = _greedy_acyclic(D)
    best_size = best_mask.bit_count()

    def bb(alive: int, excluded: int) -> None:
        nonlocal best_mask, best_size
        if alive.bit_count() <= best_size:
            return
        cyc = find_cycle(D, alive)
        if cyc is None:
            best_mask = alive
            best_size = alive.bit_count()
            return
        for v in cyc:
            bb(alive ^ (1 << v), excluded | (1 << v))

    bb(D.full_mask, 0)
    return AcyclicSetWitness(set_of(best_mask))


def _greedy_acyclic(D: Digraph) -> int:
    """Initial incumbent: strip a max-degree vertex off each found cycle."""
    alive = D.full_mask
    while True:
        cyc = find_cycle(D, alive)
        if cyc is None:
            return alive
        worst = max(
            cyc,
            key=lambda v: ((D.out_mask(v) | D.in_mask(v)) & alive).bit_count(),
        )
        alive ^= 1 << worst


def maximum_independent_set(
    G: UndirectedGraph, max_n: int = INDEPENDENCE_LIMIT
) -> frozenset[int]:
    """Exact maximum independent set by branch and bound."""
    _guard(G.n, max_n, "independence number")
    best = 0
    best_mask = 0

    def bb(avail: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = size
            best_mask = chosen
            return
        # branch on the max-degree available vertex
        v = max(bits(avail), key=lambda w: ((G.adj_mask(w) & avail).bit_count(), -w))
        # include v
        bb(avail & ~(G.adj_mask(v) | (1 << v)), chosen | (1 << v), size + 1)
        # exclude v
        bb(avail ^ (1 << v), chosen, size)

    bb(G.full_mask, 0, 0)
    return set_of(best_mask)


def chromatic_number(
    G: UndirectedGraph, max_n: int = CHROMATIC_LIMIT
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number by iterative-deepening backtracking."""
    _guard(G.n, max_n, "chromatic number")
    n = G.n
    if n == 0:
        return 0, ()
    if G.edge_count == 0:
        return 1, (0,) * n
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    clique = _greedy_clique(G)
    k = max(2, len(clique))
    while True:
        res = _color_with(G, order, k)
        if res is not None:
            return k, res
        k += 1


def _greedy_clique(G: UndirectedGraph) -> list[int]:
    clique: list[int] = []
    cand = G.full_mask
    while cand:
        v = max(bits(cand), key=lambda w: ((G.adj_mask(w) & cand).bit_count(), -w))
        clique.append(v)
        cand &= G.adj_mask(v)
    return clique


def _color_with(G: UndirectedGraph, order, k: int) -> tuple[int, ...] | None:
    n = G.n
    assign = [-1] * n
    class_masks = [0] * k
    used = 0

    def bt(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if class_masks[c] & G.adj_mask(v):
                continue
            opened = c == used
            assign[v] = c
            class_masks[c] |= 1 << v
            if opened:
                used += 1
            if bt(i + 1):
                return True
            if opened:
                used -= 1
            class_masks[c] ^= 1 << v
            assign[v] = -1
        return False

    return tuple(assign) if bt(0) else None


def chromatic_and_alpha(
    G: UndirectedGraph, max_n: int = CHROMATIC_LIMIT
) -> tuple[int, int, tuple[tuple[int, ...], frozenset[int]]]:
    """Exact (chromatic number, independence number) with witnesses."""
    chi, coloring = chromatic_number(G, max_n=max_n)
    mis = maximum_independent_set(G, max_n=max(max_n, INDEPENDENCE_LIMIT))
    return chi, len(mis), (coloring, mis)


def independence_number_digraph(D: Digraph, max_n: int = INDEPENDENCE_LIMIT) -> int:
    """Independence number of the underlying undirected graph."""
    G, _, _ = underlying_and_predicates(D)
    return len(maximum_independent_set(G, max_n=max_n))
