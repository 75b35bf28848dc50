"""Core directed-graph representation and primitives.

Vertices are dense integers 0..n-1.  Adjacency is stored as one Python
int per vertex used as a bitset over the vertex range, so set algebra
(intersection, difference, union) compiles down to bulk integer bit
operations.  That keeps the exact-search inner loops fast at desk scale
(n up to a few thousand) without any native extension.

A Digraph is immutable after construction and safe to share across
threads; no operation here mutates its inputs.  Induced subgraphs are
relabeled to 0..|S|-1 and come with an explicit map back to the
original labels.

Digons (a pair of opposite arcs between two vertices) are allowed; an
*oriented* digraph is one without digons, queryable through
``underlying_and_predicates``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class CycleCertificate:
    """Witness that some digraph is not acyclic.

    ``vertices`` lists a directed cycle in order: every consecutive pair
    (cyclically) is an arc.  Length 2 is legal; a digon is a cycle.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


class Digraph:
    """Immutable digraph on vertices 0..n-1, digons allowed, no loops."""

    __slots__ = ("n", "_out", "_in", "full_mask")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) endpoint out of range for n={n}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self._out = tuple(out)
        self._in = tuple(inn)
        self.full_mask = (1 << n) - 1

    # -- basic queries ---------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v) & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def non_mask(self, v: int) -> int:
        """Bitmask of the non-neighborhood of ``v``."""
        return self.full_mask & ~(self._out[v] | self._in[v] | (1 << v))

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self._out[u]):
                yield (u, v)

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def reverse(self) -> "Digraph":
        """The digraph with every arc flipped."""
        return Digraph._from_masks(self.n, self._in, self._out)

    @classmethod
    def _from_masks(
        cls, n: int, out_masks: Sequence[int], in_masks: Sequence[int]
    ) -> "Digraph":
        """Internal: wrap already-validated adjacency masks."""
        g = cls.__new__(cls)
        g.n = n
        g._out = tuple(out_masks)
        g._in = tuple(in_masks)
        g.full_mask = (1 << n) - 1
        return g

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.arc_count})"


class UndirectedGraph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) endpoint out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self.full_mask = (1 << n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self._adj[u]):
                if v > u:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.edge_count})"


# -- constructors ---------------------------------------------------------


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph; duplicate arcs are deduplicated by the bitset."""
    return Digraph(n, arcs)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> UndirectedGraph:
    return UndirectedGraph(n, edges)


# -- neighborhoods --------------------------------------------------------


def neighborhoods(D: Digraph, v: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Out-, in- and non-neighborhood of ``v``.

    The three sets together with {v} cover all vertices; the non-set is
    disjoint from the other two (a digon endpoint sits in both out and
    in).
    """
    if not (0 <= v < D.n):
        raise ValueError(f"vertex {v} out of range")
    return set_of(D.out_mask(v)), set_of(D.in_mask(v)), set_of(D.non_mask(v))


def arc_neighborhood(D: Digraph, u: int, v: int) -> frozenset[int]:
    """Vertices w with arcs v->w and w->u, for the (non-)arc from u to v.

    These are exactly the vertices closing a directed triangle through
    an arc u->v, which is why the set is empty for every arc of a
    C3-free digraph.
    """
    if u == v:
        raise ValueError("arc endpoints must differ")
    return set_of(D.out_mask(v) & D.in_mask(u))


def arc_neighborhood_mask(D: Digraph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("arc endpoints must differ")
    return D.out_mask(v) & D.in_mask(u)


# -- induced subgraphs -----------------------------------------------------


def induced(D: Digraph, S: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph on S, relabeled 0..|S|-1.

    Returns the subgraph and the relabel map: entry i holds the original
    label of new vertex i (ascending original order).
    """
    labels = sorted(set(S))
    for v in labels:
        if not (0 <= v < D.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(labels)}
    smask = mask_of(labels)
    arcs = []
    for v in labels:
        for w in bits(D.out_mask(v) & smask):
            arcs.append((pos[v], pos[w]))
    return Digraph(len(labels), arcs), tuple(labels)


def induced_graph(G: UndirectedGraph, S: Iterable[int]) -> tuple[UndirectedGraph, tuple[int, ...]]:
    labels = sorted(set(S))
    pos = {v: i for i, v in enumerate(labels)}
    smask = mask_of(labels)
    edges = []
    for v in labels:
        for w in bits(G.adj_mask(v) & smask):
            if w > v:
                edges.append((pos[v], pos[w]))
    return UndirectedGraph(len(labels), edges), tuple(labels)


# -- acyclicity ------------------------------------------------------------


def is_acyclic(D: Digraph, within: int | None = None):
    """Topological order (list) if acyclic, else a CycleCertificate.

    ``within`` restricts the check to the induced sub-bitmask (vertices
    keep their original labels).  Ties in the order are broken toward
    the smallest vertex id, so the result is canonical.
    """
    mask = D.full_mask if within is None else within
    indeg = {}
    ready = []
    for v in bits(mask):
        d = (D.in_mask(v) & mask).bit_count()
        indeg[v] = d
        if d == 0:
            heapq.heappush(ready, v)
    order = []
    alive = mask
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        alive ^= 1 << v
        for w in bits(D.out_mask(v) & alive):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if not alive:
        return order
    return CycleCertificate(_extract_cycle(D, alive))


def _extract_cycle(D: Digraph, alive: int) -> tuple[int, ...]:
    """A directed cycle inside ``alive``, every vertex of which has an
    in-neighbor within ``alive`` (the Kahn remainder guarantees this)."""
    start = (alive & -alive).bit_length() - 1
    seen_pos = {start: 0}
    walk = [start]
    v = start
    while True:
        m = D.in_mask(v) & alive
        u = (m & -m).bit_length() - 1  # smallest-id in-neighbor
        if u in seen_pos:
            cyc = walk[seen_pos[u]:]
            cyc.reverse()  # walk followed in-arcs, so reverse for arc order
            return _rotate_min(tuple(cyc))
        seen_pos[u] = len(walk)
        walk.append(u)
        v = u


def _rotate_min(cycle: tuple[int, ...]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def find_cycle(D: Digraph, within: int | None = None) -> tuple[int, ...] | None:
    """A directed cycle inside the given sub-bitmask, or None.

    DFS-based; cheap on cyclic inputs because it stops at the first back
    edge.  Used by the hot loops that only need a witness, not an order.
    """
    mask = D.full_mask if within is None else within
    out = D._out
    grey = 0
    black = 0
    path: list[int] = []
    iters: list[int] = []
    todo = mask
    while todo:
        b = todo & -todo
        root = b.bit_length() - 1
        todo ^= b
        if (black >> root) & 1:
            continue
        path.append(root)
        iters.append(out[root] & mask)
        grey |= b
        while path:
            nbrs = iters[-1]
            if nbrs:
                nb = nbrs & -nbrs
                w = nb.bit_length() - 1
                iters[-1] = nbrs ^ nb
                if (grey >> w) & 1:
                    return _rotate_min(tuple(path[path.index(w):]))
                if not ((black >> w) & 1):
                    path.append(w)
                    iters.append(out[w] & mask)
                    grey |= nb
            else:
                v = path.pop()
                iters.pop()
                grey ^= 1 << v
                black |= 1 << v
    return None


def acyclic(D: Digraph, within: int | None = None) -> bool:
    return find_cycle(D, within) is None


# -- strong connectivity ----------------------------------------------------


def sccs(D: Digraph) -> list[list[int]]:
    """Strongly connected components, in reverse topological order of the
    condensation (sinks of the condensation first).

    Iterative Tarjan; roots scanned and neighbors expanded in ascending
    id, so the output is deterministic.  Vertices within a component are
    listed ascending.
    """
    n = D.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(bits(D.out_mask(root))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(bits(D.out_mask(w)))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                out.append(comp)
    return out


# -- underlying graph and predicates ----------------------------------------


def underlying_and_predicates(D: Digraph) -> tuple[UndirectedGraph, bool, bool]:
    """Underlying undirected graph plus (is_tournament, is_oriented).

    A tournament has a complete underlying graph and no digons; an
    oriented digraph merely has no digons.
    """
    edges = []
    oriented = True
    complete = True
    for u in range(D.n):
        both = D.out_mask(u) | D.in_mask(u)
        if both | (1 << u) != D.full_mask:
            complete = False
        if D.out_mask(u) & D.in_mask(u):
            oriented = False
        for v in bits(both):
            if v > u:
                edges.append((u, v))
    return UndirectedGraph(D.n, edges), complete and oriented, oriented


def digon_saturation(G: UndirectedGraph) -> Digraph:
    """Replace every edge of G by a digon.

    On the result the dichromatic number equals chi(G) and the acyclic
    number equals alpha(G), which the oracle tests lean on.
    """
    arcs = []
    for u, v in G.edges():
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(G.n, arcs)
