"""Structural toolkit: backedge graphs, degeneracy coloring, mixed
shortest paths, the path decomposition, and the palette combiner.

The central object is the decomposition of a digraph along a shortest
"mixed" path from s to t (forward arcs and non-edges both count as unit
steps, backward arcs are not traversable).  Vertices fall into
arc-neighborhood zones D_0..D_{k+1}, non-neighborhood zones N_0..N_k
and a remainder Z of at most two chain endpoints.  Long forward arcs
between far-apart zones cannot exist, which is what lets a small set of
palettes be recycled along the chain.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import (
    Digraph,
    UndirectedGraph,
    bits,
    find_cycle,
    mask_of,
    set_of,
)
from .oracles import Dicoloring, verify_dicoloring


class Step(enum.Enum):
    ARC = "arc"
    NONARC = "nonarc"


class PaletteTooSmallError(Exception):
    """A palette ran out of colors; the budgets are the theorem statement."""


class BudgetExceededError(Exception):
    """A subcoloring used more colors than its declared budget."""


@dataclass(frozen=True)
class VertexChain:
    """A shortest mixed path v_0..v_k with each step labeled ARC/NONARC."""

    vertices: tuple[int, ...]
    steps: tuple[Step, ...]

    @property
    def k(self) -> int:
        return len(self.steps)

    def validate(self, D: Digraph) -> None:
        if len(self.vertices) != len(self.steps) + 1:
            raise ValueError("chain step count must be len(vertices)-1")
        for i, step in enumerate(self.steps):
            u, v = self.vertices[i], self.vertices[i + 1]
            if step is Step.ARC:
                if not D.has_arc(u, v):
                    raise ValueError(f"step {i} labeled ARC but ({u},{v}) is no arc")
            else:
                if D.has_arc(u, v) or D.has_arc(v, u):
                    raise ValueError(f"step {i} labeled NONARC but {u},{v} adjacent")
        chain = mixed_shortest_path(D, self.vertices[0], self.vertices[-1])
        if chain is None or chain.k != self.k:
            raise ValueError("chain is not a shortest mixed path")


# -- backedge graphs and degeneracy ------------------------------------------


def backedge_graph(D: Digraph, order: Sequence[int]) -> UndirectedGraph:
    """Undirected graph of the arcs going backward with respect to order.

    An arc (u,v) contributes edge {u,v} when v precedes u.  A digon is
    backward in one of its directions no matter the order, so its
    endpoints are always joined.
    """
    if sorted(order) != list(range(D.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = [0] * D.n
    for i, v in enumerate(order):
        pos[v] = i
    edges = []
    for u, v in D.arcs():
        if pos[v] < pos[u]:
            edges.append((u, v))
    return UndirectedGraph(D.n, edges)


def degeneracy_color(G: UndirectedGraph) -> tuple[int, tuple[int, ...]]:
    """Degeneracy d by repeated min-degree removal, plus a proper
    coloring with at most d+1 colors (greedy along the reverse peel)."""
    n = G.n
    alive = G.full_mask
    peel: list[int] = []
    d = 0
    while alive:
        v = min(bits(alive), key=lambda w: ((G.adj_mask(w) & alive).bit_count(), w))
        d = max(d, (G.adj_mask(v) & alive).bit_count())
        peel.append(v)
        alive ^= 1 << v
    colors = [-1] * n
    for v in reversed(peel):
        taken = {colors[w] for w in bits(G.adj_mask(v)) if colors[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return d, tuple(colors)


def color_via_backedge(D: Digraph, order: Sequence[int]) -> Dicoloring:
    """Proper coloring of the backedge graph, read as a dicoloring.

    Every stable set of the backedge graph induces an acyclic
    subdigraph, so the result is always a valid dicoloring.
    """
    _, colors = degeneracy_color(backedge_graph(D, order))
    col = Dicoloring(colors)
    bad = verify_dicoloring(D, col)
    if bad is not None:
        raise AssertionError(f"backedge coloring produced a monochromatic cycle: {bad}")
    return col


# -- mixed shortest paths ----------------------------------------------------


def mixed_shortest_path(D: Digraph, s: int, t: int) -> VertexChain | None:
    """BFS over moves u->w where (u,w) is an arc or {u,w} a non-edge.

    Returns a canonical shortest chain (vertices expanded in ascending
    id, parents fixed at first discovery) or None when t is unreachable.
    s == t yields the length-0 chain.
    """
    if not (0 <= s < D.n and 0 <= t < D.n):
        raise ValueError("endpoint out of range")
    if s == t:
        return VertexChain((s,), ())
    parent = {s: -1}
    frontier = [s]
    while frontier and t not in parent:
        nxt = []
        for u in frontier:
            moves = (D.out_mask(u) | D.non_mask(u)) & ~mask_of(parent)
            for w in bits(moves):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    steps = tuple(
        Step.ARC if D.has_arc(path[i], path[i + 1]) else Step.NONARC
        for i in range(len(path) - 1)
    )
    return VertexChain(tuple(path), steps)


# -- path decomposition ------------------------------------------------------


@dataclass(frozen=True)
class PathDecomposition:
    """Partition of V into arc zones D_0..D_{k+1}, non-neighborhood zones
    N_0..N_k and remainder Z (chain endpoints only, and only for short
    chains)."""

    digraph: Digraph
    chain: VertexChain
    d_sets: tuple[frozenset[int], ...]
    n_sets: tuple[frozenset[int], ...]
    z: frozenset[int]

    @property
    def k(self) -> int:
        return self.chain.k

    def check_partition(self) -> None:
        seen: set[int] = set()
        for part in itertools.chain(self.d_sets, self.n_sets, (self.z,)):
            if part & seen:
                raise AssertionError("decomposition parts overlap")
            seen |= part
        if seen != set(range(self.digraph.n)):
            raise AssertionError("decomposition does not cover V")
        if not self.z <= {self.chain.vertices[0], self.chain.vertices[-1]}:
            raise AssertionError("Z contains a non-endpoint vertex")

    def check_long_arcs(self) -> None:
        """No forward arc D_i -> D_j for j >= i+5, and none N_i -> N_j for
        j >= i+4."""
        D = self.digraph
        d_masks = [mask_of(s) for s in self.d_sets]
        n_masks = [mask_of(s) for s in self.n_sets]
        for i, src in enumerate(d_masks):
            far = 0
            for j in range(i + 5, len(d_masks)):
                far |= d_masks[j]
            if far:
                for v in bits(src):
                    if D.out_mask(v) & far:
                        raise AssertionError(f"long forward arc out of D_{i}")
        for i, src in enumerate(n_masks):
            far = 0
            for j in range(i + 4, len(n_masks)):
                far |= n_masks[j]
            if far:
                for v in bits(src):
                    if D.out_mask(v) & far:
                        raise AssertionError(f"long forward arc out of N_{i}")


def build_path_decomposition(D: Digraph, chain: VertexChain) -> PathDecomposition:
    """Evaluate the zone definitions in their written subtraction order.

    D_i comes from the arc/non-arc neighborhoods along the chain, N_i
    from the vertex non-neighborhoods, then the endpoint zones D_0 and
    D_{k+1}, then Z as the remainder.  For chains of length <= 1 the
    chain vertices themselves go to Z; for longer chains they land in a
    zone on their own and Z is empty.
    """
    chain.validate(D)
    vs = chain.vertices
    k = chain.k
    full = D.full_mask
    chain_mask = mask_of(vs)
    # for k <= 1 the chain vertices are withheld from every zone and put
    # into Z at the end
    eligible = full & ~chain_mask if k <= 1 else full

    d_masks = [0] * (k + 2)
    taken = 0
    for i in range(1, k + 1):
        ne = D.out_mask(vs[i]) & D.in_mask(vs[i - 1])  # N(e_i)
        d_masks[i] = ne & eligible & ~taken
        taken |= d_masks[i]

    n_masks = [0] * (k + 1)
    d_union = taken
    n_taken = 0
    for i in range(k + 1):
        n_masks[i] = D.non_mask(vs[i]) & eligible & ~d_union & ~n_taken
        n_taken |= n_masks[i]

    d_masks[0] = D.out_mask(vs[0]) & eligible & ~d_union & ~n_taken
    d_masks[k + 1] |= D.in_mask(vs[k]) & eligible & ~d_union & ~n_taken & ~d_masks[0]

    z = full & ~(d_union | n_taken | d_masks[0] | d_masks[k + 1])
    if k >= 2:
        # chain vertices land in a zone on their own; anything left over
        # would violate the decomposition lemma
        if z:
            raise AssertionError(f"nonempty remainder {set_of(z)} on a long chain")

    decomp = PathDecomposition(
        digraph=D,
        chain=chain,
        d_sets=tuple(set_of(m) for m in d_masks),
        n_sets=tuple(set_of(m) for m in n_masks),
        z=set_of(z),
    )
    decomp.check_partition()
    return decomp


# -- palette budgets and the combiner ----------------------------------------


@dataclass(frozen=True)
class PaletteBudget:
    """Per-zone color budgets: b for the endpoint zones D_0 and D_{k+1},
    c for every other D_i, d for every N_i.  ``save_ends`` declares that
    no arc runs from D_0 to D_{k+1}, which lets the two endpoint zones
    share their extra colors."""

    b: int
    c: int
    d: int
    save_ends: bool = False

    def __post_init__(self) -> None:
        if self.b < 0 or self.c < 0 or self.d < 0:
            raise ValueError("budgets must be nonnegative")

    def color_bound(self, k: int) -> int:
        """Total colors the combiner may use for a chain of length k,
        remainder colors included."""
        b, c, d = self.b, self.c, self.d
        if k <= 1:
            return 2 * d + c + b + 2 + (0 if self.save_ends else b)
        if self.save_ends and b >= c:
            return 4 * c + 4 * d + b
        if b > c:
            return 5 * c + 4 * d + 2 * (b - c)
        return 5 * c + 4 * d


Zone = tuple[str, int]


def combine_palettes(
    decomp: PathDecomposition,
    budget: PaletteBudget,
    subcolorings: Mapping[Zone, Mapping[int, int]],
    palette: Sequence[int] | None = None,
) -> Dicoloring:
    """Merge per-zone colorings into one dicoloring of the whole digraph.

    Zone keys are ("D", i) and ("N", i).  Each subcoloring maps the
    zone's vertices (original labels) to local colors; D zones may use
    at most c locals (b for the endpoint zones), N zones at most d.
    Zones five (D) or four (N) apart reuse the same palette, endpoint
    extras are shared when save_ends holds, and each remainder vertex
    gets a fresh color.  Colors are drawn in order from ``palette`` or
    from 0,1,2,... when none is given.
    """
    mapping, _ = _combine_zones(decomp, budget, subcolorings, palette, zones=None)
    col = Dicoloring.from_mapping(decomp.digraph.n, mapping)
    bad = verify_dicoloring(decomp.digraph, col)
    if bad is not None:
        raise AssertionError(f"combined coloring has a monochromatic cycle: {bad}")
    if col.num_colors > budget.color_bound(decomp.k):
        raise AssertionError(
            f"combiner used {col.num_colors} colors, over the "
            f"{budget.color_bound(decomp.k)} bound"
        )
    return col


def _combine_zones(
    decomp: PathDecomposition,
    budget: PaletteBudget,
    subcolorings: Mapping[Zone, Mapping[int, int]],
    palette: Sequence[int] | None,
    zones: list[Zone] | None,
):
    """Palette engine shared with the dense-digraph algorithm.

    ``zones`` limits which zones are colored (None means every nonempty
    zone, which then must all be covered by ``subcolorings``).  Returns
    (vertex -> global color, number of colors drawn).  Partial results
    are still checked for monochromatic cycles on their support.
    """
    D = decomp.digraph
    k = decomp.k
    source = iter(palette) if palette is not None else itertools.count()
    drawn = 0

    def draw() -> int:
        nonlocal drawn
        try:
            c = next(source)
        except StopIteration:
            raise PaletteTooSmallError(
                f"palette exhausted after {drawn} colors"
            ) from None
        drawn += 1
        return c

    blocks: dict[object, list[int]] = {}

    def block_color(key: object, local: int) -> int:
        blk = blocks.setdefault(key, [])
        while len(blk) <= local:
            blk.append(draw())
        return blk[local]

    if zones is None:
        zones = [("D", i) for i in range(k + 2)] + [("N", i) for i in range(k + 1)]
        for zone in zones:
            kind, i = zone
            members = decomp.d_sets[i] if kind == "D" else decomp.n_sets[i]
            if members and zone not in subcolorings:
                raise ValueError(f"missing subcoloring for nonempty zone {zone}")
    if budget.save_ends:
        _assert_no_end_arcs(decomp)

    full_share_ends = budget.save_ends and k <= 1
    mapping: dict[int, int] = {}
    for zone in zones:
        kind, i = zone
        members = decomp.d_sets[i] if kind == "D" else decomp.n_sets[i]
        if not members:
            continue
        sub = subcolorings[zone]
        if set(sub) != members:
            raise ValueError(f"subcoloring for zone {zone} does not match its set")
        is_end = kind == "D" and i in (0, k + 1)
        cap = (budget.b if is_end else budget.c) if kind == "D" else budget.d
        hi = max(sub.values())
        if min(sub.values()) < 0 or hi >= cap:
            raise BudgetExceededError(
                f"zone {zone} uses local color {hi}, budget is {cap}"
            )
        for v in sorted(members):
            local = sub[v]
            if kind == "N":
                mapping[v] = block_color(("N", i % 4), local)
            elif is_end and full_share_ends:
                mapping[v] = block_color(("END", "shared"), local)
            elif is_end and local >= budget.c:
                extra = "shared" if budget.save_ends else ("end", i % 5)
                mapping[v] = block_color(("X", extra), local - budget.c)
            else:
                mapping[v] = block_color(("D", i % 5), local)
    for v in sorted(decomp.z):
        mapping[v] = draw()

    for c in sorted(set(mapping.values())):
        cls = mask_of(v for v, cv in mapping.items() if cv == c)
        if find_cycle(D, cls) is not None:
            raise AssertionError(f"zone merge left a monochromatic cycle in color {c}")
    return mapping, drawn


def _assert_no_end_arcs(decomp: PathDecomposition) -> None:
    D = decomp.digraph
    end_mask = mask_of(decomp.d_sets[decomp.k + 1])
    for v in sorted(decomp.d_sets[0]):
        if D.out_mask(v) & end_mask:
            raise ValueError("save_ends set but an arc runs from D_0 to D_{k+1}")
