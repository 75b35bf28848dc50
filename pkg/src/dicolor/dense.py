"""Coloring 2-dicolorable digraphs of bounded independence number.

A (non-)arc is heavy when its through-neighborhood contains a directed
cycle; heaviness forces differently colored endpoints in any valid
2-dicoloring.  The pipeline first saturates heavy non-edges into arcs
(which preserves every valid 2-dicoloring), then cuts all heavy arcs
and digons with one bipartition into two light oriented parts, and
colors each part recursively along a path decomposition: the zone
between a well-chosen vertex pair costs five colors, and the
non-neighborhood zones recurse at independence number one lower.  The
total lands at (10/3)(4^alpha - 1) colors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    Digraph,
    UndirectedGraph,
    bits,
    find_cycle,
    induced,
    mask_of,
    underlying_and_predicates,
)
from .decompose import (
    PaletteBudget,
    PaletteTooSmallError,
    _combine_zones,
    build_path_decomposition,
    mixed_shortest_path,
)
from .oracles import Dicoloring, verify_dicoloring
from .approx import color_per_scc


class NotTwoDicolorableError(Exception):
    """The 2-dicolorability promise failed in a way without a compact
    certificate (no (s,t) pair with acyclic joint neighborhood)."""


class IndependencePromiseError(Exception):
    """The claimed independence number was exceeded.

    ``pair`` is a non-adjacent vertex pair found where the recursion
    expected a tournament (an independent set larger than the promise
    at that level).
    """

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


def light_part_bound(alpha: int) -> int:
    """Color budget for one light part: (5/3)(4^alpha - 1)."""
    return 5 * (4**alpha - 1) // 3


def dense_bound(alpha: int) -> int:
    """Total budget for a 2-dicolorable digraph: (10/3)(4^alpha - 1)."""
    return 2 * light_part_bound(alpha)


# -- heavy arcs, saturation, and the light split ------------------------------


@dataclass(frozen=True)
class HeavyEdgeReport:
    """All heavy arcs and digons of a digraph, with the undirected graph
    they span (the graph that must be bipartite for 2-dicolorability)."""

    heavy_arcs: frozenset[tuple[int, int]]
    digons: frozenset[tuple[int, int]]
    heavy_graph: UndirectedGraph


@dataclass(frozen=True)
class LightSplit:
    part1: frozenset[int]
    part2: frozenset[int]


@dataclass(frozen=True)
class OddHeavySplitCertificate:
    """Odd cycle of heavy edges: proof the input is not 2-dicolorable.

    Consecutive vertices (cyclically) are joined by a heavy arc or a
    digon, each of which forces distinct colors, so an odd such cycle
    cannot be 2-colored.
    """

    vertices: tuple[int, ...]


def _arc_is_heavy(D: Digraph, u: int, v: int) -> bool:
    # through-set of arc u->v: vertices w with v->w and w->u
    return find_cycle(D, D.out_mask(v) & D.in_mask(u)) is not None


def heavy_edge_report(D: Digraph) -> HeavyEdgeReport:
    heavy = []
    digons = []
    edges = set()
    for u, v in D.arcs():
        if u < v and D.has_arc(v, u):
            digons.append((u, v))
            edges.add((u, v))
            continue
        if D.has_arc(v, u):
            continue  # counted from the other direction
        if _arc_is_heavy(D, u, v):
            heavy.append((u, v))
            edges.add((min(u, v), max(u, v)))
    return HeavyEdgeReport(
        heavy_arcs=frozenset(heavy),
        digons=frozenset(digons),
        heavy_graph=UndirectedGraph(D.n, edges),
    )


def saturate_heavy_nonarcs(D: Digraph) -> Digraph:
    """Fixpoint that adds an arc across every heavy non-edge.

    A cycle in the through-set of a non-edge direction pins the
    orientation: adding that arc cannot create a monochromatic cycle in
    any valid 2-dicoloring, so every such dicoloring of the input stays
    valid on the output.  Pairs are scanned lexicographically and the
    scan restarts after each addition, since additions can create new
    heavy non-edges.  Only arcs are added, never removed.
    """
    out = list(D._out)
    inn = list(D._in)
    n = D.n

    def nonedge(u: int, v: int) -> bool:
        return not ((out[u] >> v) & 1 or (out[v] >> u) & 1)

    changed = True
    while changed:
        changed = False
        work = Digraph._from_masks(n, out, inn)
        for u in range(n):
            for v in range(n):
                if u == v or not nonedge(u, v):
                    continue
                # heavy in direction u->v: cycle among w with u->w->v
                if find_cycle(work, out[u] & inn[v]) is not None:
                    out[u] |= 1 << v
                    inn[v] |= 1 << u
                    changed = True
                    break
            if changed:
                break
    return Digraph._from_masks(n, out, inn)


def is_light(D: Digraph) -> bool:
    """No heavy arc and no heavy non-edge in either direction."""
    for u, v in D.arcs():
        if _arc_is_heavy(D, u, v):
            return False
    for u in range(D.n):
        for v in bits(D.non_mask(u)):
            if v > u:
                if find_cycle(D, D.out_mask(u) & D.in_mask(v)) is not None:
                    return False
                if find_cycle(D, D.out_mask(v) & D.in_mask(u)) is not None:
                    return False
    return True


def split_light(D: Digraph) -> LightSplit | OddHeavySplitCertificate:
    """Bipartition cutting every heavy arc and digon.

    Requires the input to have no heavy non-edge (saturate first).  BFS
    two-colors the heavy graph, isolated vertices land in part1, and an
    odd heavy cycle is returned as a non-2-dicolorability proof.  Both
    parts are re-verified light.
    """
    report = heavy_edge_report(D)
    H = report.heavy_graph
    side = [-1] * D.n
    parent = [-1] * D.n
    for root in range(D.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(H.adj_mask(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return OddHeavySplitCertificate(_odd_cycle(parent, u, w))
    part1 = frozenset(v for v in range(D.n) if side[v] == 0)
    part2 = frozenset(v for v in range(D.n) if side[v] == 1)
    for part in (part1, part2):
        sub, _ = induced(D, part)
        if not is_light(sub):
            raise AssertionError("split produced a non-light part")
        if any(sub.has_arc(v, u) for u, v in sub.arcs()):
            raise AssertionError("split produced a part with a digon")
    return LightSplit(part1=part1, part2=part2)


def _odd_cycle(parent: Sequence[int], u: int, w: int) -> tuple[int, ...]:
    """Close the conflicting BFS edge {u,w} through the tree paths."""
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    anc = set(pu)
    meet = next(x for x in pw if x in anc)
    up = pu[: pu.index(meet) + 1]
    down = pw[: pw.index(meet)]
    cycle = up + list(reversed(down))
    assert len(cycle) % 2 == 1
    return tuple(cycle)


# -- the light-part recursion --------------------------------------------------


def find_st_acyclic_union(D: Digraph) -> tuple[int, int] | None:
    """First ordered pair (s,t), scanned in increasing id with s == t
    allowed, such that N+(s) union N-(t) induces an acyclic subdigraph.

    A k-dicolorable digraph always has one (sink and source of one color
    class); None is proof the 2-promise is broken.  Rows and columns
    whose own neighborhood is already cyclic are skipped, which cannot
    change the first hit.
    """
    row_ok = [find_cycle(D, D.out_mask(s)) is None for s in range(D.n)]
    col_ok = [find_cycle(D, D.in_mask(t)) is None for t in range(D.n)]
    for s in range(D.n):
        if not row_ok[s]:
            continue
        for t in range(D.n):
            if not col_ok[t]:
                continue
            if find_cycle(D, D.out_mask(s) | D.in_mask(t)) is None:
                return s, t
    return None


def _one_color_zone(members: frozenset[int]) -> dict[int, int]:
    return {v: 0 for v in members}


def _color_d_zones(C: Digraph, palette: Sequence[int]) -> dict[int, int]:
    """Path-decompose C and color the D zones plus remainder from one
    five-color palette (b = c = 1, d = 0 case of the combiner)."""
    st = find_st_acyclic_union(C)
    if st is None:
        raise NotTwoDicolorableError(
            "no vertex pair with acyclic joint neighborhood; "
            "the digraph is not 2-dicolorable"
        )
    s, t = st
    chain = mixed_shortest_path(C, s, t)
    if chain is None:
        raise AssertionError("endpoints unreachable inside a strong component")
    decomp = build_path_decomposition(C, chain)
    subcolorings = {}
    zones = []
    for i, zone in enumerate(decomp.d_sets):
        if not zone:
            continue
        if find_cycle(C, mask_of(zone)) is not None:
            raise NotTwoDicolorableError(f"zone D_{i} is cyclic; promise broken")
        zones.append(("D", i))
        subcolorings[("D", i)] = _one_color_zone(zone)
    budget = PaletteBudget(b=1, c=1, d=0)
    mapping, _ = _combine_zones(decomp, budget, subcolorings, palette, zones)
    return mapping, decomp


def dicolor_light_dense(D: Digraph, alpha: int, palette: Sequence[int]) -> Dicoloring:
    """Color a light 2-dicolorable digraph of independence number at most
    alpha from a palette of (5/3)(4^alpha - 1) colors.

    Tournaments take five colors through the path decomposition; other
    inputs split the palette into four recursion palettes (one per
    non-neighborhood zone class) plus five colors for the D zones, and
    recurse on each nonempty N_i at alpha-1.  Every level works per
    strongly connected component with the same palette.
    """
    if len(palette) < light_part_bound(alpha):
        raise PaletteTooSmallError(
            f"need {light_part_bound(alpha)} colors for alpha={alpha}, "
            f"got {len(palette)}"
        )
    res = color_per_scc(D, lambda C: _light_scc(C, alpha, palette))
    if not isinstance(res, Dicoloring):
        raise AssertionError(f"unexpected per-component failure: {res}")
    return res


def _light_scc(C: Digraph, alpha: int, palette: Sequence[int]) -> Dicoloring:
    if C.n == 1:
        return Dicoloring((palette[0],))
    _, is_tournament, _ = underlying_and_predicates(C)
    if is_tournament:
        mapping, _ = _color_d_zones(C, palette[:5])
        return Dicoloring.from_mapping(C.n, mapping)
    if alpha <= 1:
        pair = _some_nonedge(C)
        raise IndependencePromiseError(
            f"independence promise violated: {pair} is non-adjacent but the "
            "promise said tournament",
            pair,
        )
    f1 = light_part_bound(alpha - 1)
    sub_palettes = [palette[i * f1 : (i + 1) * f1] for i in range(4)]
    end_palette = palette[4 * f1 : 4 * f1 + 5]
    mapping, decomp = _color_d_zones(C, end_palette)
    for i, zone in enumerate(decomp.n_sets):
        if not zone:
            continue
        sub, labels = induced(C, zone)
        col = dicolor_light_dense(sub, alpha - 1, sub_palettes[i % 4])
        for j, lbl in enumerate(labels):
            mapping[lbl] = col.colors[j]
    out = Dicoloring.from_mapping(C.n, mapping)
    bad = verify_dicoloring(C, out)
    if bad is not None:
        raise AssertionError(f"light recursion left a monochromatic cycle: {bad}")
    return out


def _some_nonedge(D: Digraph) -> tuple[int, int]:
    for u in range(D.n):
        non = D.non_mask(u)
        if non:
            return u, (non & -non).bit_length() - 1
    raise AssertionError("no non-edge in a non-tournament")


# -- the full pipeline ---------------------------------------------------------


def dicolor_two_dense(
    D: Digraph, alpha: int
) -> Dicoloring | OddHeavySplitCertificate:
    """Saturate, split into two light parts, color each part with its own
    palette, and merge: at most (10/3)(4^alpha - 1) colors.

    Arcs are only ever added, so the coloring of the saturated digraph
    is returned verified against the original input.  An odd heavy cycle
    propagates out as the non-2-dicolorability certificate.
    """
    sat = saturate_heavy_nonarcs(D)
    split = split_light(sat)
    if isinstance(split, OddHeavySplitCertificate):
        return split
    budget = light_part_bound(alpha)
    assign: dict[int, int] = {}
    for offset, part in ((0, split.part1), (budget, split.part2)):
        if not part:
            continue
        sub, labels = induced(sat, part)
        col = dicolor_light_dense(sub, alpha, range(offset, offset + budget))
        for i, lbl in enumerate(labels):
            assign[lbl] = col.colors[i]
    out = Dicoloring.from_mapping(D.n, assign)
    for graph in (sat, D):
        bad = verify_dicoloring(graph, out)
        if bad is not None:
            raise AssertionError(f"dense coloring has a monochromatic cycle: {bad}")
    return out
