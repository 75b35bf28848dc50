"""Coloring C3-free oriented digraphs of bounded independence number.

The digraph is first made maximally triangle-free by adding every arc
that does not close a directed triangle (this never hurts: arcs only
get added, so any coloring of the result is valid on the input).  On a
maximal instance a semi-kernel yields a vertex pair whose out- and
in-neighborhoods split into few pieces of strictly smaller independence
number, and the shared path decomposition recycles alpha+8 palettes
along the chain, for a total of (alpha+8)!/9! colors.

``alpha2_witness`` exposes the independence-number-2 special fact that
some vertex always has a tournament out-neighborhood.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    Digraph,
    bits,
    find_cycle,
    induced,
    mask_of,
    set_of,
    underlying_and_predicates,
)
from .decompose import (
    PaletteTooSmallError,
    Step,
    build_path_decomposition,
    mixed_shortest_path,
)
from .oracles import Dicoloring, verify_dicoloring
from .approx import color_per_scc
from .dense import IndependencePromiseError, _some_nonedge


def c3free_bound(alpha: int) -> int:
    """Color budget for a C3-free digraph: (alpha+8)!/9!."""
    return math.factorial(alpha + 8) // math.factorial(9)


def find_directed_triangle(D: Digraph) -> tuple[int, int, int] | None:
    """Some directed triangle u->v->w->u, or None."""
    for u in range(D.n):
        for v in bits(D.out_mask(u)):
            through = D.out_mask(v) & D.in_mask(u)
            if through:
                w = (through & -through).bit_length() - 1
                return (u, v, w)
    return None


def _check_oriented_c3free(D: Digraph, where: str) -> None:
    for u in range(D.n):
        if D.out_mask(u) & D.in_mask(u):
            raise ValueError(f"{where}: input contains a digon at vertex {u}")
    tri = find_directed_triangle(D)
    if tri is not None:
        raise ValueError(f"{where}: input contains a directed triangle {tri}")


def saturate_c3free(D: Digraph) -> Digraph:
    """Add arcs until every remaining non-edge is blocked both ways.

    A direction (u,v) is blocked when some w carries arcs v->w and w->u,
    so adding (u,v) would close a triangle.  Pairs are scanned
    lexicographically with a restart after each addition.  The result is
    maximally C3-free: any remaining non-edge lies on a directed
    four-cycle.
    """
    _check_oriented_c3free(D, "saturate_c3free")
    out = list(D._out)
    inn = list(D._in)
    n = D.n
    changed = True
    while changed:
        changed = False
        for u in range(n):
            if changed:
                break
            for v in range(u + 1, n):
                if (out[u] >> v) & 1 or (out[v] >> u) & 1:
                    continue
                # (u,v) closes a triangle iff some w has v->w and w->u
                if not (out[v] & inn[u]):
                    out[u] |= 1 << v
                    inn[v] |= 1 << u
                    changed = True
                    break
                # otherwise try the reverse orientation
                if not (out[u] & inn[v]):
                    out[v] |= 1 << u
                    inn[u] |= 1 << v
                    changed = True
                    break
    result = Digraph._from_masks(n, out, inn)
    tri = find_directed_triangle(result)
    if tri is not None:
        raise AssertionError(f"saturation created a triangle {tri}")
    return result


def is_maximally_c3free(D: Digraph) -> bool:
    for u in range(D.n):
        for v in bits(D.non_mask(u)):
            if v < u:
                continue
            if not (D.out_mask(v) & D.in_mask(u)):
                return False  # (u,v) could be added
            if not (D.out_mask(u) & D.in_mask(v)):
                return False  # (v,u) could be added
    return True


# -- semi-kernels ---------------------------------------------------------------


@dataclass(frozen=True)
class SemiKernel:
    """Independent set from which every vertex is within two directed
    steps."""

    vertices: frozenset[int]


def semi_kernel(D: Digraph) -> SemiKernel:
    """Chvatal-Lovasz style recursion, oriented input required.

    Pick the smallest-id vertex x, solve the digraph minus x's closed
    out-neighborhood, keep the sub-solution if it sends an arc into x,
    otherwise adjoin x.  Both invariants are re-verified before
    returning.
    """
    for u in range(D.n):
        if D.out_mask(u) & D.in_mask(u):
            raise ValueError(f"semi_kernel: digon at vertex {u}")

    def rec(mask: int) -> int:
        if not mask:
            return 0
        x = (mask & -mask).bit_length() - 1
        closed_out = (D.out_mask(x) | (1 << x)) & mask
        q = rec(mask & ~closed_out)
        if q & D.in_mask(x):
            return q
        return q | (1 << x)

    kmask = rec(D.full_mask)
    kernel = SemiKernel(set_of(kmask))
    _check_semi_kernel(D, kmask)
    return kernel


def _check_semi_kernel(D: Digraph, kmask: int) -> None:
    for v in bits(kmask):
        if (D.out_mask(v) | D.in_mask(v)) & kmask:
            raise AssertionError("semi-kernel is not independent")
    reach = kmask
    for _ in range(2):
        step = 0
        for v in bits(reach):
            step |= D.out_mask(v)
        reach |= step
    if reach != D.full_mask:
        raise AssertionError("semi-kernel does not 2-dominate")


# -- good endpoint pairs ----------------------------------------------------------


@dataclass(frozen=True)
class GoodPair:
    """Endpoints for the chain: N+(s) and N-(t) each split into at most
    alpha traces of non-neighborhoods, so each trace has independence
    number at most alpha-1."""

    s: int
    t: int
    s_parts: tuple[frozenset[int], ...]
    t_parts: tuple[frozenset[int], ...]


def find_good_pair(D: Digraph, alpha: int) -> GoodPair:
    """Both sides of the pair, the in-side from D itself and the out-side
    from the arc-reversed digraph."""
    t, t_parts = _inbound_side(D)
    s, rev_parts = _inbound_side(D.reverse())
    return GoodPair(s=s, t=t, s_parts=rev_parts, t_parts=t_parts)


def _inbound_side(D: Digraph) -> tuple[int, tuple[frozenset[int], ...]]:
    """A vertex t with N-(t) covered by at most alpha non-neighborhood
    traces, per the semi-kernel construction.

    Requires a maximally C3-free oriented input; a vertex sending arcs
    to the whole kernel would contradict that and raises.
    """
    kmask = mask_of(semi_kernel(D).vertices)
    n = D.n
    # vertices with an arc toward every kernel member
    for y in range(n):
        if not ((kmask >> y) & 1) and (D.out_mask(y) & kmask) == kmask:
            raise ValueError(
                f"vertex {y} sends arcs to the whole semi-kernel; the input "
                "is not maximally C3-free"
            )
    # U: adjacent (either direction) to every kernel member
    u_set = [
        u
        for u in range(n)
        if not ((kmask >> u) & 1)
        and ((D.out_mask(u) | D.in_mask(u)) & kmask) == kmask
    ]
    u_prime: int | None = None
    if u_set:
        traces = {u: D.in_mask(u) & kmask for u in u_set}
        # a minimum-cardinality trace is inclusion-minimal (any strict
        # subset would be strictly smaller); ties go to the
        # lexicographically smallest set, then the smallest vertex
        u_prime = min(
            u_set,
            key=lambda u: (
                traces[u].bit_count(),
                tuple(bits(traces[u])),
                u,
            ),
        )
        base = traces[u_prime]
        if not base:
            raise AssertionError("empty kernel trace despite total-in check")
        t = (base & -base).bit_length() - 1
    else:
        t = (kmask & -kmask).bit_length() - 1

    pred = D.in_mask(t)
    parts: list[frozenset[int]] = []
    assigned = 0
    sources = [v for v in bits(kmask) if v != t]
    if u_prime is not None:
        sources.append(u_prime)
    for v in sources:
        part = pred & D.non_mask(v) & ~assigned
        parts.append(set_of(part))
        assigned |= part
    if assigned != pred:
        raise AssertionError(
            "in-neighborhood not covered by the kernel traces; the input is "
            "not maximally C3-free"
        )
    return t, tuple(parts)


# -- the coloring recursion --------------------------------------------------------


def dicolor_c3free(D: Digraph, alpha: int, palette: Sequence[int]) -> Dicoloring:
    """Color a maximally C3-free oriented digraph of independence number
    at most alpha from a palette of (alpha+8)!/9! colors.

    Works per strongly connected component with one shared palette.
    Induced subgraphs are re-saturated before recursing, since
    maximality is not hereditary.
    """
    if len(palette) < 1:
        raise PaletteTooSmallError("palette is empty")
    res = color_per_scc(D, lambda C: _c3free_scc(C, alpha, palette))
    if not isinstance(res, Dicoloring):
        raise AssertionError(f"unexpected per-component failure: {res}")
    return res


def _c3free_scc(C: Digraph, alpha: int, palette: Sequence[int]) -> Dicoloring:
    if C.n == 1:
        return Dicoloring((palette[0],))
    C = saturate_c3free(C)
    _, is_tournament, _ = underlying_and_predicates(C)
    if is_tournament:
        # a C3-free tournament is acyclic; a strong component with more
        # than one vertex can only get here on a broken precondition
        if find_cycle(C) is not None:
            raise ValueError("tournament component contains a cycle, so the "
                             "input was not C3-free")
        return Dicoloring((palette[0],) * C.n)
    if alpha <= 1:
        pair = _some_nonedge(C)
        raise IndependencePromiseError(
            f"independence promise violated: {pair} is non-adjacent but the "
            "promise said tournament",
            pair,
        )
    g1 = c3free_bound(alpha - 1)
    need = (alpha + 8) * g1
    if len(palette) < need:
        raise PaletteTooSmallError(
            f"need {need} colors for alpha={alpha}, got {len(palette)}"
        )
    slices = [palette[i * g1 : (i + 1) * g1] for i in range(alpha + 8)]

    pair = find_good_pair(C, alpha)
    chain = mixed_shortest_path(C, pair.s, pair.t)
    if chain is None:
        raise AssertionError("endpoints unreachable inside a strong component")
    decomp = build_path_decomposition(C, chain)
    k = decomp.k
    mapping: dict[int, int] = {}

    def recurse(members: frozenset[int], sub_palette: Sequence[int]) -> None:
        sub, labels = induced(C, members)
        col = dicolor_c3free(sub, alpha - 1, sub_palette)
        for i, lbl in enumerate(labels):
            mapping[lbl] = col.colors[i]

    for i, zone in enumerate(decomp.n_sets):
        if zone:
            recurse(zone, slices[i % 4])
    for i in range(1, k + 1):
        zone = decomp.d_sets[i]
        if not zone:
            continue
        if chain.steps[i - 1] is Step.ARC:
            raise AssertionError(
                f"arc step {i} has a nonempty through-zone; the component "
                "was not C3-free"
            )
        recurse(zone, slices[4 + i % 5])

    # endpoint zones split along the good-pair traces; the first piece of
    # each side shares its natural chain palette, later pieces pair up
    for j, part, sub_palette in _end_pieces(decomp.d_sets[0], pair.s_parts, 4, slices):
        recurse(part, sub_palette)
    t_first = 4 + (k + 1) % 5
    for j, part, sub_palette in _end_pieces(
        decomp.d_sets[k + 1], pair.t_parts, t_first, slices
    ):
        recurse(part, sub_palette)

    # remainder vertices only exist on chains of length <= 1, where the
    # N_2 and N_3 palettes are necessarily untouched
    if decomp.z:
        if k > 1:
            raise AssertionError("nonempty remainder on a long chain")
        for slot, v in enumerate(sorted(decomp.z)):
            mapping[v] = slices[2 + slot][0]

    out = Dicoloring.from_mapping(C.n, mapping)
    bad = verify_dicoloring(C, out)
    if bad is not None:
        raise AssertionError(f"c3free recursion left a monochromatic cycle: {bad}")
    return out


def _end_pieces(zone, parts, first_slice, slices):
    """Split an endpoint zone along the good-pair traces and attach each
    piece's palette slice: piece 1 reuses the chain palette at
    ``first_slice``, piece j >= 2 takes the shared slice j+7."""
    leftover = set(zone)
    for j, trace in enumerate(parts, start=1):
        piece = zone & trace
        leftover -= piece
        if piece:
            yield j, piece, slices[first_slice if j == 1 else j + 7]
    if leftover:
        raise AssertionError("endpoint zone not covered by the good-pair traces")


# -- independence number 2 witness --------------------------------------------------


def alpha2_witness(D: Digraph) -> int:
    """A vertex whose out-neighborhood induces a tournament, for an
    oriented C3-free digraph of independence number exactly 2.

    Take x of minimum out-degree (ties to the smallest id); if its
    out-neighborhood is not a tournament, the sink y of the tournament
    on x's non-neighborhood works instead.
    """
    _check_oriented_c3free(D, "alpha2_witness")
    if D.n == 0:
        raise ValueError("empty digraph")
    x = min(range(D.n), key=lambda v: (D.out_degree(v), v))
    if _is_tournament_on(D, D.out_mask(x)):
        return x
    non = D.non_mask(x)
    if not non:
        raise ValueError(
            "neither candidate qualifies: the independence-2 precondition "
            "does not hold"
        )
    if not _is_tournament_on(D, non):
        raise ValueError("non-neighborhood is not a tournament; independence "
                         "number exceeds 2")
    sinks = [v for v in bits(non) if not (D.out_mask(v) & non)]
    if not sinks:
        raise ValueError("non-neighborhood tournament has no sink, so it has "
                         "a cycle and the input was not C3-free")
    y = sinks[0]
    if not _is_tournament_on(D, D.out_mask(y)):
        raise ValueError(
            "neither candidate qualifies: the independence-2 precondition "
            "does not hold"
        )
    return y


def _is_tournament_on(D: Digraph, mask: int) -> bool:
    for v in bits(mask):
        others = mask & ~(1 << v)
        adj = (D.out_mask(v) | D.in_mask(v)) & mask
        if adj != others:
            return False
        if D.out_mask(v) & D.in_mask(v) & mask:
            return False
    return True
