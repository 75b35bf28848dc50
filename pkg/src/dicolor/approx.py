"""Approximate dicoloring under a dicolorability promise.

``dicolor_two`` colors a digraph promised 2-dicolorable with at most
2*ceil(sqrt(n)) colors: it repeatedly takes a vertex with an acyclic
out-neighborhood, either spends a fresh color on that neighborhood when
it is big or defers the vertex to a final backedge-graph phase, and
colors the deferred part through its degeneracy.  ``dicolor_ell``
generalizes the scheme to an ell-dicolorable promise by recursing on
out-neighborhoods, at a budget of ell * n^(1-1/ell) colors.

Both return a failure certificate instead of a coloring when the
promise is violated badly enough to stall the loop; for the 2-promise
the certificate is independently checkable (an induced subdigraph where
every out-neighborhood is cyclic).

Thresholds are computed with exact integer arithmetic and frozen at
each call's entry size; the bound accounting charges against that
original size, not the shrinking graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .graphs import (
    Digraph,
    bits,
    find_cycle,
    induced,
    mask_of,
    sccs,
    set_of,
)
from .decompose import backedge_graph, degeneracy_color
from .oracles import Dicoloring, verify_dicoloring


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def ceil_root_power(n: int, num: int, den: int) -> int:
    """Smallest integer m with m**den >= n**num, i.e. ceil(n**(num/den)).

    Exact: float rounding must not leak into thresholds (n=216 with
    exponent 2/3 is exactly 36, and one ulp up would break the bound).
    """
    if n <= 1:
        return n
    target = n**num
    m = round(target ** (1.0 / den))
    while m**den < target:
        m += 1
    while m > 1 and (m - 1) ** den >= target:
        m -= 1
    return m


def two_color_bound(n: int) -> int:
    return 2 * ceil_sqrt(n)


def ell_color_bound(ell: int, n: int) -> float:
    return ell * n ** (1 - 1 / ell)


def within_ell_bound(colors: int, ell: int, n: int) -> bool:
    """colors <= ell * n^(1-1/ell), compared in exact integer arithmetic."""
    return colors**ell <= ell**ell * n ** (ell - 1)


@dataclass
class NotColorableCertificate:
    """Certificate that the promise failed.

    For level 2 the certificate is directly checkable: every vertex of
    the induced subdigraph has a cyclic out-neighborhood inside it, so
    the subdigraph is not 2-dicolorable.  For higher levels the
    certificate carries the per-candidate recursion failures instead of
    a standalone checkable witness.
    """

    level: int
    vertices: frozenset[int]
    children: dict[int, "NotColorableCertificate"] = field(default_factory=dict)

    def check(self, D: Digraph) -> bool:
        """Level-2 only: confirm every out-neighborhood is cyclic."""
        if self.level != 2:
            raise ValueError("only level-2 certificates are directly checkable")
        m = mask_of(self.vertices)
        return all(find_cycle(D, D.out_mask(v) & m) is not None for v in bits(m))


def find_low_vertex(
    D: Digraph,
    ell: int,
    tester: Callable[[Digraph], bool] | None = None,
) -> int | None:
    """Smallest-id vertex whose induced out-neighborhood passes the
    (ell-1)-colorability test; None when no vertex passes.

    The default tester is acyclicity for ell=2 and a recursive
    ``dicolor_ell`` success check above that.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if tester is None:
        if ell == 2:
            tester = lambda sub: find_cycle(sub) is None
        else:
            tester = lambda sub: isinstance(dicolor_ell(sub, ell - 1), Dicoloring)
    for v in range(D.n):
        sub, _ = induced(D, set_of(D.out_mask(v)))
        if tester(sub):
            return v
    return None


def dicolor_two(D: Digraph) -> Dicoloring | NotColorableCertificate:
    """Color a digraph promised 2-dicolorable with <= 2*ceil(sqrt(n))
    colors, n being the size at this call.

    The qualifying-vertex scan runs in ascending id.  Once a vertex
    qualifies it stays qualifying (out-neighborhoods only shrink), and a
    failed vertex stays failed while its witness cycle survives, so both
    outcomes are cached; the result is identical to the naive rescan.
    """
    n = D.n
    if n == 0:
        return Dicoloring(())
    t = ceil_sqrt(n)
    alive = D.full_mask
    assign: dict[int, int] = {}
    next_color = 0
    deferred: list[int] = []
    passed = 0  # monotone: acyclicity survives deletions
    cycle_cache: dict[int, int] = {}

    def qualifies(v: int) -> bool:
        nonlocal passed
        if (passed >> v) & 1:
            return True
        m = D.out_mask(v) & alive
        if not m:
            passed |= 1 << v
            return True
        cached = cycle_cache.get(v)
        if cached is not None and cached & alive == cached:
            return False
        cyc = find_cycle(D, m)
        if cyc is None:
            passed |= 1 << v
            return True
        cycle_cache[v] = mask_of(cyc)
        return False

    while alive:
        v = next((u for u in bits(alive) if qualifies(u)), None)
        if v is None:
            return NotColorableCertificate(level=2, vertices=set_of(alive))
        m = D.out_mask(v) & alive
        if m.bit_count() >= t:
            for w in bits(m):
                assign[w] = next_color
            next_color += 1
            alive &= ~m
        else:
            deferred.append(v)
            alive ^= 1 << v

    if deferred:
        # the order puts each vertex before everything deferred earlier
        sub, labels = induced(D, deferred)
        pos = {lbl: i for i, lbl in enumerate(labels)}
        order = [pos[v] for v in reversed(deferred)]
        _, local = degeneracy_color(backedge_graph(sub, order))
        for i, lbl in enumerate(labels):
            assign[lbl] = next_color + local[i]

    col = Dicoloring.from_mapping(n, assign)
    bad = verify_dicoloring(D, col)
    if bad is not None:
        raise AssertionError(f"two-promise coloring has a monochromatic cycle: {bad}")
    return col


def dicolor_ell(D: Digraph, ell: int) -> Dicoloring | NotColorableCertificate:
    """Color a digraph promised ell-dicolorable with <= ell * n^(1-1/ell)
    colors for the n at this call.

    Vertices of out-degree below n^(1-1/ell) are deferred to a backedge
    phase; the rest are scanned in ascending id, recursively coloring
    each candidate's out-neighborhood at promise ell-1 until one
    succeeds, whose neighborhood is then recolored through an offset and
    deleted.  The base case ell=2 is ``dicolor_two``.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if ell == 2:
        return dicolor_two(D)
    n = D.n
    if n == 0:
        return Dicoloring(())
    tau = ceil_root_power(n, ell - 1, ell)
    alive = D.full_mask
    assign: dict[int, int] = {}
    next_color = 0
    deferred: list[int] = []

    while alive:
        while True:
            v = next(
                (u for u in bits(alive)
                 if (D.out_mask(u) & alive).bit_count() < tau),
                None,
            )
            if v is None:
                break
            deferred.append(v)
            alive ^= 1 << v
        if not alive:
            break
        failures: dict[int, NotColorableCertificate] = {}
        success = False
        for v in bits(alive):
            m = D.out_mask(v) & alive
            sub, labels = induced(D, set_of(m))
            res = dicolor_ell(sub, ell - 1)
            if isinstance(res, Dicoloring):
                local = res.normalized()
                for i, lbl in enumerate(labels):
                    assign[lbl] = next_color + local.colors[i]
                next_color += local.num_colors
                alive &= ~m
                success = True
                break
            failures[v] = res
        if not success:
            return NotColorableCertificate(
                level=ell, vertices=set_of(alive), children=failures
            )

    if deferred:
        sub, labels = induced(D, deferred)
        pos = {lbl: i for i, lbl in enumerate(labels)}
        order = [pos[v] for v in reversed(deferred)]
        _, local = degeneracy_color(backedge_graph(sub, order))
        for i, lbl in enumerate(labels):
            assign[lbl] = next_color + local[i]

    col = Dicoloring.from_mapping(n, assign)
    bad = verify_dicoloring(D, col)
    if bad is not None:
        raise AssertionError(f"ell-promise coloring has a monochromatic cycle: {bad}")
    return col


@dataclass
class PerSccFailure:
    """The inner colorer failed on one strongly connected component."""

    scc_index: int
    vertices: frozenset[int]
    detail: object


def color_per_scc(
    D: Digraph, inner: Callable[[Digraph], object]
) -> Dicoloring | PerSccFailure:
    """Apply ``inner`` to each strongly connected component and reuse one
    palette across them.

    Every directed cycle lies inside a component, so reusing color ids
    across components keeps the merged coloring valid; the count is the
    max over components, not the sum.
    """
    assign: dict[int, int] = {}
    for idx, comp in enumerate(sccs(D)):
        sub, labels = induced(D, comp)
        res = inner(sub)
        if not isinstance(res, Dicoloring):
            return PerSccFailure(scc_index=idx, vertices=frozenset(comp), detail=res)
        for i, lbl in enumerate(labels):
            assign[lbl] = res.colors[i]
    col = Dicoloring.from_mapping(D.n, assign)
    bad = verify_dicoloring(D, col)
    if bad is not None:
        raise AssertionError(f"per-component merge has a monochromatic cycle: {bad}")
    return col
