"""Seeded instance factories for testing the coloring algorithms.

``gen_planted`` builds digraphs that are ell-dicolorable by
construction (each planted part is a transitive tournament under a
random order) together with the planted coloring.  With full cross-arc
probability the output is a tournament.  ``gen_c3free_blowup``
substitutes a directed five-cycle into itself, doubling the
independence number per level while staying triangle-free.
"""

from __future__ import annotations

import random

from .graphs import Digraph, bits
from .oracles import Dicoloring

BLOWUP_SIZE_CAP = 4096


def gen_planted(
    n: int, ell: int, p: float, seed: int
) -> tuple[Digraph, Dicoloring]:
    """Digraph with a planted ell-dicoloring.

    Vertices split into ell near-equal parts; inside a part every pair
    is oriented along a random permutation (so each part is acyclic by
    construction); each cross pair gets a single arc with probability p,
    its direction a fair coin.  The planted coloring is the part index
    and certifies the dicolorability promise.  p=1 yields a tournament.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must lie in [0,1]")
    rng = random.Random(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    parts: list[list[int]] = [[] for _ in range(ell)]
    for i, v in enumerate(verts):
        parts[i % ell].append(v)
    part_of = [0] * n
    arcs: list[tuple[int, int]] = []
    for idx, part in enumerate(parts):
        order = part[:]
        rng.shuffle(order)
        for i in range(len(order)):
            part_of[order[i]] = idx
            for j in range(i + 1, len(order)):
                arcs.append((order[i], order[j]))
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] == part_of[v]:
                continue
            if rng.random() < p:
                if rng.random() < 0.5:
                    arcs.append((u, v))
                else:
                    arcs.append((v, u))
    return Digraph(n, arcs), Dicoloring(tuple(part_of))


def gen_tournament(n: int, seed: int) -> Digraph:
    """Uniformly random tournament (every pair a fair coin)."""
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def _substitute_c5(blocks: list[Digraph]) -> Digraph:
    """Substitute five digraphs into the directed five-cycle: full arc
    bundles cloud(i) -> cloud(i+1), nothing across the chords."""
    sizes = [b.n for b in blocks]
    offsets = [0] * 5
    for i in range(1, 5):
        offsets[i] = offsets[i - 1] + sizes[i - 1]
    total = sum(sizes)
    arcs: list[tuple[int, int]] = []
    for i, block in enumerate(blocks):
        base = offsets[i]
        for u, v in block.arcs():
            arcs.append((base + u, base + v))
    for i in range(5):
        j = (i + 1) % 5
        for u in range(sizes[i]):
            for v in range(sizes[j]):
                arcs.append((offsets[i] + u, offsets[j] + v))
    return Digraph(total, arcs)


def _random_transitive(n: int, rng: random.Random) -> Digraph:
    order = list(range(n))
    rng.shuffle(order)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((order[i], order[j]))
    return Digraph(n, arcs)


def gen_c3free_blowup(depth: int, seed: int, inner_size: int = 2) -> Digraph:
    """C3-free digraph of independence number 2**depth.

    Depth-fold substitution of the directed five-cycle into itself,
    bottoming out at transitive tournaments of ``inner_size`` vertices
    whose internal orders come from the seed.  The result is re-verified
    triangle-free before returning.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if inner_size < 1:
        raise ValueError("inner_size must be at least 1")
    total = inner_size * 5**depth
    if total > BLOWUP_SIZE_CAP:
        raise ValueError(f"blowup would have {total} vertices, over the cap "
                         f"{BLOWUP_SIZE_CAP}")
    rng = random.Random(seed)

    def build(level: int) -> Digraph:
        if level == 0:
            return _random_transitive(inner_size, rng)
        return _substitute_c5([build(level - 1) for _ in range(5)])

    D = build(depth)
    _assert_triangle_free(D)
    return D


def _assert_triangle_free(D: Digraph) -> None:
    for u in range(D.n):
        for v in bits(D.out_mask(u)):
            if D.out_mask(v) & D.in_mask(u):
                raise AssertionError(f"blowup contains a directed triangle at "
                                     f"({u},{v})")
