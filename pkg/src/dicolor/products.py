"""Randomized lexicographic products of a digraph along an undirected
skeleton, their k-fold iteration, and the eta-consistency audit.

Each skeleton vertex carries a cloud holding a copy of the inner
digraph.  Cross-cloud pairs over a skeleton edge are oriented by
independent fair coins; pairs over a skeleton non-edge all point from
the sigma-earlier cloud to the later one.  The coins come from a keyed
hash of (seed, level, endpoints), so the arc set is a pure function of
the spec regardless of iteration order or parallelism.

The audit checks the subset condition that controls the acyclic number
of the product: across each skeleton edge, every pair of
ceil(|V(H)|^eta)-sized cloud subsets must induce a cycle.  Exact mode
enumerates all pairs and its clean pass certifies the property; sampled
mode can only refute.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
import struct
from dataclasses import dataclass
from typing import Literal, Sequence

from .graphs import Digraph, UndirectedGraph, find_cycle, mask_of

PRODUCT_SIZE_CAP = 4096


@dataclass(frozen=True)
class ProductSpec:
    """Inputs for the product generator.

    ``inner`` only matters for single-layer use; the k-fold iteration
    seeds itself with the transitive tournament over the skeleton's
    vertex set.
    """

    skeleton: UndirectedGraph
    sigma: tuple[int, ...]
    seed: int
    k: int
    inner: Digraph | None = None

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(self.skeleton.n)):
            raise ValueError("sigma must be a permutation of the skeleton vertices")
        if self.k < 1:
            raise ValueError("fold count must be at least 1")


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product vertices and (skeleton, inner) pairs.

    Product vertex of (v, a) is v*n_inner + a; clouds are contiguous
    index ranges.
    """

    n_skeleton: int
    n_inner: int

    def index(self, v: int, a: int) -> int:
        return v * self.n_inner + a

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.n_inner)

    def cloud(self, v: int) -> range:
        base = v * self.n_inner
        return range(base, base + self.n_inner)

    def cloud_mask(self, v: int) -> int:
        return ((1 << self.n_inner) - 1) << (v * self.n_inner)


def _coin(seed: int, level: int, lo: int, hi: int) -> int:
    """Deterministic fair coin for the cross pair lo < hi (product
    vertex indices)."""
    payload = struct.pack("<qqqq", seed, level, lo, hi)
    digest = hashlib.blake2b(payload, digest_size=8, person=b"lexcoin").digest()
    return digest[0] & 1


def derive_level_seed(seed: int, level: int) -> int:
    payload = struct.pack("<qq", seed, level)
    digest = hashlib.blake2b(payload, digest_size=8, person=b"lexlvl").digest()
    return int.from_bytes(digest, "little", signed=True)


def orient_transitive(n: int, sigma: Sequence[int]) -> Digraph:
    """Transitive tournament following sigma: arc from each earlier
    vertex to each later one."""
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma must be a permutation of 0..n-1")
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((sigma[i], sigma[j]))
    return Digraph(n, arcs)


def random_lex_product(
    G: UndirectedGraph,
    sigma: Sequence[int],
    H: Digraph,
    seed: int,
    level: int = 0,
) -> tuple[Digraph, ProductVertexMap]:
    """One product layer: clouds copy H, skeleton edges toss per-pair
    coins, skeleton non-edges orient wholesale by sigma."""
    if sorted(sigma) != list(range(G.n)):
        raise ValueError("sigma must be a permutation of the skeleton vertices")
    vmap = ProductVertexMap(n_skeleton=G.n, n_inner=H.n)
    n = G.n * H.n
    if n > PRODUCT_SIZE_CAP:
        raise ValueError(f"product would have {n} vertices, over the cap "
                         f"{PRODUCT_SIZE_CAP}")
    pos = [0] * G.n
    for i, v in enumerate(sigma):
        pos[v] = i
    arcs: list[tuple[int, int]] = []
    for v in range(G.n):
        base = v * H.n
        for a, b in H.arcs():
            arcs.append((base + a, base + b))
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.has_edge(u, v):
                for a in range(H.n):
                    for b in range(H.n):
                        lo = vmap.index(u, a)
                        hi = vmap.index(v, b)
                        if _coin(seed, level, lo, hi):
                            arcs.append((lo, hi))
                        else:
                            arcs.append((hi, lo))
            else:
                first, second = (u, v) if pos[u] < pos[v] else (v, u)
                for a in range(H.n):
                    for b in range(H.n):
                        arcs.append((vmap.index(first, a), vmap.index(second, b)))
    return Digraph(n, arcs), vmap


def k_fold_product(spec: ProductSpec) -> tuple[Digraph, list[ProductVertexMap]]:
    """Iterate the product k-1 times on top of the transitive tournament
    over the skeleton's vertices; the result has |V(G)|^k vertices and is
    always a tournament."""
    size = spec.skeleton.n**spec.k
    if size > PRODUCT_SIZE_CAP:
        raise ValueError(f"k-fold product would have {size} vertices, over the "
                         f"cap {PRODUCT_SIZE_CAP}")
    current = orient_transitive(spec.skeleton.n, spec.sigma)
    maps: list[ProductVertexMap] = []
    for level in range(2, spec.k + 1):
        current, vmap = random_lex_product(
            spec.skeleton,
            spec.sigma,
            current,
            derive_level_seed(spec.seed, level),
            level=level,
        )
        maps.append(vmap)
    return current, maps


def undirected_lex_product(G: UndirectedGraph, H: UndirectedGraph) -> UndirectedGraph:
    """Standard lexicographic product: edge on the first coordinate, or
    equal first coordinates and an edge on the second."""
    n = G.n * H.n
    edges = []
    for v in range(G.n):
        base = v * H.n
        for a, b in H.edges():
            edges.append((base + a, base + b))
    for u, v in G.edges():
        for a in range(H.n):
            for b in range(H.n):
                edges.append((u * H.n + a, v * H.n + b))
    return UndirectedGraph(n, edges)


# -- the eta audit -------------------------------------------------------------


@dataclass(frozen=True)
class EtaAuditReport:
    """Outcome of the subset audit.

    A clean exact report certifies eta-goodness; a clean sampled report
    certifies nothing (it can only refute).  Every recorded violation
    re-verified as acyclic before the report was built.
    """

    eta: float
    mode: Literal["exact", "sampled"]
    subset_size: int
    violations: tuple[tuple[tuple[int, int], frozenset[int], frozenset[int]], ...]
    samples_checked: int

    @property
    def certifies_goodness(self) -> bool:
        return self.mode == "exact" and not self.violations


def eta_audit(
    product: Digraph,
    vmap: ProductVertexMap,
    G: UndirectedGraph,
    eta: float,
    mode: Literal["exact", "sampled"] = "exact",
    budget: int = 1_000_000,
    seed: int = 0,
) -> EtaAuditReport:
    """Test, for each skeleton edge, whether every pair of subset choices
    of size ceil(|V(H)|^eta) across the edge induces a cycle.

    Exact mode enumerates all pairs per edge and errors out when the
    total exceeds the budget.  Sampled mode draws ``budget`` random
    pairs (edge uniform, subsets uniform) from a seeded generator.
    """
    if not (0 < eta <= 0.5):
        raise ValueError("eta must lie in (0, 1/2]")
    h = vmap.n_inner
    r = math.ceil(h**eta - 1e-12)
    r = max(r, 1)
    edges = list(G.edges())
    violations = []
    checked = 0
    if mode == "exact":
        per_edge = math.comb(h, r) ** 2
        if edges and per_edge * len(edges) > budget:
            raise ValueError(
                f"exact audit needs {per_edge * len(edges)} subset pairs, "
                f"over the budget {budget}"
            )
        for u, v in edges:
            cloud_u = list(vmap.cloud(u))
            cloud_v = list(vmap.cloud(v))
            for au in itertools.combinations(cloud_u, r):
                mu = mask_of(au)
                for av in itertools.combinations(cloud_v, r):
                    checked += 1
                    if find_cycle(product, mu | mask_of(av)) is None:
                        violations.append(((u, v), frozenset(au), frozenset(av)))
    elif mode == "sampled":
        if edges:
            rng = random.Random(seed)
            seen = set()
            for _ in range(budget):
                u, v = edges[rng.randrange(len(edges))]
                au = tuple(sorted(rng.sample(list(vmap.cloud(u)), r)))
                av = tuple(sorted(rng.sample(list(vmap.cloud(v)), r)))
                checked += 1
                if find_cycle(product, mask_of(au) | mask_of(av)) is None:
                    key = ((u, v), au, av)
                    if key not in seen:
                        seen.add(key)
                        violations.append(((u, v), frozenset(au), frozenset(av)))
    else:
        raise ValueError(f"unknown audit mode {mode!r}")

    for (_, au, av) in violations:
        if find_cycle(product, mask_of(au) | mask_of(av)) is not None:
            raise AssertionError("recorded violation does not re-verify as acyclic")
    return EtaAuditReport(
        eta=eta,
        mode=mode,
        subset_size=r,
        violations=tuple(violations),
        samples_checked=checked,
    )
