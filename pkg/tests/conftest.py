"""Shared test helpers: independent brute-force oracles and instance
strategies.

The brute oracles deliberately avoid the library's search machinery.
Acyclicity is decided by trying every vertex permutation, colorability
by trying every assignment, maximum sets by enumerating subsets; slow,
but trustworthy on the tiny instances they are used for.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import strategies as st

from dicolor import Digraph, UndirectedGraph


# -- independent oracles ------------------------------------------------------


def perm_acyclic(arcs: list[tuple[int, int]], subset: tuple[int, ...]) -> bool:
    """Subset induces an acyclic subdigraph iff some ordering of it has
    no backward arc.  Factorial; keep subsets tiny."""
    inside = set(subset)
    sub_arcs = [(u, v) for u, v in arcs if u in inside and v in inside]
    if not sub_arcs:
        return True
    for order in permutations(subset):
        pos = {v: i for i, v in enumerate(order)}
        if all(pos[u] < pos[v] for u, v in sub_arcs):
            return True
    return False


def brute_dichromatic(n: int, arcs: list[tuple[int, int]]) -> int:
    """Smallest k such that some k-assignment has all classes acyclic."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for assignment in product(range(k), repeat=n):
            classes = [tuple(v for v in range(n) if assignment[v] == c)
                       for c in range(k)]
            if all(perm_acyclic(arcs, cls) for cls in classes):
                return k
    raise AssertionError("unreachable: singletons are acyclic")


def brute_alpha_vec(n: int, arcs: list[tuple[int, int]]) -> int:
    """Largest acyclic induced subset, by descending subset enumeration."""
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if perm_acyclic(arcs, subset):
                return size
    return 0


def brute_min_fvs(n: int, arcs: list[tuple[int, int]]) -> int:
    """Smallest vertex set whose removal leaves an acyclic digraph."""
    for size in range(0, n + 1):
        for removed in combinations(range(n), size):
            rest = tuple(v for v in range(n) if v not in removed)
            if perm_acyclic(arcs, rest):
                return size
    raise AssertionError("unreachable: removing everything works")


def brute_chromatic(n: int, edges: list[tuple[int, int]]) -> int:
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for assignment in product(range(k), repeat=n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def brute_independence(n: int, edges: list[tuple[int, int]]) -> int:
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            inside = set(subset)
            if not any(u in inside and v in inside for u, v in edges):
                return size
    return 0


def all_digraphs(n: int):
    """Every labeled digraph on n vertices (2^(n(n-1)) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for picks in product((False, True), repeat=len(pairs)):
        yield [p for p, take in zip(pairs, picks) if take]


def all_graphs(n: int):
    """Every labeled undirected graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for picks in product((False, True), repeat=len(pairs)):
        yield [p for p, take in zip(pairs, picks) if take]


# -- seeded random instances ---------------------------------------------------


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair independently an arc with probability p; digons
    can appear."""
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return Digraph(n, arcs)


def random_oriented(n: int, p: float, seed: int) -> Digraph:
    """Each unordered pair independently: arc with probability p, fair
    coin direction; no digons."""
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


# -- hypothesis strategies -------------------------------------------------------


@st.composite
def digraphs(draw, max_n: int = 7, digons: bool = True):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if not digons:
        pairs = [(u, v) for u, v in pairs if u < v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
                  if pairs else st.just([]))
    if not digons:
        flips = draw(st.lists(st.booleans(), min_size=len(chosen),
                              max_size=len(chosen)))
        chosen = [(v, u) if f else (u, v) for (u, v), f in zip(chosen, flips)]
    return Digraph(n, chosen)


@st.composite
def graphs(draw, max_n: int = 7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
                  if pairs else st.just([]))
    return UndirectedGraph(n, chosen)


# -- tiny named instances ---------------------------------------------------------


@pytest.fixture
def c3() -> Digraph:
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def c4() -> Digraph:
    return Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5() -> Digraph:
    return Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def digon() -> Digraph:
    return Digraph(2, [(0, 1), (1, 0)])


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def rotational_r5() -> Digraph:
    arcs = []
    for i in range(5):
        arcs.append((i, (i + 1) % 5))
        arcs.append((i, (i + 2) % 5))
    return Digraph(5, arcs)


def digon_clique(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])
