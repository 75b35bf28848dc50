#!/usr/bin/env python3
"""Ground truth on small digraphs: the exact oracles.

Walks through the dichromatic number, the acyclic number and their
undirected counterparts on a handful of named instances, including the
digon trick that embeds graph coloring inside dicoloring.
"""

from dicolor import (
    Digraph,
    dichromatic_number,
    is_k_dicolorable,
    max_acyclic_set,
    chromatic_and_alpha,
    verify_dicoloring,
)
from dicolor.graphs import digon_saturation, make_graph


def show(name, D):
    k, col = dichromatic_number(D)
    witness = max_acyclic_set(D)
    assert verify_dicoloring(D, col) is None
    print(f"{name:<28} n={D.n:<3} chi-vec={k}  alpha-vec={witness.size} "
          f"witness={sorted(witness.vertices)}")


def main():
    print("== exact oracles ==")
    show("directed triangle", Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    show("digon", Digraph(2, [(0, 1), (1, 0)]))
    show("transitive tournament T6",
         Digraph(6, [(i, j) for i in range(6) for j in range(i + 1, 6)]))

    r5 = Digraph(5, [(i, (i + 1) % 5) for i in range(5)]
                 + [(i, (i + 2) % 5) for i in range(5)])
    show("rotational tournament R5", r5)
    two = is_k_dicolorable(r5, 2)
    print(f"  R5 admits a 2-dicoloring: classes "
          f"{[tuple(v for v in range(5) if two.colors[v] == c) for c in range(2)]}")

    print("\n== the digon reduction ==")
    print("replace each edge of an undirected graph by a digon; dicoloring")
    print("the result is exactly coloring the graph:")
    pentagon = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    chi, alpha, _ = chromatic_and_alpha(pentagon)
    D = digon_saturation(pentagon)
    k, _ = dichromatic_number(D)
    a = max_acyclic_set(D).size
    print(f"  C5 graph: chi={chi} alpha={alpha}")
    print(f"  digon-saturated: chi-vec={k} alpha-vec={a}")
    assert (chi, alpha) == (k, a)


if __name__ == "__main__":
    main()
