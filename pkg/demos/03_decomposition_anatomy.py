#!/usr/bin/env python3
"""Anatomy of the path decomposition.

A shortest mixed path (forward arcs and non-edges) splits the vertex set
into through-zones D_i, non-neighborhood zones N_i and a tiny remainder.
Far-apart zones admit no forward arcs, so five D palettes and four N
palettes suffice no matter how long the chain is: that recycling is what
the combiner implements.
"""

from dicolor import (
    PaletteBudget,
    build_path_decomposition,
    combine_palettes,
    dichromatic_number,
    mixed_shortest_path,
    verify_dicoloring,
)
from dicolor.generators import gen_planted
from dicolor.graphs import induced


def main():
    D, _ = gen_planted(26, 2, 0.35, seed=6)
    chain = mixed_shortest_path(D, 0, D.n - 1)
    print(f"chain ({chain.k} steps): {chain.vertices}")
    print(f"steps: {[s.value for s in chain.steps]}")

    decomp = build_path_decomposition(D, chain)
    decomp.check_partition()
    decomp.check_long_arcs()
    for i, zone in enumerate(decomp.d_sets):
        if zone:
            print(f"  D_{i}: {sorted(zone)}")
    for i, zone in enumerate(decomp.n_sets):
        if zone:
            print(f"  N_{i}: {sorted(zone)}")
    print(f"  Z:   {sorted(decomp.z)}")

    # color each zone exactly, then let the combiner recycle palettes
    subs = {}
    b = c = d = 1
    for kind, zones in (("D", decomp.d_sets), ("N", decomp.n_sets)):
        for i, zone in enumerate(zones):
            if not zone:
                continue
            sub, labels = induced(D, zone)
            _, col = dichromatic_number(sub)
            subs[(kind, i)] = {labels[j]: col.colors[j] for j in range(sub.n)}
            used = col.num_colors
            if kind == "N":
                d = max(d, used)
            elif i in (0, decomp.k + 1):
                b = max(b, used)
            else:
                c = max(c, used)

    budget = PaletteBudget(b=b, c=c, d=d)
    col = combine_palettes(decomp, budget, subs)
    assert verify_dicoloring(D, col) is None
    print(f"\nzone budgets b={b} c={c} d={d}")
    print(f"combined coloring: {col.num_colors} colors "
          f"(case bound {budget.color_bound(decomp.k)})")


if __name__ == "__main__":
    main()
