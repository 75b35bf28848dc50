#!/usr/bin/env python3
"""Dense digraphs: the 2-dicolorable and C3-free pipelines.

The 2-dicolorable pipeline saturates heavy non-edges (forced
orientations that preserve every valid 2-dicoloring), cuts all heavy
arcs with one bipartition, and colors each light part recursively:
(10/3)(4^alpha - 1) colors total.  The C3-free pipeline saturates to
maximality, picks chain endpoints through a semi-kernel, and lands at
(alpha+8)!/9! colors; for independence number 2 that is 10, and some
vertex always has a tournament out-neighborhood.
"""

from dicolor import (
    dense_bound,
    dicolor_two_dense,
    saturate_heavy_nonarcs,
    split_light,
    verify_dicoloring,
)
from dicolor.c3free import (
    alpha2_witness,
    c3free_bound,
    dicolor_c3free,
    saturate_c3free,
    semi_kernel,
)
from dicolor.generators import gen_c3free_blowup, gen_planted


def main():
    print("== 2-dicolorable tournament, n = 120 ==")
    D, _ = gen_planted(120, 2, 1.0, seed=5)
    sat = saturate_heavy_nonarcs(D)  # tournaments: nothing to add
    split = split_light(sat)
    print(f"  light split: |part1|={len(split.part1)} |part2|={len(split.part2)}")
    col = dicolor_two_dense(D, 1)
    assert verify_dicoloring(D, col) is None
    print(f"  colors={col.num_colors} (bound {dense_bound(1)})")

    print("\n== planted independence-2 digraph, n = 60 ==")
    D, _ = gen_planted(60, 2, 0.5, seed=8)
    sat = saturate_heavy_nonarcs(D)
    added = sat.arc_count - D.arc_count
    print(f"  saturation added {added} forced arcs")
    col = dicolor_two_dense(D, 2)
    assert verify_dicoloring(D, col) is None
    print(f"  colors={col.num_colors} (bound {dense_bound(2)})")

    print("\n== C3-free five-cycle blowup, n = 50 ==")
    D = gen_c3free_blowup(1, seed=2, inner_size=10)
    sat = saturate_c3free(D)
    K = semi_kernel(sat)
    print(f"  semi-kernel of the saturated digraph: {sorted(K.vertices)}")
    col = dicolor_c3free(sat, 2, range(c3free_bound(2)))
    assert verify_dicoloring(D, col) is None
    print(f"  colors={col.num_colors} (bound {c3free_bound(2)})")
    w = alpha2_witness(D)
    print(f"  witness vertex {w}: out-neighborhood is a tournament")


if __name__ == "__main__":
    main()
