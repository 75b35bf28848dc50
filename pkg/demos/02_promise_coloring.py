#!/usr/bin/env python3
"""Coloring under a dicolorability promise.

A 2-dicolorable digraph gets at most 2*ceil(sqrt(n)) colors: big acyclic
out-neighborhoods are bought with fresh colors, small-degree vertices
are deferred into a low-degeneracy backedge graph.  The ell-promise
generalization recurses on out-neighborhoods.  When the promise is a
lie, a checkable certificate comes back instead.
"""

import time

from dicolor import (
    Digraph,
    NotColorableCertificate,
    dicolor_ell,
    dicolor_two,
    two_color_bound,
    verify_dicoloring,
)
from dicolor.approx import within_ell_bound
from dicolor.generators import gen_planted


def main():
    print("== 2-dicolorable promise ==")
    for n in (25, 100, 400):
        D, _ = gen_planted(n, 2, 0.5, seed=n)
        t0 = time.perf_counter()
        col = dicolor_two(D)
        dt = time.perf_counter() - t0
        assert verify_dicoloring(D, col) is None
        print(f"  n={n:<4} colors={col.num_colors:<3} "
              f"bound={two_color_bound(n):<3} ({dt * 1000:.1f} ms)")

    print("\n== ell = 3 promise, n = 216 ==")
    D, _ = gen_planted(216, 3, 0.5, seed=1)
    col = dicolor_ell(D, 3)
    assert verify_dicoloring(D, col) is None
    assert within_ell_bound(col.num_colors, 3, 216)
    print(f"  colors={col.num_colors} within 3 * 216^(2/3) = 108")

    print("\n== a broken promise ==")
    # complete digraph on four vertices: every out-neighborhood contains
    # a digon, so no vertex ever qualifies
    K4 = Digraph(4, [(u, v) for u in range(4) for v in range(4) if u != v])
    cert = dicolor_two(K4)
    assert isinstance(cert, NotColorableCertificate)
    print(f"  certificate: vertices {sorted(cert.vertices)} all have cyclic")
    print(f"  out-neighborhoods; independently checked: {cert.check(K4)}")


if __name__ == "__main__":
    main()
