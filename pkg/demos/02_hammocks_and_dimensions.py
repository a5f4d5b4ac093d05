"""Hom and Ext dimensions: the quiver route against the arc route.

Run:  python demos/02_hammocks_and_dimensions.py
"""

import itertools

from sphtor import (
    arc,
    arcs_in_window,
    cohomology,
    ext_dim,
    ext_dim_arc,
    hammock_side,
    hom_dim,
    serre,
    suspend,
)

print("=== hom dimensions ===")
print("w=0 self-hom is two-dimensional:", hom_dim(arc(0, 3, 1), arc(0, 3, 1)))
print("same ray (w=2):", hom_dim(arc(2, -2, 0), arc(2, -2, 5)))
print("far apart (w=2):", hom_dim(arc(2, 0, 3), arc(2, 10, 13)))

print()
print("=== Ext^1 by two independent routes ===")
cases = [
    (2, (1, 4), (0, 3)),
    (0, (2, 0), (3, 1)),
    (-2, (8, 3), (2, 0)),
    (-2, (2, 0), (8, 3)),
    (3, (1, 4), (0, 3)),
]
for w, bp, ap in cases:
    b, a = arc(w, *bp), arc(w, *ap)
    quiver, arcs_route = ext_dim(b, a), ext_dim_arc(b, a)
    side = f", side {hammock_side(b, a).value}" if quiver else ""
    print(f"w={w:>2}  Ext^1({b},{a}) = {quiver} (arc route {arcs_route}){side}")

print()
print("=== exhaustive agreement on a window ===")
for w in (-2, 0, 3):
    arcs = list(arcs_in_window(w, -8, 8))
    bad = sum(
        ext_dim(b, a) != ext_dim_arc(b, a) for a, b in itertools.product(arcs, repeat=2)
    )
    serre_bad = sum(
        hom_dim(a, b) != hom_dim(b, serre(a))
        for a, b in itertools.product(arcs, repeat=2)
    )
    print(f"w={w:>2}: {len(arcs)} arcs, route mismatches {bad}, Serre mismatches {serre_bad}")

print()
print("=== cohomology of indecomposables ===")
for a in [arc(2, -2, 0), arc(2, 0, 3), arc(-2, 5, 0), arc(0, 4, 4)]:
    print(f"w={a.w:>2}  {a}: {cohomology(a)}")
print("suspending shifts degrees down by one:", cohomology(suspend(arc(2, 0, 3))))
