"""Middle terms of extensions and the connector-arc calculus.

Run:  python demos/03_extensions_and_ptolemy.py
"""

from sphtor import (
    CohomologyVector,
    arc,
    cohomology,
    e_set,
    ext_dim,
    middle_cohomology,
    middle_term_multi,
    middle_terms,
    ptolemy_arcs,
    suspend,
)
from sphtor.errors import NonOrthogonalInput

print("=== middle terms with indecomposable outer terms ===")
a, b = arc(2, 0, 3), arc(2, 1, 4)
for cls in middle_terms(a, b):
    mids = " + ".join(map(str, cls.middles)) or "0"
    print(f"{a} -> {mids} -> {b}   [{cls.side.value}]")
print("suspension pair has a zero middle:", middle_terms(arc(2, 1, 4), arc(2, 0, 3))[0].middles)

print()
print("=== weight 0: the two-dimensional space gives two triangle shapes ===")
a0 = arc(0, 3, 1)
for cls in middle_terms(a0, suspend(a0)):
    mids = " + ".join(map(str, cls.middles)) or "0"
    print(f"{a0} -> {mids} -> {suspend(a0)}   [{cls.side.value}]")
print("self-extension middles are the endpoint loops:",
      middle_terms(a0, a0)[0].middles)

print()
print("=== connector arcs mirror the middle summands ===")
pairs = [(arc(2, 0, 3), arc(2, 1, 4)), (arc(-2, 2, 0), arc(-2, 8, 3)),
         (arc(0, 3, 1), arc(0, 3, 1))]
for x, y in pairs:
    pt = ptolemy_arcs(x, y)
    print(f"w={x.w:>2}  {x},{y}: I={sorted(map(str, pt.class_i))} "
          f"II={sorted(map(str, pt.class_ii))} III={sorted(map(str, pt.class_iii))}")
    print(f"        two-sided middle set: {sorted(map(str, e_set(x, y)))}")

print()
print("=== cohomology bookkeeping certifies the middles ===")
a, b = arc(2, 0, 3), arc(2, 1, 4)
cls = middle_terms(a, b)[0]
total = CohomologyVector()
for middle in cls.middles:
    total = total + cohomology(middle)
print("sum over summands :", total)
print("closed-form middle:", middle_cohomology(a, b, cls.side))

print()
print("=== several last terms at once ===")
base = arc(2, 0, 5)
outcome = middle_term_multi(base, [arc(2, 4, 6), arc(2, -2, 1)])[0]
print(f"{base} extended by (4,6) and (-2,1): middles {list(map(str, outcome.middles))}")
try:
    middle_term_multi(base, [arc(2, 1, 6), arc(2, 2, 7)])
except NonOrthogonalInput as exc:
    print("non-orthogonal input reduces instead:", exc.witness)
print("weight-0 suspension outcomes depend on the chosen map:")
for out in middle_term_multi(a0, [arc(0, 0, -2), suspend(a0)]):
    print(f"  {out.map_class:>15}: {list(map(str, out.middles))}")
print("(extension exists?", ext_dim(arc(0, 0, -2), a0) == 1, ")")
