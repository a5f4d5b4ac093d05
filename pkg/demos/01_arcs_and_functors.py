"""Arcs of the infinity-gon: admissibility, functors, quiver coordinates.

Run:  python demos/01_arcs_and_functors.py
"""

from sphtor import (
    arc,
    arcs_in_window,
    component,
    from_coord,
    is_admissible,
    relation,
    serre,
    suspend,
    to_coord,
    translate,
)

print("=== admissibility ===")
for w, x, y in [(2, 0, 3), (2, 0, 1), (-2, 5, 0), (-2, 4, 0), (0, 4, 4), (3, 0, 2)]:
    print(f"w={w:>2}  pair ({x},{y}): {'admissible' if is_admissible(w, x, y) else 'not admissible'}")

print()
print("=== functors act by uniform endpoint shifts ===")
a = arc(2, 0, 3)
print(f"w=2, a = {a}")
print(f"  suspension   : {suspend(a)}")
print(f"  AR translate : {translate(a)}   (step d = w - 1 = 1)")
print(f"  Serre        : {serre(a)}   (= suspension of the translate)")
b = arc(-2, 5, 0)
print(f"w=-2, b = {b}: Serre image {serre(b)}  (shift by -w = 2)")

print()
print("=== quiver coordinates (suspension exponent, level) ===")
for a in [arc(2, -2, 0), arc(2, 0, 3), arc(-2, 5, 0), arc(0, 4, 4)]:
    c = to_coord(a)
    print(f"w={a.w:>2}  {a} <-> shift {c.shift:>3}, level {c.level}  (round trip {from_coord(a.w, c)})")

print()
print("=== the AR quiver has |w - 1| components ===")
for w in (-3, -2, 2, 3):
    comps = sorted({component(a) for a in arcs_in_window(w, -10, 10)})
    print(f"w={w:>2}: components {comps}")

print()
print("=== pairwise relations ===")
pairs = [
    (arc(2, 0, 3), arc(2, 1, 4)),
    (arc(2, 0, 5), arc(2, 1, 4)),
    (arc(-2, 2, 0), arc(-2, 8, 3)),
    (arc(0, 3, 1), arc(0, 5, 3)),
    (arc(0, 3, 3), arc(0, 2, 0)),
]
for a, b in pairs:
    rel = relation(a, b)
    extra = ""
    if rel.contacts:
        extra = f" via {rel.contacts}"
    if rel.shared_vertex is not None:
        extra = f" at vertex {rel.shared_vertex}"
    print(f"w={a.w:>2}  {a} vs {b}: {rel.kind.value}{extra}, distance {rel.distance}")
