"""The weight-1 tubes: dimensions, extension families, torsion pairs.

Run:  python demos/05_tube_category.py
"""

from sphtor import T1Descriptor, TubeObject, t1_classify, t1_ext_dim, t1_extensions, t1_hom_dim

print("=== hom dimensions follow the min-plus-one rule ===")
for a, b in [((0, 2), (0, 3)), ((0, 2), (1, 0)), ((0, 2), (2, 5))]:
    x, y = TubeObject(*a), TubeObject(*b)
    print(f"hom({x}, {y}) = {t1_hom_dim(x, y)}")

print()
print("=== extension families ===")
for r, target in [(1, TubeObject(0, 2)), (0, TubeObject(0, 0)), (1, TubeObject(1, 1))]:
    fams = t1_extensions(r, target)
    print(f"level {r} by {target}: {t1_ext_dim(target, TubeObject(0, r))} classes")
    for fam in fams:
        mids = " + ".join(f"X_{x.level}@{x.shift}" for x in fam) or "0"
        print(f"   middle {mids}")

print()
print("=== the only torsion pairs are the standard ladder ===")
for desc in [
    T1Descriptor("upper", n=5),
    T1Descriptor("empty"),
    T1Descriptor("all"),
    T1Descriptor("explicit", tubes={0: "all"}),
    T1Descriptor("explicit", tubes={2: frozenset({0, 1})}),
]:
    print(f"{desc.pattern:>9}: {t1_classify(desc)}")
