"""Circle numbers and circle arrangements across the small prime census."""
from collections import defaultdict

from shadowkit import non_seifert_resolve, serialize_gauss, x_invariant
from shadowkit.census import enumerate_projections

by_tree = defaultdict(list)
print(f"{'gauss code':50s} circles tree    X")
for P in enumerate_projections(7, prime=True, no_onegon=True):
    A = non_seifert_resolve(P)
    by_tree[A.name].append(P)
    print(f"{serialize_gauss(P):50s} {A.circles:7d} {A.name:6s} {x_invariant(P)[0]:3d}")

print("\narrangements shared by several projections:")
for name, group in sorted(by_tree.items()):
    if len(group) > 1:
        print(f"  {name}: {len(group)} projections, crossing numbers {[P.n for P in group]}")
