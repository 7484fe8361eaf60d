"""The trefoil shadow under the two kinds of second move.

Weak moves undo it completely, strong moves cannot touch it.
"""
from shadowkit import parse_gauss, reduce, serialize_gauss
from shadowkit.moves import reduction_steps

trefoil = parse_gauss("3; 1 2 3 1 2 3; + - +")
print("faces of the trefoil shadow:")
for f in trefoil.faces:
    print(f"  face {f.id}: degree {f.degree}, {f.kind}")

print("\nweak reduction, move by move:")
for step in reduction_steps(trefoil, "weak"):
    print(f"  {step.kind:4s} -> {serialize_gauss(step.result)}")

strong = reduce(trefoil, "strong")
print("\nstrong reduced form:", serialize_gauss(strong))
print("unchanged, because every 2-gon of the trefoil is incoherent")
