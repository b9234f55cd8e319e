"""A tour of the exit shuffle calculus.

The k-simplices of an exit path complex are steered by k monotone
"shuffles" S_j of the prism Delta[1] x Delta[k-1]: the path spends j
steps at level 0, then jumps.  Every face and degeneracy of an exit
path reduces to reindexing along these maps, and the whole calculus is
three closed-form functions: flat, sharp, and the face classification.
"""

from exitpath.operators import face_op
from exitpath.shuffles import (
    FaceClass,
    UndefinedFlat,
    classify_face,
    collapse,
    exit_shuffle,
    flat,
    sharp,
)

k = 3
print(f"shuffles of the {k}-simplex into Delta[1] x Delta[{k - 1}]")
for j in range(1, k + 1):
    S = exit_shuffle(k, j)
    pts = "  ".join(f"{i} -> ({lv},{pos})" for i, (lv, pos) in enumerate(S.points))
    print(f"  S_{j}: {pts}")

print()
print("each shuffle is split by its collapse, C_j . S_j = id:")
for j in range(1, k + 1):
    S, C = exit_shuffle(k, j), collapse(k, j)
    assert all(C(*S(i)) == i for i in range(k + 1))
    print(f"  C_{j} . S_{j} = id on [{k}]   (low {C.low.values}, high {C.high.values})")

print()
print("composing S_j with a coface either stays in the prism (vertical,")
print("with a new exit index flat(k, j, i)) or falls off one end:")
for j in range(1, k + 1):
    row = []
    for i in range(k + 1):
        cls = classify_face(k, j, i)
        if cls is FaceClass.VERTICAL:
            row.append(f"d_{i}->@{flat(k, j, i)}")
        else:
            row.append(f"d_{i}->{cls.value}")
    print(f"  j = {j}: " + "  ".join(row))

print()
print("the low corner is the one place flat does not exist:")
try:
    flat(k, k, k)
except UndefinedFlat as e:
    print(f"  flat({k}, {k}, {k}) -> {e}")
print(f"  indeed S_{k} . coface_{k} never reaches level 1:",
      [exit_shuffle(k, k)(face_op(k, k)(m)) for m in range(k)])

print()
print("degeneracies always stay in the prism; sharp gives the new index:")
for j in range(1, k + 1):
    print(f"  j = {j}: " + "  ".join(f"s_{i}->@{sharp(k, j, i)}" for i in range(k + 1)))
