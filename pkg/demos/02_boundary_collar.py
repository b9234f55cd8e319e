"""Building the exit complex of the boundary-with-collar span.

The span is  point <- point -> edge  with the link sitting at vertex 0
of the edge: a 1-dimensional cartoon of a manifold boundary and its
collar.  Exit paths either stop at the collar vertex or run along the
edge, and the complex glues them to the boundary stratum.
"""

from exitpath.construction import (
    Exit,
    ExitPath,
    build_exit,
    exit_face,
    exit_simplices,
    is_exit_path,
)
from exitpath.documents import print_sset
from exitpath.gallery import load_span
from exitpath.simplicial import nondeg

span = load_span("boundary-collar", verify_depth=3)
print(f"span: {span.M.name} <- {span.L.name} -> {span.N.name}")
print(f"iota levelwise injective: {span.iota_mono}")
print()

edge = nondeg("0,1", 1)
degenerate_at_0 = span.N.degeneracy(nondeg("0", 0), 0)
degenerate_at_1 = span.N.degeneracy(nondeg("1", 0), 0)
print("membership of (gamma, j): the level-0 restriction must lift through iota")
for gamma in (edge, degenerate_at_0, degenerate_at_1):
    print(f"  ({gamma!r}, 1): {is_exit_path(span, gamma, 1)}")
print()

p = Exit(ExitPath(edge, 1))
print(f"faces of the exit edge {p!r}:")
print(f"  d_1 (low)   = {exit_face(span, p, 1)!r}   # through pi after the lift")
print(f"  d_0 (upper) = {exit_face(span, p, 0)!r}")
print()

print("exit paths per degree (degenerate ones included):")
for k in range(1, 4):
    print(f"  degree {k}: {exit_simplices(span, k)}")
print()

ex = build_exit(span, 3)
print("the materialized complex, as its document:")
print(print_sset(ex), end="")
print()
print("reading the triangle back: its faces compose the two exit edges")
tri = nondeg("P.0,1+s0@1", 2)
for i in range(3):
    print(f"  d_{i} = {ex.face(tri, i)!r}")
