"""Inner horn filling in exit complexes, and how it fails.

When the span's structure maps are good (iota a levelwise-injective
inclusion, pi a right fibration) the exit complex is a quasicategory:
every inner horn has a filler.  The broken gallery span violates the
fibration hypothesis and its complex has a concrete unfillable horn.
"""

from exitpath.construction import build_exit
from exitpath.gallery import load_span
from exitpath.simplicial import nondeg
from exitpath.verify import (
    HornProblem,
    enumerate_horns,
    find_filler,
    verify_quasicategory,
)

for name in ("s0-defect", "boundary-collar"):
    span = load_span(name, verify_depth=3)
    ex = build_exit(span, 3)
    report = verify_quasicategory(ex, 3)
    print(report.to_text())
    print()

span = load_span("broken", verify_depth=2)
ex = build_exit(span, 2)
print("the broken span:  edge <- point -> edge, pi landing at the closed end")
report = verify_quasicategory(ex, 2)
print(report.to_text())
print()

print("the failing horn, by hand: the strata edge M.0,1 followed by the")
print("exit edge P.0,1@1 would need a composite 2-simplex, but every")
print("2-simplex of Ex is degenerate or lives in one part:")
h = HornProblem(2, 1, (nondeg("P.0,1@1", 1), None, nondeg("M.0,1", 1)))
print(f"  horn: {h.describe()}")
print(f"  filler: {find_filler(ex, h)}")
print()

fillable = 0
for horn in enumerate_horns(ex, 2, 1):
    if find_filler(ex, horn) is not None:
        fillable += 1
total = len(enumerate_horns(ex, 2, 1))
print(f"for scale: {fillable} of {total} inner 2-horns of Ex(broken) do fill")
