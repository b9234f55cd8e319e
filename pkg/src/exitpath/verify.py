"""Machine verification: simplicial identities, horn filling, fibrations.

Everything here consumes plain SimplicialSet values, reports through a
serializable VerificationReport, and is deterministic: enumeration
follows the canonical simplex order, searches return the first hit in
that order, and search budgets are applied per subproblem so results do
not depend on scheduling.

A budget is a node allowance; one node is one candidate simplex
inspected (filler and lift searches) or one partial assignment extended
(horn enumeration).  Exhaustion marks the surrounding check
"inconclusive" rather than guessing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .simplicial import FormalSimplex, SimplicialMap, SimplicialSet


class BudgetExhausted(RuntimeError):
    pass


class Budget:
    """A decrementing node allowance; limit None means unlimited."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.spent = 0

    def spend(self, n: int = 1):
        self.spent += n
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExhausted(f"budget of {self.limit} nodes exhausted")


@dataclass(frozen=True)
class CheckEntry:
    name: str
    status: str  # "pass" | "fail" | "inconclusive"
    detail: str = ""
    witness: str | None = None

    def line(self) -> str:
        tail = f"  [{self.witness}]" if self.witness else ""
        detail = f" ({self.detail})" if self.detail else ""
        return f"{self.status.upper():12s} {self.name}{detail}{tail}"


@dataclass
class VerificationReport:
    subject: str
    bound: int
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, name: str, status: str, detail: str = "", witness: str | None = None):
        self.entries.append(CheckEntry(name, status, detail, witness))

    @property
    def ok(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    @property
    def failed(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def inconclusive(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == "inconclusive"]

    def to_text(self) -> str:
        lines = [f"subject: {self.subject}", f"degree bound: {self.bound}"]
        lines += [e.line() for e in self.entries]
        verdict = "PASS" if self.ok else ("FAIL" if self.failed else "INCONCLUSIVE")
        lines.append(f"result: {verdict} ({len(self.entries)} checks)")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "subject": self.subject,
            "bound": self.bound,
            "ok": self.ok,
            "entries": [
                {"name": e.name, "status": e.status, "detail": e.detail,
                 "witness": e.witness}
                for e in self.entries
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2)


# -- simplicial identities -----------------------------------------------------


def verify_simplicial_identities(X: SimplicialSet, depth: int) -> VerificationReport:
    """Check the five simplicial identity families on every simplex of
    degree <= depth, computing both sides stepwise through the face
    tables.  Each family gets one report entry; a fail entry carries
    the first counterexample."""
    report = VerificationReport(X.name, depth)
    families = [
        ("d_i d_j = d_{j-1} d_i (i<j)", _check_dd),
        ("d_i s_j = s_{j-1} d_i (i<j)", _check_ds_low),
        ("d_i s_j = id (i=j, j+1)", _check_ds_id),
        ("d_i s_j = s_j d_{i-1} (i>j+1)", _check_ds_high),
        ("s_i s_j = s_{j+1} s_i (i<=j)", _check_ss),
    ]
    for name, checker in families:
        witness = None
        checked = 0
        for n in range(depth + 1):
            for s in X.simplices_at(n):
                hit, count = checker(X, s)
                checked += count
                if hit and witness is None:
                    witness = hit
            if witness:
                break
        if witness:
            report.add(name, "fail", witness=witness)
        else:
            report.add(name, "pass", detail=f"{checked} instances")
    return report


def _check_dd(X, s):
    n = s.dim
    if n < 2:
        return None, 0
    count = 0
    for j in range(1, n + 1):
        for i in range(j):
            count += 1
            lhs = X.face(X.face(s, j), i)
            rhs = X.face(X.face(s, i), j - 1)
            if lhs != rhs:
                return (f"{s!r}: d_{i} d_{j} = {lhs!r} != {rhs!r} = d_{j-1} d_{i}", count)
    return None, count


def _check_ds_low(X, s):
    n = s.dim
    count = 0
    for j in range(n + 1):
        for i in range(j):
            count += 1
            lhs = X.face(X.degeneracy(s, j), i)
            rhs = X.degeneracy(X.face(s, i), j - 1)
            if lhs != rhs:
                return (f"{s!r}: d_{i} s_{j} = {lhs!r} != {rhs!r} = s_{j-1} d_{i}", count)
    return None, count


def _check_ds_id(X, s):
    n = s.dim
    count = 0
    for j in range(n + 1):
        for i in (j, j + 1):
            count += 1
            lhs = X.face(X.degeneracy(s, j), i)
            if lhs != s:
                return (f"{s!r}: d_{i} s_{j} = {lhs!r} != the simplex itself", count)
    return None, count


def _check_ds_high(X, s):
    n = s.dim
    count = 0
    for j in range(n + 1):
        for i in range(j + 2, n + 2):
            count += 1
            lhs = X.face(X.degeneracy(s, j), i)
            rhs = X.degeneracy(X.face(s, i - 1), j)
            if lhs != rhs:
                return (f"{s!r}: d_{i} s_{j} = {lhs!r} != {rhs!r} = s_{j} d_{i-1}", count)
    return None, count


def _check_ss(X, s):
    n = s.dim
    count = 0
    for j in range(n + 1):
        for i in range(j + 1):
            count += 1
            lhs = X.degeneracy(X.degeneracy(s, j), i)
            rhs = X.degeneracy(X.degeneracy(s, i), j + 1)
            if lhs != rhs:
                return (f"{s!r}: s_{i} s_{j} = {lhs!r} != {rhs!r} = s_{j+1} s_{i}", count)
    return None, count


# -- horns ---------------------------------------------------------------------


@dataclass(frozen=True)
class HornProblem:
    """A horn of shape (n, missing): faces[a] for a != missing, None at
    missing.  Faces must satisfy the matching condition
    d_a f_b = d_{b-1} f_a for a < b, both != missing."""

    n: int
    missing: int
    faces: tuple[FormalSimplex | None, ...]

    def present(self):
        return [(a, f) for a, f in enumerate(self.faces) if a != self.missing]

    def describe(self) -> str:
        parts = ", ".join(f"d_{a}={f!r}" for a, f in self.present())
        return f"Lambda^{self.n}_{self.missing}({parts})"


def horn_is_compatible(X: SimplicialSet, h: HornProblem) -> bool:
    for b in range(h.n + 1):
        if b == h.missing or h.faces[b] is None:
            continue
        for a in range(b):
            if a == h.missing:
                continue
            if X.face(h.faces[b], a) != X.face(h.faces[a], b - 1):
                return False
    return True


def enumerate_horns(X: SimplicialSet, n: int, missing: int,
                    budget: Budget | None = None) -> list[HornProblem]:
    """All horns of shape (n, missing) in X, by backtracking over the
    face slots in ascending index order with incremental matching."""
    if n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= missing <= n:
        raise ValueError(f"horn index {missing} outside 0..{n}")
    budget = budget or Budget(None)
    slots = [a for a in range(n + 1) if a != missing]
    candidates = X.simplices_at(n - 1)
    out: list[HornProblem] = []

    def extend(chosen: dict[int, FormalSimplex], depth: int):
        if depth == len(slots):
            faces = tuple(chosen.get(a) for a in range(n + 1))
            out.append(HornProblem(n, missing, faces))
            return
        b = slots[depth]
        for f in candidates:
            budget.spend()
            ok = True
            for a, g in chosen.items():
                # a < b always: slots ascend
                if X.face(f, a) != X.face(g, b - 1):
                    ok = False
                    break
            if ok:
                chosen[b] = f
                extend(chosen, depth + 1)
                del chosen[b]

    extend({}, 0)
    return out


def find_filler(X: SimplicialSet, h: HornProblem,
                budget: Budget | None = None) -> FormalSimplex | None:
    """First n-simplex whose faces extend the horn, in canonical order."""
    budget = budget or Budget(None)
    for x in X.simplices_at(h.n):
        budget.spend()
        if all(X.face(x, a) == f for a, f in h.present()):
            return x
    return None


def verify_quasicategory(X: SimplicialSet, depth: int, budget: int | None = None,
                         workers: int = 1) -> VerificationReport:
    """Inner-horn filling for all shapes 0 < i < n <= depth.

    The budget is a per-subproblem node limit: each (n, i) enumeration
    gets one allowance and each horn's filler search gets a fresh one,
    so verdicts are independent of worker count.
    """
    report = VerificationReport(X.name, depth)
    shapes = [(n, i) for n in range(2, depth + 1) for i in range(1, n)]
    results = _run_blocks(
        [(f"inner horns Lambda^{n}_{i}", _horn_block, (X, n, i, budget)) for n, i in shapes],
        workers)
    for entry in results:
        report.entries.append(entry)
    return report


def _horn_block(X: SimplicialSet, n: int, i: int, budget: int | None) -> CheckEntry:
    name = f"inner horns Lambda^{n}_{i}"
    try:
        horns = enumerate_horns(X, n, i, Budget(budget))
    except BudgetExhausted:
        return CheckEntry(name, "inconclusive", detail="enumeration budget exhausted")
    unfilled = None
    exhausted = 0
    for h in horns:
        try:
            if find_filler(X, h, Budget(budget)) is None:
                unfilled = h
                break
        except BudgetExhausted:
            exhausted += 1
    if unfilled is not None:
        return CheckEntry(name, "fail", detail=f"{len(horns)} horns",
                          witness=f"no filler for {unfilled.describe()}")
    if exhausted:
        return CheckEntry(name, "inconclusive",
                          detail=f"{exhausted}/{len(horns)} searches hit the budget")
    return CheckEntry(name, "pass", detail=f"{len(horns)} horns filled")


def _run_blocks(blocks, workers: int):
    """Run (name, fn, args) blocks, preserving order; workers > 1 uses a
    thread pool purely for wall-clock overlap."""
    if workers <= 1:
        return [fn(*args) for _, fn, args in blocks]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args) for _, fn, args in blocks]
        return [f.result() for f in futures]


# -- fibrations ------------------------------------------------------------------


_KIND_RANGES = {
    "right": lambda n: range(1, n + 1),
    "inner": lambda n: range(1, n),
    "kan": lambda n: range(0, n + 1),
}


def check_fibration(f: SimplicialMap, depth: int, kind: str = "right",
                    budget: int | None = None, workers: int = 1) -> VerificationReport:
    """Horn-lifting checks for f through degree depth.

    kind picks the horn indices per dimension n: "right" 0 < i <= n,
    "inner" 0 < i < n, "kan" 0 <= i <= n.  Every commuting square of a
    horn in the domain against an n-simplex downstairs must admit a
    lift; witnesses name the first square without one.
    """
    if kind not in _KIND_RANGES:
        raise ValueError(f"unknown fibration kind {kind!r}")
    report = VerificationReport(f"{f.name}: {f.domain.name} -> {f.codomain.name}", depth)
    shapes = [(n, i) for n in range(1, depth + 1) for i in _KIND_RANGES[kind](n)]
    results = _run_blocks(
        [(f"lifts Lambda^{n}_{i}", _lift_block, (f, n, i, budget)) for n, i in shapes],
        workers)
    for entry in results:
        report.entries.append(entry)
    return report


def _lift_block(f: SimplicialMap, n: int, i: int, budget: int | None) -> CheckEntry:
    name = f"lifts Lambda^{n}_{i}"
    X, Y = f.domain, f.codomain
    try:
        horns = enumerate_horns(X, n, i, Budget(budget))
    except BudgetExhausted:
        return CheckEntry(name, "inconclusive", detail="enumeration budget exhausted")
    bases = Y.simplices_at(n)
    squares = 0
    exhausted = 0
    for h in horns:
        images = [(a, f(g)) for a, g in h.present()]
        for base in bases:
            if any(Y.face(base, a) != img for a, img in images):
                continue
            squares += 1
            try:
                if _find_lift(f, h, base, Budget(budget)) is None:
                    return CheckEntry(
                        name, "fail", detail=f"{squares} squares",
                        witness=f"no lift of {base!r} along {h.describe()}")
            except BudgetExhausted:
                exhausted += 1
    if exhausted:
        return CheckEntry(name, "inconclusive",
                          detail=f"{exhausted}/{squares} searches hit the budget")
    return CheckEntry(name, "pass", detail=f"{squares} squares lifted")


def _find_lift(f: SimplicialMap, h: HornProblem, base: FormalSimplex,
               budget: Budget) -> FormalSimplex | None:
    X = f.domain
    for x in X.simplices_at(h.n):
        budget.spend()
        if f(x) != base:
            continue
        if all(X.face(x, a) == g for a, g in h.present()):
            return x
    return None


# -- isomorphism ------------------------------------------------------------------


def find_isomorphism(X: SimplicialSet, Y: SimplicialSet,
                     depth: int) -> dict[str, str] | None:
    """A generator bijection X -> Y through degree depth commuting with
    the face tables, or None.  Backtracking dimension by dimension;
    deterministic, returns the first match in canonical order."""
    dims = sorted(set(list(X.gens) + list(Y.gens)))
    dims = [d for d in dims if d <= depth]
    for d in dims:
        if len(X.gens.get(d, [])) != len(Y.gens.get(d, [])):
            return None
    mapping: dict[str, str] = {}

    def carry(s: FormalSimplex) -> FormalSimplex:
        return FormalSimplex(mapping[s.gen], s.degeneracy)

    def assign(dim_idx: int, pos: int, used: set[str]) -> bool:
        if dim_idx == len(dims):
            return True
        d = dims[dim_idx]
        xs = X.gens.get(d, [])
        if pos == len(xs):
            return assign(dim_idx + 1, 0, set())
        g = xs[pos]
        for h in Y.gens.get(d, []):
            if h in used:
                continue
            if d >= 1:
                wanted = [carry(X.face_table[(g, i)]) for i in range(d + 1)]
                actual = [Y.face_table[(h, i)] for i in range(d + 1)]
                if wanted != actual:
                    continue
            mapping[g] = h
            used.add(h)
            if assign(dim_idx, pos + 1, used):
                return True
            used.discard(h)
            del mapping[g]
        return False

    if assign(0, 0, set()):
        return dict(mapping)
    return None


def isomorphism_report(X: SimplicialSet, Y: SimplicialSet, depth: int) -> VerificationReport:
    """Count comparison plus full face/degeneracy table comparison under
    an explicitly constructed generator bijection."""
    report = VerificationReport(f"{X.name} ~ {Y.name}", depth)
    for n in range(depth + 1):
        cx, cy = X.count_at(n), Y.count_at(n)
        if cx == cy:
            report.add(f"simplex count at degree {n}", "pass", detail=str(cx))
        else:
            report.add(f"simplex count at degree {n}", "fail",
                       witness=f"{cx} vs {cy}")
    if report.failed:
        return report
    mapping = find_isomorphism(X, Y, depth)
    if mapping is None:
        report.add("generator bijection", "fail",
                   witness="no face-compatible bijection exists")
        return report
    report.add("generator bijection", "pass", detail=f"{len(mapping)} generators")

    def carry(s: FormalSimplex) -> FormalSimplex:
        return FormalSimplex(mapping[s.gen], s.degeneracy)

    mismatch = None
    checked = 0
    for n in range(depth + 1):
        for s in X.simplices_at(n):
            t = carry(s)
            for i in range(n + 1) if n >= 1 else []:
                checked += 1
                if carry(X.face(s, i)) != Y.face(t, i):
                    mismatch = f"d_{i} {s!r}"
                    break
            if n < depth:
                for i in range(n + 1):
                    checked += 1
                    if carry(X.degeneracy(s, i)) != Y.degeneracy(t, i):
                        mismatch = f"s_{i} {s!r}"
                        break
            if mismatch:
                break
        if mismatch:
            break
    if mismatch:
        report.add("structure tables under bijection", "fail", witness=mismatch)
    else:
        report.add("structure tables under bijection", "pass",
                   detail=f"{checked} table entries")
    return report
