"""Exit-path simplicial sets of linked spans.

A linked span is M <-pi- L -iota-> N with iota a monomorphism (levelwise
injective).  Its exit complex Ex has

    Ex_0 = M_0 + N_0
    Ex_k = M_k + P_{k-1} + N_k        (k >= 1)

where P_{k-1} consists of the exit paths: pairs (gamma, j) of a
k-simplex gamma of N and an exit index 1 <= j <= k such that the
restriction of gamma . C_j to level 0 of the prism factors through
iota.  Since iota is mono the factorization is unique and membership is
a preimage lookup along the level-0 part of the collapse.

Faces and degeneracies of exit paths are driven by the face
classification: vertical faces stay exit paths with the flat index,
the single low face (i = j = k) lands in M through pi after the unique
lift, the single upper face (i = 0, j = 1) forgets down to N, and every
degeneracy stays an exit path with the sharp index.  For k = 1 the same
dispatch degenerates to d_1 low, d_0 upper.

build_exit materializes Ex up to a degree bound as a SimplicialSet
whose generators are the nondegenerate tagged simplices; degeneracy
detection for exit paths inverts the sharp calculus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .operators import (
    Operator,
    compose,
    degeneracy_op,
    degeneracy_word,
    face_op,
    identity,
)
from .shuffles import FaceClass, classify_face, flat, restriction_operator, sharp
from .simplicial import FormalSimplex, SimplicialMap, SimplicialSet, nondeg


class SpanIntegrityError(RuntimeError):
    """A low face failed to lift through the link; the span data is
    inconsistent with exit-path membership already established."""


@dataclass(frozen=True)
class ExitPath:
    """A k-simplex gamma of N together with its exit index j.

    Equality is equality of both coordinates; the same gamma with two
    different indices gives two different simplices of Ex.
    """

    gamma: FormalSimplex
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.gamma.dim:
            raise ValueError(f"exit index {self.index} outside 1..{self.gamma.dim}")

    @property
    def dim(self) -> int:
        return self.gamma.dim

    def __repr__(self):
        return f"({self.gamma!r}@{self.index})"


@dataclass(frozen=True)
class Low:
    simplex: FormalSimplex

    @property
    def dim(self) -> int:
        return self.simplex.dim

    def __repr__(self):
        return f"low[{self.simplex!r}]"


@dataclass(frozen=True)
class Exit:
    path: ExitPath

    @property
    def dim(self) -> int:
        return self.path.dim

    def __repr__(self):
        return f"exit{self.path!r}"


@dataclass(frozen=True)
class Upper:
    simplex: FormalSimplex

    @property
    def dim(self) -> int:
        return self.simplex.dim

    def __repr__(self):
        return f"upper[{self.simplex!r}]"


ExitSimplex = Low | Exit | Upper


class LinkedSpan:
    """M <-pi- L -iota-> N with pi, iota natural on generators.

    Naturality of both maps is audited at construction.  Injectivity of
    iota and the right-fibration property of pi are verified on demand
    and the outcomes recorded; exit-path membership queries require the
    iota check to have passed through the relevant degree.
    """

    def __init__(self, name: str, M: SimplicialSet, L: SimplicialSet, N: SimplicialSet,
                 pi: SimplicialMap, iota: SimplicialMap):
        if pi.domain is not L or pi.codomain is not M:
            raise ValueError(f"{name}: pi must map L to M")
        if iota.domain is not L or iota.codomain is not N:
            raise ValueError(f"{name}: iota must map L to N")
        self.name = name
        self.M, self.L, self.N = M, L, N
        self.pi, self.iota = pi, iota
        self.iota_mono: tuple[str, int | None] = ("unchecked", None)
        self.pi_right_fib: tuple[str, int | None] = ("unchecked", None)

    def verify_iota(self, depth: int) -> bool:
        """Check iota is levelwise injective through degree depth."""
        ok, witness = self.iota.is_mono(depth)
        if ok:
            self.iota_mono = ("verified", depth)
        else:
            self.iota_mono = ("failed", depth)
            self._iota_witness = witness
        return ok

    def require_iota(self, depth: int):
        state, bound = self.iota_mono
        if state == "verified" and bound is not None and bound >= depth:
            return
        if not self.verify_iota(depth):
            raise RuntimeError(f"{self.name}: iota is not mono: {self._iota_witness}")

    def __repr__(self):
        return (f"LinkedSpan({self.name!r}: {self.M.name} <- {self.L.name} "
                f"-> {self.N.name})")


# -- membership --------------------------------------------------------------


def is_exit_path(span: LinkedSpan, gamma: FormalSimplex, j: int) -> bool:
    """Whether (gamma, j) is an exit path: the level-0 restriction of
    gamma . C_j lifts (necessarily uniquely) through iota."""
    k = gamma.dim
    if k < 1:
        raise ValueError("exit paths start in dimension 1")
    if not 1 <= j <= k:
        raise ValueError(f"exit index {j} outside 1..{k}")
    span.require_iota(k - 1)
    source = span.N.act(gamma, restriction_operator(k, j))
    return span.iota.preimage(source) is not None


def exit_simplices(span: LinkedSpan, k: int) -> list[ExitPath]:
    """All exit paths of dimension k, in (N-simplex order, index) order."""
    out = []
    for gamma in span.N.simplices_at(k):
        for j in range(1, k + 1):
            if is_exit_path(span, gamma, j):
                out.append(ExitPath(gamma, j))
    return out


def all_exit_simplices(span: LinkedSpan, k: int) -> list[ExitSimplex]:
    """Every k-simplex of Ex in tagged form, in M + P + N order."""
    out: list[ExitSimplex] = [Low(s) for s in span.M.simplices_at(k)]
    if k >= 1:
        out.extend(Exit(p) for p in exit_simplices(span, k))
    out.extend(Upper(s) for s in span.N.simplices_at(k))
    return out


# -- faces and degeneracies ---------------------------------------------------


def _lift_low(span: LinkedSpan, simplex: FormalSimplex) -> FormalSimplex:
    span.require_iota(simplex.dim)
    lifted = span.iota.preimage(simplex)
    if lifted is None:
        raise SpanIntegrityError(
            f"{span.name}: low face {simplex!r} has no lift through iota, "
            f"but membership of the ambient exit path was already established"
        )
    return lifted


def exit_face(span: LinkedSpan, s: ExitSimplex, i: int) -> ExitSimplex:
    """d_i of a tagged simplex of Ex."""
    if s.dim < 1:
        raise ValueError("vertices have no faces")
    if not 0 <= i <= s.dim:
        raise ValueError(f"face index {i} outside 0..{s.dim}")
    if isinstance(s, Low):
        return Low(span.M.face(s.simplex, i))
    if isinstance(s, Upper):
        return Upper(span.N.face(s.simplex, i))
    gamma, j, k = s.path.gamma, s.path.index, s.path.dim
    cls = classify_face(k, j, i)
    if cls is FaceClass.VERTICAL:
        return Exit(ExitPath(span.N.face(gamma, i), flat(k, j, i)))
    if cls is FaceClass.LOW:
        return Low(span.pi(_lift_low(span, span.N.face(gamma, i))))
    return Upper(span.N.face(gamma, i))


def exit_degeneracy(span: LinkedSpan, s: ExitSimplex, i: int) -> ExitSimplex:
    """s_i of a tagged simplex of Ex; exit paths stay exit paths."""
    if not 0 <= i <= s.dim:
        raise ValueError(f"degeneracy index {i} outside 0..{s.dim}")
    if isinstance(s, Low):
        return Low(span.M.degeneracy(s.simplex, i))
    if isinstance(s, Upper):
        return Upper(span.N.degeneracy(s.simplex, i))
    gamma, j, k = s.path.gamma, s.path.index, s.path.dim
    return Exit(ExitPath(span.N.degeneracy(gamma, i), sharp(k, j, i)))


def detect_degenerate_exit(span: LinkedSpan, p: ExitPath) -> tuple[ExitPath, int] | None:
    """Invert exit_degeneracy: find (q, i) with s_i q = p, smallest i.

    p = (gamma, j) can only be s_i of (d_i gamma, e) when gamma repeats
    at i and sharp(k-1, e, i) = j; the sharp branches force e = j (when
    i >= j) or e = j - 1 (when i < j - 1), and the candidate must itself
    be an exit path.  Returns None for nondegenerate exit paths; paths
    of dimension 1 are always nondegenerate in Ex.
    """
    gamma, j, k = p.gamma, p.index, p.dim
    if k < 2:
        return None
    sigma = gamma.degeneracy
    for i in range(k):
        if sigma.values[i] != sigma.values[i + 1]:
            continue
        if i >= j:
            e = j
        elif i < j - 1:
            e = j - 1
        else:
            continue
        if not 1 <= e <= k - 1:
            continue
        q_gamma = span.N.face(gamma, i)
        if is_exit_path(span, q_gamma, e):
            return ExitPath(q_gamma, e), i
    return None


def exit_normal_form(span: LinkedSpan, s: ExitSimplex) -> tuple[ExitSimplex, Operator]:
    """Write s as (nondegenerate core, surjection).

    Low and Upper parts inherit normal forms from M and N; an exit path
    is peeled by detect_degenerate_exit until nondegenerate.
    """
    if isinstance(s, Low):
        return Low(nondeg(s.simplex.gen, s.simplex.gen_dim)), s.simplex.degeneracy
    if isinstance(s, Upper):
        return Upper(nondeg(s.simplex.gen, s.simplex.gen_dim)), s.simplex.degeneracy
    word: list[int] = []
    cur = s.path
    while True:
        hit = detect_degenerate_exit(span, cur)
        if hit is None:
            break
        cur, i = hit[0], hit[1]
        word.append(i)
    op = identity(cur.dim + len(word))
    # s = (sigma_{i_r} . ... . sigma_{i_1})^* core with word = (i_1, ..., i_r)
    for i in word:
        op = compose(degeneracy_op(op.dst_dim - 1, i), op)
    return Exit(cur), op


# -- materialization ----------------------------------------------------------


def exit_label(s: ExitSimplex) -> str:
    """Deterministic generator label for a nondegenerate tagged simplex."""
    if isinstance(s, Low):
        return f"M.{s.simplex.gen}"
    if isinstance(s, Upper):
        return f"N.{s.simplex.gen}"
    gamma = s.path.gamma
    word = degeneracy_word(gamma.degeneracy)
    stem = gamma.gen if not word else f"{gamma.gen}+s{'s'.join(str(i) for i in word)}"
    return f"P.{stem}@{s.path.index}"


class ExitComplex(SimplicialSet):
    """The exit complex of a span, materialized through a degree bound.

    A SimplicialSet whose generators carry tag notes; payload maps each
    generator label back to its tagged simplex, so simplices of the
    complex can be re-read as Low/Exit/Upper values.
    """

    def __init__(self, span: LinkedSpan, depth: int):
        super().__init__(f"Ex({span.name})<={depth}")
        self.span = span
        self.depth = depth
        self.payload: dict[str, ExitSimplex] = {}

    def tagged(self, s: FormalSimplex) -> ExitSimplex:
        """The tagged simplex a formal simplex of the complex denotes."""
        t = self.payload[s.gen]
        # sigma = sigma_{i_1} . ... . sigma_{i_r} with ascending word acts
        # contravariantly as s_{i_r} . ... . s_{i_1}, so s_{i_1} is applied first
        for i in degeneracy_word(s.degeneracy):
            t = exit_degeneracy(self.span, t, i)
        return t


def build_exit(span: LinkedSpan, depth: int) -> ExitComplex:
    """Materialize Ex(span) up to dimension depth.

    Requires iota verified mono through depth.  Generators per
    dimension are the nondegenerate M generators, the nondegenerate
    exit paths (detect_degenerate_exit returns None), then the
    nondegenerate N generators; faces are computed by exit_face and
    re-expressed in normal form.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    span.require_iota(depth)
    ex = ExitComplex(span, depth)

    def low_label(g: str) -> str:
        return f"M.{g}"

    def upper_label(g: str) -> str:
        return f"N.{g}"

    def formal(s: ExitSimplex) -> FormalSimplex:
        core, op = exit_normal_form(span, s)
        return FormalSimplex(exit_label(core), op)

    for k in range(depth + 1):
        new: list[tuple[str, ExitSimplex, str]] = []
        for g in span.M.generators(k):
            new.append((low_label(g), Low(nondeg(g, k)), "low"))
        if k >= 1:
            for p in exit_simplices(span, k):
                if detect_degenerate_exit(span, p) is None:
                    new.append((exit_label(Exit(p)), Exit(p), f"exit@{p.index}"))
        for g in span.N.generators(k):
            new.append((upper_label(g), Upper(nondeg(g, k)), "upper"))
        for label, tagged, note in new:
            if k == 0:
                ex.add_generator(0, label, note=note)
            else:
                faces = [formal(exit_face(span, tagged, i)) for i in range(k + 1)]
                ex.add_generator(k, label, faces, note=note)
            ex.payload[label] = tagged
    return ex
