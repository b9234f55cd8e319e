"""Worked spans with known exit complexes.

Each entry builds a small linked span whose exit complex has a hand
or nerve-computed oracle; the expectations are re-verified by the test
suite and by `exitpath examples`.  The broken entry violates the
right-fibration hypothesis on purpose and is the negative control for
the horn-filling checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .construction import LinkedSpan
from .simplicial import (
    SimplicialMap,
    SimplicialSet,
    empty_sset,
    nerve_of_poset,
    nondeg,
    standard_simplex,
)


def point(name: str = "point", vertex: str = "pt") -> SimplicialSet:
    X = SimplicialSet(name)
    X.add_generator(0, vertex)
    return X


def discrete(name: str, vertices: list[str]) -> SimplicialSet:
    X = SimplicialSet(name)
    for v in vertices:
        X.add_generator(0, v)
    return X


def trivial_inclusion_span(X: SimplicialSet) -> LinkedSpan:
    """empty <- empty -> X: no exit paths at all, Ex is X again."""
    M = empty_sset("emptyM")
    L = empty_sset("emptyL")
    pi = SimplicialMap("pi", L, M, {})
    iota = SimplicialMap("iota", L, X, {})
    return LinkedSpan("trivial", M, L, N=X, pi=pi, iota=iota)


def cone_span(X: SimplicialSet) -> LinkedSpan:
    """point <- X = X: every simplex exits at every index.

    At X = point the exit complex is the 1-simplex: one low vertex, one
    upper vertex, and in degree k the k exit paths keyed by their index.
    """
    M = point("conetip", "c")
    pi = SimplicialMap("pi", X, M, _constant_assignment(X, "c"))
    iota = SimplicialMap("iota", X, X, {g: nondeg(g, d) for g, d in X.gen_dims.items()})
    return LinkedSpan("point-cone", M, L=X, N=X, pi=pi, iota=iota)


def _constant_assignment(X: SimplicialSet, vertex: str):
    """Send every generator to the appropriate degeneracy of one vertex."""
    from .operators import Operator
    from .simplicial import FormalSimplex

    out = {}
    for g, d in X.gen_dims.items():
        out[g] = FormalSimplex(vertex, Operator(d, 0, tuple(0 for _ in range(d + 1))))
    return out


def s0_defect_span() -> LinkedSpan:
    """point <- two points = two points: a codimension-everything defect
    with two exit directions; Ex is the nerve of m < n-, m < n+."""
    M = point("stratum", "m")
    L = discrete("link", ["l-", "l+"])
    N = discrete("sphere0", ["n-", "n+"])
    pi = SimplicialMap("pi", L, M, _constant_assignment(L, "m"))
    iota = SimplicialMap("iota", L, N, {"l-": nondeg("n-", 0), "l+": nondeg("n+", 0)})
    return LinkedSpan("s0-defect", M, L, N, pi, iota)


def boundary_collar_span() -> LinkedSpan:
    """point <- point -> edge, the link sitting at vertex 0 of the edge.

    Models a manifold boundary with its collar: exit paths may stop at
    the collar vertex or run along the edge, so Ex has two
    nondegenerate exit edges and the triangle composing them."""
    M = point("boundary", "m")
    L = point("collarlink", "l")
    N = standard_simplex(1, "collar")
    pi = SimplicialMap("pi", L, M, {"l": nondeg("m", 0)})
    iota = SimplicialMap("iota", L, N, {"l": nondeg("0", 0)})
    return LinkedSpan("boundary-collar", M, L, N, pi, iota)


def broken_span() -> LinkedSpan:
    """An edge <- point -> edge with pi landing at the closed end.

    pi is not a right fibration (the edge of M ending at pi(l) has no
    lift through the one-point link), and the exit complex has an inner
    2-horn with no filler: the negative control."""
    M = standard_simplex(1, "strata")
    L = point("link1", "l")
    N = standard_simplex(1, "normal")
    pi = SimplicialMap("pi", L, M, {"l": nondeg("1", 0)})
    iota = SimplicialMap("iota", L, N, {"l": nondeg("0", 0)})
    return LinkedSpan("broken", M, L, N, pi, iota)


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    build: Callable[[], LinkedSpan]
    summary: str
    hypotheses_hold: bool  # iota cofibration + pi right fibration
    oracle: Callable[[], SimplicialSet] | None = None


def _trivial():
    return trivial_inclusion_span(nerve_of_poset(["a", "b", "c"],
                                                 [("a", "b"), ("b", "c"), ("a", "c")],
                                                 "chain3"))


GALLERY: dict[str, GalleryEntry] = {
    "trivial": GalleryEntry(
        "trivial", _trivial,
        "empty <- empty -> nerve(a<b<c); Ex is N again", True,
        lambda: nerve_of_poset(["a", "b", "c"],
                               [("a", "b"), ("b", "c"), ("a", "c")], "chain3")),
    "point-cone": GalleryEntry(
        "point-cone", lambda: cone_span(point("apexlink", "x")),
        "point <- point = point; Ex is the 1-simplex", True,
        lambda: standard_simplex(1, "interval")),
    "s0-defect": GalleryEntry(
        "s0-defect", s0_defect_span,
        "point <- S^0 = S^0; Ex is the nerve of m<n-, m<n+", True,
        lambda: nerve_of_poset(["m", "n-", "n+"], [("m", "n-"), ("m", "n+")],
                               "defect-nerve")),
    "boundary-collar": GalleryEntry(
        "boundary-collar", boundary_collar_span,
        "point <- point -> edge at vertex 0; boundary with collar", True,
        None),
    "broken": GalleryEntry(
        "broken", broken_span,
        "edge <- point -> edge, pi at the closed end; not a right fibration", False,
        None),
}


def load_span(name: str, verify_depth: int | None = None) -> LinkedSpan:
    if name not in GALLERY:
        raise KeyError(f"unknown gallery span {name!r}; have {sorted(GALLERY)}")
    span = GALLERY[name].build()
    if verify_depth is not None:
        span.verify_iota(verify_depth)
    return span
