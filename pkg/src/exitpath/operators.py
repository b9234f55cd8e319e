"""Operators of the simplex category.

An operator is a weakly monotone map [m] -> [n] between finite ordinals
[n] = {0, 1, ..., n}, stored as the tuple of its values.  Every operator
factors uniquely as a surjection followed by an injection (epi-mono
factorization), and the injections/surjections are generated by the
elementary cofaces and codegeneracies, which is all the bookkeeping a
simplicial set in generator normal form needs.

Composition is written compose(outer, inner) for outer . inner, i.e.
inner is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement


@dataclass(frozen=True)
class Operator:
    """A weakly monotone map [src_dim] -> [dst_dim].

    values[i] is the image of i.  Monotonicity and range are checked at
    construction time; Operator values are immutable and hashable.
    """

    src_dim: int
    dst_dim: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.src_dim < 0 or self.dst_dim < 0:
            raise ValueError(f"negative ordinal: [{self.src_dim}] -> [{self.dst_dim}]")
        if len(self.values) != self.src_dim + 1:
            raise ValueError(
                f"operator [{self.src_dim}] -> [{self.dst_dim}] needs "
                f"{self.src_dim + 1} values, got {len(self.values)}"
            )
        prev = 0
        for v in self.values:
            if not 0 <= v <= self.dst_dim:
                raise ValueError(f"value {v} outside [{self.dst_dim}]")
            if v < prev:
                raise ValueError(f"values not monotone: {self.values}")
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_identity(self) -> bool:
        return self.src_dim == self.dst_dim and all(v == i for i, v in enumerate(self.values))

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.dst_dim + 1

    def __repr__(self):
        word = ",".join(str(v) for v in self.values)
        return f"[{self.src_dim}]->[{self.dst_dim}]:({word})"


def identity(n: int) -> Operator:
    return Operator(n, n, tuple(range(n + 1)))


def face_op(n: int, i: int) -> Operator:
    """The coface [n-1] -> [n] whose image misses i (0 <= i <= n, n >= 1)."""
    if n < 1:
        raise ValueError(f"no cofaces into [{n}]")
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} outside [{n}]")
    return Operator(n - 1, n, tuple(v for v in range(n + 1) if v != i))


def degeneracy_op(n: int, i: int) -> Operator:
    """The codegeneracy [n+1] -> [n] hitting i twice (0 <= i <= n)."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} outside [{n}]")
    return Operator(n + 1, n, tuple(min(v, i) if v <= i + 1 else v - 1 for v in range(n + 2)))


def compose(outer: Operator, inner: Operator) -> Operator:
    """outer . inner, defined when inner.dst_dim == outer.src_dim."""
    if inner.dst_dim != outer.src_dim:
        raise ValueError(f"cannot compose {outer!r} . {inner!r}")
    return Operator(inner.src_dim, outer.dst_dim, tuple(outer.values[v] for v in inner.values))


def epi_mono_factor(op: Operator) -> tuple[Operator, Operator]:
    """Factor op = mono . epi with epi surjective and mono injective.

    Returns (epi, mono).  The factorization is the unique one through
    [r] where r+1 is the size of the image.
    """
    image = sorted(set(op.values))
    rank = len(image) - 1
    pos = {v: m for m, v in enumerate(image)}
    epi = Operator(op.src_dim, rank, tuple(pos[v] for v in op.values))
    mono = Operator(rank, op.dst_dim, tuple(image))
    return epi, mono


def monotone_maps(src_dim: int, dst_dim: int):
    """All operators [src_dim] -> [dst_dim] in lexicographic order of values."""
    for values in combinations_with_replacement(range(dst_dim + 1), src_dim + 1):
        yield Operator(src_dim, dst_dim, values)


def surjections(src_dim: int, dst_dim: int):
    """All surjective operators [src_dim] ->> [dst_dim], lexicographic in values.

    A monotone surjection is determined by the set of positions i with
    op(i) == op(i+1); choosing the src_dim - dst_dim repeat positions in
    ascending combination order yields values in ascending lex order.
    """
    drops = src_dim - dst_dim
    if drops < 0:
        return
    for repeats in combinations(range(src_dim), drops):
        rset = set(repeats)
        values = [0]
        for i in range(src_dim):
            values.append(values[-1] if i in rset else values[-1] + 1)
        yield Operator(src_dim, dst_dim, tuple(values))


def injections(src_dim: int, dst_dim: int):
    """All injective operators [src_dim] -> [dst_dim], lexicographic in values."""
    for values in combinations(range(dst_dim + 1), src_dim + 1):
        yield Operator(src_dim, dst_dim, values)


def degeneracy_word(op: Operator) -> tuple[int, ...]:
    """Repeat positions of a surjection, ascending.

    These are the codegeneracy indices in the canonical decomposition
    op = sigma_{i_1} . sigma_{i_2} . ... with i_1 < i_2 < ...; the word
    determines the surjection and is the on-disk encoding of degeneracy
    data.
    """
    if not op.is_surjective():
        raise ValueError(f"not a surjection: {op!r}")
    return tuple(i for i in range(op.src_dim) if op.values[i] == op.values[i + 1])


def surjection_from_word(src_dim: int, word: tuple[int, ...]) -> Operator:
    """Rebuild a surjection [src_dim] ->> [src_dim - len(word)] from its word."""
    rset = set(word)
    if len(rset) != len(word) or any(not 0 <= i < src_dim for i in word):
        raise ValueError(f"bad degeneracy word {word} for [{src_dim}]")
    values = [0]
    for i in range(src_dim):
        values.append(values[-1] if i in rset else values[-1] + 1)
    return Operator(src_dim, src_dim - len(word), tuple(values))
