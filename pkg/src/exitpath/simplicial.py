"""Finitely generated simplicial sets in generator normal form.

Every simplex of a simplicial set is uniquely a degeneracy of a
nondegenerate simplex (Eilenberg-Zilber), so a simplicial set with
finitely many nondegenerate simplices per degree is presented by

  * a list of generator labels per dimension, and
  * for each generator of dimension n >= 1, its n+1 faces, each written
    in normal form as (degeneracy operator, generator label).

All simplices are FormalSimplex values (generator label, surjection);
the contravariant action of an arbitrary operator is computed by
peeling cofaces off the epi-mono factorization against the stored face
tables.  Equality of simplices is equality of normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .operators import (
    Operator,
    compose,
    degeneracy_word,
    epi_mono_factor,
    face_op,
    identity,
    surjections,
)


@dataclass(frozen=True)
class FormalSimplex:
    """A simplex in normal form: a surjection applied to a generator.

    gen is the generator's label, degeneracy a surjection
    [dim] ->> [gen_dim].  Nondegenerate simplices have the identity.
    """

    gen: str
    degeneracy: Operator

    def __post_init__(self):
        if not self.degeneracy.is_surjective():
            raise ValueError(f"degeneracy part must be surjective: {self.degeneracy!r}")

    @property
    def dim(self) -> int:
        return self.degeneracy.src_dim

    @property
    def gen_dim(self) -> int:
        return self.degeneracy.dst_dim

    def is_nondegenerate(self) -> bool:
        return self.degeneracy.is_identity()

    def __repr__(self):
        word = degeneracy_word(self.degeneracy)
        if not word:
            return self.gen
        return f"{self.gen}+s{'s'.join(str(i) for i in word)}"


def nondeg(gen: str, dim: int) -> FormalSimplex:
    return FormalSimplex(gen, identity(dim))


class SimplicialSet:
    """A finitely generated simplicial set.

    Generators are added dimension by dimension; faces of a dimension-n
    generator (n >= 1) must be given in normal form over generators
    already present.  audit() checks the simplicial identity
    d_i d_j = d_{j-1} d_i on generators, which by functoriality of the
    operator action is the whole coherence requirement.
    """

    def __init__(self, name: str):
        self.name = name
        self.gens: dict[int, list[str]] = {}
        self.gen_dims: dict[str, int] = {}
        self.face_table: dict[tuple[str, int], FormalSimplex] = {}
        self.notes: dict[str, str] = {}

    # -- construction ------------------------------------------------

    def add_generator(self, dim: int, label: str, faces: list[FormalSimplex] | None = None,
                      note: str | None = None):
        if label in self.gen_dims:
            raise ValueError(f"{self.name}: duplicate generator {label!r}")
        if dim < 0:
            raise ValueError(f"negative dimension for {label!r}")
        if dim == 0:
            if faces:
                raise ValueError(f"vertex {label!r} cannot have faces")
        else:
            if faces is None or len(faces) != dim + 1:
                raise ValueError(f"{label!r} needs {dim + 1} faces")
            for i, f in enumerate(faces):
                if f.dim != dim - 1:
                    raise ValueError(f"face {i} of {label!r} has dimension {f.dim}, want {dim - 1}")
                if f.gen not in self.gen_dims:
                    raise ValueError(f"face {i} of {label!r} uses unknown generator {f.gen!r}")
                if self.gen_dims[f.gen] != f.gen_dim:
                    raise ValueError(f"face {i} of {label!r}: {f.gen!r} has wrong dimension")
        self.gens.setdefault(dim, []).append(label)
        self.gen_dims[label] = dim
        if note is not None:
            self.notes[label] = note
        for i, f in enumerate(faces or []):
            self.face_table[(label, i)] = f

    @property
    def max_gen_dim(self) -> int:
        return max(self.gens, default=-1)

    def generators(self, dim: int | None = None) -> list[str]:
        if dim is not None:
            return list(self.gens.get(dim, []))
        out = []
        for d in sorted(self.gens):
            out.extend(self.gens[d])
        return out

    # -- the operator action ------------------------------------------

    def act(self, s: FormalSimplex, op: Operator) -> FormalSimplex:
        """The simplex s . op, i.e. the contravariant action of op.

        op is any operator [m] -> [s.dim].  The composite of op with
        the degeneracy part is refactored, and the injective part is
        resolved one top coface at a time against the face table.
        """
        if op.dst_dim != s.dim:
            raise ValueError(f"operator {op!r} does not match simplex of dimension {s.dim}")
        epi, mono = epi_mono_factor(compose(s.degeneracy, op))
        gen = s.gen
        while not mono.is_identity():
            j = max(set(range(mono.dst_dim + 1)) - set(mono.values))
            entry = self.face_table[(gen, j)]
            # drop j from the codomain: mono missed it, so it factors
            # through the j-th coface
            lowered = Operator(mono.src_dim, mono.dst_dim - 1,
                               tuple(v if v < j else v - 1 for v in mono.values))
            epi2, mono = epi_mono_factor(compose(entry.degeneracy, lowered))
            epi = compose(epi2, epi)
            gen = entry.gen
        return FormalSimplex(gen, epi)

    def face(self, s: FormalSimplex, i: int) -> FormalSimplex:
        return self.act(s, face_op(s.dim, i))

    def degeneracy(self, s: FormalSimplex, i: int) -> FormalSimplex:
        from .operators import degeneracy_op

        return self.act(s, degeneracy_op(s.dim, i))

    # -- enumeration ---------------------------------------------------

    def simplices_at(self, n: int) -> list[FormalSimplex]:
        """All n-simplices: generators of dimension d <= n, each under
        every surjection [n] ->> [d].  Order: generators by (dimension,
        insertion order), then degeneracy values lexicographic."""
        out = []
        for d in sorted(self.gens):
            if d > n:
                break
            for label in self.gens[d]:
                for sigma in surjections(n, d):
                    out.append(FormalSimplex(label, sigma))
        return out

    def count_at(self, n: int) -> int:
        return len(self.simplices_at(n))

    def has_simplex(self, s: FormalSimplex) -> bool:
        return self.gen_dims.get(s.gen) == s.gen_dim

    # -- audit ----------------------------------------------------------

    def audit(self) -> list[str]:
        """Simplicial-identity violations d_i d_j != d_{j-1} d_i on
        generators, as human-readable strings; empty means coherent."""
        problems = []
        for d in sorted(self.gens):
            if d < 2:
                continue
            for label in self.gens[d]:
                g = nondeg(label, d)
                for j in range(1, d + 1):
                    for i in range(j):
                        lhs = self.face(self.face(g, j), i)
                        rhs = self.face(self.face(g, i), j - 1)
                        if lhs != rhs:
                            problems.append(
                                f"{self.name}: d_{i} d_{j} {label} = {lhs!r} "
                                f"but d_{j-1} d_{i} {label} = {rhs!r}"
                            )
        return problems

    def assert_coherent(self):
        problems = self.audit()
        if problems:
            raise ValueError("; ".join(problems))

    def __repr__(self):
        counts = ", ".join(f"{d}:{len(self.gens[d])}" for d in sorted(self.gens))
        return f"SimplicialSet({self.name!r}, gens {{{counts}}})"


class SimplicialMap:
    """A simplicial map, stored on generators of the domain.

    assignment maps each domain generator label to a FormalSimplex of
    the codomain of the same dimension; the action on arbitrary
    simplices follows by naturality.  audit() checks naturality on the
    face tables, which is the whole condition.
    """

    def __init__(self, name: str, domain: SimplicialSet, codomain: SimplicialSet,
                 assignment: dict[str, FormalSimplex], check: bool = True):
        self.name = name
        self.domain = domain
        self.codomain = codomain
        self.assignment = dict(assignment)
        self._mono_bound = -1
        self._image_tables: dict[int, dict[FormalSimplex, FormalSimplex]] = {}
        missing = [g for g in domain.gen_dims if g not in self.assignment]
        if missing:
            raise ValueError(f"{name}: no image for generators {missing}")
        for g, t in self.assignment.items():
            if t.dim != domain.gen_dims[g]:
                raise ValueError(f"{name}: image of {g!r} has dimension {t.dim}, "
                                 f"want {domain.gen_dims[g]}")
            if not codomain.has_simplex(t):
                raise ValueError(f"{name}: image of {g!r} not in {codomain.name}")
        if check:
            problems = self.audit()
            if problems:
                raise ValueError("; ".join(problems))

    def __call__(self, s: FormalSimplex) -> FormalSimplex:
        return self.codomain.act(self.assignment[s.gen], s.degeneracy)

    def audit(self) -> list[str]:
        problems = []
        for d in sorted(self.domain.gens):
            if d < 1:
                continue
            for label in self.domain.gens[d]:
                g = nondeg(label, d)
                for i in range(d + 1):
                    lhs = self(self.domain.face(g, i))
                    rhs = self.codomain.face(self(g), i)
                    if lhs != rhs:
                        problems.append(
                            f"{self.name}: image of d_{i} {label} is {lhs!r} "
                            f"but d_{i} of the image is {rhs!r}"
                        )
        return problems

    # -- injectivity ------------------------------------------------------

    def image_table(self, n: int) -> dict[FormalSimplex, FormalSimplex]:
        """image simplex -> unique preimage at degree n; built lazily.
        Only trustworthy once is_mono succeeded through degree n."""
        if n not in self._image_tables:
            table = {}
            for s in self.domain.simplices_at(n):
                table.setdefault(self(s), s)
            self._image_tables[n] = table
        return self._image_tables[n]

    def is_mono(self, depth: int) -> tuple[bool, str | None]:
        """Degree-wise injectivity through degree depth.

        Returns (ok, witness); on success the verified bound is
        recorded so preimage() becomes available through that degree.
        """
        for n in range(depth + 1):
            seen: dict[FormalSimplex, FormalSimplex] = {}
            for s in self.domain.simplices_at(n):
                t = self(s)
                if t in seen and seen[t] != s:
                    return False, f"degree {n}: {seen[t]!r} and {s!r} both map to {t!r}"
                seen[t] = s
            self._image_tables[n] = seen
        self._mono_bound = max(self._mono_bound, depth)
        return True, None

    @property
    def mono_bound(self) -> int:
        return self._mono_bound

    def preimage(self, s: FormalSimplex) -> FormalSimplex | None:
        """The unique preimage of s, or None if s is not in the image.
        Requires is_mono verified through s.dim."""
        if s.dim > self._mono_bound:
            raise RuntimeError(
                f"{self.name}: preimage queried at degree {s.dim} but injectivity "
                f"is only verified through degree {self._mono_bound}"
            )
        return self.image_table(s.dim).get(s)

    def __repr__(self):
        return f"SimplicialMap({self.name!r}: {self.domain.name} -> {self.codomain.name})"


# -- stock constructions ---------------------------------------------------


def empty_sset(name: str = "empty") -> SimplicialSet:
    return SimplicialSet(name)


def standard_simplex(n: int, name: str | None = None) -> SimplicialSet:
    """The n-simplex as the nerve of the linear order 0 < 1 < ... < n."""
    return nerve_of_poset([str(v) for v in range(n + 1)],
                          [(str(a), str(b)) for a in range(n + 1) for b in range(a + 1, n + 1)],
                          name or f"simplex{n}")


def nerve_of_poset(elements: list[str], relations: list[tuple[str, str]],
                   name: str = "nerve", max_dim: int | None = None) -> SimplicialSet:
    """Nerve of a finite poset, truncated at the longest strict chain.

    elements are labels; relations lists strict pairs (a, b) meaning
    a < b.  The transitive closure is taken, then antisymmetry and
    irreflexivity are checked.  Generators in dimension n are the
    strict chains of length n+1, labelled by joining the member labels
    with commas; their faces delete one member.
    """
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate poset elements")
    below: dict[str, set[str]] = {e: set() for e in elements}
    for a, b in relations:
        if a not in below or b not in below:
            raise ValueError(f"relation ({a!r}, {b!r}) uses unknown element")
        below[b].add(a)
    # transitive closure
    changed = True
    while changed:
        changed = False
        for b in elements:
            extra = set()
            for a in below[b]:
                extra |= below[a]
            if not extra <= below[b]:
                below[b] |= extra
                changed = True
    for e in elements:
        if e in below[e]:
            raise ValueError(f"not a partial order: {e!r} < {e!r}")

    X = SimplicialSet(name)
    chains = [(e,) for e in elements]
    for e in elements:
        X.add_generator(0, e)
    dim = 1
    while chains and (max_dim is None or dim <= max_dim):
        longer = []
        for chain in chains:
            last = chain[-1]
            for e in elements:
                if last in below[e]:
                    longer.append(chain + (e,))
        for chain in longer:
            label = ",".join(chain)
            faces = []
            for i in range(len(chain)):
                sub = chain[:i] + chain[i + 1:]
                faces.append(nondeg(",".join(sub), dim - 1))
            X.add_generator(dim, label, faces)
        chains = longer
        dim += 1
    X.assert_coherent()
    return X
