"""Plain-text documents for simplicial sets, maps, and spans.

One document per object.  The grammar is line-oriented; indentation is
cosmetic, comments run from '#' to end of line, labels are any
whitespace-free tokens without '(', ')' or '#'.  Degeneracy data is
written as the word of codegeneracy indices (ascending repeat
positions), '()' for nondegenerate.

    sset <name>
    maxdim <d>
    dim <k>
    gen <label> [:: <annotation...>]
    face <i> = (<i1> <i2> ...) <label>

    smap <name>
    domain <sset-name>
    codomain <sset-name>
    map <label> = (<word>) <label>

    span <name>
    M = <relative-path>          (likewise L, N, pi, iota)

print_* and parse_* round-trip exactly; parse errors carry line numbers.
"""

from __future__ import annotations

import os

from .construction import LinkedSpan
from .operators import degeneracy_word, surjection_from_word
from .simplicial import FormalSimplex, SimplicialMap, SimplicialSet


class ParseError(ValueError):
    def __init__(self, path: str, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


_LABEL_BAD = set("()#")


def _check_label(label: str):
    if not label or any(c in _LABEL_BAD or c.isspace() for c in label):
        raise ValueError(f"label {label!r} not representable in documents")


def _check_name(name: str):
    # names are rest-of-line tokens; only comments and newlines are out
    if not name or name != name.strip() or "#" in name or "\n" in name:
        raise ValueError(f"name {name!r} not representable in documents")


def _word_str(word: tuple[int, ...]) -> str:
    return "(" + " ".join(str(i) for i in word) + ")"


def _entry_str(s: FormalSimplex) -> str:
    return f"{_word_str(degeneracy_word(s.degeneracy))} {s.gen}"


# -- printing ---------------------------------------------------------------


def print_sset(X: SimplicialSet) -> str:
    _check_name(X.name)
    lines = [f"sset {X.name}", f"maxdim {X.max_gen_dim}"]
    for d in sorted(X.gens):
        lines.append(f"dim {d}")
        for g in X.gens[d]:
            _check_label(g)
            note = X.notes.get(g)
            lines.append(f"  gen {g}" + (f" :: {note}" if note else ""))
            for i in range(d + 1) if d >= 1 else []:
                lines.append(f"    face {i} = {_entry_str(X.face_table[(g, i)])}")
    return "\n".join(lines) + "\n"


def print_smap(f: SimplicialMap) -> str:
    for name in (f.name, f.domain.name, f.codomain.name):
        _check_name(name)
    lines = [f"smap {f.name}", f"domain {f.domain.name}", f"codomain {f.codomain.name}"]
    for g in f.domain.generators():
        lines.append(f"  map {g} = {_entry_str(f.assignment[g])}")
    return "\n".join(lines) + "\n"


def print_span(span: LinkedSpan, paths: dict[str, str]) -> str:
    """paths maps the five slots M, L, N, pi, iota to relative paths."""
    _check_name(span.name)
    lines = [f"span {span.name}"]
    for slot in ("M", "L", "N", "pi", "iota"):
        lines.append(f"{slot} = {paths[slot]}")
    return "\n".join(lines) + "\n"


# -- parsing ----------------------------------------------------------------


def _logical_lines(text: str, path: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_entry(rest: str, path: str, lineno: int, dim: int) -> FormalSimplex:
    rest = rest.strip()
    if not rest.startswith("("):
        raise ParseError(path, lineno, f"expected '(word) label', got {rest!r}")
    close = rest.find(")")
    if close < 0:
        raise ParseError(path, lineno, "unterminated degeneracy word")
    word_part = rest[1:close].split()
    tail = rest[close + 1:].split()
    if len(tail) != 1:
        raise ParseError(path, lineno, f"expected one label after the word, got {tail}")
    try:
        word = tuple(int(w) for w in word_part)
        sigma = surjection_from_word(dim, word)
    except ValueError as e:
        raise ParseError(path, lineno, str(e)) from None
    return FormalSimplex(tail[0], sigma)


def parse_sset(text: str, path: str = "<sset>") -> SimplicialSet:
    X: SimplicialSet | None = None
    maxdim: int | None = None
    cur_dim: int | None = None
    pending: tuple[str, int, list[FormalSimplex | None], str | None, int] | None = None

    def flush():
        nonlocal pending
        if pending is None:
            return
        label, d, faces, note, at = pending
        missing = [i for i, f in enumerate(faces) if f is None]
        if missing:
            raise ParseError(path, at, f"generator {label!r} missing faces {missing}")
        X.add_generator(d, label, [f for f in faces if f is not None] if d >= 1 else None,
                        note=note)
        pending = None

    for lineno, line in _logical_lines(text, path):
        parts = line.split(None, 1)
        key, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if key == "sset":
            if X is not None:
                raise ParseError(path, lineno, "second sset header")
            X = SimplicialSet(rest.strip())
        elif X is None:
            raise ParseError(path, lineno, "document must start with 'sset <name>'")
        elif key == "maxdim":
            maxdim = int(rest)
        elif key == "dim":
            flush()
            cur_dim = int(rest)
            if cur_dim < 0:
                raise ParseError(path, lineno, "negative dimension")
        elif key == "gen":
            flush()
            if cur_dim is None:
                raise ParseError(path, lineno, "gen before any dim header")
            if "::" in rest:
                label, note = (p.strip() for p in rest.split("::", 1))
            else:
                label, note = rest.strip(), None
            if cur_dim == 0:
                X.add_generator(0, label, note=note)
            else:
                pending = (label, cur_dim, [None] * (cur_dim + 1), note, lineno)
        elif key == "face":
            if pending is None:
                raise ParseError(path, lineno, "face line outside a generator block")
            eq = rest.split("=", 1)
            if len(eq) != 2:
                raise ParseError(path, lineno, "face line needs '='")
            try:
                i = int(eq[0])
            except ValueError:
                raise ParseError(path, lineno, f"bad face index {eq[0].strip()!r}") from None
            label, d, faces, note, at = pending
            if not 0 <= i <= d:
                raise ParseError(path, lineno, f"face index {i} outside 0..{d}")
            if faces[i] is not None:
                raise ParseError(path, lineno, f"face {i} of {label!r} given twice")
            faces[i] = _parse_entry(eq[1], path, lineno, d - 1)
        else:
            raise ParseError(path, lineno, f"unknown directive {key!r}")
    if X is None:
        raise ParseError(path, 1, "empty document")
    flush()
    if maxdim is None:
        raise ParseError(path, 1, "missing maxdim header")
    if maxdim != X.max_gen_dim:
        raise ParseError(path, 1,
                         f"maxdim says {maxdim} but generators reach {X.max_gen_dim}")
    X.assert_coherent()
    return X


def parse_smap(text: str, ssets: dict[str, SimplicialSet],
               path: str = "<smap>") -> SimplicialMap:
    name = domain = codomain = None
    assignment: dict[str, FormalSimplex] = {}
    order: list[str] = []
    for lineno, line in _logical_lines(text, path):
        parts = line.split(None, 1)
        key, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if key == "smap":
            name = rest.strip()
        elif key == "domain":
            domain = rest.strip()
        elif key == "codomain":
            codomain = rest.strip()
        elif key == "map":
            if domain is None or codomain is None:
                raise ParseError(path, lineno, "map line before domain/codomain")
            if domain not in ssets or codomain not in ssets:
                raise ParseError(path, lineno,
                                 f"unknown sset in {domain!r} -> {codomain!r}")
            eq = rest.split("=", 1)
            if len(eq) != 2:
                raise ParseError(path, lineno, "map line needs '='")
            g = eq[0].strip()
            dom = ssets[domain]
            if g not in dom.gen_dims:
                raise ParseError(path, lineno, f"unknown domain generator {g!r}")
            assignment[g] = _parse_entry(eq[1], path, lineno, dom.gen_dims[g])
            order.append(g)
        else:
            raise ParseError(path, lineno, f"unknown directive {key!r}")
    if name is None or domain is None or codomain is None:
        raise ParseError(path, 1, "missing smap/domain/codomain header")
    try:
        return SimplicialMap(name, ssets[domain], ssets[codomain], assignment)
    except ValueError as e:
        raise ParseError(path, 1, str(e)) from None


def parse_span_file(path: str) -> LinkedSpan:
    """Read a span document and the five documents it references."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = None
    refs: dict[str, str] = {}
    for lineno, line in _logical_lines(text, path):
        parts = line.split(None, 1)
        key, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if key == "span":
            name = rest.strip()
        elif key in ("M", "L", "N", "pi", "iota"):
            eq = rest.split("=", 1)
            if len(eq) != 2 or eq[0].strip():
                raise ParseError(path, lineno, f"expected '{key} = <path>'")
            refs[key] = eq[1].strip()
        else:
            raise ParseError(path, lineno, f"unknown directive {key!r}")
    if name is None:
        raise ParseError(path, 1, "missing span header")
    missing = [k for k in ("M", "L", "N", "pi", "iota") if k not in refs]
    if missing:
        raise ParseError(path, 1, f"span document missing slots {missing}")
    base = os.path.dirname(os.path.abspath(path))

    def read(slot: str) -> str:
        ref = os.path.join(base, refs[slot])
        with open(ref, encoding="utf-8") as fh:
            return fh.read()

    ssets: dict[str, SimplicialSet] = {}
    parsed: dict[str, SimplicialSet] = {}
    cache: dict[str, SimplicialSet] = {}
    for slot in ("M", "L", "N"):
        ref = refs[slot]
        if ref not in cache:
            X = parse_sset(read(slot), ref)
            if X.name in ssets:
                raise ParseError(path, 1,
                                 f"two distinct documents share the sset name {X.name!r}")
            ssets[X.name] = X
            cache[ref] = X
        parsed[slot] = cache[ref]
    pi = parse_smap(read("pi"), ssets, refs["pi"])
    iota = parse_smap(read("iota"), ssets, refs["iota"])
    if pi.domain is not parsed["L"] or pi.codomain is not parsed["M"]:
        raise ParseError(path, 1, "pi must map the L document to the M document")
    if iota.domain is not parsed["L"] or iota.codomain is not parsed["N"]:
        raise ParseError(path, 1, "iota must map the L document to the N document")
    return LinkedSpan(name, parsed["M"], parsed["L"], parsed["N"], pi, iota)


def write_span_documents(span: LinkedSpan, directory: str) -> str:
    """Write the documents for a span; returns the span file path.

    Slots referring to the same object (a span with L = N, say) share
    one file so the reader reconstructs the sharing."""
    os.makedirs(directory, exist_ok=True)
    prefix = span.name
    paths: dict[str, str] = {}
    seen: dict[int, str] = {}
    for slot, obj, content in (("M", span.M, None), ("L", span.L, None),
                               ("N", span.N, None),
                               ("pi", span.pi, print_smap(span.pi)),
                               ("iota", span.iota, print_smap(span.iota))):
        if id(obj) in seen:
            paths[slot] = seen[id(obj)]
            continue
        fname = f"{prefix}.{slot}." + ("smap" if content else "sset")
        body = content if content else print_sset(obj)
        with open(os.path.join(directory, fname), "w", encoding="utf-8") as fh:
            fh.write(body)
        paths[slot] = fname
        seen[id(obj)] = fname
    span_path = os.path.join(directory, f"{prefix}.span")
    with open(span_path, "w", encoding="utf-8") as fh:
        fh.write(print_span(span, paths))
    return span_path
