"""Plain-text formats for relations and families, plus literal re-exports.

Relation files::

    n 3
    reflexive
    0 1
    1 2

Family files hold one function per line as ``f: v0 v1 ...``; an optional
``n <size>`` header fixes the carrier (needed for an empty family).
Blank lines and ``#`` comments are ignored in both.
"""

from __future__ import annotations

from .baire.inj import BAInj, parse_bainj
from .baire.seq import UPSeq, UPSet, parse_upseq, parse_upset
from .endo import EndoFamily
from .errors import ParseError
from .relation import Relation


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, raw, line


def _int(tok: str, lineno: int, raw: str, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected {what}, got {tok!r}", lineno, raw.find(tok) + 1)
    return int(tok)


def _header(lineno: int, raw: str, line: str) -> int | None:
    toks = line.split()
    if toks[0] != "n":
        return None
    if len(toks) != 2:
        raise ParseError("header must be 'n <size>'", lineno, 1)
    size = _int(toks[1], lineno, raw, "a carrier size")
    if size < 1:
        raise ParseError("carrier size must be positive", lineno, raw.find(toks[1]) + 1)
    return size


def parse_relation(text: str) -> Relation:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty relation file", 1, 1)
    n = _header(*lines[0])
    if n is None:
        raise ParseError("first line must be 'n <size>'", lines[0][0], 1)
    rows = [0] * n
    for lineno, raw, line in lines[1:]:
        toks = line.split()
        if toks == ["reflexive"]:
            for p in range(n):
                rows[p] |= 1 << p
            continue
        if len(toks) != 2:
            raise ParseError("expected a pair 'p q' or the directive 'reflexive'", lineno, 1)
        p, q = (_int(t, lineno, raw, "an element index") for t in toks)
        for v, t in ((p, toks[0]), (q, toks[1])):
            if v >= n:
                raise ParseError(f"element {v} outside carrier of size {n}", lineno, raw.find(t) + 1)
        rows[p] |= 1 << q
    return Relation(n, tuple(rows))


def serialize_relation(R: Relation) -> str:
    out = [f"n {R.n}"]
    out += [f"{p} {q}" for p, q in sorted(R.pairs())]
    return "\n".join(out) + "\n"


def parse_family(text: str, n: int | None = None) -> EndoFamily:
    members = []
    for lineno, raw, line in _lines(text):
        size = _header(lineno, raw, line)
        if size is not None:
            if n is not None and size != n:
                raise ParseError(f"carrier {size} conflicts with expected {n}", lineno, 1)
            n = size
            continue
        name, sep, body = line.partition(":")
        if not sep or not name.strip():
            raise ParseError("expected '<name>: v0 v1 ...'", lineno, 1)
        vals = [_int(t, lineno, raw, "a function value") for t in body.split()]
        if n is None:
            n = len(vals)
        if len(vals) != n:
            raise ParseError(f"function lists {len(vals)} values on a carrier of size {n}", lineno, 1)
        for v in vals:
            if v >= n:
                raise ParseError(f"value {v} outside carrier of size {n}", lineno, raw.find(str(v), len(name)) + 1)
        members.append(vals)
    if n is None:
        raise ParseError("an empty family needs an 'n <size>' header", 1, 1)
    return EndoFamily(n, members)


def serialize_family(F: EndoFamily) -> str:
    out = [f"n {F.n}"] + ["f: " + " ".join(map(str, f)) for f in F]
    return "\n".join(out) + "\n"


def serialize_upseq(x: UPSeq) -> str:
    return str(x)


def serialize_upset(s: UPSet) -> str:
    return str(s)


def serialize_bainj(h: BAInj) -> str:
    return str(h)


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


__all__ = [
    "parse_bainj", "parse_family", "parse_relation", "parse_upseq", "parse_upset", "read_text",
    "serialize_bainj", "serialize_family", "serialize_relation", "serialize_upseq", "serialize_upset", "write_text",
]
