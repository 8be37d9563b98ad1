"""Eventually periodic sequences and index sets.

Both types store a finite prefix followed by a repeating period and keep
themselves in normal form (primitive period, shortest prefix), so value
equality is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Sequence

from ..errors import ParseError


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(period: tuple) -> tuple:
    k = len(period)
    for d in range(1, k + 1):
        if k % d == 0 and period == period[:d] * (k // d):
            return period[:d]
    return period


def _normalize(prefix: Sequence, period: Sequence) -> tuple[tuple, tuple]:
    if not period:
        raise ValueError("period must be nonempty")
    prefix = list(prefix)
    period = _primitive(tuple(period))
    # pull the last prefix entry into the period while it obeys the period law
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period = (period[-1],) + period[:-1]
    return tuple(prefix), period


@dataclass(frozen=True)
class UPSeq:
    """``x(n) = prefix[n]`` for ``n < len(prefix)``, then the period repeats."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __init__(self, prefix: Iterable[int] = (), period: Iterable[int] = (0,)):
        pre, per = _normalize(tuple(prefix), tuple(period))
        if any(v < 0 for v in pre + per):
            raise ValueError("sequence values must be natural numbers")
        object.__setattr__(self, "prefix", tuple(int(v) for v in pre))
        object.__setattr__(self, "period", tuple(int(v) for v in per))

    @classmethod
    def const(cls, c: int) -> UPSeq:
        return cls((), (c,))

    @classmethod
    def chi(cls, points: Iterable[int]) -> UPSeq:
        """Characteristic sequence of a finite set."""
        pts = set(points)
        top = max(pts) + 1 if pts else 0
        return cls([1 if i in pts else 0 for i in range(top)], (0,))

    @classmethod
    def from_function(cls, f: Callable[[int], int], start: int, period_len: int) -> UPSeq:
        """Build from a function known to be periodic with ``period_len`` from ``start`` on."""
        return cls([f(i) for i in range(start)], [f(start + i) for i in range(period_len)])

    def __call__(self, n: int) -> int:
        L = len(self.prefix)
        if n < L:
            return self.prefix[n]
        return self.period[(n - L) % len(self.period)]

    at = __call__

    def values(self, k: int) -> list[int]:
        pre, per = self.prefix, self.period
        if k <= len(pre):
            return list(pre[:k])
        reps = (k - len(pre)) // len(per) + 1
        return (list(pre) + list(per) * reps)[:k]

    def support(self) -> UPSet:
        return UPSet([v != 0 for v in self.prefix], [v != 0 for v in self.period])

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.prefix)) + "|" + ",".join(map(str, self.period)) + "]"

    def __repr__(self) -> str:
        return f"UPSeq{self}"


ZERO = UPSeq.const(0)


def horizon(*xs) -> tuple[int, int]:
    """(start, length) of a window after which every argument is periodic."""
    start = max(len(x.prefix) for x in xs)
    per = 1
    for x in xs:
        per = lcm(per, len(x.period))
    return start, per


def pointwise(op: Callable[[int, int], int], x: UPSeq, y: UPSeq) -> UPSeq:
    start, per = horizon(x, y)
    return UPSeq.from_function(lambda i: op(x(i), y(i)), start, per)


def meet(x: UPSeq, y: UPSeq) -> UPSeq:
    return pointwise(min, x, y)


def join(x: UPSeq, y: UPSeq) -> UPSeq:
    return pointwise(max, x, y)


def interleave(even: UPSeq, odd: UPSeq) -> UPSeq:
    """``z(2k) = even(k)``, ``z(2k+1) = odd(k)``."""
    start, per = horizon(even, odd)
    return UPSeq.from_function(lambda i: odd(i // 2) if i & 1 else even(i // 2), 2 * start, 2 * per)


@dataclass(frozen=True)
class UPSet:
    prefix: tuple[bool, ...]
    period: tuple[bool, ...]

    def __init__(self, prefix: Iterable[bool] = (), period: Iterable[bool] = (False,)):
        pre, per = _normalize(tuple(bool(b) for b in prefix), tuple(bool(b) for b in period))
        object.__setattr__(self, "prefix", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def finite(cls, points: Iterable[int]) -> UPSet:
        pts = set(points)
        top = max(pts) + 1 if pts else 0
        return cls([i in pts for i in range(top)], (False,))

    @classmethod
    def residues(cls, modulus: int, rs: Iterable[int], start: int = 0) -> UPSet:
        """``{n >= start : n mod modulus in rs}``."""
        rs = {r % modulus for r in rs}
        return cls.from_predicate(lambda n: n >= start and n % modulus in rs, start, modulus)

    @classmethod
    def from_predicate(cls, f: Callable[[int], bool], start: int, period_len: int) -> UPSet:
        return cls([f(i) for i in range(start)], [f(start + i) for i in range(period_len)])

    def __contains__(self, n: int) -> bool:
        L = len(self.prefix)
        if n < L:
            return self.prefix[n]
        return self.period[(n - L) % len(self.period)]

    @property
    def is_infinite(self) -> bool:
        return any(self.period)

    def elements(self, limit: int) -> list[int]:
        return [i for i in range(limit) if i in self]

    def _combine(self, other: UPSet, op) -> UPSet:
        start = max(len(self.prefix), len(other.prefix))
        per = lcm(len(self.period), len(other.period))
        return UPSet.from_predicate(lambda i: op(i in self, i in other), start, per)

    def __and__(self, other: UPSet) -> UPSet:
        return self._combine(other, lambda a, b: a and b)

    def __or__(self, other: UPSet) -> UPSet:
        return self._combine(other, lambda a, b: a or b)

    def __sub__(self, other: UPSet) -> UPSet:
        return self._combine(other, lambda a, b: a and not b)

    def complement(self) -> UPSet:
        return UPSet([not b for b in self.prefix], [not b for b in self.period])

    def issubset(self, other: UPSet) -> bool:
        return not (self - other).is_infinite and not any((self - other).prefix)

    def __le__(self, other: UPSet) -> bool:
        return self.issubset(other)

    def subset_star(self, other: UPSet) -> bool:
        """Inclusion modulo a finite set."""
        return not (self - other).is_infinite

    def __str__(self) -> str:
        bits = lambda bs: ",".join("1" if b else "0" for b in bs)  # noqa: E731
        return "{" + bits(self.prefix) + "|" + bits(self.period) + "}"

    def __repr__(self) -> str:
        return f"UPSet{self}"


NATURALS = UPSet((), (True,))
EMPTY = UPSet((), (False,))
EVENS = UPSet((), (True, False))
ODDS = UPSet((), (False, True))


def _split_literal(text: str, open_ch: str, close_ch: str, what: str) -> tuple[list[str], list[str]]:
    s = text.strip()
    if not (s.startswith(open_ch) and s.endswith(close_ch)):
        raise ParseError(f"{what} literal must look like {open_ch}a,b|c,d{close_ch}", 1, 1)
    body = s[1:-1]
    if body.count("|") != 1:
        raise ParseError(f"{what} literal needs exactly one '|'", 1, 1 + s.find("|") if "|" in s else len(s))
    pre, per = body.split("|")
    items = lambda part: [t.strip() for t in part.split(",")] if part.strip() else []  # noqa: E731
    return items(pre), items(per)


def _ints(tokens: list[str], text: str) -> list[int]:
    out = []
    for t in tokens:
        if not t.isdigit():
            col = text.find(t) + 1 if t else 1
            raise ParseError(f"expected a natural number, got {t!r}", 1, col)
        out.append(int(t))
    return out


def parse_upseq(text: str) -> UPSeq:
    pre, per = _split_literal(text, "[", "]", "sequence")
    if not per:
        raise ParseError("period must be nonempty", 1, text.find("|") + 2)
    return UPSeq(_ints(pre, text), _ints(per, text))


def parse_upset(text: str) -> UPSet:
    pre, per = _split_literal(text, "{", "}", "set")
    if not per:
        raise ParseError("period must be nonempty", 1, text.find("|") + 2)
    vals = _ints(pre, text) + _ints(per, text)
    if any(v > 1 for v in vals):
        raise ParseError("set literal entries must be 0 or 1", 1, 1)
    return UPSet([v == 1 for v in vals[: len(pre)]], [v == 1 for v in vals[len(pre):]])
