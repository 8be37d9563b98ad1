"""Block-affine injections of the naturals and the projections they induce.

A :class:`BAInj` lists ``h(0..N-1)`` explicitly and from ``N`` on follows
``h(N + q*m + i) = b_i + q*d``.  Normal form: the shortest block, then the
shortest exception list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from ..errors import NotInjectiveError, ParseError, PreconditionError
from .seq import UPSeq, UPSet, interleave


def _primitive_block(offsets: tuple[int, ...], d: int) -> tuple[tuple[int, ...], int]:
    m = len(offsets)
    diffs = [offsets[i + 1] - offsets[i] for i in range(m - 1)] + [offsets[0] + d - offsets[-1]]
    for k in range(1, m + 1):
        if m % k == 0 and diffs == diffs[:k] * (m // k):
            return offsets[:k], sum(diffs[:k])
    return offsets, d


@dataclass(frozen=True)
class BAInj:
    exceptions: tuple[int, ...]
    m: int
    d: int
    offsets: tuple[int, ...]

    def __init__(self, exceptions: Iterable[int] = (), m: int = 1, d: int = 1, offsets: Sequence[int] = (0,)):
        exc = [int(v) for v in exceptions]
        offs = tuple(int(v) for v in offsets)
        if m < 1 or len(offs) != m:
            raise ValueError(f"block length {m} needs {m} offsets, got {len(offs)}")
        if d < 1:
            raise NotInjectiveError("stride must be positive for an injection")
        if any(v < 0 for v in exc) or any(b < 0 for b in offs):
            raise ValueError("values must be natural numbers")
        residues = [b % d for b in offs]
        if len(set(residues)) != m:
            raise NotInjectiveError("block offsets collide modulo the stride")
        if len(set(exc)) != len(exc):
            raise NotInjectiveError("repeated exceptional value")
        for v in exc:
            if any(v >= b and (v - b) % d == 0 for b in offs):
                raise NotInjectiveError(f"exceptional value {v} is also hit by the block")
        offs, d = _primitive_block(offs, d)
        while exc and exc[-1] + d == offs[-1]:
            offs = (exc.pop(),) + offs[:-1]
        object.__setattr__(self, "exceptions", tuple(exc))
        object.__setattr__(self, "m", len(offs))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "offsets", offs)

    @classmethod
    def identity(cls) -> BAInj:
        return cls((), 1, 1, (0,))

    @classmethod
    def affine(cls, a: int, c: int) -> BAInj:
        """``k -> a*k + c``."""
        return cls((), 1, a, (c,))

    @classmethod
    def shift(cls, c: int) -> BAInj:
        return cls.affine(1, c)

    @classmethod
    def from_function(cls, f, start: int, m: int, d: int) -> BAInj:
        return cls([f(k) for k in range(start)], m, d, [f(start + i) for i in range(m)])

    @property
    def N(self) -> int:
        return len(self.exceptions)

    def __call__(self, k: int) -> int:
        if k < self.N:
            return self.exceptions[k]
        q, i = divmod(k - self.N, self.m)
        return self.offsets[i] + q * self.d

    def values(self, k: int) -> list[int]:
        out = list(self.exceptions[:k])
        offs, d, q = self.offsets, self.d, 0
        while len(out) < k:
            out.extend(b + q for b in offs)
            q += d
        return out[:k]

    def settles_above(self, bound: int) -> int:
        """Least ``K >= N`` with ``h(k) >= bound`` for all ``k >= K``."""
        K = N = len(self.exceptions)
        # each residue lane increases, so only its last value below the bound matters
        for i, b in enumerate(self.offsets):
            if b < bound:
                K = max(K, N + ((bound - 1 - b) // self.d) * self.m + i + 1)
        return K

    def range_set(self) -> UPSet:
        start = max([v + 1 for v in self.exceptions] + list(self.offsets) + [0])
        exc = set(self.exceptions)
        offs = self.offsets

        def hit(v):
            return v in exc or any(v >= b and (v - b) % self.d == 0 for b in offs)

        return UPSet.from_predicate(hit, start, self.d)

    def __str__(self) -> str:
        return (
            "exc=[" + ",".join(map(str, self.exceptions)) + "]; block=("
            + f"{self.m},{self.d};" + ",".join(map(str, self.offsets)) + ")"
        )

    def __repr__(self) -> str:
        return f"BAInj({self})"


def compose(g: BAInj, h: BAInj) -> BAInj:
    """``g ∘ h``."""
    K = h.settles_above(g.N)
    t = g.m // gcd(h.d, g.m)
    M = h.m * t
    D = (t * h.d // g.m) * g.d
    return BAInj.from_function(lambda k: g(h(k)), K, M, D)


def project(h: BAInj, x: UPSeq) -> UPSeq:
    """``x ∘ h``."""
    L, P = len(x.prefix), len(x.period)
    K = h.settles_above(L)
    t = P // gcd(h.d, P)
    pre, per = x.prefix, x.period
    vals = [pre[v] if v < L else per[(v - L) % P] for v in h.values(K + h.m * t)]
    return UPSeq(vals[:K], vals[K:])


def enum_injection(a: UPSet) -> BAInj:
    """Increasing enumeration of an infinite set."""
    if not a.is_infinite:
        raise PreconditionError("cannot enumerate a finite set by an injection of the naturals")
    L = len(a.prefix)
    exc = [i for i in range(L) if a.prefix[i]]
    offs = [L + i for i, b in enumerate(a.period) if b]
    return BAInj(exc, len(offs), len(a.period), offs)


EVEN = BAInj.affine(2, 0)
ODD = BAInj.affine(2, 1)


def evens(x: UPSeq) -> UPSeq:
    return project(EVEN, x)


def odds(x: UPSeq) -> UPSeq:
    return project(ODD, x)


@dataclass(frozen=True)
class Pi0Endo:
    """``x -> π_h(x) ⊎ ρ(x)``.

    ``h`` acts on even positions through ``half``: ``h(2k) = 2*half(k)``.
    ``rho`` is a permutation of odd positions with finite support, stored as
    a map on odd indices ``j`` (the odd number ``2j+1``).
    """

    half: BAInj
    rho: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        rho = dict(self.rho)
        if sorted(rho) != sorted(rho.values()):
            raise NotInjectiveError("odd part is not a permutation of its support")
        object.__setattr__(self, "rho", tuple(sorted((a, b) for a, b in rho.items() if a != b)))

    def rho_at(self, j: int) -> int:
        return dict(self.rho).get(j, j)

    def apply(self, x: UPSeq) -> UPSeq:
        even = project(self.half, evens(x))
        ox = odds(x)
        top = max([a for a, _ in self.rho] + [-1]) + 1
        start = max(top, len(ox.prefix))
        odd = UPSeq.from_function(lambda j: ox(self.rho_at(j)), start, len(ox.period))
        return interleave(even, odd)


@dataclass(frozen=True)
class Pi1Endo:
    """Identity, or ``π_h`` with ``h`` ranging inside the even numbers."""

    h: BAInj | None = None

    def __post_init__(self):
        if self.h is not None and not self.h.range_set() <= UPSet((), (True, False)):
            raise PreconditionError("Π1 members must project along an even-ranged injection")

    def apply(self, x: UPSeq) -> UPSeq:
        return x if self.h is None else project(self.h, x)


_BAINJ_RE = re.compile(
    r"^\s*exc\s*=\s*\[(?P<exc>[^\]]*)\]\s*;\s*block\s*=\s*\(\s*(?P<m>\d+)\s*,\s*(?P<d>\d+)\s*;(?P<offs>[^)]*)\)\s*$"
)


def parse_bainj(text: str) -> BAInj:
    mt = _BAINJ_RE.match(text)
    if not mt:
        raise ParseError("injection literal must look like exc=[...]; block=(m,d;b0,...)", 1, 1)

    def nums(group):
        part = mt.group(group).strip()
        if not part:
            return []
        toks = [t.strip() for t in part.split(",")]
        for t in toks:
            if not t.isdigit():
                raise ParseError(f"expected a natural number, got {t!r}", 1, mt.start(group) + 1)
        return [int(t) for t in toks]

    return BAInj(nums("exc"), int(mt.group("m")), int(mt.group("d")), nums("offs"))

