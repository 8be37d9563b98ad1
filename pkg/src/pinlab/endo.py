"""Explicit families of self-maps of a finite carrier.

Functions are tables: ``f[x]`` is the image of ``x``.  Composition follows
the usual convention, ``(f @ g)(x) = f(g(x))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import CarrierMismatchError, ClosureCapError, GuardExceededError, RangeError, UnknownIdError
from .relation import Relation, is_homomorphism


class EndoFn(tuple):
    """A self-map of ``{0..n-1}`` given by its table."""

    __slots__ = ()

    def __new__(cls, table: Iterable[int]):
        t = super().__new__(cls, table)
        n = len(t)
        for v in t:
            if not 0 <= v < n:
                raise RangeError(f"table entry {v} outside carrier of size {n}")
        return t

    @classmethod
    def identity(cls, n: int) -> EndoFn:
        return cls(range(n))

    @classmethod
    def constant(cls, n: int, c: int) -> EndoFn:
        return cls([c] * n)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __matmul__(self, other: EndoFn) -> EndoFn:
        return EndoFn(self[x] for x in other)

    def is_injective(self) -> bool:
        return len(set(self)) == len(self)

    def is_surjective(self) -> bool:
        return self.is_injective()

    def __repr__(self):
        return "EndoFn(" + " ".join(map(str, self)) + ")"


def _as_fn(f) -> EndoFn:
    return f if isinstance(f, EndoFn) else EndoFn(f)


@dataclass(frozen=True)
class EndoFamily:
    n: int
    members: tuple[EndoFn, ...]
    contains_identity: bool = field(init=False, compare=False)
    packed: bytes = field(init=False, compare=False, repr=False)

    def __init__(self, n: int, members: Iterable[Sequence[int]] = ()):
        fns = sorted({_as_fn(m) for m in members})
        for f in fns:
            if f.n != n:
                raise CarrierMismatchError(f"function on {f.n} points in a family on {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", tuple(fns))
        mset = set(fns)
        object.__setattr__(self, "contains_identity", EndoFn.identity(n) in mset)
        object.__setattr__(self, "packed", bytes(v for f in fns for v in f) if n <= 255 else b"")

    @property
    def closed_under_composition(self) -> bool:
        c = self.__dict__.get("_closed")
        if c is None:
            mset = self._set
            c = all(f @ g in mset for f in self.members for g in self.members)
            object.__setattr__(self, "_closed", c)
        return c

    @classmethod
    def of(cls, *tables: Sequence[int]) -> EndoFamily:
        if not tables:
            raise ValueError("use EndoFamily(n) for an empty family")
        return cls(len(tables[0]), tables)

    @classmethod
    def identity(cls, n: int) -> EndoFamily:
        return cls(n, [EndoFn.identity(n)])

    @classmethod
    def all_maps(cls, n: int) -> EndoFamily:
        return cls(n, itertools.product(range(n), repeat=n))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, f):
        return _as_fn(f) in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_memo_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_memo_set", s)
        return s

    @property
    def is_subsemigroup(self) -> bool:
        return self.closed_under_composition

    @property
    def is_submonoid(self) -> bool:
        return self.closed_under_composition and self.contains_identity

    def issubset(self, other: EndoFamily) -> bool:
        return self._set <= other._set

    def __or__(self, other: EndoFamily) -> EndoFamily:
        _check_same(self, other)
        return EndoFamily(self.n, self.members + other.members)

    def __hash__(self):
        return hash((self.n, self.members))

    def __eq__(self, other):
        return isinstance(other, EndoFamily) and self.n == other.n and self.members == other.members


def _check_same(*families: EndoFamily):
    ns = {f.n for f in families}
    if len(ns) > 1:
        raise CarrierMismatchError(f"families on different carriers: {sorted(ns)}")


def compose_families(A: EndoFamily, B: EndoFamily) -> EndoFamily:
    """``A o B = {a o b}``."""
    _check_same(A, B)
    return EndoFamily(A.n, (a @ b for a in A for b in B))


def endomorphisms(R: Relation, guard: int = 5) -> EndoFamily:
    """All order-preserving self-maps of ``R``, by exhaustive enumeration."""
    if R.n > guard:
        raise GuardExceededError(f"carrier size {R.n} exceeds guard {guard}")
    n = R.n
    tables = list(itertools.product(range(n), repeat=n))
    if n <= kernels.MAX_PACKED_N and n > 0:
        flags = kernels.endo_mask(R.packed, n, bytes(v for t in tables for v in t), len(tables))
        keep = [t for t, ok in zip(tables, flags) if ok]
    else:
        keep = [t for t in tables if is_homomorphism(t, R, R)]
    return EndoFamily(n, keep)


def close_under_composition(
    generators: EndoFamily | Iterable[Sequence[int]],
    include_identity: bool = False,
    cap: int = 10000,
    n: int | None = None,
) -> EndoFamily:
    """Smallest composition-closed superset of the generators."""
    if isinstance(generators, EndoFamily):
        n = generators.n
        gens = list(generators.members)
    else:
        gens = [_as_fn(g) for g in generators]
        if n is None:
            if not gens:
                raise ValueError("carrier size needed for an empty generator set")
            n = gens[0].n
    for g in gens:
        if g.n != n:
            raise CarrierMismatchError("generators on different carriers")
    seen = set(gens)
    if include_identity:
        seen.add(EndoFn.identity(n))
    frontier = list(seen)
    # every product is a word in the generators, so right-multiplying by generators suffices
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = f @ g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise ClosureCapError(f"closure exceeded cap of {cap} members")
        frontier = nxt
    return EndoFamily(n, seen)


def is_endofamily_of(F: EndoFamily, R: Relation) -> bool:
    if F.n != R.n:
        raise CarrierMismatchError(f"family on {F.n} points, relation on {R.n}")
    if not F.members:
        return True
    if R.n <= kernels.MAX_PACKED_N:
        return all(kernels.endo_mask(R.packed, R.n, F.packed, len(F)))
    return all(is_homomorphism(f, R, R) for f in F)


# ---------------------------------------------------------------------------
# side conditions


@dataclass(frozen=True)
class SideConditionResult:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _inclusion(outer: EndoFamily, inner: EndoFamily, target: EndoFamily):
    """First ``(a, b, a o b)`` with ``a o b`` outside ``target``, else None."""
    tset = target._set
    for a in outer:
        get = a.__getitem__
        for b in inner:
            c = tuple(map(get, b))
            if c not in tset:
                return a, b, EndoFn(c)
    return None


def _exists_sigma(sigmas: EndoFamily, test: Callable[[EndoFn], tuple | None]):
    """Find sigma with ``test(sigma) is None``; on failure the first sigma's violation."""
    first = None
    for s in sigmas:
        bad = test(s)
        if bad is None:
            return SideConditionResult(True, (s,))
        if first is None:
            first = (s,) + bad
    return SideConditionResult(False, first)


def _pl_in_l(L, P):
    bad = _inclusion(P, L, L)
    return SideConditionResult(bad is None, bad)


def _lp_in_l(L, P):
    bad = _inclusion(L, P, L)
    return SideConditionResult(bad is None, bad)


def _plp_eq_l(L, P):
    lset = L._set
    produced = set()
    for a in P:
        for b in L:
            ab = tuple(map(a.__getitem__, b))
            for c in P:
                d = tuple(map(ab.__getitem__, c))
                if d not in lset:
                    return SideConditionResult(False, (a, b, c, EndoFn(d)))
                produced.add(d)
    for b in L:
        if b not in produced:
            return SideConditionResult(False, ("unreached", b))
    return SideConditionResult(True)


def _ts_in_t(U, T):
    return _exists_sigma(U, lambda s: _inclusion(T, (s,), T))


def _st_in_t(U, T):
    return _exists_sigma(U, lambda s: _inclusion((s,), T, T))


def _ps_in_l(L, P):
    return _exists_sigma(L, lambda s: _inclusion(P, (s,), L))


def _us_and_ts(U, T):
    def test(s):
        one = (s,)
        return _inclusion(U, one, U) or _inclusion(T, one, T)

    return _exists_sigma(U, test)


def _tu_in_t(U, T):
    bad = _inclusion(T, U, T)
    return SideConditionResult(bad is None, bad)


def _semigroup(F):
    bad = _inclusion(F, F, F)
    return SideConditionResult(bad is None, bad)


def _monoid(F):
    if not F.contains_identity:
        return SideConditionResult(False, ("missing identity",))
    return _semigroup(F)


# Keys are written with the first family in the Lambda/Upsilon slot and the
# second in the Pi/Theta slot.
SIDE_CONDITIONS: dict[str, Callable[[EndoFamily, EndoFamily], SideConditionResult]] = {
    "Π∘Λ⊆Λ": _pl_in_l,
    "Λ∘Π⊆Λ": _lp_in_l,
    "Π∘Λ∘Π=Λ": _plp_eq_l,
    "Θ∘σ⊆Θ for some σ∈Υ": _ts_in_t,
    "σ∘Θ⊆Θ for some σ∈Υ": _st_in_t,
    "Π∘σ⊆Λ for some σ∈Λ": _ps_in_l,
    "Υ∘σ⊆Υ and Θ∘σ⊆Θ for some σ∈Υ": _us_and_ts,
    "Θ∘Υ⊆Θ": _tu_in_t,
    "Λ subsemigroup": lambda L, P: _semigroup(L),
    "Π subsemigroup": lambda L, P: _semigroup(P),
    "Λ submonoid": lambda L, P: _monoid(L),
    "Π submonoid": lambda L, P: _monoid(P),
}

ALIASES = {
    "PL<=L": "Π∘Λ⊆Λ",
    "LP<=L": "Λ∘Π⊆Λ",
    "PLP=L": "Π∘Λ∘Π=Λ",
    "Ts<=T": "Θ∘σ⊆Θ for some σ∈Υ",
    "sT<=T": "σ∘Θ⊆Θ for some σ∈Υ",
    "Ps<=L": "Π∘σ⊆Λ for some σ∈Λ",
    "Us<=U&Ts<=T": "Υ∘σ⊆Υ and Θ∘σ⊆Θ for some σ∈Υ",
    "TU<=T": "Θ∘Υ⊆Θ",
    "L-semigroup": "Λ subsemigroup",
    "P-semigroup": "Π subsemigroup",
    "L-monoid": "Λ submonoid",
    "P-monoid": "Π submonoid",
}


def check_side_condition(cond: str, L: EndoFamily, P: EndoFamily) -> SideConditionResult:
    key = ALIASES.get(cond, cond)
    try:
        fn = SIDE_CONDITIONS[key]
    except KeyError:
        raise UnknownIdError(f"unknown side condition {cond!r}") from None
    _check_same(L, P)
    return fn(L, P)
