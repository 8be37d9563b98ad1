"""Exhaustive enumeration of small relations and of parameter-family pools."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from ..endo import EndoFamily, EndoFn, close_under_composition, endomorphisms
from ..errors import GuardExceededError
from ..relation import Relation

ENUM_GUARD = 4


def enumerate_relations(n: int) -> Iterator[Relation]:
    """All ``2**(n*n)`` relations; matrix entry (0,0) is the most significant bit."""
    if n > ENUM_GUARD:
        raise GuardExceededError(f"n={n} exceeds the enumeration guard {ENUM_GUARD}")
    cells = n * n
    for code in range(1 << cells):
        rows = []
        for p in range(n):
            row = 0
            for q in range(n):
                if code >> (cells - 1 - (p * n + q)) & 1:
                    row |= 1 << q
            rows.append(row)
        yield Relation(n, tuple(rows))


@lru_cache(maxsize=None)
def quasi_orders(n: int) -> tuple[Relation, ...]:
    return tuple(R for R in enumerate_relations(n) if R.report.is_quasi_order)


def enumerate_quasi_orders(n: int) -> Iterator[Relation]:
    if n > ENUM_GUARD:
        raise GuardExceededError(f"n={n} exceeds the enumeration guard {ENUM_GUARD}")
    return iter(quasi_orders(n))


@lru_cache(maxsize=None)
def endo_monoid(R: Relation) -> EndoFamily:
    return endomorphisms(R, guard=ENUM_GUARD)


def generated_families(n: int, members, max_generators: int, cap: int = 10000) -> list[EndoFamily]:
    """Subsemigroups and submonoids generated by at most ``max_generators`` members."""
    out = {EndoFamily(n), EndoFamily.identity(n)}
    ms = list(members)
    gens: list[tuple] = [(f,) for f in ms]
    if max_generators >= 2:
        gens += [(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms))]
    for g in gens:
        for with_id in (False, True):
            out.add(close_under_composition(list(g), include_identity=with_id, cap=cap, n=n))
    return sorted(out, key=lambda F: (len(F), F.members))


@lru_cache(maxsize=None)
def family_pool(R: Relation, max_generators: int = 2) -> tuple[EndoFamily, ...]:
    """Generated endomorphism families of ``R`` plus the whole monoid."""
    E = endo_monoid(R)
    pool = set(generated_families(R.n, E.members, max_generators))
    pool.add(E)
    return tuple(sorted(pool, key=lambda F: (len(F), F.members)))


@lru_cache(maxsize=None)
def all_maps(n: int) -> tuple[EndoFn, ...]:
    return tuple(EndoFn(t) for t in product(range(n), repeat=n))


def all_subfamilies(n: int) -> Iterator[EndoFamily]:
    """Every subset of ``S^S``; only sensible for ``n <= 2``."""
    if n > 2:
        raise GuardExceededError("subsets of S^S are enumerated only for n <= 2")
    maps = all_maps(n)
    for code in range(1 << len(maps)):
        yield EndoFamily(n, [maps[i] for i in range(len(maps)) if code >> i & 1])
