"""Finite binary relations on ``{0..n-1}`` and their derived relations.

A :class:`Relation` stores one bitmask per row: bit ``q`` of ``rows[p]`` is
set iff ``p <= q``.  Relations are immutable; classification flags are
computed once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAQuasiOrderError, RangeError


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    linear: bool
    complete: bool

    @property
    def is_quasi_order(self) -> bool:
        return self.reflexive and self.transitive

    @property
    def is_poset(self) -> bool:
        return self.is_quasi_order and self.antisymmetric


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise RangeError("row mask has bits outside the carrier")

    @property
    def report(self) -> PropertyReport:
        rep = self.__dict__.get("_report")
        if rep is None:
            rep = _scan(self.n, self.rows)
            object.__setattr__(self, "_report", rep)
        return rep

    # construction helpers

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> Relation:
        n = len(matrix)
        return cls(n, tuple(sum(1 << q for q in range(n) if matrix[p][q]) for p in range(n)))

    @classmethod
    def from_packed(cls, packed: bytes) -> Relation:
        return cls(len(packed), tuple(packed))

    # access

    def leq(self, p: int, q: int) -> bool:
        return bool(self.rows[p] >> q & 1)

    __call__ = leq

    def lt(self, p: int, q: int) -> bool:
        return self.leq(p, q) and not self.leq(q, p)

    def equiv(self, p: int, q: int) -> bool:
        return self.leq(p, q) and self.leq(q, p)

    @property
    def adj(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(r >> q & 1) for q in range(self.n)) for r in self.rows)

    @property
    def packed(self) -> bytes:
        return bytes(self.rows)

    def pairs(self) -> list[tuple[int, int]]:
        return [(p, q) for p in range(self.n) for q in range(self.n) if self.rows[p] >> q & 1]

    def down(self, p: int) -> int:
        """Mask of ``{r : r <= p}``."""
        return sum(1 << r for r in range(self.n) if self.rows[r] >> p & 1)

    def transpose(self) -> Relation:
        return Relation(self.n, tuple(self.down(p) for p in range(self.n)))

    def issubset(self, other: Relation) -> bool:
        _same_carrier(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __le__(self, other: Relation) -> bool:
        return self.issubset(other)

    def __or__(self, other: Relation) -> Relation:
        _same_carrier(self, other)
        return Relation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: Relation) -> Relation:
        _same_carrier(self, other)
        return Relation(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __str__(self) -> str:
        return "\n".join("".join("1" if r >> q & 1 else "." for q in range(self.n)) for r in self.rows)


def _same_carrier(a: Relation, b: Relation):
    if a.n != b.n:
        from .errors import CarrierMismatchError

        raise CarrierMismatchError(f"carriers differ: {a.n} vs {b.n}")


def _scan(n: int, rows: Sequence[int]) -> PropertyReport:
    full = (1 << n) - 1
    reflexive = all(rows[p] >> p & 1 for p in range(n))
    transitive = all(rows[q] & ~rows[p] == 0 for p in range(n) for q in range(n) if rows[p] >> q & 1)
    antisymmetric = all(
        not (rows[p] >> q & 1 and rows[q] >> p & 1) for p in range(n) for q in range(n) if p != q
    )
    linear = all(rows[p] >> q & 1 or rows[q] >> p & 1 for p in range(n) for q in range(n))
    complete = all(r == full for r in rows)
    return PropertyReport(reflexive, transitive, antisymmetric, linear, complete)


def make_relation(n: int, pairs: Iterable[tuple[int, int]] = (), reflexive: bool = False) -> Relation:
    rows = [0] * n
    for p, q in pairs:
        if not (0 <= p < n and 0 <= q < n):
            raise RangeError(f"pair ({p}, {q}) outside carrier of size {n}")
        rows[p] |= 1 << q
    if reflexive:
        for p in range(n):
            rows[p] |= 1 << p
    return Relation(n, tuple(rows))


def diagonal(n: int) -> Relation:
    return make_relation(n, reflexive=True)


def complete_relation(n: int) -> Relation:
    return Relation(n, ((1 << n) - 1,) * n)


def chain(n: int) -> Relation:
    return make_relation(n, [(p, q) for p in range(n) for q in range(p, n)])


def classify(R: Relation) -> PropertyReport:
    return R.report


def require_quasi_order(R: Relation, what: str = "operation"):
    if not R.report.is_quasi_order:
        raise NotAQuasiOrderError(f"{what} is defined only for quasi orders")


def strict_part(R: Relation) -> Relation:
    n = R.n
    return Relation(n, tuple(R.rows[p] & ~R.down(p) for p in range(n)))


def symmetric_part(R: Relation) -> Relation:
    n = R.n
    return Relation(n, tuple(R.rows[p] & R.down(p) for p in range(n)))


def nleq_part(R: Relation) -> Relation:
    full = (1 << R.n) - 1
    return Relation(R.n, tuple(full & ~r for r in R.rows))


def nless_part(R: Relation) -> Relation:
    full = (1 << R.n) - 1
    return Relation(R.n, tuple(full & ~r for r in strict_part(R).rows))


def compatible(R: Relation, p: int, q: int) -> bool:
    require_quasi_order(R, "compatibility")
    return R.down(p) & R.down(q) != 0


def compatibility_set(R: Relation, p: int) -> int:
    """Mask of ``{r : r compatible with p}``."""
    require_quasi_order(R, "compatibility")
    dp = R.down(p)
    return sum(1 << r for r in range(R.n) if R.down(r) & dp)


def separativity_failure(R: Relation) -> tuple[int, int] | None:
    """First ``(p, q)`` with ``p`` not below ``q`` and every ``r <= p`` compatible with ``q``."""
    require_quasi_order(R, "separativity")
    for p in range(R.n):
        for q in range(R.n):
            if R.leq(p, q):
                continue
            dq = R.down(q)
            if not any(R.leq(r, p) and not R.down(r) & dq for r in range(R.n)):
                return p, q
    return None


def is_separative(R: Relation) -> bool:
    return separativity_failure(R) is None


@dataclass(frozen=True)
class Quotient:
    classes: tuple[tuple[int, ...], ...]
    relation: Relation

    def class_of(self, p: int) -> int:
        for i, c in enumerate(self.classes):
            if p in c:
                return i
        raise RangeError(p)


def _quotient_by_key(R: Relation, key, order) -> Quotient:
    groups: dict = {}
    for p in range(R.n):
        groups.setdefault(key(p), []).append(p)
    classes = tuple(sorted(tuple(g) for g in groups.values()))
    k = len(classes)
    rows = tuple(
        sum(1 << j for j in range(k) if order(classes[i][0], classes[j][0])) for i in range(k)
    )
    return Quotient(classes, Relation(k, rows))


def antisymmetric_quotient(R: Relation) -> Quotient:
    require_quasi_order(R, "antisymmetric quotient")
    sym = symmetric_part(R)
    return _quotient_by_key(R, lambda p: sym.rows[p], R.leq)


def separative_quotient(R: Relation) -> Quotient:
    require_quasi_order(R, "separative quotient")
    f = [compatibility_set(R, p) for p in range(R.n)]
    return _quotient_by_key(R, lambda p: f[p], lambda a, b: f[a] & ~f[b] == 0)


def is_homomorphism(f: Sequence[int], R: Relation, S: Relation) -> bool:
    if len(f) != R.n:
        raise RangeError(f"map has {len(f)} entries, carrier has {R.n}")
    if any(not 0 <= v < S.n for v in f):
        raise RangeError("map leaves the target carrier")
    return all(S.leq(f[p], f[q]) for p, q in R.pairs())


def is_order_reflecting(f: Sequence[int], R: Relation) -> bool:
    return all(R.leq(p, q) for p in range(R.n) for q in range(R.n) if R.leq(f[p], f[q]))
