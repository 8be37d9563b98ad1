"""Quasi lattices: infimum/supremum sets and meet-preserving endomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .augment import AugSpec, parametric_aug
from .endo import EndoFamily
from .errors import HypothesisViolation, NotAQuasiLatticeError
from .relation import Relation, antisymmetric_quotient, is_homomorphism, require_quasi_order


def _bits(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class MeetJoinTable:
    n: int
    meets: tuple[tuple[frozenset[int], ...], ...]
    joins: tuple[tuple[frozenset[int], ...], ...]

    def meet(self, p: int, q: int) -> frozenset[int]:
        return self.meets[p][q]

    def join(self, p: int, q: int) -> frozenset[int]:
        return self.joins[p][q]

    @property
    def complete(self) -> bool:
        return all(self.meets[p][q] and self.joins[p][q] for p in range(self.n) for q in range(self.n))


def _infima(R: Relation, p: int, q: int) -> int:
    lower = R.down(p) & R.down(q)
    # r is an infimum when every lower bound lies below it
    return sum(1 << r for r in range(R.n) if lower >> r & 1 and lower & ~R.down(r) == 0)


@lru_cache(maxsize=4096)
def meet_join(R: Relation) -> MeetJoinTable:
    require_quasi_order(R, "meet/join")
    T = R.transpose()
    n = R.n
    meets = tuple(tuple(_bits(_infima(R, p, q)) for q in range(n)) for p in range(n))
    joins = tuple(tuple(_bits(_infima(T, p, q)) for q in range(n)) for p in range(n))
    return MeetJoinTable(n, meets, joins)


def _quotient_is_lattice(R: Relation) -> bool:
    Q = antisymmetric_quotient(R).relation
    table = meet_join(Q)
    return all(len(table.meet(a, b)) == 1 and len(table.join(a, b)) == 1 for a in range(Q.n) for b in range(Q.n))


def is_quasi_lattice(R: Relation) -> bool:
    direct = meet_join(R).complete
    assert direct == _quotient_is_lattice(R), "quasi lattice test disagrees with its quotient lattice"
    return direct


def require_quasi_lattice(R: Relation):
    require_quasi_order(R, "quasi lattice operation")
    if not meet_join(R).complete:
        raise NotAQuasiLatticeError("relation is not a quasi lattice")


def is_ql_endomorphism(R: Relation, f, table: MeetJoinTable | None = None) -> bool:
    require_quasi_lattice(R)
    if table is None:
        table = meet_join(R)
    n = R.n
    ok = all(
        f[r] in table.meet(f[p], f[q]) for p in range(n) for q in range(n) for r in table.meet(p, q)
    ) and all(f[s] in table.join(f[p], f[q]) for p in range(n) for q in range(n) for s in table.join(p, q))
    if ok:
        assert is_homomorphism(f, R, R), "meet-preserving map failed to preserve the order"
    return ok


def ql_endomorphisms(R: Relation, candidates: EndoFamily) -> EndoFamily:
    table = meet_join(R)
    return EndoFamily(R.n, [f for f in candidates if is_ql_endomorphism(R, f, table)])


def two_step_decompose(R: Relation, L: EndoFamily, P: EndoFamily, p: int, q: int) -> int:
    """Least ``r`` in ``p ∧ q`` with ``p`` strictive-below ``r`` strictive-below ``q``."""
    if not R.report.is_quasi_order or not meet_join(R).complete:
        raise HypothesisViolation("quasi lattice", "base relation is not a quasi lattice")
    table = meet_join(R)
    for name, F in (("Λ", L), ("Π", P)):
        bad = next((f for f in F if not is_ql_endomorphism(R, f, table)), None)
        if bad is not None:
            raise HypothesisViolation(f"{name} ⊆ QL-endomorphisms", bad)
    cor = parametric_aug(AugSpec("corrective", L, P), R)
    if not cor.leq(p, q):
        raise HypothesisViolation("corrective relation", (p, q))
    strv = parametric_aug(AugSpec("strictive", L, P), R)
    for r in sorted(table.meet(p, q)):
        if strv.leq(p, r) and strv.leq(r, q):
            return r
    raise HypothesisViolation("two-step decomposition", f"no member of {sorted(table.meet(p, q))} works")
