"""Verification instances and the deterministic streams that produce them.

An :class:`Instance` is a relation with a parameter pair ``(U, T)``; it
memoizes every augmentation, property verdict and side condition asked of
it, so claims sharing an instance share the work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from ..augment import AugSpec, parametric_aug
from ..endo import EndoFamily, check_side_condition, close_under_composition, compose_families, is_endofamily_of
from ..lattice import is_quasi_lattice, ql_endomorphisms
from ..pinning import holds
from ..relation import Relation, is_order_reflecting
from ..errors import UnknownIdError
from ..rng import SplitMix64
from .enumerate import all_maps, all_subfamilies, endo_monoid, enumerate_relations, family_pool, quasi_orders

_ID_FAMILIES: dict[int, EndoFamily] = {}


def id_family(n: int) -> EndoFamily:
    F = _ID_FAMILIES.get(n)
    if F is None:
        F = _ID_FAMILIES[n] = EndoFamily.identity(n)
    return F


@dataclass(eq=False)
class Instance:
    R: Relation
    U: EndoFamily
    T: EndoFamily
    provenance: str = ""
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.R.n

    def _get(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            v = self._memo[key] = fn()
            return v

    # augmentations -------------------------------------------------------

    def aug(self, kind: str, U: EndoFamily | None = None, T: EndoFamily | None = None) -> Relation:
        """``kind`` with the instance families unless overridden."""
        U = self.U if U is None else U
        T = self.T if T is None else T
        key = ("aug", kind, U.packed, T.packed, len(U), len(T))
        return self._get(key, lambda: parametric_aug(AugSpec(kind, U, T), self.R, crosscheck=False))

    def aug_id(self, kind: str) -> Relation:
        """``kind`` with ``U`` replaced by the identity family."""
        return self.aug(kind, U=id_family(self.n))

    # properties ----------------------------------------------------------

    def holds(self, prop: str, R: Relation | None = None, U: EndoFamily | None = None, T: EndoFamily | None = None) -> bool:
        R = self.R if R is None else R
        U = self.U if U is None else U
        T = self.T if T is None else T
        key = ("prop", prop, R.rows, U.packed, T.packed, len(U), len(T))
        return self._get(key, lambda: holds(prop, R, U, T))

    def side(self, cond: str) -> bool:
        return self._get(("side", cond), lambda: check_side_condition(cond, self.U, self.T).holds)

    @property
    def endo_U(self) -> bool:
        return self._get("endo_U", lambda: is_endofamily_of(self.U, self.R))

    @property
    def endo_T(self) -> bool:
        return self._get("endo_T", lambda: is_endofamily_of(self.T, self.R))

    @property
    def endo(self) -> bool:
        return self.endo_U and self.endo_T

    @property
    def diag(self) -> bool:
        return self.U == self.T

    @property
    def ql(self) -> bool:
        return self._get("ql", lambda: self.R.report.is_quasi_order and is_quasi_lattice(self.R))

    @property
    def ql_endo(self) -> bool:
        def check():
            if not self.ql:
                return False
            Q = ql_endomorphisms(self.R, self.U | self.T)
            return len(Q) == len(self.U | self.T)

        return self._get("ql_endo", check)

    @property
    def reflecting(self) -> bool:
        return self._get(
            "reflecting", lambda: all(is_order_reflecting(f, self.R) for f in self.U.members + self.T.members)
        )

    def endo_of(self, F: EndoFamily, S: Relation) -> bool:
        return self._get(("endo_of", F.packed, len(F), S.rows), lambda: is_endofamily_of(F, S))

    def describe(self) -> str:
        def fam(F):
            return "{" + ",".join("".join(map(str, f)) for f in F) + "}"

        rows = ",".join(format(r, f"0{self.n}b")[::-1] for r in self.R.rows)
        return f"n={self.n} rows=[{rows}] U={fam(self.U)} T={fam(self.T)} ({self.provenance})"


# ---------------------------------------------------------------------------
# exhaustive streams

EXHAUSTIVE_MAX_N = 3


def relation_stream(max_n: int) -> Iterator[Instance]:
    """Every relation up to ``min(max_n, 3)`` points, with identity parameters."""
    for n in range(1, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        I = id_family(n)
        for i, R in enumerate(enumerate_relations(n)):
            yield Instance(R, I, I, f"rel n={n} #{i}")


def quasi_order_stream(max_n: int) -> Iterator[Instance]:
    for n in range(1, min(max_n, 4) + 1):
        I = id_family(n)
        for i, R in enumerate(quasi_orders(n)):
            yield Instance(R, I, I, f"qo n={n} #{i}")


def endo_stream(max_n: int) -> Iterator[Instance]:
    """Quasi orders with endomorphism parameters.

    Diagonal pairs ``(F, F)`` range over families generated by at most two
    endomorphisms; off-diagonal pairs over families generated by one.
    """
    for n in range(1, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for i, R in enumerate(quasi_orders(n)):
            for j, F in enumerate(family_pool(R, 2)):
                yield Instance(R, F, F, f"endo n={n} qo#{i} diag#{j}")
            small = family_pool(R, 1)
            for a, L in enumerate(small):
                for b, P in enumerate(small):
                    if a != b:
                        yield Instance(R, L, P, f"endo n={n} qo#{i} pair#{a},{b}")


def arbitrary_stream(max_n: int, seed: int, per_relation: int = 8) -> Iterator[Instance]:
    """Arbitrary relations with arbitrary parameters.

    Up to two points every subset pair of ``S^S`` is used; on three points
    each of the 512 relations gets ``per_relation`` seeded parameter pairs.
    """
    for n in range(1, min(max_n, 2) + 1):
        fams = list(all_subfamilies(n))
        for i, R in enumerate(enumerate_relations(n)):
            for a, U in enumerate(fams):
                for b, T in enumerate(fams):
                    yield Instance(R, U, T, f"arb n={n} rel#{i} fam#{a},{b}")
    if max_n >= 3:
        rng = SplitMix64(seed ^ 0x3A3A)
        for i, R in enumerate(enumerate_relations(3)):
            for k in range(per_relation):
                U, T, mode = random_families(rng, R)
                yield Instance(R, U, T, f"arb n=3 rel#{i} draw#{k} {mode}")


@lru_cache(maxsize=None)
def _ql_pool(R: Relation) -> tuple[EndoFamily, ...]:
    Q = ql_endomorphisms(R, endo_monoid(R))
    out = {EndoFamily(R.n), Q}
    if id_family(R.n).issubset(Q):
        out.add(id_family(R.n))
    for f in Q:
        for with_id in (False, True):
            out.add(close_under_composition([f], include_identity=with_id, n=R.n))
    return tuple(sorted(out, key=lambda F: (len(F), F.members)))


def quasi_lattices(max_n: int) -> list[Relation]:
    return [R for n in range(1, min(max_n, 4) + 1) for R in quasi_orders(n) if is_quasi_lattice(R)]


def _left_absorbs(P: EndoFamily, L: EndoFamily) -> bool:
    target = L._set
    return all(tuple(a[x] for x in b) in target for a in P.members for b in L.members)


def ql_stream(max_n: int) -> Iterator[Instance]:
    """Quasi lattices with families of lattice endomorphisms.

    Up to three points every pair from the singly generated pool is used.
    On four points the pairs are those with ``P`` a subsemigroup and
    ``P∘L ⊆ L``, the class on which the corrective and strictive-transitive
    augmentations are expected to coincide.
    """
    for i, R in enumerate(quasi_lattices(max_n)):
        pool = _ql_pool(R)
        for a, L in enumerate(pool):
            for b, P in enumerate(pool):
                if R.n == 4 and not (P.closed_under_composition and _left_absorbs(P, L)):
                    continue
                yield Instance(R, L, P, f"ql n={R.n} #{i} fam#{a},{b}")


# ---------------------------------------------------------------------------
# sampling

MODES = ("same", "sub", "super", "left-ideal", "independent", "sandwich", "full", "injective", "arbitrary", "closed-arbitrary")
ENDO_MODES = MODES[:8]
DIAG_MODES = ("same", "full")


def _random_subset(rng: SplitMix64, items, lo: int, hi: int) -> list:
    items = list(items)
    return rng.sample(items, min(len(items), rng.between(lo, hi)))


def _gen_closure(rng: SplitMix64, n: int, pool, cap: int = 10000) -> EndoFamily:
    gens = _random_subset(rng, pool, 1, 2)
    return close_under_composition(gens, include_identity=rng.chance(1, 2), cap=cap, n=n)


def random_families(rng: SplitMix64, R: Relation, modes=MODES) -> tuple[EndoFamily, EndoFamily, str]:
    """A parameter pair drawn by one of several structural recipes.

    Recipes build the relationships the hypotheses ask for (inclusions,
    one-sided ideals, sandwiches) so rejection rates stay low.
    """
    n = R.n
    mode = rng.choice(modes)
    if mode in ("arbitrary", "closed-arbitrary"):
        maps = all_maps(n)
        if mode == "arbitrary":
            return EndoFamily(n, _random_subset(rng, maps, 0, 3)), EndoFamily(n, _random_subset(rng, maps, 0, 3)), mode
        U = close_under_composition(_random_subset(rng, maps, 1, 2), include_identity=rng.chance(1, 2), n=n)
        T = close_under_composition(_random_subset(rng, maps, 1, 2), include_identity=rng.chance(1, 2), n=n)
        return U, T, mode
    E = endo_monoid(R)
    endos = E.members
    if mode == "same":
        F = _gen_closure(rng, n, endos)
        return F, F, mode
    if mode == "sub":
        T = _gen_closure(rng, n, endos)
        return EndoFamily(n, _random_subset(rng, T, 1, 3)), T, mode
    if mode == "super":
        T = _gen_closure(rng, n, endos)
        U = close_under_composition(list(T) + [rng.choice(endos)], n=n)
        return U, T, mode
    if mode == "left-ideal":
        T = _gen_closure(rng, n, endos)
        g = rng.choice(endos)
        return EndoFamily(n, [g]) | compose_families(T, EndoFamily(n, [g])), T, mode
    if mode == "independent":
        return _gen_closure(rng, n, endos), _gen_closure(rng, n, endos), mode
    if mode == "sandwich":
        P = close_under_composition(_random_subset(rng, endos, 1, 2), include_identity=True, n=n)
        g = EndoFamily(n, [rng.choice(P.members)])
        L = close_under_composition(compose_families(compose_families(P, g), P), n=n)
        return L, P, mode
    if mode == "full":
        if rng.chance(1, 2):
            return E, E, mode
        return EndoFamily(n, _random_subset(rng, endos, 1, 3)), E, mode
    if mode == "injective":
        inj = [f for f in endos if f.is_injective()]
        T = close_under_composition(_random_subset(rng, inj, 1, 2), n=n)
        return EndoFamily(n, _random_subset(rng, endos, 1, 3)), T, mode
    raise UnknownIdError(f"unknown sampling mode {mode!r}")


def random_relation(rng: SplitMix64, n: int, quasi_order: bool) -> Relation:
    if quasi_order or rng.chance(1, 2):
        return rng.choice(quasi_orders(n))
    full = (1 << n) - 1
    return Relation(n, tuple(rng.below(full + 1) for _ in range(n)))


def sample_stream(seed: int, n: int = 4, quasi_order: bool = False, modes=MODES, lattice: bool = False) -> Iterator[Instance]:
    """Endless seeded instances on ``n`` points."""
    rng = SplitMix64(seed)
    lattices = quasi_lattices(n) if lattice else None
    lattices = [R for R in lattices if R.n == n] if lattices else None
    k = 0
    while True:
        if lattices:
            R = rng.choice(lattices)
            U, T, mode = _random_ql_families(rng, R)
        else:
            R = random_relation(rng, n, quasi_order)
            U, T, mode = random_families(rng, R, modes)
        yield Instance(R, U, T, f"sample n={n} seed={seed} #{k} {mode}")
        k += 1


def _random_ql_families(rng: SplitMix64, R: Relation) -> tuple[EndoFamily, EndoFamily, str]:
    full = ql_endomorphisms(R, endo_monoid(R))
    if rng.chance(1, 2):
        F = close_under_composition(_random_subset(rng, full, 1, 2), include_identity=rng.chance(1, 2), n=R.n)
        return F, F, "ql-same"
    P = close_under_composition(_random_subset(rng, full, 1, 2), include_identity=rng.chance(1, 2), n=R.n)
    L = close_under_composition(list(P) + _random_subset(rng, full, 1, 2), n=R.n)
    return L, P, "ql-super"
