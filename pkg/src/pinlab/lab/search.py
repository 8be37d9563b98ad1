"""Brute-force minimum augmentations and counterexample search."""

from __future__ import annotations

from dataclasses import dataclass

from .. import kernels
from ..baire.witnesses import NON_ARROWS, NonArrow
from ..endo import EndoFamily
from ..errors import GuardExceededError, UnknownIdError
from ..pinning import PROPERTIES, check_property, prop_code
from ..relation import Relation
from .instances import Instance, endo_stream, sample_stream

MAX_HOLES = 12


@dataclass(frozen=True)
class BruteMin:
    """Intersection of every satisfying superset, and whether it satisfies too."""

    intersection: Relation | None
    satisfies: bool
    count: int


def _holes(R: Relation) -> int:
    return R.n * R.n - sum(bin(r).count("1") for r in R.rows)


def brute_min_augmentation(
    R: Relation, prop: str, upsilon: EndoFamily, theta: EndoFamily, quasi_order: bool = False
) -> BruteMin:
    """Scan every superset of ``R`` (optionally only quasi orders) for ``prop``."""
    holes = _holes(R)
    if holes > MAX_HOLES:
        raise GuardExceededError(f"{holes} non-edges exceed the brute-force guard of {MAX_HOLES}")
    code = prop_code(prop)
    if R.n > kernels.MAX_PACKED_N:
        raise GuardExceededError("brute force runs on packed relations only")
    count, inter = kernels.brute_min(
        R.packed, R.n, code, upsilon.packed, len(upsilon), theta.packed, len(theta), quasi_order
    )
    if not count:
        return BruteMin(None, False, 0)
    S = Relation.from_packed(inter)
    ok = check_property(prop, S, upsilon, theta).holds
    if quasi_order:
        ok = ok and S.report.is_quasi_order
    return BruteMin(S, ok, count)


def supersets_between(low: Relation, high: Relation):
    """Every relation ``S`` with ``low ⊆ S ⊆ high``."""
    holes = [(p, q) for p in range(low.n) for q in range(low.n) if high.leq(p, q) and not low.leq(p, q)]
    if len(holes) > MAX_HOLES:
        raise GuardExceededError(f"{len(holes)} free pairs exceed the brute-force guard of {MAX_HOLES}")
    for mask in range(1 << len(holes)):
        rows = list(low.rows)
        for i, (p, q) in enumerate(holes):
            if mask >> i & 1:
                rows[p] |= 1 << q
        yield Relation(low.n, tuple(rows))


# ---------------------------------------------------------------------------
# non-arrows

# Finite analogues of each separation: the pair of augmentations compared on
# a finite instance, with the parameter pair used for each side.
_FINITE_SIDES = {
    "str": ("strictive", "UT"),
    "negstr": ("negative-strictive", "UT"),
    "lin": ("linear", "UT"),
    "linid": ("linear", "idT"),
    "slin": ("strict-linear", "idT"),
    "strtrn": ("strictive-transitive", "UT"),
    "cor": ("corrective", "UT"),
    "le": (None, None),
}


def _side(inst: Instance, node: str) -> Relation:
    kind, params = _FINITE_SIDES[node]
    if kind is None:
        return inst.R
    return inst.aug_id(kind) if params == "idT" else inst.aug(kind)


@dataclass
class SearchResult:
    claim_id: str
    symbolic: NonArrow | None
    symbolic_ok: bool
    finite: Instance | None
    pair: tuple[int, int] | None
    tried: int

    @property
    def refuted(self) -> bool:
        return self.symbolic_ok or self.finite is not None

    def lines(self) -> list[str]:
        out = [f"SEARCH {self.claim_id} tried={self.tried} refuted={'yes' if self.refuted else 'no'}"]
        if self.symbolic is not None:
            w = self.symbolic
            out.append(
                f"  symbolic {w.left} vs {w.right}: x={w.x} y={w.y} "
                f"{'separates' if self.symbolic_ok else 'FAILS'}"
            )
        if self.finite is not None:
            out.append(f"  finite {self.finite.describe()} pair={self.pair}")
        elif self.symbolic is not None:
            out.append("  finite none found within budget")
        return out


def _admissible(inst: Instance) -> bool:
    U, T = inst.U, inst.T
    return len(U) > 0 and len(T) > 0 and U.is_subsemigroup and T.is_subsemigroup


def _finite_search(source: str, target: str, budget: int, seed: int):
    """Look for endomorphic parameters with ``source ⊄ target``.

    Only nonempty subsemigroup parameters count, so a witness never rests
    on a vacuous quantifier.  The exhaustive three-point pool is scanned
    first, then seeded four-point samples until ``budget`` instances have
    been tried.
    """
    tried = 0
    for inst in endo_stream(3):
        if not _admissible(inst):
            continue
        tried += 1
        A, B = _side(inst, source), _side(inst, target)
        if not A <= B:
            pair = next((p, q) for p in range(inst.n) for q in range(inst.n) if A.leq(p, q) and not B.leq(p, q))
            return inst, pair, tried
        if tried >= budget:
            return None, None, tried
    for inst in sample_stream(seed, 4, quasi_order=True):
        if tried >= budget:
            break
        if not _admissible(inst):
            continue
        tried += 1
        A, B = _side(inst, source), _side(inst, target)
        if not A <= B:
            pair = next((p, q) for p in range(inst.n) for q in range(inst.n) if A.leq(p, q) and not B.leq(p, q))
            return inst, pair, tried
    return None, None, tried


NON_ARROW_IDS = tuple(w.id for w in NON_ARROWS)


def search_counterexample(claim_id: str, budget: int = 20000, seed: int = 0) -> SearchResult:
    """Re-verify the registered symbolic witness and look for a finite one."""
    w = next((x for x in NON_ARROWS if x.id == claim_id), None)
    if w is None:
        raise UnknownIdError(f"{claim_id!r} is not a registered non-implication")
    inst, pair, tried = _finite_search(w.source, w.target, budget, seed)
    return SearchResult(claim_id, w, w.verify(), inst, pair, tried)


@dataclass
class MinimalityProbe:
    tried: int
    not_minimum: int
    not_minimal: int
    first_not_minimum: Instance | None
    first_not_minimal: Instance | None

    def lines(self) -> list[str]:
        out = [f"PROBE negstr-minimum tried={self.tried} not_minimum={self.not_minimum} not_minimal={self.not_minimal}"]
        if self.first_not_minimum is not None:
            out.append(f"  no least negatively strict augmentation: {self.first_not_minimum.describe()}")
        if self.first_not_minimal is not None:
            out.append(f"  smaller negatively strict augmentation exists: {self.first_not_minimal.describe()}")
        return out


def negstr_minimality_search(max_n: int = 3, budget: int = 0) -> MinimalityProbe:
    """Compare the negative-strictive augmentation with every negatively strict one.

    Scans endomorphic instances with nonempty subsemigroup parameters.  An
    instance is *not minimum* when the operator differs from the brute-force
    intersection of negatively strict augmentations, and *not minimal* when
    some negatively strict augmentation sits strictly below the operator.
    """
    tried = not_minimum = not_minimal = 0
    first_a = first_b = None
    for inst in endo_stream(max_n):
        if budget and tried >= budget:
            break
        if not _admissible(inst):
            continue
        tried += 1
        S = inst.aug("negative-strictive")
        bm = brute_min_augmentation(inst.R, "neg-strict", inst.U, inst.T)
        if bm.intersection == S:
            continue
        not_minimum += 1
        first_a = first_a or inst
        below = (X for X in supersets_between(inst.R, S) if X != S)
        if any(check_property("neg-strict", X, inst.U, inst.T).holds for X in below):
            not_minimal += 1
            first_b = first_b or inst
    return MinimalityProbe(tried, not_minimum, not_minimal, first_a, first_b)


__all__ = [
    "BruteMin", "MinimalityProbe", "negstr_minimality_search", "MAX_HOLES", "NON_ARROW_IDS", "PROPERTIES", "SearchResult", "brute_min_augmentation",
    "search_counterexample", "supersets_between",
]
