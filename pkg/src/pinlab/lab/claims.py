"""The claim registry and its runner.

A claim names the instance streams it quantifies over, the hypotheses an
instance must meet, and a check returning ``None`` or a violation message.
Instances failing a hypothesis are counted as skipped, never as passes.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from ..augment import antisymmetric_dim, endomorphic_form, reference_aug, AugSpec, separative_aug, transitive_aug
from ..endo import EndoFamily
from ..errors import UnknownIdError
from ..lattice import meet_join
from ..pinning import check_property
from ..relation import Relation, is_separative, strict_part, symmetric_part
from .enumerate import endo_monoid
from .instances import (
    DIAG_MODES,
    ENDO_MODES,
    EXHAUSTIVE_MAX_N,
    MODES,
    Instance,
    arbitrary_stream,
    endo_stream,
    id_family,
    ql_stream,
    quasi_order_stream,
    relation_stream,
    sample_stream,
)
from .search import brute_min_augmentation, supersets_between

KINDS = ("linear", "strict-linear", "strictive", "strictive-transitive", "corrective", "negative-strictive")


# ---------------------------------------------------------------------------
# hypotheses


def _t_linear(i: Instance) -> bool:
    return i.holds("linear", U=i.T, T=i.T)


def _collapsing_theta(i: Instance) -> bool:
    """Some member of T is an endomorphism and every p ≰ q is merged by some τ."""
    if not any(i.endo_of(EndoFamily(i.n, [t]), i.R) for t in i.T):
        return False
    le = i.R.leq
    return all(
        le(p, q) or any(le(t[p], t[q]) for t in i.T) for p in range(i.n) for q in range(i.n)
    )


def _separating_upsilon(i: Instance) -> bool:
    le, lt = i.R.leq, i.R.lt
    return all(
        le(p, q) or any(lt(s[q], s[p]) for s in i.U) for p in range(i.n) for q in range(i.n)
    )


def _mono_theta(i: Instance) -> bool:
    return i.endo_T and all(t.is_injective() for t in i.T)


def _side(cond: str) -> Callable[[Instance], bool]:
    return lambda i: i.side(cond)


HYPOTHESES: dict[str, Callable[[Instance], bool]] = {
    "quasi order": lambda i: i.R.report.is_quasi_order,
    "partial order": lambda i: i.R.report.is_poset,
    "U ⊆ Endo": lambda i: i.endo_U,
    "T ⊆ Endo": lambda i: i.endo_T,
    "U = T": lambda i: i.diag,
    "U ≠ ∅": lambda i: len(i.U) > 0,
    "T ≠ ∅": lambda i: len(i.T) > 0,
    "id ∈ T": lambda i: i.T.contains_identity,
    "T-linear": _t_linear,
    "U subsemigroup": _side("Λ subsemigroup"),
    "T subsemigroup": _side("Π subsemigroup"),
    "T submonoid": _side("Π submonoid"),
    "T∘U ⊆ U": _side("Π∘Λ⊆Λ"),
    "U∘T ⊆ U": _side("Λ∘Π⊆Λ"),
    "T∘U∘T = U": _side("Π∘Λ∘Π=Λ"),
    "T∘σ ⊆ T, some σ ∈ U": _side("Θ∘σ⊆Θ for some σ∈Υ"),
    "T∘σ ⊆ T or σ∘T ⊆ T, some σ ∈ U": lambda i: i.side("Θ∘σ⊆Θ for some σ∈Υ") or i.side("σ∘Θ⊆Θ for some σ∈Υ"),
    "T∘σ ⊆ U, some σ ∈ U": _side("Π∘σ⊆Λ for some σ∈Λ"),
    "U∘σ ⊆ U and T∘σ ⊆ T, some σ ∈ U": _side("Υ∘σ⊆Υ and Θ∘σ⊆Θ for some σ∈Υ"),
    "T∘U ⊆ T": _side("Θ∘Υ⊆Θ"),
    "quasi lattice": lambda i: i.ql,
    "U,T ⊆ lattice endomorphisms": lambda i: i.ql_endo,
    "order reflecting": lambda i: i.endo and i.reflecting,
    "T meets Endo and merges every non-edge": _collapsing_theta,
    "U reverses every non-edge": _separating_upsilon,
    "T ⊆ injective endomorphisms": _mono_theta,
}


# ---------------------------------------------------------------------------
# small helpers used by the checks


def _missing(A: Relation, B: Relation) -> tuple[int, int] | None:
    """First pair of ``A`` outside ``B``."""
    for p in range(A.n):
        extra = A.rows[p] & ~B.rows[p]
        if extra:
            return p, (extra & -extra).bit_length() - 1
    return None


def _subset(A: Relation, B: Relation, what: str) -> str | None:
    bad = _missing(A, B)
    return None if bad is None else f"{what}: pair {bad} escapes"


def _equal(A: Relation, B: Relation, what: str) -> str | None:
    if A == B:
        return None
    return f"{what}: {A.rows} != {B.rows}"


def _preserves(i: Instance, F: EndoFamily, S: Relation, what: str) -> str | None:
    return None if i.endo_of(F, S) else f"{what}: a parameter stops being an endomorphism"


def _general_compatible(S: Relation, p: int, q: int) -> bool:
    return any(S.leq(r, p) and S.leq(r, q) for r in range(S.n))


def _general_separative(S: Relation) -> bool:
    n = S.n
    return all(
        S.leq(p, q) or any(S.leq(r, p) and not _general_compatible(S, r, q) for r in range(n))
        for p in range(n)
        for q in range(n)
    )


def _walk_closure(R: Relation) -> set[tuple[int, int]]:
    """Pairs joined by a walk of one or more steps, by breadth-first search."""
    out = set()
    for p in range(R.n):
        seen, frontier = set(), [p]
        while frontier:
            nxt = []
            for x in frontier:
                for y in range(R.n):
                    if R.leq(x, y) and y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        out.update((p, y) for y in seen)
    return out


def _closed_walk_sets(R: Relation) -> list[frozenset[int]]:
    """Vertex sets of closed walks of length at most ``2n``."""
    n = R.n
    out = set()

    def extend(path):
        last = path[-1]
        if R.leq(last, path[0]):
            out.add(frozenset(path))
        if len(path) < 2 * n:
            for y in range(n):
                if R.leq(last, y):
                    extend(path + [y])

    for p in range(n):
        extend([p])
    return list(out)


def _simple_cycles(R: Relation):
    n = R.n
    for k in range(1, n + 1):
        for seq in product(range(n), repeat=k):
            if len(set(seq)) == k and seq[0] == min(seq):
                if all(R.leq(seq[j], seq[(j + 1) % k]) for j in range(k)):
                    yield seq


# ---------------------------------------------------------------------------
# checks


def _chk_lin_is_linear(i):
    if not i.holds("linear", R=i.aug("linear")):
        return "linear augmentation is not linear for its parameters"


def _chk_lin_id_qo(i):
    if not i.aug_id("linear").report.is_quasi_order:
        return "identity-linear augmentation is not a quasi order"


def _chk_lin_id_po(i):
    if not i.aug_id("linear").report.is_poset:
        return "identity-linear augmentation is not a partial order"


def _chk_slin_is_slinear(i):
    if not i.holds("strict-linear", R=i.aug("strict-linear")):
        return "strict-linear augmentation is not strictly linear"


def _chk_uniform_strict(i):
    S = i.aug("strictive")
    lt = i.R.lt
    for p in range(i.n):
        for q in range(i.n):
            if all(lt(t[p], t[q]) for t in i.T) and not S.lt(p, q):
                return f"pair {(p, q)} is uniformly strict but not strict in the strictive augmentation"


def _chk_str_is_strict(i):
    S = i.aug("strictive")
    if not i.R <= S:
        return "strictive is not an augmentation"
    if not i.holds("strict", R=S):
        return "strictive augmentation is not strict"


def _chk_str_minimal(i):
    S = i.aug("strictive")
    bm = brute_min_augmentation(i.R, "strict", i.U, i.T)
    if bm.intersection is None:
        return "no strict augmentation exists"
    return _subset(S, bm.intersection, "strictive ⊆ every strict augmentation")


def _chk_str_preserves(i):
    S = i.aug("strictive")
    return _preserves(i, i.U, S, "U") or _preserves(i, i.T, S, "T")


def _chk_str_preserves_own(i):
    return _preserves(i, i.T, i.aug("strictive"), "T")


def _chk_cycles_bidirectional(i):
    S = i.aug("strictive")
    C = transitive_aug(S)
    for p, q in S.pairs():
        if C.leq(q, p) and not S.leq(q, p):
            return f"edge {(p, q)} lies on a cycle whose reverse is missing"


def _chk_strtrn_strict_qo(i):
    S = i.aug("strictive-transitive")
    if not S.report.is_quasi_order:
        return "strictive-transitive is not a quasi order"
    if not i.holds("strict", R=S):
        return "strictive-transitive is not strict"


def _chk_strtrn_minimal(i):
    S = i.aug("strictive-transitive")
    bm = brute_min_augmentation(i.R, "strict", i.U, i.T, quasi_order=True)
    if bm.intersection is None:
        return "no strict quasi order augmentation exists"
    if not bm.satisfies:
        return "the intersection of strict quasi order augmentations is not one"
    return _equal(S, bm.intersection, "strictive-transitive vs brute-force minimum")


def _chk_cor_is_correct(i):
    C = i.aug("corrective")
    if not i.R <= C:
        return "corrective is not an augmentation"
    if not i.holds("correct", R=C):
        return "corrective augmentation is not correct"


def _chk_cor_minimal(i):
    C = i.aug("corrective")
    bm = brute_min_augmentation(i.R, "correct", i.U, i.T)
    if bm.intersection is None:
        return "no correct augmentation exists"
    return _subset(C, bm.intersection, "corrective ⊆ every correct augmentation")


def _chk_cor_qo(i):
    if not i.aug("corrective").report.is_quasi_order:
        return "corrective augmentation is not a quasi order"


def _chk_cor_minimum_qo(i):
    C = i.aug("corrective")
    bm = brute_min_augmentation(i.R, "correct", i.U, i.T, quasi_order=True)
    if bm.intersection is None or not bm.satisfies:
        return "no minimum correct quasi order augmentation"
    return _equal(C, bm.intersection, "corrective vs brute-force minimum")


def _chk_cor_preserves(i):
    C = i.aug("corrective")
    if i.side("Λ subsemigroup") and not i.endo_of(i.U, C):
        return "U stops being an endomorphism family"
    if i.side("Λ∘Π⊆Λ") and not i.endo_of(i.T, C):
        return "T stops being an endomorphism family"


def _chk_cor_complete(i):
    if not i.aug("corrective").report.complete:
        return "corrective augmentation is not complete"


def _chk_cor_trivial(i):
    return _equal(i.aug("corrective"), i.R, "corrective vs base")


def _chk_negstr_preserves(i):
    S = i.aug("negative-strictive")
    return _preserves(i, i.U, S, "U") or _preserves(i, i.T, S, "T")


def _chk_negstr_preserves_own(i):
    return _preserves(i, i.T, i.aug("negative-strictive"), "T")


def _chk_negstr_uniform(i):
    N = i.aug("negative-strictive")
    le, lt = i.R.leq, i.R.lt
    for p in range(i.n):
        for q in range(i.n):
            if all(not lt(t[p], t[q]) for t in i.T) and N.leq(p, q) and not le(p, q):
                return f"pair {(p, q)} is uniformly non-strict yet added"


def _chk_negstr_is_negstrict(i):
    if not i.holds("neg-strict", R=i.aug("negative-strictive")):
        return "negative-strictive augmentation is not negatively strict"


def _chk_negstr_symmetric(i):
    return _equal(symmetric_part(i.aug("negative-strictive")), symmetric_part(i.R), "symmetric parts")


def _chk_negstr_rigid(i):
    N = i.aug("negative-strictive")
    for S in supersets_between(i.R, N):
        if S != N and i.holds("neg-strict", R=S):
            return f"{S.rows} is a smaller negatively strict augmentation"


def _chk_sep_minimum(i):
    R = i.R
    sep = separative_aug(R)
    compat = [[_general_compatible(R, p, q) for q in range(R.n)] for p in range(R.n)]
    for S in supersets_between(R, Relation(R.n, ((1 << R.n) - 1,) * R.n)):
        if not _general_separative(S):
            continue
        if any(_general_compatible(S, p, q) != compat[p][q] for p in range(R.n) for q in range(R.n)):
            continue
        bad = _missing(sep, S)
        if bad is not None:
            return f"separative augmentation exceeds {S.rows} at {bad}"


def _chk_slin_implies_lin(i):
    if i.holds("strict-linear") and not i.holds("linear"):
        return "strictly linear but not linear"


def _chk_slin_equals_lin(i):
    if i.holds("strict-linear") != i.holds("linear"):
        return "strict linearity and linearity disagree for a single family"


def _chk_cor_implies_slin_id(i):
    if i.holds("correct") and not i.holds("strict-linear", U=id_family(i.n)):
        return "correct but not strictly identity-linear"


def _chk_cor_implies_strict(i):
    if i.holds("correct") and not i.holds("strict"):
        return "correct but not strict"


def _chk_strict_implies_cor(i):
    if i.holds("strict") and not i.holds("correct"):
        return "strict but not correct on a quasi lattice"


def _chk_cor_implies_negstrict(i):
    if i.holds("correct") and not i.holds("neg-strict"):
        return "correct but not negatively strict"


def _chk_lin_id_implies_negstrict(i):
    if i.holds("linear", U=id_family(i.n)) and not i.holds("neg-strict"):
        return "identity-linear but not negatively strict"


def _chk_chain(i):
    lin, linid, slin = i.aug("linear"), i.aug_id("linear"), i.aug_id("strict-linear")
    return (
        _subset(i.R, lin, "base ⊆ linear")
        or _subset(lin, linid, "linear ⊆ identity-linear")
        or _subset(linid, slin, "identity-linear ⊆ strict identity-linear")
    )


def _chk_lin_eq_slin(i):
    return _equal(i.aug("linear"), i.aug("strict-linear"), "linear vs strict-linear for one family")


def _chk_slin_below_cor(i):
    return _subset(i.aug_id("strict-linear"), i.aug("corrective"), "strict identity-linear ⊆ corrective")


def _chk_str_below_cor(i):
    return _subset(i.aug("strictive"), i.aug("corrective"), "strictive ⊆ corrective")


def _chk_strtrn_below_cor(i):
    return _subset(i.aug("strictive-transitive"), i.aug("corrective"), "strictive-transitive ⊆ corrective")


def _chk_negstr_below_cor(i):
    return _subset(i.aug("negative-strictive"), i.aug("corrective"), "negative-strictive ⊆ corrective")


def _chk_negstr_below_lin_id(i):
    return _subset(i.aug("negative-strictive"), i.aug_id("linear"), "negative-strictive ⊆ identity-linear")


def _chk_two_step(i):
    C, S = i.aug("corrective"), i.aug("strictive")
    table = meet_join(i.R)
    for p, q in C.pairs():
        for r in table.meet(p, q):
            if not (S.leq(p, r) and S.leq(r, q)):
                return f"pair {(p, q)} is corrective but {r} in its meet is not a strictive midpoint"
    return _subset(C, i.aug("strictive-transitive"), "corrective ⊆ strictive-transitive")


def _chk_cor_eq_strtrn(i):
    return _equal(i.aug("corrective"), i.aug("strictive-transitive"), "corrective vs strictive-transitive")


def _chk_trn_minimum(i):
    T = transitive_aug(i.R)
    bm = brute_min_augmentation(i.R, "transitive", i.U, i.T)
    if bm.intersection is None or not bm.satisfies:
        return "no minimum transitive augmentation"
    return _equal(T, bm.intersection, "closure vs brute-force minimum")


def _chk_strict_chain(i):
    R = i.R
    C = transitive_aug(R)
    n = R.n
    # (a) strict pairs of the closure are exactly the ends of chains with a strict step
    reach = set()
    frontier = [(p, p, False) for p in range(n)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for start, x, flag in frontier:
            for y in range(n):
                if R.leq(x, y):
                    st = (start, y, flag or R.lt(x, y))
                    reach.add(st)
                    if st not in seen:
                        seen.add(st)
                        nxt.append(st)
        frontier = nxt
    a = all(C.lt(p, q) == ((p, q, True) in reach) for p in range(n) for q in range(n))
    b = all(C.lt(p, q) for p in range(n) for q in range(n) if R.lt(p, q))
    c = all(all(R.leq(seq[(j + 1) % len(seq)], seq[j]) for j in range(len(seq))) for seq in _simple_cycles(R))
    if not a == b == c:
        return f"chain characterization disagrees: (a)={a} (b)={b} (c)={c}"


def _chk_trn_cycles(i):
    R = i.R
    C = transitive_aug(R)
    walks = _closed_walk_sets(R)
    for p in range(R.n):
        for q in range(R.n):
            on_cycle = any(p in W and q in W for W in walks)
            if C.equiv(p, q) != on_cycle:
                return f"pair {(p, q)}: closure equivalence {C.equiv(p, q)} but common cycle {on_cycle}"
    if _walk_closure(R) != set(C.pairs()):
        return "closure disagrees with breadth-first reachability"


def _chk_trn_preserves(i):
    if not i.endo_of(endo_monoid(i.R), transitive_aug(i.R)):
        return "an endomorphism of the base is not one of its closure"


def _chk_lin_symmetric(i):
    if i.holds("linear") != i.holds("linear", U=i.T, T=i.U):
        return "linearity is not symmetric in its parameters"


def _shrunk(i: Instance) -> tuple[EndoFamily, EndoFamily]:
    return EndoFamily(i.n, i.U.members[:-1]), EndoFamily(i.n, i.T.members[1:])


def _grown(i: Instance) -> tuple[EndoFamily, EndoFamily]:
    I = id_family(i.n)
    return i.U | I, i.T | I


def _chk_lin_monotone_verdict(i):
    (U0, T0), (U2, T2) = _shrunk(i), _grown(i)
    for prop in ("linear", "strict-linear"):
        chain = (i.holds(prop, U=U0, T=T0), i.holds(prop), i.holds(prop, U=U2, T=T2))
        if chain[0] > chain[1] or chain[1] > chain[2]:
            return f"{prop} lost after enlarging the parameters"


def _mono_law(kind):
    def check(i):
        U0, T0 = _shrunk(i)
        U2, T2 = _grown(i)
        small, mid, big = i.aug(kind, U=U0, T=T0), i.aug(kind), i.aug(kind, U=U2, T=T2)
        return _subset(mid, small, f"{kind} after enlarging") or _subset(big, mid, f"{kind} after enlarging")

    return check


def _fix_law(prop, kind):
    def check(i):
        if i.holds(prop):
            return _equal(i.aug(kind), i.R, f"{kind} of a {prop} relation")

    return check


def _chk_fix_separative(i):
    if i.R.report.is_quasi_order and is_separative(i.R):
        return _equal(separative_aug(i.R), i.R, "separative augmentation of a separative order")


def _chk_fix_transitive(i):
    if i.R.report.transitive:
        return _equal(transitive_aug(i.R), i.R, "closure of a transitive relation")


def _chk_endo_form_kind(kind):
    def check(i):
        return _equal(endomorphic_form(kind, i.R, i.U, i.T), i.aug(kind), f"endomorphic form of {kind}")

    return check


def _chk_endo_form_prop(prop):
    def check(i):
        # check_property asserts agreement with the reformulation internally
        v = check_property(prop, i.R, i.U, i.T)
        if v.holds != i.holds(prop):
            return f"{prop}: witness search and kernel disagree"

    return check


def _chk_kernel_matches_definition(i):
    for kind in KINDS:
        ref = reference_aug(AugSpec(kind, i.U, i.T), i.R)
        if ref != i.aug(kind):
            return f"{kind}: kernel {i.aug(kind).rows} vs definition {ref.rows}"
    for prop in ("linear", "strict-linear", "strict", "correct", "neg-strict"):
        if check_property(prop, i.R, i.U, i.T).holds != i.holds(prop):
            return f"{prop}: kernel and quantifier evaluation disagree"


def _chk_aug_direction(i):
    for kind in KINDS:
        bad = _subset(i.R, i.aug(kind), f"base ⊆ {kind}")
        if bad:
            return bad
    if i.R.report.is_quasi_order:
        D = antisymmetric_dim(i.R)
        if not D <= i.R or not D.report.is_poset:
            return "antisymmetric diminishment is not a poset below the base"
        if strict_part(D) != strict_part(i.R):
            return "antisymmetric diminishment changed the strict part"


def _chk_meet_characterizes_order(i):
    table = meet_join(i.R)
    for p in range(i.n):
        for q in range(i.n):
            if i.R.leq(p, q) != (p in table.meet(p, q)):
                return f"pair {(p, q)}: order and meet membership disagree"


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    streams: tuple[str, ...]
    hypotheses: tuple[str, ...]
    check: Callable[[Instance], str | None] = field(repr=False)
    kind: str = "theorem"
    sample: str | None = None  # "any", "qo" or "ql": four-point sampling
    modes: tuple[str, ...] = MODES


ARB = ("arbitrary", "endo")
ENDO = ("endo",)
QL = ("ql",)

_E = ("U ⊆ Endo", "T ⊆ Endo")
_QE = ("quasi order",) + _E

CLAIMS: tuple[Claim, ...] = (
    # linearity
    Claim("lin-is-linear", "the linear augmentation is linear for its parameters", ARB,
          ("U∘σ ⊆ U and T∘σ ⊆ T, some σ ∈ U",), _chk_lin_is_linear, sample="any"),
    Claim("lin-id-quasi-order", "identity-linear augmentation of a T-linear quasi order is a quasi order", ENDO,
          ("quasi order", "U = T", "T ⊆ Endo", "T subsemigroup", "T-linear"), _chk_lin_id_qo,
          sample="qo", modes=DIAG_MODES),
    Claim("lin-id-partial-order", "identity-linear augmentation of a T-linear poset is a poset", ENDO,
          ("partial order", "U = T", "T ⊆ Endo", "T subsemigroup", "T-linear"), _chk_lin_id_po,
          sample="qo", modes=DIAG_MODES),
    Claim("slin-is-strictly-linear", "the strict-linear augmentation is strictly linear", ARB,
          ("U∘σ ⊆ U and T∘σ ⊆ T, some σ ∈ U", "id ∈ T"), _chk_slin_is_slinear, sample="any"),
    # strictness
    Claim("str-keeps-uniform-strict-pairs", "pairs strict under every τ stay strict in the strictive augmentation",
          ARB, ("T submonoid", "T∘σ ⊆ T, some σ ∈ U"), _chk_uniform_strict, sample="any"),
    Claim("str-is-strict", "the strictive augmentation is a strict augmentation", ARB,
          ("T submonoid", "T∘σ ⊆ T, some σ ∈ U"), _chk_str_is_strict, sample="any"),
    Claim("str-is-strict-monoid", "the strictive augmentation by one submonoid is strict", ARB,
          ("U = T", "T submonoid"), _chk_str_is_strict, sample="any", modes=DIAG_MODES),
    Claim("str-minimal", "strictive ⊆ every strict augmentation", ARB, _E, _chk_str_minimal),
    Claim("str-preserves-endos", "U and T stay endomorphisms of the strictive augmentation", ARB,
          _E + ("U subsemigroup", "U∘T ⊆ U"), _chk_str_preserves, sample="any", modes=ENDO_MODES),
    Claim("str-preserves-own-endos", "a subsemigroup stays endomorphic for its strictive augmentation", ARB,
          ("U = T", "T ⊆ Endo", "T subsemigroup"), _chk_str_preserves_own, kind="law", sample="any",
          modes=DIAG_MODES),
    Claim("str-cycles-bidirectional", "every cycle of the strictive augmentation is bidirectional", ENDO,
          _QE + ("T∘U ⊆ U",), _chk_cycles_bidirectional, sample="qo", modes=ENDO_MODES),
    Claim("strtrn-strict-quasi-order", "strictive-transitive is a strict quasi order augmentation", ENDO,
          _QE + ("U subsemigroup", "T submonoid", "T∘U∘T = U", "T∘σ ⊆ T, some σ ∈ U"),
          _chk_strtrn_strict_qo, sample="qo", modes=("sandwich", "same")),
    Claim("strtrn-minimal", "strictive-transitive is the minimum strict quasi order augmentation", ENDO,
          _QE + ("U subsemigroup", "T submonoid", "T∘U∘T = U", "T∘σ ⊆ T, some σ ∈ U"),
          _chk_strtrn_minimal),
    Claim("strtrn-minimum-monoid", "for one submonoid, strictive-transitive is the minimum strict quasi order",
          ENDO, ("quasi order", "U = T", "T ⊆ Endo", "T submonoid"), _chk_strtrn_minimal),
    # correctness
    Claim("cor-is-correct", "the corrective augmentation is correct", ARB,
          ("T subsemigroup", "T∘σ ⊆ T or σ∘T ⊆ T, some σ ∈ U"), _chk_cor_is_correct, sample="any"),
    Claim("cor-is-correct-semigroup", "the corrective augmentation by one subsemigroup is correct", ARB,
          ("U = T", "T subsemigroup"), _chk_cor_is_correct, sample="any", modes=DIAG_MODES),
    Claim("cor-minimal", "corrective ⊆ every correct augmentation", ARB, (), _chk_cor_minimal),
    Claim("cor-quasi-order", "the corrective augmentation of a quasi order is a quasi order", ENDO,
          _QE + ("T∘U ⊆ U", "T subsemigroup"), _chk_cor_qo, sample="qo", modes=ENDO_MODES),
    Claim("cor-minimum-quasi-order", "corrective by a subsemigroup is the minimum correct quasi order", ENDO,
          ("quasi order", "U = T", "T ⊆ Endo", "T subsemigroup"), _chk_cor_minimum_qo),
    Claim("cor-preserves-endos", "parameters stay endomorphisms of the corrective augmentation", ARB,
          _E, _chk_cor_preserves, kind="law", sample="any", modes=ENDO_MODES),
    Claim("cor-complete", "a merging T makes the corrective augmentation complete", ARB,
          ("T meets Endo and merges every non-edge",), _chk_cor_complete, sample="any"),
    Claim("cor-trivial-injective", "injective parameters on a poset leave it unchanged", ARB,
          ("partial order", "U reverses every non-edge", "T ⊆ injective endomorphisms"), _chk_cor_trivial,
          sample="qo", modes=("injective", "full")),
    Claim("cor-trivial-reflecting", "order reflecting endomorphisms leave the order unchanged", ARB,
          ("order reflecting", "U ≠ ∅"), _chk_cor_trivial, sample="any", modes=("injective",)),
    # negative strictness
    Claim("negstr-preserves-endos", "U and T stay endomorphisms of the negative-strictive augmentation", ARB,
          _E + ("U subsemigroup", "U∘T ⊆ U"), _chk_negstr_preserves, kind="law", sample="any",
          modes=ENDO_MODES),
    Claim("negstr-preserves-own-endos", "a subsemigroup stays endomorphic for its negative-strictive augmentation",
          ARB, ("U = T", "T ⊆ Endo", "T subsemigroup"), _chk_negstr_preserves_own, kind="law", sample="any",
          modes=DIAG_MODES),
    Claim("negstr-skips-uniform-nonstrict", "uniformly non-strict pairs are never added", ARB,
          ("T∘σ ⊆ T, some σ ∈ U",), _chk_negstr_uniform, sample="any"),
    Claim("negstr-is-neg-strict", "the negative-strictive augmentation is negatively strict", ARB,
          _E + ("U subsemigroup", "T subsemigroup", "T∘σ ⊆ T, some σ ∈ U", "U∘T ⊆ U"),
          _chk_negstr_is_negstrict, sample="any", modes=ENDO_MODES),
    Claim("negstr-is-neg-strict-semigroup", "negative-strictive by one nonempty subsemigroup is negatively strict",
          ARB, ("U = T", "T ⊆ Endo", "T subsemigroup", "T ≠ ∅"), _chk_negstr_is_negstrict, sample="any",
          modes=DIAG_MODES),
    Claim("negstr-symmetric-part", "negative-strictive keeps the symmetric part", ARB,
          _E + ("T∘σ ⊆ U, some σ ∈ U",), _chk_negstr_symmetric, sample="any", modes=ENDO_MODES),
    Claim("negstr-rigid", "no negatively strict augmentation sits strictly below negative-strictive", ARB,
          _E + ("T∘σ ⊆ U, some σ ∈ U",), _chk_negstr_rigid),
    # interrelationships
    Claim("sep-minimum", "the separative augmentation is below every separative, compatibility-preserving one",
          ("qo",), ("quasi order",), _chk_sep_minimum),
    Claim("slin-implies-lin", "strict linearity entails linearity", ARB, (), _chk_slin_implies_lin, sample="any"),
    Claim("slin-equals-lin-single", "for one family strict linearity equals linearity", ARB, ("U = T",),
          _chk_slin_equals_lin, sample="any", modes=DIAG_MODES),
    Claim("cor-implies-slin-id", "under T-linearity correctness entails strict identity-linearity", ARB,
          ("T∘U ⊆ T", "T-linear"), _chk_cor_implies_slin_id, sample="any"),
    Claim("cor-implies-strict", "for endomorphisms correctness entails strictness", ARB, _E,
          _chk_cor_implies_strict, sample="any", modes=ENDO_MODES),
    Claim("strict-implies-cor-lattice", "on quasi lattices strictness entails correctness", QL,
          ("quasi lattice", "U,T ⊆ lattice endomorphisms"), _chk_strict_implies_cor, sample="ql"),
    Claim("cor-implies-neg-strict", "for nonempty endomorphic U correctness entails negative strictness", ARB,
          _E + ("U ≠ ∅",), _chk_cor_implies_negstrict, sample="any", modes=ENDO_MODES),
    Claim("lin-id-implies-neg-strict", "identity-linearity entails negative strictness for one subsemigroup", ARB,
          ("U = T", "T ⊆ Endo", "T subsemigroup", "T ≠ ∅"), _chk_lin_id_implies_negstrict, sample="any",
          modes=DIAG_MODES),
    Claim("chain-lin", "base ⊆ linear ⊆ identity-linear ⊆ strict identity-linear", ARB, (), _chk_chain,
          sample="any"),
    Claim("lin-equals-slin", "linear and strict-linear coincide for one family", ARB, ("U = T",),
          _chk_lin_eq_slin, sample="any", modes=DIAG_MODES),
    Claim("slin-id-below-cor", "strict identity-linear ⊆ corrective under T-linearity", ARB,
          ("T-linear", "T∘U ⊆ T"), _chk_slin_below_cor, sample="any"),
    Claim("str-below-cor", "strictive ⊆ corrective for endomorphisms", ARB, _E, _chk_str_below_cor,
          sample="any", modes=ENDO_MODES),
    Claim("strtrn-below-cor", "strictive-transitive ⊆ corrective", ENDO,
          _QE + ("T∘U ⊆ U", "T subsemigroup"), _chk_strtrn_below_cor, sample="qo", modes=ENDO_MODES),
    Claim("negstr-below-cor", "negative-strictive ⊆ corrective", ARB, (), _chk_negstr_below_cor, sample="any"),
    Claim("negstr-below-lin-id", "negative-strictive ⊆ identity-linear for one subsemigroup", ARB,
          ("U = T", "T ⊆ Endo", "T subsemigroup"), _chk_negstr_below_lin_id, sample="any", modes=DIAG_MODES),
    Claim("cor-two-step", "every corrective pair splits through its meet into two strictive steps", QL,
          ("quasi lattice", "U,T ⊆ lattice endomorphisms"), _chk_two_step, sample="ql"),
    Claim("cor-equals-strtrn", "on quasi lattices corrective equals strictive-transitive", QL,
          ("quasi lattice", "U,T ⊆ lattice endomorphisms", "T∘U ⊆ U", "T subsemigroup"), _chk_cor_eq_strtrn,
          sample="ql"),
    Claim("cor-equals-strtrn-single", "for one subsemigroup of lattice endomorphisms corrective equals "
          "strictive-transitive", QL, ("quasi lattice", "U,T ⊆ lattice endomorphisms", "U = T", "T subsemigroup"),
          _chk_cor_eq_strtrn, sample="ql"),
    Claim("trn-minimum", "the closure is the minimum transitive augmentation", ("relations",), (), _chk_trn_minimum),
    Claim("strict-chain", "strict pairs survive closure iff every cycle is bidirectional", ("relations",), (),
          _chk_strict_chain),
    Claim("trn-cycles", "closure-equivalent elements are exactly those on a common cycle", ("relations",), (),
          _chk_trn_cycles),
    Claim("trn-preserves-endos", "endomorphisms survive the transitive closure", ("relations",), (),
          _chk_trn_preserves),
    Claim("lin-symmetric", "linearity is symmetric in its two parameters", ARB, (), _chk_lin_symmetric,
          sample="any"),
    Claim("lin-monotone-verdict", "enlarging parameters keeps (strict) linearity", ARB, (),
          _chk_lin_monotone_verdict, sample="any"),
    # fixed points and monotonicity
    Claim("fix-linear", "a linear relation is its own linear augmentation", ARB, (), _fix_law("linear", "linear"),
          kind="law", sample="any"),
    Claim("fix-strict-linear", "a strictly linear relation is its own strict-linear augmentation", ARB, (),
          _fix_law("strict-linear", "strict-linear"), kind="law", sample="any"),
    Claim("fix-strictive", "a strict relation is its own strictive augmentation", ARB, (),
          _fix_law("strict", "strictive"), kind="law", sample="any"),
    Claim("fix-corrective", "a correct relation is its own corrective augmentation", ARB, (),
          _fix_law("correct", "corrective"), kind="law", sample="any"),
    Claim("fix-separative", "a separative order is its own separative augmentation", ("qo",), (),
          _chk_fix_separative, kind="law"),
    Claim("fix-transitive", "a transitive relation is its own closure", ("relations",), (), _chk_fix_transitive,
          kind="law"),
    Claim("mono-linear", "larger parameters give a smaller linear augmentation", ARB, (), _mono_law("linear"),
          kind="law", sample="any"),
    Claim("mono-strict-linear", "larger parameters give a smaller strict-linear augmentation", ARB, (),
          _mono_law("strict-linear"), kind="law", sample="any"),
    # cross-checks between independent implementations
    Claim("endo-form-corrective", "corrective matches its endomorphic form", ARB, _E + ("T ≠ ∅",),
          _chk_endo_form_kind("corrective"), kind="crosscheck", sample="any", modes=ENDO_MODES),
    Claim("endo-form-strictive", "strictive matches its endomorphic form", ARB, _E,
          _chk_endo_form_kind("strictive"), kind="crosscheck", sample="any", modes=ENDO_MODES),
    Claim("endo-form-strict", "strictness matches its endomorphic form", ARB, _E, _chk_endo_form_prop("strict"),
          kind="crosscheck"),
    Claim("endo-form-neg-strict", "negative strictness matches its endomorphic form", ARB, _E + ("U ≠ ∅",),
          _chk_endo_form_prop("neg-strict"), kind="crosscheck"),
    Claim("kernel-matches-definition", "kernel augmentations and verdicts match the literal definitions", ARB, (),
          _chk_kernel_matches_definition, kind="crosscheck"),
    Claim("aug-direction", "every augmentation contains the base; the diminishment sits below it", ARB, (),
          _chk_aug_direction, kind="crosscheck", sample="any"),
    Claim("meet-characterizes-order", "p ≤ q iff p is an infimum of p and q", ("qo",), ("quasi order",),
          _chk_meet_characterizes_order, kind="crosscheck"),
)

_BY_ID = {c.id: c for c in CLAIMS}
assert len(_BY_ID) == len(CLAIMS), "duplicate claim id"

INCLUSION_CLAIMS = (
    "chain-lin", "lin-equals-slin", "slin-id-below-cor", "str-below-cor", "strtrn-below-cor", "negstr-below-cor",
    "negstr-below-lin-id",
)
FIXED_POINT_LAWS = ("fix-linear", "fix-strict-linear", "fix-strictive", "fix-corrective", "fix-separative",
                    "fix-transitive")
MONOTONICITY_LAWS = ("mono-linear", "mono-strict-linear")
PRESERVATION_LAWS = ("str-preserves-own-endos", "negstr-preserves-own-endos", "cor-preserves-endos",
                     "negstr-preserves-endos")


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownIdError(f"unknown claim {claim_id!r}") from None


# ---------------------------------------------------------------------------
# runner


@dataclass
class ClaimResult:
    claim_id: str
    checked: int = 0
    skipped: int = 0
    violations: list[str] = field(default_factory=list)
    witness: Instance | None = None
    sampled: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        return f"CLAIM {self.claim_id} checked={self.checked} skipped={self.skipped} violations={len(self.violations)}"


def _streams(name: str, max_n: int, seed: int) -> Iterable[Instance]:
    # four points are sampled, except for the small quasi lattice class
    if name == "ql":
        return ql_stream(min(max_n, 4))
    max_n = min(max_n, EXHAUSTIVE_MAX_N)
    if name == "arbitrary":
        return arbitrary_stream(max_n, seed)
    if name == "endo":
        return endo_stream(max_n)
    if name == "qo":
        return quasi_order_stream(max_n)
    if name == "relations":
        return relation_stream(max_n)
    raise UnknownIdError(f"unknown stream {name!r}")


def _evaluate(claim: Claim, inst: Instance, res: ClaimResult, hyps) -> bool:
    """Apply one claim to one instance; return whether the hypotheses held."""
    for h in hyps:
        if not h(inst):
            res.skipped += 1
            return False
    res.checked += 1
    msg = claim.check(inst)
    if msg:
        res.violations.append(f"{msg} on {inst.describe()}")
        if res.witness is None:
            res.witness = inst
    return True


def claim_seed(claim_id: str, seed: int) -> int:
    return seed ^ (zlib.crc32(claim_id.encode()) << 16)


def run_claims(
    claim_ids: Iterable[str] | None = None,
    max_n: int = 3,
    seed: int = 0,
    budget: int = 0,
    max_attempts: int | None = None,
) -> list[ClaimResult]:
    """Evaluate claims over the shared exhaustive streams, then sample.

    Instances are generated once per stream and shared by every claim that
    quantifies over it.  With ``max_n >= 4`` and a positive ``budget``,
    each sampling claim also draws four-point instances until ``budget``
    of them meet its hypotheses (or ``max_attempts`` draws are spent).
    """
    claims = [get_claim(c) for c in claim_ids] if claim_ids is not None else list(CLAIMS)
    results = {c.id: ClaimResult(c.id) for c in claims}
    hyps = {c.id: [HYPOTHESES[h] for h in c.hypotheses] for c in claims}
    order = ("relations", "qo", "arbitrary", "endo", "ql")
    for name in order:
        users = [c for c in claims if name in c.streams]
        if not users:
            continue
        for inst in _streams(name, max_n, seed):
            for c in users:
                _evaluate(c, inst, results[c.id], hyps[c.id])
    if max_n >= 4 and budget > 0:
        for c in claims:
            if c.sample is None:
                continue
            res = results[c.id]
            attempts = max_attempts if max_attempts is not None else 50 * budget
            stream = sample_stream(
                claim_seed(c.id, seed), 4, quasi_order=c.sample == "qo", modes=c.modes, lattice=c.sample == "ql"
            )
            for inst in stream:
                if res.sampled >= budget or attempts <= 0:
                    break
                attempts -= 1
                if _evaluate(c, inst, res, hyps[c.id]):
                    res.sampled += 1
    return [results[c.id] for c in claims]


def verify_claim(claim_id: str, budget: int = 0, seed: int = 0, max_n: int = 3) -> ClaimResult:
    return run_claims([claim_id], max_n=max_n, seed=seed, budget=budget)[0]


def report(results: Iterable[ClaimResult], seed: int, budget: int, max_n: int) -> str:
    results = list(results)
    lines = [f"# pinlab verify max_n={max_n} seed={seed} budget={budget}"]
    lines += [r.line() for r in results]
    bad = [r for r in results if r.violations]
    for r in bad:
        for v in r.violations[:3]:
            lines.append(f"  VIOLATION {r.claim_id}: {v}")
    total = sum(len(r.violations) for r in results)
    lines.append(f"# claims={len(results)} violations={total}")
    return "\n".join(lines) + "\n"


__all__ = [
    "CLAIMS", "Claim", "ClaimResult", "FIXED_POINT_LAWS", "HYPOTHESES", "INCLUSION_CLAIMS", "MONOTONICITY_LAWS",
    "PRESERVATION_LAWS", "claim_seed", "get_claim", "report", "run_claims", "verify_claim",
]
