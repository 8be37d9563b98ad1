"""Augmentation and diminishment operators ``Relation -> Relation``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .endo import EndoFamily, is_endofamily_of
from .errors import CarrierMismatchError, RangeError, UnknownIdError
from .relation import Relation, compatibility_set, require_quasi_order

KINDS = ("linear", "strict-linear", "strictive", "strictive-transitive", "corrective", "negative-strictive")
_KIND_CODES = {
    "linear": kernels.LINEAR,
    "strict-linear": kernels.STRICT_LINEAR,
    "strictive": kernels.STRICTIVE,
    "corrective": kernels.CORRECTIVE,
    "negative-strictive": kernels.NEG_STRICTIVE,
}


@dataclass(frozen=True)
class AugSpec:
    kind: str
    upsilon: EndoFamily
    theta: EndoFamily

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownIdError(f"unknown augmentation kind {self.kind!r}")
        if self.upsilon.n != self.theta.n:
            raise CarrierMismatchError("parameter families on different carriers")


def homomorphic_aug(f: Sequence[int], S: Relation, base_n: int) -> Relation:
    """``p ⊑ q`` iff ``f(p) S f(q)``."""
    if len(f) != base_n:
        raise RangeError(f"map defined on {len(f)} points, base has {base_n}")
    if any(not 0 <= v < S.n for v in f):
        raise RangeError("map leaves the target carrier")
    return Relation(base_n, tuple(sum(1 << q for q in range(base_n) if S.leq(f[p], f[q])) for p in range(base_n)))


def restrictive_aug(R: Relation, X: Iterable[int]) -> Relation:
    """Order by inclusion of down-sets intersected with ``X``."""
    require_quasi_order(R, "restrictive augmentation")
    xmask = 0
    for x in X:
        if not 0 <= x < R.n:
            raise RangeError(x)
        xmask |= 1 << x
    img = [R.down(p) & xmask for p in range(R.n)]
    return Relation(R.n, tuple(sum(1 << q for q in range(R.n) if img[p] & ~img[q] == 0) for p in range(R.n)))


def separative_aug(R: Relation) -> Relation:
    """Order by inclusion of compatibility sets."""
    require_quasi_order(R, "separative augmentation")
    f = [compatibility_set(R, p) for p in range(R.n)]
    return Relation(R.n, tuple(sum(1 << q for q in range(R.n) if f[p] & ~f[q] == 0) for p in range(R.n)))


def antisymmetric_dim(R: Relation) -> Relation:
    require_quasi_order(R, "antisymmetric diminishment")
    return Relation(
        R.n, tuple(sum(1 << q for q in range(R.n) if p == q or R.lt(p, q)) for p in range(R.n))
    )


def transitive_aug(R: Relation) -> Relation:
    """Transitive closure by iterated squaring (paths of one or more steps)."""
    if R.n <= kernels.MAX_PACKED_N:
        return Relation.from_packed(kernels.closure(R.packed, R.n))
    rows = list(R.rows)
    while True:
        nxt = [r for r in rows]
        for p in range(R.n):
            for q in range(R.n):
                if rows[p] >> q & 1:
                    nxt[p] |= rows[q]
        if nxt == rows:
            return Relation(R.n, tuple(rows))
        rows = nxt


def transitive_aug_warshall(R: Relation) -> Relation:
    """Independent triple-loop closure used as an oracle."""
    n = R.n
    m = [list(row) for row in R.adj]
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                for j in range(n):
                    if m[k][j]:
                        m[i][j] = True
    return Relation.from_matrix(m)


def _kernel_aug(code: int, R: Relation, U: EndoFamily, T: EndoFamily) -> Relation:
    return Relation.from_packed(kernels.augment(code, R.packed, R.n, U.packed, len(U), T.packed, len(T)))


def parametric_aug(spec: AugSpec, R: Relation, crosscheck: bool = True) -> Relation:
    U, T = spec.upsilon, spec.theta
    if U.n != R.n:
        raise CarrierMismatchError(f"families on {U.n} points, relation on {R.n}")
    if spec.kind == "strictive-transitive":
        return transitive_aug(parametric_aug(AugSpec("strictive", U, T), R, crosscheck))
    if R.n <= kernels.MAX_PACKED_N:
        out = _kernel_aug(_KIND_CODES[spec.kind], R, U, T)
    else:
        out = _reference_aug(spec.kind, R, U, T)
    if crosscheck and spec.kind in ("corrective", "strictive") and is_endofamily_of(U, R) and is_endofamily_of(T, R):
        alt = endomorphic_form(spec.kind, R, U, T)
        assert alt == out, f"endomorphic form of {spec.kind} disagrees with its definition"
    return out


def _reference_aug(kind: str, R: Relation, U: EndoFamily, T: EndoFamily) -> Relation:
    """Literal transcription of each defining formula."""
    le, lt = R.leq, R.lt

    def related(p, q):
        if le(p, q):
            return True
        if kind == "linear":
            return all(not le(s[p], s[q]) for s in U) and all(not le(t[q], t[p]) for t in T)
        if kind == "strict-linear":
            return all(not le(s[p], s[q]) for s in U) and all(not lt(t[q], t[p]) for t in T)
        if kind == "strictive":
            return lt(q, p) and all(any(not lt(t[s[q]], t[s[p]]) for t in T) for s in U)
        if kind == "corrective":
            return all(any(le(t[s[p]], t[s[q]]) for t in T) for s in U)
        if kind == "negative-strictive":
            return all(any(lt(t[s[p]], t[s[q]]) for t in T) for s in U)
        raise UnknownIdError(kind)

    return Relation(R.n, tuple(sum(1 << q for q in range(R.n) if related(p, q)) for p in range(R.n)))


def reference_aug(spec: AugSpec, R: Relation) -> Relation:
    if spec.kind == "strictive-transitive":
        return transitive_aug_warshall(_reference_aug("strictive", R, spec.upsilon, spec.theta))
    return _reference_aug(spec.kind, R, spec.upsilon, spec.theta)


def endomorphic_form(kind: str, R: Relation, L: EndoFamily, P: EndoFamily) -> Relation:
    """Simplified forms that hold when both families are endomorphisms.

    corrective: for all sigma some tau with tau sigma(p) <= tau sigma(q)
    (the ``p <= q`` disjunct is absorbed unless ``P`` is empty);
    strictive: p <= q, or q < p and for all sigma some tau with
    tau sigma(p) <= tau sigma(q).
    """
    le, lt = R.leq, R.lt

    def related(p, q):
        if kind == "corrective":
            body = all(any(le(t[s[p]], t[s[q]]) for t in P) for s in L)
            # with P empty and L nonempty the quantifier fails even for p <= q
            return body or (not len(P) and le(p, q))
        if kind == "strictive":
            return le(p, q) or (lt(q, p) and all(any(le(t[s[p]], t[s[q]]) for t in P) for s in L))
        raise UnknownIdError(kind)

    return Relation(R.n, tuple(sum(1 << q for q in range(R.n) if related(p, q)) for p in range(R.n)))


def linear_aug(R, U, T):
    return parametric_aug(AugSpec("linear", U, T), R)


def strict_linear_aug(R, U, T):
    return parametric_aug(AugSpec("strict-linear", U, T), R)


def strictive_aug(R, U, T):
    return parametric_aug(AugSpec("strictive", U, T), R)


def strictive_transitive_aug(R, U, T):
    return parametric_aug(AugSpec("strictive-transitive", U, T), R)


def corrective_aug(R, U, T):
    return parametric_aug(AugSpec("corrective", U, T), R)


def negative_strictive_aug(R, U, T):
    return parametric_aug(AugSpec("negative-strictive", U, T), R)
