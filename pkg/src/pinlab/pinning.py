"""Pinning and the five parametric properties.

``sigma`` pins ``p R q`` with respect to ``theta`` when ``tau(sigma(p)) R
tau(sigma(q))`` for every ``tau`` in ``theta``.  The inequality relations
``<``, ``≰`` and ``≮`` are derived from the base relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import kernels
from .endo import EndoFamily, EndoFn, is_endofamily_of
from .errors import CarrierMismatchError, UnknownIdError
from .relation import Relation

Ineq = Callable[[Relation, int, int], bool]

INEQUALITIES: dict[str, Ineq] = {
    "<": lambda R, a, b: R.lt(a, b),
    "≰": lambda R, a, b: not R.leq(a, b),
    "≮": lambda R, a, b: not R.lt(a, b),
    "≤": lambda R, a, b: R.leq(a, b),
    "≥": lambda R, a, b: R.leq(b, a),
}
_INEQ_ALIASES = {"lt": "<", "strict": "<", "nleq": "≰", "nless": "≮", "leq": "≤", "geq": "≥"}

PROPERTIES = ("linear", "strict-linear", "strict", "correct", "neg-strict")
_PROP_CODES = {
    "linear": kernels.P_LINEAR,
    "strict-linear": kernels.P_STRICT_LINEAR,
    "strict": kernels.P_STRICT,
    "correct": kernels.P_CORRECT,
    "neg-strict": kernels.P_NEG_STRICT,
    "transitive": kernels.P_TRANSITIVE,
}
_PINNED_INEQ = {"strict": "<", "correct": "≰", "neg-strict": "≮"}


def ineq_fn(ineq: str) -> Ineq:
    key = _INEQ_ALIASES.get(ineq, ineq)
    try:
        return INEQUALITIES[key]
    except KeyError:
        raise UnknownIdError(f"unknown inequality {ineq!r}") from None


def prop_code(prop: str) -> int:
    try:
        return _PROP_CODES[prop]
    except KeyError:
        raise UnknownIdError(f"unknown property {prop!r}") from None


@dataclass(frozen=True)
class PinQuery:
    ineq: str
    base: Relation
    upsilon: EndoFamily
    theta: EndoFamily

    def __post_init__(self):
        ineq_fn(self.ineq)
        if not (self.base.n == self.upsilon.n == self.theta.n):
            raise CarrierMismatchError("query families must share the base carrier")

    def verdict(self) -> PropertyVerdict:
        return family_pins(self.upsilon, self.ineq, self.theta, self.base)


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: dict = field(default_factory=dict)
    refutation: tuple[int, int] | None = None

    def __bool__(self):
        return self.holds

    def __post_init__(self):
        if self.holds and self.refutation is not None:
            raise ValueError("a holding verdict carries no refutation")
        if not self.holds and self.refutation is None:
            raise ValueError("a failing verdict needs a refutation")


def _check_carrier(R: Relation, *families: EndoFamily):
    for F in families:
        if F.n != R.n:
            raise CarrierMismatchError(f"family on {F.n} points, relation on {R.n}")


def pins(sigma, ineq: str, p: int, q: int, theta: EndoFamily, R: Relation) -> bool:
    rel = ineq_fn(ineq)
    sp, sq = sigma[p], sigma[q]
    return all(rel(R, t[sp], t[sq]) for t in theta)


def family_pins(upsilon: EndoFamily, ineq: str, theta: EndoFamily, R: Relation) -> PropertyVerdict:
    """Does ``upsilon`` pin every instance of ``ineq`` with respect to ``theta``?"""
    _check_carrier(R, upsilon, theta)
    rel = ineq_fn(ineq)
    witness = {}
    for p in range(R.n):
        for q in range(R.n):
            if not rel(R, p, q):
                continue
            for s in upsilon:
                if pins(s, ineq, p, q, theta, R):
                    witness[(p, q)] = s
                    break
            else:
                return PropertyVerdict(False, refutation=(p, q))
    return PropertyVerdict(True, witness)


def _linear_verdict(R: Relation, upsilon: EndoFamily, theta: EndoFamily, strict: bool) -> PropertyVerdict:
    theta_rel = R.lt if strict else R.leq
    witness = {}
    for p in range(R.n):
        for q in range(R.n):
            found = next((("upsilon", s) for s in upsilon if R.leq(s[p], s[q])), None)
            if found is None:
                found = next((("theta", t) for t in theta if theta_rel(t[q], t[p])), None)
            if found is None:
                return PropertyVerdict(False, refutation=(p, q))
            witness[(p, q)] = found
    return PropertyVerdict(True, witness)


def _endo_form(prop: str, R: Relation, L: EndoFamily, P: EndoFamily) -> bool:
    """Equivalent forms valid for endomorphic parameters.

    strict: p<q implies some sigma with tau sigma(q) ≰ tau sigma(p) for all tau.
    neg-strict: p≰q implies some sigma with tau sigma(p) ≮ tau sigma(q) for all tau.
    """
    for p in range(R.n):
        for q in range(R.n):
            if prop == "strict":
                if not R.lt(p, q):
                    continue
                ok = any(all(not R.leq(t[s[q]], t[s[p]]) for t in P) for s in L)
            else:
                if R.leq(p, q):
                    continue
                ok = any(all(not R.lt(t[s[p]], t[s[q]]) for t in P) for s in L)
            if not ok:
                return False
    return True


def check_property(prop: str, R: Relation, upsilon: EndoFamily, theta: EndoFamily) -> PropertyVerdict:
    prop_code(prop)
    if prop == "transitive":
        for p, q in R.pairs():
            if R.rows[q] & ~R.rows[p]:
                return PropertyVerdict(False, refutation=(p, q))
        return PropertyVerdict(True)
    _check_carrier(R, upsilon, theta)
    if prop in ("linear", "strict-linear"):
        verdict = _linear_verdict(R, upsilon, theta, strict=prop == "strict-linear")
    else:
        verdict = family_pins(upsilon, _PINNED_INEQ[prop], theta, R)
        # the neg-strict reformulation needs a nonempty Lambda: p ≮ p always holds
        if prop == "strict" or (prop == "neg-strict" and len(upsilon)):
            if is_endofamily_of(upsilon, R) and is_endofamily_of(theta, R):
                alt = _endo_form(prop, R, upsilon, theta)
                assert alt == verdict.holds, f"endomorphic reformulation of {prop} disagrees"
    return verdict


def holds(prop: str, R: Relation, upsilon: EndoFamily, theta: EndoFamily) -> bool:
    """Fast boolean check through the kernel (no witnesses)."""
    if R.n > kernels.MAX_PACKED_N:
        return check_property(prop, R, upsilon, theta).holds
    return kernels.prop_failure(
        prop_code(prop), R.packed, R.n, upsilon.packed, len(upsilon), theta.packed, len(theta)
    ) < 0
