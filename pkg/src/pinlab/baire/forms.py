"""Decision procedures, closed-form augmentations and constructive witnesses.

Every relation between two eventually periodic sequences is settled by the
prefix region plus one common period of the tails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import PreconditionError, UnknownIdError
from .inj import BAInj, enum_injection, evens, odds, project
from .seq import UPSeq, UPSet, horizon, meet


@dataclass(frozen=True)
class Comparison:
    le: bool
    ge: bool
    le_star: bool
    ge_star: bool
    ll_star: bool
    gg_star: bool

    @property
    def lt(self) -> bool:
        return self.le and not self.ge

    @property
    def lt_star(self) -> bool:
        return self.le_star and not self.ge_star

    @property
    def eq_star(self) -> bool:
        return self.le_star and self.ge_star

    @property
    def eq(self) -> bool:
        return self.le and self.ge


def compare(x: UPSeq, y: UPSeq) -> Comparison:
    start, per = horizon(x, y)
    pairs = list(zip(x.values(start + per), y.values(start + per)))
    head, tail = pairs[:start], pairs[start:]
    le_tail = all(a <= b for a, b in tail)
    ge_tail = all(a >= b for a, b in tail)
    return Comparison(
        le=le_tail and all(a <= b for a, b in head),
        ge=ge_tail and all(a >= b for a, b in head),
        le_star=le_tail,
        ge_star=ge_tail,
        ll_star=all(a < b for a, b in tail),
        gg_star=all(a > b for a, b in tail),
    )


def where_gt(x: UPSeq, y: UPSeq) -> UPSet:
    """``{n : x(n) > y(n)}``."""
    start, per = horizon(x, y)
    return UPSet.from_predicate(lambda i: x(i) > y(i), start, per)


def anomalies(x: UPSeq, y: UPSeq) -> list[int]:
    """Positions where ``x`` exceeds ``y``; requires the set to be finite."""
    a = where_gt(x, y)
    if a.is_infinite:
        raise PreconditionError("anomaly set is infinite")
    return [i for i, b in enumerate(a.prefix) if b]


# closed forms --------------------------------------------------------------


def _le(x, y):
    return compare(x, y).le


def _lt(x, y):
    return compare(x, y).lt


def _le_star(x, y):
    return compare(x, y).le_star


def _ll_star(x, y):
    return compare(x, y).ll_star


def _eq_star(x, y):
    return compare(x, y).eq_star


def _le_or_ll(x, y):
    c = compare(x, y)
    return c.le or c.ll_star


def _lin_proj_id(x, y):
    return _le(x, y) or (_ll_star(y, x) and not _le(y, x))


def _str_proj(x, y):
    return _le(x, y) or (_lt(y, x) and _eq_star(x, y))


def _lin_pi0(x, y):
    ex, ey, ox, oy = evens(x), evens(y), odds(x), odds(y)
    return _le(x, y) or (
        (_ll_star(ey, ex) or not _le(ox, oy)) and (_ll_star(ex, ey) or not _le(oy, ox))
    )


def _str_pi0(x, y):
    return _le(x, y) or (_lt(y, x) and odds(x) == odds(y) and _eq_star(evens(x), evens(y)))


def _negstr_pi0(x, y):
    ex, ey, ox, oy = evens(x), evens(y), odds(x), odds(y)
    return (
        _le(x, y)
        or (_ll_star(ex, ey) and _le(ox, oy))
        or (_le_star(ex, ey) and _lt(ox, oy))
    )


def _lin_id_pi1(x, y):
    return _le(x, y) or _ll_star(evens(x), evens(y))


def _slin_id_pi1(x, y):
    ex, ey = evens(x), evens(y)
    return not _lt(y, x) and (_le(ex, ey) or _ll_star(ex, ey))


def _sep_c00plus(x, y):
    sx, sy = x.support(), y.support()
    if not (sx.is_infinite and sy.is_infinite):
        raise PreconditionError("separative form is stated for sequences with infinite support")
    return sx.subset_star(sy)


def _asym_le_star(x, y):
    return x == y or compare(x, y).lt_star


CLOSED_FORMS: dict[str, Callable[[UPSeq, UPSeq], bool]] = {
    "le_star_cor": _le_star,
    "lin_id_proj": _le_or_ll,
    "lin_proj_id": _lin_proj_id,
    "slin_id_proj": _le_or_ll,
    "str_proj": _str_proj,
    "negstr_proj": _le_or_ll,
    "lin_pi0": _lin_pi0,
    "str_pi0": _str_pi0,
    "negstr_pi0": _negstr_pi0,
    "lin_id_pi1": _lin_id_pi1,
    "slin_id_pi1": _slin_id_pi1,
    "sep_c00plus": _sep_c00plus,
    "asym_le_star": _asym_le_star,
}

# pointwise order, for the augmentations that collapse back to it
CLOSED_FORMS["le"] = _le
CLOSED_FORMS["lin_proj"] = _le


def closed_form(form_id: str, x: UPSeq, y: UPSeq) -> bool:
    try:
        fn = CLOSED_FORMS[form_id]
    except KeyError:
        raise UnknownIdError(f"unknown closed form {form_id!r}") from None
    return fn(x, y)


# witnesses -------------------------------------------------------------------


def pin_witness_nleq_star(x: UPSeq, y: UPSeq) -> BAInj:
    """Enumeration of the (infinite) set where ``x`` exceeds ``y``."""
    if compare(x, y).le_star:
        raise PreconditionError("x is eventually dominated by y; nothing to pin")
    return enum_injection(where_gt(x, y))


def correct_witness_tau(x: UPSeq, y: UPSeq, f: BAInj) -> BAInj:
    """A shift ``k -> k + c`` past every anomaly of ``x∘f`` against ``y∘f``."""
    if not compare(x, y).le_star:
        raise PreconditionError("x is not eventually dominated by y")
    xf, yf = project(f, x), project(f, y)
    bad = anomalies(xf, yf)
    c = bad[-1] + 1 if bad else 0
    g = BAInj.shift(c)
    assert compare(project(g, xf), project(g, yf)).le, "shift failed to clear the anomalies"
    return g


def find_correcting_shift(x: UPSeq, y: UPSeq, f: BAInj, bound: int) -> BAInj | None:
    """Search shifts up to ``bound`` without assuming eventual domination."""
    xf, yf = project(f, x), project(f, y)
    for c in range(bound + 1):
        g = BAInj.shift(c)
        if compare(project(g, xf), project(g, yf)).le:
            return g
    return None


def two_step_witness(x: UPSeq, y: UPSeq) -> UPSeq:
    if not compare(x, y).le_star:
        raise PreconditionError("x is not eventually dominated by y")
    r = meet(x, y)
    assert closed_form("str_proj", x, r), "first strictive hop failed"
    assert closed_form("str_proj", r, y), "second strictive hop failed"
    return r
