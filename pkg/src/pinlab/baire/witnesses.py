"""Registered symbolic separations between closed-form augmentations.

Each entry names two closed forms ``A`` and ``B`` and a pair ``(x, y)`` with
``x A y`` but not ``x B y``, i.e. ``A`` is not contained in ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import closed_form
from .seq import UPSeq, interleave

ZERO = UPSeq.const(0)
CHI0 = UPSeq.chi([0])
CHI1 = UPSeq.chi([1])

# evens identically 0, odd parts incomparable
_ODD_CLASH_X = interleave(ZERO, UPSeq([1, 0], [0]))
_ODD_CLASH_Y = interleave(ZERO, UPSeq([0, 1], [0]))


@dataclass(frozen=True)
class NonArrow:
    id: str
    source: str
    target: str
    left: str
    right: str
    x: UPSeq
    y: UPSeq
    basis: str

    def verify(self) -> bool:
        return closed_form(self.left, self.x, self.y) and not closed_form(self.right, self.x, self.y)


# Node names match the implication graph: str, negstr, lin, linid, slin,
# strtrn and the base order le.
NON_ARROWS: tuple[NonArrow, ...] = (
    NonArrow("str-slin", "str", "slin", "str_proj", "slin_id_proj", CHI0, ZERO, "strictive only adds eventually equal pairs"),
    NonArrow("str-negstr", "str", "negstr", "str_proj", "negstr_proj", CHI0, ZERO, "negative strictive needs eventual strict domination"),
    NonArrow("negstr-str", "negstr", "str", "negstr_proj", "str_proj", UPSeq([5], [0]), UPSeq.const(1), "eventual strict domination ignores the prefix"),
    NonArrow("negstr-lin", "negstr", "lin", "negstr_proj", "lin_proj", UPSeq([5], [0]), UPSeq.const(1), "linear collapses to the pointwise order"),
    NonArrow("lin-str", "lin", "str", "lin_pi0", "str_pi0", _ODD_CLASH_X, _ODD_CLASH_Y, "odd parts incomparable, evens tied"),
    NonArrow("lin-negstr", "lin", "negstr", "lin_pi0", "negstr_pi0", _ODD_CLASH_X, _ODD_CLASH_Y, "odd parts incomparable, evens not strictly dominated"),
    NonArrow("linid-lin", "linid", "lin", "lin_id_proj", "lin_proj", UPSeq([5], [0]), UPSeq.const(1), "identity-linear sees eventual strict domination"),
    NonArrow("slin-linid", "slin", "linid", "slin_id_pi1", "lin_id_pi1", _ODD_CLASH_X, _ODD_CLASH_Y, "even parts tied pointwise"),
    NonArrow("strtrn-slin", "strtrn", "slin", "le_star_cor", "slin_id_proj", UPSeq([2], [1]), UPSeq.const(1), "eventual domination is the two-step closure"),
    NonArrow("strtrn-str", "strtrn", "str", "le_star_cor", "str_proj", UPSeq([1, 0], [1]), UPSeq([0, 1], [1]), "eventual domination is the two-step closure"),
    NonArrow("strtrn-negstr", "strtrn", "negstr", "le_star_cor", "negstr_proj", UPSeq([2], [1]), UPSeq.const(1), "eventual domination is the two-step closure"),
)


def non_arrow(nid: str) -> NonArrow:
    for w in NON_ARROWS:
        if w.id == nid:
            return w
    from ..errors import UnknownIdError

    raise UnknownIdError(f"unknown non-arrow {nid!r}")


def nontransitivity_certificate() -> list[str]:
    """The three strictive comparisons showing the relation is not transitive."""
    a = closed_form("str_proj", CHI0, ZERO)
    b = closed_form("str_proj", ZERO, CHI1)
    c = closed_form("str_proj", CHI0, CHI1)
    return [
        f"chi_0 {'str' if a else 'not-str'} 0    ({CHI0} vs {ZERO})",
        f"0 {'str' if b else 'not-str'} chi_1    ({ZERO} vs {CHI1})",
        f"chi_0 {'str' if c else 'not-str'} chi_1    ({CHI0} vs {CHI1})",
        "non-transitive" if a and b and not c else "NOT a certificate",
    ]
