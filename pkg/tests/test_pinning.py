import pytest
from hypothesis import given

from pinlab.endo import EndoFamily, endomorphisms
from pinlab.errors import UnknownIdError
from pinlab.pinning import PROPERTIES, check_property, family_pins, holds, pins
from pinlab.relation import chain, complete_relation, diagonal, make_relation

from conftest import families, instances, relations

ID2 = EndoFamily.identity(2)
ALL2 = EndoFamily.all_maps(2)


def test_pins_examples():
    assert pins((0, 1), "<", 0, 1, ID2, chain(2))
    assert not pins((0, 1), "≰", 1, 0, EndoFamily.of((0, 0)), chain(2))


@given(relations(max_n=3))
def test_endomorphisms_pin_the_order_itself(R):
    E = endomorphisms(R)
    for s in E:
        for p, q in R.pairs():
            assert pins(s, "≤", p, q, E, R)


def test_family_pins_examples():
    R = make_relation(3, [(0, 1), (1, 0)], reflexive=True)
    assert family_pins(EndoFamily.identity(3), "<", EndoFamily.identity(3), R).holds
    E = endomorphisms(diagonal(2))
    v = family_pins(E, "≰", E, diagonal(2))
    assert not v.holds and v.refutation in {(0, 1), (1, 0)}


def test_property_examples():
    assert check_property("linear", complete_relation(3), EndoFamily.identity(3), EndoFamily.identity(3)).holds
    assert not check_property("correct", diagonal(2), ALL2, ALL2).holds
    with pytest.raises(UnknownIdError):
        check_property("bogus", chain(2), ID2, ID2)


def test_property_verdict_carries_witnesses():
    v = check_property("strict", chain(2), ID2, ID2)
    assert v.holds and tuple(v.witness[(0, 1)]) == (0, 1)


@given(instances(max_n=3))
def test_pins_le_iff_pins_ge(inst):
    R, U, T = inst
    assert family_pins(U, "≤", T, R).holds == family_pins(U, "≥", T, R).holds


@given(instances(max_n=4))
def test_kernel_verdicts_match_witness_search(inst):
    R, U, T = inst
    for prop in PROPERTIES:
        assert holds(prop, R, U, T) == check_property(prop, R, U, T).holds


@given(instances(max_n=4))
def test_linearity_is_symmetric(inst):
    R, U, T = inst
    assert holds("linear", R, U, T) == holds("linear", R, T, U)


@given(instances(max_n=4), families(4, max_size=2), families(4, max_size=2))
def test_linearity_monotone_in_parameters(inst, extra_u, extra_t):
    R, U, T = inst
    if R.n != 4:
        return
    for prop in ("linear", "strict-linear"):
        if holds(prop, R, U, T):
            assert holds(prop, R, U | extra_u, T | extra_t)


@given(instances(max_n=4))
def test_strict_linear_implies_linear(inst):
    R, U, T = inst
    if holds("strict-linear", R, U, T):
        assert holds("linear", R, U, T)
    assert holds("strict-linear", R, T, T) == holds("linear", R, T, T)


@given(relations(max_n=3), families(3, max_size=3), families(3, max_size=3))
def test_correct_implies_strict_for_endomorphisms(R, U, T):
    if R.n != 3:
        return
    E = endomorphisms(R)
    U = EndoFamily(3, [f for f in U if f in E])
    T = EndoFamily(3, [f for f in T if f in E])
    if holds("correct", R, U, T):
        assert holds("strict", R, U, T)
        if len(U):
            assert holds("neg-strict", R, U, T)
