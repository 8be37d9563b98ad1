import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinlab.baire import (
    BAInj, UPSeq, UPSet, closed_form, compare, compose, correct_witness_tau, enum_injection, interleave, join,
    meet, nontransitivity_certificate, parse_upseq, pin_witness_nleq_star, project, sample_family,
    two_step_witness, where_gt,
)
from pinlab.baire.inj import Pi0Endo, Pi1Endo, evens
from pinlab.baire.seq import EVENS, NATURALS
from pinlab.errors import NotInjectiveError, ParseError, PreconditionError

ZERO, ONE = UPSeq.const(0), UPSeq.const(1)
CHI0, CHI1 = UPSeq.chi([0]), UPSeq.chi([1])

nat = st.integers(0, 4)
seqs = st.builds(UPSeq, st.lists(nat, max_size=4), st.lists(nat, min_size=1, max_size=3))


@st.composite
def injections(draw):
    m = draw(st.integers(1, 3))
    d = m + draw(st.integers(0, 3))
    residues = draw(st.permutations(range(d)))[:m]
    offsets = [r + d * draw(st.integers(0, 2)) for r in residues]
    hit = lambda v: any(v >= b and (v - b) % d == 0 for b in offsets)  # noqa: E731
    free = [v for v in range(3 * d + 6) if not hit(v)]
    exc = draw(st.lists(st.sampled_from(free), unique=True, max_size=3)) if free else []
    return BAInj(exc, m, d, offsets)


def test_normal_forms():
    assert UPSeq([1, 1], [1]) == ONE
    assert UPSeq([0, 1], [0, 1]) == UPSeq([], [0, 1])
    assert str(UPSeq([2], [1])) == "[2|1]"
    assert parse_upseq("[2|1]") == UPSeq([2], [1])
    with pytest.raises(ParseError):
        parse_upseq("[2,1]")


def test_compare_examples():
    c = compare(ZERO, ONE)
    assert c.le and c.ll_star and c.lt_star
    c = compare(UPSeq([2], [1]), ONE)
    assert not c.le and c.le_star and c.eq_star
    c = compare(CHI0, ZERO)
    assert c.le_star and c.eq_star and compare(ZERO, CHI0).lt


def test_where_gt_examples():
    assert where_gt(UPSeq.const(2), ONE) == NATURALS
    assert where_gt(UPSeq([2], [1]), ONE) == UPSet.finite([0])
    assert where_gt(CHI1, CHI1) == UPSet.finite([])


def test_enumeration_examples():
    assert enum_injection(EVENS) == BAInj.affine(2, 0)
    assert enum_injection(UPSet.finite([0]).complement()) == BAInj.shift(1)
    # {0} together with the multiples of 3 from 3 on is just the multiples of 3
    h = enum_injection(UPSet.residues(3, [0]))
    assert h == BAInj.affine(3, 0) and h.values(4) == [0, 3, 6, 9]


def test_project_and_compose_examples():
    assert project(BAInj.identity(), CHI1) == CHI1
    assert project(BAInj.affine(2, 0), UPSeq([0, 5], [3])) == UPSeq([0], [3])
    assert compose(BAInj.identity(), BAInj.shift(4)) == BAInj.shift(4)
    assert compose(BAInj.shift(1), BAInj.shift(2)) == BAInj.shift(3)
    assert compose(BAInj.affine(2, 0), BAInj.affine(3, 0)) == BAInj.affine(6, 0)
    with pytest.raises(NotInjectiveError):
        BAInj([], 2, 2, [0, 2])


def test_structured_endomorphisms():
    assert Pi0Endo(BAInj.identity()).apply(CHI1) == CHI1
    # odd indices 0 and 1 stand for positions 1 and 3
    assert Pi0Endo(BAInj.identity(), ((0, 1), (1, 0))).apply(CHI1) == UPSeq.chi([3])
    assert Pi1Endo(BAInj.affine(2, 0)).apply(ONE) == ONE


def test_closed_form_examples():
    assert closed_form("str_proj", CHI0, ZERO)
    assert closed_form("str_proj", ZERO, CHI1)
    assert not closed_form("str_proj", CHI0, CHI1)
    assert closed_form("lin_id_proj", ZERO, ONE)
    x, y = UPSeq([2], [1]), ONE
    assert closed_form("le_star_cor", x, y) == compare(x, y).le_star


def test_nontransitivity_certificate():
    lines = nontransitivity_certificate()
    assert lines[-1] == "non-transitive"
    assert lines[0].startswith("chi_0 str 0") and lines[2].startswith("chi_0 not-str chi_1")


def test_witness_examples():
    assert pin_witness_nleq_star(ONE, CHI0) == BAInj.shift(1)
    x = interleave(ONE, ZERO)
    assert pin_witness_nleq_star(x, ZERO) == BAInj.affine(2, 0)
    assert correct_witness_tau(ZERO, ONE, BAInj.identity()) == BAInj.identity()
    assert correct_witness_tau(UPSeq([2], [1]), ONE, BAInj.identity()) == BAInj.shift(1)
    # x∘f = [2|1] still has its anomaly at 0, so the shift is by one
    assert correct_witness_tau(UPSeq([2], [1]), ONE, BAInj.affine(2, 0)) == BAInj.shift(1)
    with pytest.raises(PreconditionError):
        correct_witness_tau(ONE, ZERO, BAInj.identity())


def test_meet_join_examples():
    assert meet(CHI1, CHI1) == CHI1
    assert meet(UPSeq([2], [1]), ONE) == ONE
    assert join(CHI0, CHI1) == UPSeq([1, 1], [0])


def test_two_step_examples():
    assert two_step_witness(ZERO, ONE) == ZERO
    assert two_step_witness(UPSeq([2], [1]), ONE) == ONE
    x = UPSeq([3, 1, 2], [2, 1])
    y = UPSeq([1, 1, 1], [2, 1])
    r = two_step_witness(x, y)
    assert r == meet(x, y) and closed_form("str_proj", x, r) and closed_form("str_proj", r, y)


def test_strict_diminishment_of_eventual_domination():
    x, y = UPSeq([3], [1, 2]), UPSeq.const(2)
    c = compare(x, y)
    assert c.le_star and not c.le and not c.ll_star
    assert closed_form("le_star_cor", x, y) and not closed_form("slin_id_proj", x, y)


def test_samplers_are_structural():
    for h in sample_family("proj†", 1, 3):
        vals = h.values(40)
        assert len(set(vals)) == 40
    for e in sample_family("Π0", 3, 5):
        assert len(set(e.half.values(20))) == 20
    for e in sample_family("Π1", 3, 5):
        assert e.h is None or all(v % 2 == 0 for v in e.h.values(20))


@given(seqs, seqs)
def test_compare_is_coherent(x, y):
    c = compare(x, y)
    if c.le:
        assert c.le_star
    if c.ll_star:
        assert c.lt_star or not c.ge_star
        assert c.le_star
    assert c.eq_star == (c.le_star and c.ge_star)
    assert c.le_star == closed_form("le_star_cor", x, y)


@given(seqs, seqs)
def test_meet_is_pointwise_min(x, y):
    m = meet(x, y)
    assert m.values(20) == [min(a, b) for a, b in zip(x.values(20), y.values(20))]


@given(injections(), injections(), seqs)
def test_projection_is_contravariant(g, h, x):
    assert project(compose(g, h), x) == project(h, project(g, x))
    assert compose(g, h).values(25) == [g(h(k)) for k in range(25)]


@given(seqs, seqs)
def test_two_step_exists_exactly_under_domination(x, y):
    if compare(x, y).le_star:
        r = two_step_witness(x, y)
        assert closed_form("str_proj", x, r) and closed_form("str_proj", r, y)
    else:
        with pytest.raises(PreconditionError):
            two_step_witness(x, y)


@given(seqs, seqs)
def test_pinning_map_runs_through_the_excess_set(x, y):
    if compare(x, y).le_star:
        return
    s = pin_witness_nleq_star(x, y)
    xs, ys = project(s, x), project(s, y)
    assert compare(xs, ys).gg_star and all(a > b for a, b in zip(xs.values(30), ys.values(30)))


@given(seqs, seqs)
def test_negative_strictive_matches_identity_linear(x, y):
    assert closed_form("negstr_proj", x, y) == closed_form("lin_id_proj", x, y) == closed_form("slin_id_proj", x, y)


@given(st.lists(nat, max_size=4), st.lists(nat, min_size=1, max_size=3),
       st.lists(nat, max_size=4), st.lists(nat, min_size=1, max_size=3))
def test_separative_form_on_infinite_supports(a, b, c, d):
    x, y = UPSeq(a, [v + 1 for v in b]), UPSeq(c, [v + 1 for v in d])
    assert closed_form("sep_c00plus", x, y) == x.support().subset_star(y.support())
