import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinlab.augment import AugSpec, parametric_aug
from pinlab.endo import EndoFamily, endomorphisms
from pinlab.errors import HypothesisViolation, NotAQuasiLatticeError
from pinlab.lab.enumerate import quasi_orders
from pinlab.lab.instances import quasi_lattices
from pinlab.lattice import is_ql_endomorphism, is_quasi_lattice, meet_join, ql_endomorphisms, two_step_decompose
from pinlab.relation import chain, complete_relation, diagonal, make_relation

DIAMOND = make_relation(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)], reflexive=True)  # ⊥=0, a=1, b=2, ⊤=3


def test_meet_join_examples():
    t = meet_join(chain(2))
    assert t.meet(0, 1) == {0} and t.join(0, 1) == {1}
    assert meet_join(complete_relation(2)).meet(0, 1) == {0, 1}
    assert meet_join(diagonal(2)).meet(0, 1) == frozenset()


def test_quasi_lattice_examples():
    assert all(is_quasi_lattice(chain(n)) for n in range(1, 6))
    assert not is_quasi_lattice(diagonal(2))
    assert is_quasi_lattice(DIAMOND)
    assert [len([R for R in quasi_lattices(4) if R.n == n]) for n in range(1, 5)] == [1, 3, 13, 87]


def test_ql_endomorphism_examples():
    assert is_ql_endomorphism(DIAMOND, (0, 1, 2, 3))
    assert all(is_ql_endomorphism(DIAMOND, (c,) * 4) for c in range(4))
    assert not is_ql_endomorphism(DIAMOND, (0, 3, 2, 3))
    with pytest.raises(NotAQuasiLatticeError):
        is_ql_endomorphism(diagonal(2), (0, 1))


def test_meet_characterizes_order_up_to_four_points():
    for n in range(1, 5):
        for R in quasi_orders(n):
            t = meet_join(R)
            for p in range(n):
                for q in range(n):
                    assert R.leq(p, q) == (p in t.meet(p, q))


def test_two_step_below_is_immediate():
    I = EndoFamily.identity(3)
    assert two_step_decompose(chain(3), I, I, 0, 2) == 0
    with pytest.raises(HypothesisViolation):
        two_step_decompose(diagonal(2), EndoFamily.identity(2), EndoFamily.identity(2), 0, 1)


@given(st.sampled_from(quasi_lattices(4)), st.data())
def test_two_step_hops_are_strictive(R, data):
    Q = ql_endomorphisms(R, endomorphisms(R))
    members = list(Q)
    L = EndoFamily(R.n, data.draw(st.lists(st.sampled_from(members), max_size=3)))
    P = EndoFamily(R.n, data.draw(st.lists(st.sampled_from(members), max_size=3)))
    cor = parametric_aug(AugSpec("corrective", L, P), R)
    strv = parametric_aug(AugSpec("strictive", L, P), R)
    for p, q in cor.pairs():
        r = two_step_decompose(R, L, P, p, q)
        assert r in meet_join(R).meet(p, q)
        assert strv.leq(p, r) and strv.leq(r, q)
