from hypothesis import given

from pinlab.errors import NotAQuasiOrderError, RangeError
from pinlab.lab.enumerate import enumerate_relations, quasi_orders
from pinlab.relation import (
    Relation, antisymmetric_quotient, chain, classify, compatible, complete_relation, diagonal, is_homomorphism,
    is_separative, make_relation, separative_quotient, strict_part, symmetric_part,
)
import pytest

from conftest import quasi_order_rel, relations

QO3 = make_relation(3, [(0, 1), (1, 0), (0, 2), (1, 2)], reflexive=True)


def pairs(R):
    return set(R.pairs())


def test_make_relation_examples():
    assert make_relation(2, [], reflexive=True) == diagonal(2)
    assert make_relation(2, [(0, 1)], reflexive=True) == chain(2)
    assert classify(QO3).is_quasi_order


def test_make_relation_rejects_out_of_range():
    with pytest.raises(RangeError):
        make_relation(2, [(0, 2)])


def test_strict_and_symmetric_parts():
    assert pairs(strict_part(complete_relation(2))) == set()
    assert pairs(strict_part(chain(2))) == {(0, 1)}
    assert pairs(strict_part(QO3)) == {(0, 2), (1, 2)}
    assert symmetric_part(chain(2)) == diagonal(2)
    assert symmetric_part(complete_relation(2)) == complete_relation(2)
    assert pairs(symmetric_part(QO3)) == {(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)}


def test_classify_examples():
    d = classify(diagonal(2))
    assert d.reflexive and d.transitive and d.antisymmetric and not d.linear
    c = classify(complete_relation(2))
    assert c.is_quasi_order and c.linear and c.complete and not c.antisymmetric
    assert not classify(make_relation(3, [(0, 1), (1, 2)], reflexive=True)).transitive


def test_compatibility_examples():
    V = make_relation(3, [(2, 0), (2, 1)], reflexive=True)
    assert compatible(V, 0, 1)
    assert not compatible(diagonal(2), 0, 1)


def test_powerset_fragment_is_separative():
    # nonempty subsets of {0,1}: a={0}, b={1}, c={0,1} under inclusion
    P = make_relation(3, [(0, 2), (1, 2)], reflexive=True)
    assert not compatible(P, 0, 1)
    assert is_separative(P)
    assert is_separative(complete_relation(3))


def test_minimum_element_forces_nonseparative():
    for n in (2, 3):
        for R in quasi_orders(n):
            has_min = any(all(R.leq(m, q) for q in range(n)) for m in range(n))
            if has_min and not classify(R).complete:
                assert not is_separative(R)


def test_quotients():
    q = antisymmetric_quotient(complete_relation(2))
    assert len(q.classes) == 1 and q.relation == diagonal(1)
    assert antisymmetric_quotient(chain(2)).relation == chain(2)
    q3 = antisymmetric_quotient(QO3)
    assert q3.classes == ((0, 1), (2,)) and q3.relation == chain(2)
    assert len(separative_quotient(complete_relation(2)).classes) == 1
    assert len(separative_quotient(diagonal(2)).classes) == 2
    assert len(separative_quotient(make_relation(3, [(2, 0), (2, 1)], reflexive=True)).classes) == 1
    with pytest.raises(NotAQuasiOrderError):
        antisymmetric_quotient(make_relation(2, [(0, 1)]))


def test_homomorphism_examples():
    assert is_homomorphism((0, 1, 2), QO3, QO3)
    assert is_homomorphism((1, 1), chain(2), complete_relation(2))
    assert not is_homomorphism((1, 0), chain(2), chain(2))


def test_enumeration_counts_by_filtering():
    assert [sum(1 for _ in enumerate_relations(n)) for n in (1, 2)] == [2, 16]
    # independent oracle: reflexive and transitive by explicit scans
    def is_qo(R):
        n = R.n
        return all(R.leq(p, p) for p in range(n)) and all(
            R.leq(p, r) for p in range(n) for q in range(n) for r in range(n) if R.leq(p, q) and R.leq(q, r)
        )

    counts = [sum(1 for R in enumerate_relations(n) if is_qo(R)) for n in (1, 2, 3)]
    assert counts == [1, 4, 29]
    assert [len(quasi_orders(n)) for n in (1, 2, 3)] == counts
    assert len(quasi_orders(4)) == 355


def test_separative_agrees_with_triple_loop():
    def brute(R):
        n = R.n
        comp = lambda a, b: any(R.leq(r, a) and R.leq(r, b) for r in range(n))  # noqa: E731
        return all(R.leq(p, q) or any(R.leq(r, p) and not comp(r, q) for r in range(n))
                   for p in range(n) for q in range(n))

    for n in (1, 2, 3):
        for R in quasi_orders(n):
            assert is_separative(R) == brute(R)


@given(relations())
def test_strict_part_is_asymmetric(R):
    S = strict_part(R)
    assert not pairs(S) & {(q, p) for p, q in S.pairs()}


@given(relations())
def test_symmetric_part_is_symmetric(R):
    S = symmetric_part(R)
    assert S == S.transpose()


@given(quasi_order_rel())
def test_quasi_order_decomposes(R):
    S, E = strict_part(R), symmetric_part(R)
    assert classify(E).is_quasi_order and E == E.transpose()
    assert pairs(S) | pairs(E) == pairs(R)
    assert not pairs(S) & pairs(E)
    assert classify(antisymmetric_quotient(R).relation).is_poset


def test_relation_rejects_bad_rows():
    with pytest.raises(RangeError):
        Relation(2, (4, 0))
