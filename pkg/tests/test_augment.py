import pytest
from hypothesis import given

from pinlab.augment import (
    KINDS, AugSpec, antisymmetric_dim, homomorphic_aug, parametric_aug, reference_aug, restrictive_aug,
    separative_aug, transitive_aug, transitive_aug_warshall,
)
from pinlab.endo import EndoFamily, endomorphisms, is_endofamily_of
from pinlab.errors import NotAQuasiOrderError
from pinlab.pinning import holds
from pinlab.relation import chain, classify, complete_relation, diagonal, is_separative, make_relation

from conftest import instances, quasi_order_rel, relations

QO3 = make_relation(3, [(0, 1), (1, 0), (0, 2), (1, 2)], reflexive=True)
VEE = make_relation(3, [(2, 0), (2, 1)], reflexive=True)
FULL3 = {(p, q) for p in range(3) for q in range(3)}
DIAG3 = {(0, 0), (1, 1), (2, 2)}
CHAIN3 = DIAG3 | {(0, 1), (0, 2), (1, 2)}


def fam(*tables):
    return EndoFamily(len(tables[0]), tables)


# Values produced by the literal definitions (reference_aug) and frozen here.
FROZEN = [
    (chain(3), fam((0, 0, 0), (0, 1, 2)), fam((0, 0, 0), (0, 1, 2)), {
        "linear": CHAIN3, "strict-linear": CHAIN3, "strictive": FULL3, "strictive-transitive": FULL3,
        "corrective": FULL3, "negative-strictive": CHAIN3,
    }),
    (VEE, fam((0, 0, 2)), EndoFamily.identity(3), {
        "linear": set(VEE.pairs()), "strict-linear": set(VEE.pairs()), "strictive": set(VEE.pairs()),
        "strictive-transitive": set(VEE.pairs()), "corrective": set(VEE.pairs()) | {(0, 1), (1, 0)},
        "negative-strictive": set(VEE.pairs()),
    }),
    (diagonal(3), fam((1, 2, 0)), fam((0, 0, 1), (0, 1, 2)), {
        "linear": DIAG3 | {(0, 2), (1, 2), (2, 0), (2, 1)}, "strict-linear": FULL3, "strictive": DIAG3,
        "strictive-transitive": DIAG3, "corrective": DIAG3 | {(0, 2), (2, 0)}, "negative-strictive": DIAG3,
    }),
]


@pytest.mark.parametrize("case", range(len(FROZEN)))
def test_frozen_augmentations(case):
    R, U, T, expected = FROZEN[case]
    for kind in KINDS:
        assert set(parametric_aug(AugSpec(kind, U, T), R).pairs()) == expected[kind], kind


def test_homomorphic_examples():
    assert homomorphic_aug((0, 1, 2), chain(3), 3) == chain(3)
    assert homomorphic_aug((1, 1), chain(2), 2) == complete_relation(2)
    assert homomorphic_aug((0, 2), chain(3), 2) == chain(2)


def test_restrictive_examples():
    assert restrictive_aug(QO3, range(3)) == QO3
    assert restrictive_aug(chain(3), []) == complete_relation(3)
    assert restrictive_aug(chain(3), [0]) == complete_relation(3)


def test_separative_examples():
    P = make_relation(3, [(0, 2), (1, 2)], reflexive=True)
    assert separative_aug(P) == P
    assert separative_aug(VEE) == complete_relation(3)
    assert separative_aug(complete_relation(2)) == complete_relation(2)
    with pytest.raises(NotAQuasiOrderError):
        separative_aug(make_relation(2, [(0, 1)]))


def test_antisymmetric_examples():
    assert antisymmetric_dim(complete_relation(3)) == diagonal(3)
    assert antisymmetric_dim(chain(3)) == chain(3)
    assert set(antisymmetric_dim(QO3).pairs()) == DIAG3 | {(0, 2), (1, 2)}


def test_transitive_examples():
    assert transitive_aug(make_relation(3, [(0, 1), (1, 2)], reflexive=True)) == chain(3)
    assert transitive_aug(chain(3)) == chain(3)
    cycle = make_relation(3, [(0, 1), (1, 2), (2, 0)], reflexive=True)
    assert transitive_aug(cycle) == complete_relation(3)


def test_identity_parameter_examples():
    I2, I3 = EndoFamily.identity(2), EndoFamily.identity(3)
    assert parametric_aug(AugSpec("strictive", I3, I3), QO3) == QO3
    assert parametric_aug(AugSpec("linear", I2, I2), diagonal(2)) == complete_relation(2)
    A = EndoFamily.all_maps(2)
    assert parametric_aug(AugSpec("corrective", A, A), diagonal(2)) == complete_relation(2)
    assert parametric_aug(AugSpec("negative-strictive", I3, I3), QO3) == QO3
    # order reflecting endomorphisms leave the order alone
    R = chain(3)
    refl = EndoFamily.identity(3)
    assert parametric_aug(AugSpec("corrective", refl, refl), R) == R


@given(relations(max_n=8))
def test_closure_matches_triple_loop(R):
    assert transitive_aug(R) == transitive_aug_warshall(R)


@given(instances(max_n=4))
def test_kernel_matches_literal_definitions(inst):
    R, U, T = inst
    for kind in KINDS:
        assert parametric_aug(AugSpec(kind, U, T), R) == reference_aug(AugSpec(kind, U, T), R)


@given(instances(max_n=4))
def test_every_augmentation_contains_the_base(inst):
    R, U, T = inst
    for kind in KINDS:
        assert R <= parametric_aug(AugSpec(kind, U, T), R)


@given(instances(max_n=4))
def test_fixed_points(inst):
    R, U, T = inst
    pairs = [("linear", "linear"), ("strict-linear", "strict-linear"), ("strict", "strictive"),
             ("correct", "corrective")]
    for prop, kind in pairs:
        if holds(prop, R, U, T):
            assert parametric_aug(AugSpec(kind, U, T), R) == R
    if classify(R).transitive:
        assert transitive_aug(R) == R


@given(quasi_order_rel())
def test_separative_fixed_point_and_diminishment(R):
    if is_separative(R):
        assert separative_aug(R) == R
    D = antisymmetric_dim(R)
    assert D <= R and classify(D).is_poset


@given(instances(max_n=4), instances(max_n=4))
def test_linear_augmentations_shrink_as_parameters_grow(a, b):
    R, U, T = a
    _, U2, T2 = b
    if U2.n != R.n:
        return
    for kind in ("linear", "strict-linear"):
        big = parametric_aug(AugSpec(kind, U | U2, T | T2), R)
        assert big <= parametric_aug(AugSpec(kind, U, T), R)


@given(quasi_order_rel(max_n=4))
def test_semigroup_stays_endomorphic_for_its_strictive(R):
    E = endomorphisms(R)
    for kind in ("strictive", "negative-strictive"):
        assert is_endofamily_of(E, parametric_aug(AugSpec(kind, E, E), R))
