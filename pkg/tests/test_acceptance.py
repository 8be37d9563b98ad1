"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import time

import pytest

from pinlab.augment import AugSpec, parametric_aug, transitive_aug, transitive_aug_warshall
from pinlab.baire.demos import correct_witness_check, two_step_check
from pinlab.baire.sampling import random_bainj, random_upseq
from pinlab.baire.seq import UPSet
from pinlab.baire.forms import closed_form
from pinlab.baire.witnesses import CHI0, CHI1, NON_ARROWS, ZERO, nontransitivity_certificate
from pinlab.endo import EndoFamily
from pinlab.io import (
    parse_bainj, parse_family, parse_relation, parse_upseq, parse_upset,
    serialize_bainj, serialize_family, serialize_relation, serialize_upseq, serialize_upset,
)
from pinlab.lab.claims import (
    FIXED_POINT_LAWS, HYPOTHESES, INCLUSION_CLAIMS, MONOTONICITY_LAWS, PRESERVATION_LAWS, report, run_claims,
)
from pinlab.lab.enumerate import endo_monoid, generated_families, quasi_orders
from pinlab.lab.figure import ARROWS, implication_graph
from pinlab.lab.instances import Instance
from pinlab.lab.search import brute_min_augmentation
from pinlab.pinning import check_property
from pinlab.relation import Relation
from pinlab.rng import SplitMix64


@pytest.fixture
def announce(capsys):
    def emit(num: int, name: str, ok: bool, details: str):
        with capsys.disabled():
            print(f"\nACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'} ({details})")
        assert ok, details
    return emit


def _submonoid_instances(hyps):
    """Quasi orders on three points with one submonoid of at most two generators."""
    for R in quasi_orders(3):
        for M in generated_families(3, endo_monoid(R).members, 2):
            if not M.contains_identity:
                continue
            inst = Instance(R, M, M, "submonoid")
            if all(HYPOTHESES[h](inst) for h in hyps):
                yield inst


def test_closure_matches_warshall(announce):
    rng = SplitMix64(2024)
    start = time.perf_counter()
    bad = 0
    for _ in range(200):
        n = rng.between(1, 8)
        density = rng.between(1, 4)
        rows = tuple(sum(1 << q for q in range(n) if rng.below(8) < density) for _ in range(n))
        R = Relation(n, rows)
        bad += transitive_aug(R) != transitive_aug_warshall(R)
    elapsed = time.perf_counter() - start
    announce(1, "closure oracle", bad == 0 and elapsed < 1.0, f"mismatches={bad} time={elapsed:.3f}s")


def test_corrective_minimality(announce):
    start = time.perf_counter()
    hyps = ("T subsemigroup", "T∘σ ⊆ T or σ∘T ⊆ T, some σ ∈ U")
    checked = bad = 0
    for inst in _submonoid_instances(hyps):
        R, M = inst.R, inst.U
        cor = parametric_aug(AugSpec("corrective", M, M), R)
        bm = brute_min_augmentation(R, "correct", M, M)
        checked += 1
        if not (bm.satisfies and bm.intersection == cor and check_property("correct", cor, M, M).holds):
            bad += 1
    elapsed = time.perf_counter() - start
    announce(2, "corrective minimality", checked > 0 and bad == 0 and elapsed < 60,
             f"instances={checked} violations={bad} time={elapsed:.1f}s")


def test_strictive_minimality(announce):
    start = time.perf_counter()
    hyps = ("quasi order", "U ⊆ Endo", "T ⊆ Endo", "U subsemigroup", "T submonoid", "T∘U∘T = U",
            "T∘σ ⊆ T, some σ ∈ U")
    checked = bad = 0
    for inst in _submonoid_instances(hyps):
        R, M = inst.R, inst.U
        s = parametric_aug(AugSpec("strictive", M, M), R)
        st = parametric_aug(AugSpec("strictive-transitive", M, M), R)
        strict = brute_min_augmentation(R, "strict", M, M)
        strict_qo = brute_min_augmentation(R, "strict", M, M, quasi_order=True)
        checked += 1
        ok = (
            check_property("strict", s, M, M).holds
            and strict.intersection == s
            and strict_qo.satisfies
            and strict_qo.intersection == st
            and st.report.is_quasi_order
            and check_property("strict", st, M, M).holds
        )
        bad += not ok
    elapsed = time.perf_counter() - start
    announce(3, "strictive minimality", checked > 0 and bad == 0 and elapsed < 120,
             f"instances={checked} violations={bad} time={elapsed:.1f}s")


def test_inclusion_chain(announce):
    results = run_claims(INCLUSION_CLAIMS, max_n=4, seed=0, budget=10000)
    short = [r.claim_id for r in results if r.sampled < 10000]
    viol = sum(len(r.violations) for r in results)
    detail = "; ".join(f"{r.claim_id} exhaustive+sampled={r.checked} sampled={r.sampled}" for r in results)
    announce(4, "inclusion chain", not short and viol == 0 and all(r.ok for r in results),
             f"violations={viol} undersampled={short} {detail}")


def test_quasi_lattice_collapse(announce):
    results = run_claims(["cor-equals-strtrn", "cor-equals-strtrn-single"], max_n=4)
    viol = sum(len(r.violations) for r in results)
    announce(5, "quasi lattice collapse", viol == 0 and all(r.checked > 0 for r in results),
             "; ".join(f"{r.claim_id} checked={r.checked} violations={len(r.violations)}" for r in results))


def test_correct_witness_equivalence(announce):
    start = time.perf_counter()
    rep = correct_witness_check(seed=0, pairs=1000, per_pair=100)
    elapsed = time.perf_counter() - start
    announce(6, "eventual domination witnesses", rep.ok and elapsed < 30,
             f"pairs=1000 dominated={rep.dominated} failures={len(rep.failures)} time={elapsed:.1f}s")


def test_two_step_and_nontransitivity(announce):
    rep = two_step_check(seed=0, pairs=1000)
    cert = nontransitivity_certificate()
    exact = (
        closed_form("str_proj", CHI0, ZERO)
        and closed_form("str_proj", ZERO, CHI1)
        and not closed_form("str_proj", CHI0, CHI1)
    )
    ok = rep.ok and rep.dominated > 0 and exact and cert[-1] == "non-transitive"
    announce(7, "two-step decomposition", ok,
             f"dominated={rep.dominated} failures={len(rep.failures)} certificate={cert[-1]}")


def test_non_arrow_witnesses(announce):
    verdicts = {w.id: w.verify() for w in NON_ARROWS}
    failed = [k for k, v in verdicts.items() if not v]
    announce(8, "non-arrow witnesses", len(verdicts) >= 6 and not failed,
             f"witnesses={len(verdicts)} failed={failed}")


def test_fixed_point_and_preservation_laws(announce):
    groups = {"fixed": FIXED_POINT_LAWS, "monotone": MONOTONICITY_LAWS, "preserve": PRESERVATION_LAWS}
    ids = [c for g in groups.values() for c in g]
    results = run_claims(ids, max_n=3)
    viol = sum(len(r.violations) for r in results)
    ok = (len(FIXED_POINT_LAWS), len(MONOTONICITY_LAWS), len(PRESERVATION_LAWS)) == (6, 2, 4)
    ok = ok and viol == 0 and all(r.checked > 0 for r in results)
    announce(9, "fixed point and preservation laws", ok,
             f"laws={len(results)} checked={sum(r.checked for r in results)} violations={viol}")


def _random_family(rng, n):
    return EndoFamily(n, [[rng.below(n) for _ in range(n)] for _ in range(rng.below(4))])


def test_determinism_and_roundtrip(announce):
    ids = ["chain-lin", "str-below-cor", "negstr-below-lin-id"]

    def render(seed):
        res = run_claims(ids, max_n=4, seed=seed, budget=200)
        support = sorted({c for *_, cs in ARROWS for c in cs})
        return report(res, seed, 200, 4), implication_graph(run_claims(support, max_n=2, seed=seed))

    same = render(5) == render(5)
    rng = SplitMix64(10)
    bad = 0
    for _ in range(1000):
        n = rng.between(1, 6)
        R = Relation(n, tuple(rng.below(1 << n) for _ in range(n)))
        bad += parse_relation(serialize_relation(R)) != R
        F = _random_family(rng, n)
        bad += parse_family(serialize_family(F)) != F
        x = random_upseq(rng)
        bad += parse_upseq(serialize_upseq(x)) != x
        s = UPSet([rng.below(2) for _ in range(rng.below(5))], [rng.below(2) for _ in range(1 + rng.below(3))])
        bad += parse_upset(serialize_upset(s)) != s
        h = random_bainj(rng)
        bad += parse_bainj(serialize_bainj(h)) != h
    announce(10, "determinism and round trip", same and bad == 0,
             f"byte-identical={same} roundtrip-failures={bad} values-per-format=1000")
