import pytest

from pinlab.augment import AugSpec, parametric_aug, transitive_aug
from pinlab.endo import EndoFamily
from pinlab.errors import GuardExceededError, UnknownIdError
from pinlab.lab.claims import CLAIMS, HYPOTHESES, get_claim, report, run_claims, verify_claim
from pinlab.lab.enumerate import all_subfamilies, enumerate_relations, family_pool, quasi_orders
from pinlab.lab.figure import implication_graph
from pinlab.lab.instances import endo_stream, quasi_order_stream, relation_stream, sample_stream
from pinlab.lab.search import NON_ARROW_IDS, brute_min_augmentation, search_counterexample
from pinlab.relation import chain, diagonal, make_relation


def test_stream_sizes():
    assert sum(1 for _ in relation_stream(3)) == 2 + 16 + 512
    assert sum(1 for _ in quasi_order_stream(4)) == 1 + 4 + 29 + 355
    assert sum(1 for _ in endo_stream(3)) == 24088
    assert sum(1 for _ in all_subfamilies(2)) == 16


def test_enumeration_guard():
    with pytest.raises(GuardExceededError):
        next(enumerate_relations(5))


def test_sampling_is_deterministic():
    a = [i.describe() for _, i in zip(range(50), sample_stream(11, 4))]
    b = [i.describe() for _, i in zip(range(50), sample_stream(11, 4))]
    assert a == b
    assert a != [i.describe() for _, i in zip(range(50), sample_stream(12, 4))]


def test_brute_min_examples():
    I = EndoFamily.identity(3)
    R = make_relation(3, [(0, 1), (1, 2)])
    bm = brute_min_augmentation(R, "transitive", I, I)
    assert bm.intersection == transitive_aug(R) and bm.satisfies
    with pytest.raises(GuardExceededError):
        brute_min_augmentation(diagonal(6), "correct", EndoFamily.identity(6), EndoFamily.identity(6))


def test_brute_min_agrees_with_corrective_on_three_points():
    for R in quasi_orders(3):
        for F in family_pool(R, 1):
            if not F.is_subsemigroup:
                continue
            bm = brute_min_augmentation(R, "correct", F, F)
            assert bm.intersection == parametric_aug(AugSpec("corrective", F, F), R)


def test_every_non_arrow_is_refuted_twice():
    for cid in NON_ARROW_IDS:
        res = search_counterexample(cid, budget=20000, seed=0)
        assert res.symbolic_ok, cid
        assert res.finite is not None, cid
        assert len(res.finite.U) and res.finite.U.is_subsemigroup
    with pytest.raises(UnknownIdError):
        search_counterexample("nope")


def test_registry_is_consistent():
    ids = [c.id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    for c in CLAIMS:
        assert all(h in HYPOTHESES for h in c.hypotheses), c.id
        assert c.kind in ("theorem", "law", "crosscheck")
    with pytest.raises(UnknownIdError):
        get_claim("missing")


def test_small_run_and_report_format():
    results = run_claims(max_n=2, seed=3)
    assert all(r.ok for r in results)
    text = report(results, seed=3, budget=0, max_n=2)
    lines = text.splitlines()
    assert lines[0] == "# pinlab verify max_n=2 seed=3 budget=0"
    assert all(line.startswith("CLAIM ") for line in lines[1:-1])
    assert lines[-1] == f"# claims={len(CLAIMS)} violations=0"
    assert text == report(run_claims(max_n=2, seed=3), seed=3, budget=0, max_n=2)


def test_sampling_counts_only_admissible_instances():
    r = verify_claim("negstr-below-lin-id", budget=40, seed=5, max_n=4)
    assert r.sampled == 40 and r.ok


def test_broken_check_is_reported():
    import pinlab.lab.claims as claims

    c = claims._BY_ID["str-below-cor"]
    orig = c.check
    object.__setattr__(c, "check", lambda inst: "forced")
    try:
        r = run_claims(["str-below-cor"], max_n=2)[0]
        assert not r.ok and r.witness is not None
    finally:
        object.__setattr__(c, "check", orig)


def test_graph_edges():
    results = run_claims(["chain-lin", "negstr-below-cor", "str-below-cor"], max_n=2)
    dot = implication_graph(results)
    assert dot.startswith("digraph implications {") and dot.endswith("}\n")
    assert "lin -> linid [style=solid" in dot and "linid -> slin [style=solid" in dot
    assert "str -> negstr [style=dashed" in dot and "str-negstr" in dot
    # inclusions without a checked claim are not drawn
    assert "slin -> cor" not in dot
    assert dot == implication_graph(results)


def test_chain_path_from_base():
    dot = implication_graph(run_claims(["chain-lin"], max_n=2))
    for edge in ("le -> lin", "lin -> linid", "linid -> slin"):
        assert edge in dot
    assert chain(2)


def test_negstr_has_no_minimum_in_general():
    from pinlab.lab.search import negstr_minimality_search

    probe = negstr_minimality_search(3)
    # frozen from the full three-point scan
    assert (probe.tried, probe.not_minimum, probe.not_minimal) == (22554, 786, 0)
    inst = probe.first_not_minimum
    bm = brute_min_augmentation(inst.R, "neg-strict", inst.U, inst.T)
    assert not bm.satisfies
    assert inst.aug("negative-strictive") != bm.intersection
