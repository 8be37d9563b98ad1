import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinlab import kernels

IMPLS = kernels.implementations()
compiled = pytest.mark.skipif("cython" not in IMPLS, reason="compiled kernel not built")


@st.composite
def packed_case(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    rows = bytes(draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n)))
    fam = lambda: draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), max_size=3))  # noqa: E731
    U, T = fam(), fam()
    return n, rows, bytes(v for f in U for v in f), len(U), bytes(v for f in T for v in f), len(T)


def test_selection_and_fallback():
    assert kernels.IMPLEMENTATION in IMPLS
    env = dict(os.environ, PINLAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import pinlab.kernels as k; print(k.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@compiled
@given(packed_case(max_n=8))
def test_closure_parity(case):
    n, rows, *_ = case
    py, cy = IMPLS["python"], IMPLS["cython"]
    assert py.closure(rows, n) == cy.closure(rows, n)
    assert py.is_transitive(rows, n) == cy.is_transitive(rows, n)


@compiled
@given(packed_case())
def test_augment_and_property_parity(case):
    n, rows, ups, nu, the, nt = case
    py, cy = IMPLS["python"], IMPLS["cython"]
    for kind in range(5):
        assert py.augment(kind, rows, n, ups, nu, the, nt) == cy.augment(kind, rows, n, ups, nu, the, nt)
    for prop in range(6):
        assert py.prop_failure(prop, rows, n, ups, nu, the, nt) == cy.prop_failure(prop, rows, n, ups, nu, the, nt)


@compiled
@given(packed_case(max_n=3), st.integers(0, 5), st.booleans())
def test_brute_min_parity(case, prop, qo_only):
    n, rows, ups, nu, the, nt = case
    py, cy = IMPLS["python"], IMPLS["cython"]
    assert py.brute_min(rows, n, prop, ups, nu, the, nt, qo_only) == cy.brute_min(
        rows, n, prop, ups, nu, the, nt, qo_only
    )


@compiled
@given(packed_case(max_n=4))
def test_endo_mask_parity(case):
    n, rows, ups, nu, *_ = case
    py, cy = IMPLS["python"], IMPLS["cython"]
    assert py.endo_mask(rows, n, ups, nu) == cy.endo_mask(rows, n, ups, nu)
