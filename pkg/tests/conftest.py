import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pinlab.endo import EndoFamily
from pinlab.lab.enumerate import quasi_orders
from pinlab.relation import Relation

settings.register_profile(
    "pinlab", max_examples=int(os.environ.get("PINLAB_EXAMPLES", "150")), deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pinlab")


@st.composite
def relations(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Relation(n, tuple(rows))


@st.composite
def quasi_order_rel(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(quasi_orders(n)))


def maps(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n)


def families(n, min_size=0, max_size=3):
    return st.lists(maps(n), min_size=min_size, max_size=max_size).map(lambda ms: EndoFamily(n, ms))


@st.composite
def instances(draw, max_n=4, quasi_order=False, min_size=0):
    """A relation with two arbitrary parameter families on its carrier."""
    R = draw(quasi_order_rel(max_n=max_n) if quasi_order else relations(max_n=max_n))
    return R, draw(families(R.n, min_size)), draw(families(R.n, min_size))
