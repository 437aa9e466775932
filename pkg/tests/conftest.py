import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from blocklie import catalog
from blocklie.algebra import Element, _acc
from blocklie.exactfield import indeterminate, scalar

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", max_examples=400, deadline=None, suppress_health_check=list(HealthCheck))
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CONFIG_NAMES = ["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"]
# cheap configurations for hypothesis-driven properties
FAST_CONFIGS = ["c1", "c3", "c4", "c5", "c6", "c8", "c9"]

RATIONALS = [1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3]


@pytest.fixture(scope="session")
def specs():
    return {name: catalog.get(name) for name in catalog.CONFIGS}


def coefficients(spec):
    pool = list(RATIONALS) + [indeterminate(n) for n in spec.indeterminates]
    return st.sampled_from(pool)


def monomials(spec, coord=3, expo=2):
    alpha = st.tuples(*[st.integers(-coord, coord) for _ in range(spec.rank)])
    i = st.tuples(*[st.integers(0, expo) if spec.m[p] else st.just(0) for p in range(4)])
    return st.tuples(alpha, i)


def elements(spec, max_size=3, coord=3, expo=2):
    """Hypothesis strategy for random elements of A(Gamma, J)."""

    def build(pairs):
        t = {}
        for key, c in pairs:
            _acc(t, key, c)
        return Element._raw({k: scalar(c) for k, c in t.items()})

    pair = st.tuples(monomials(spec, coord, expo), coefficients(spec))
    return st.lists(pair, min_size=0, max_size=max_size).map(build)
