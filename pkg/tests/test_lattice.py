import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blocklie import catalog
from blocklie.exactfield import indeterminate
from blocklie.lattice import (
    ConfigError,
    DeltaZero,
    GammaSpec,
    InvalidSpecError,
    canonical_basis,
    coordinates_of,
    projection_kernel,
    spec_from_dict,
    spec_violations,
    subgroup_equal,
    unit,
    validate_spec,
)

from conftest import CONFIG_NAMES

a, b, c = (indeterminate(n) for n in "abc")
Z4 = [unit(1), unit(2), unit(3), unit(4)]
SIG_K = [(1, 0, 1, 0), (0, 0, 1, 0)]


def test_canonical_basis_example():
    basis, expansion = canonical_basis([(2, 0, 2, 0), (1, 0, 1, 0), (0, 0, 1, 0)])
    assert basis == [(1, 0, 1, 0), (0, 0, 1, 0)]
    assert expansion[(2, 0, 2, 0)] == (2, 0)


def test_canonical_basis_indeterminate():
    basis, _ = canonical_basis([(1, 0, 1, 0), (0, 0, a, 0)])
    assert len(basis) == 2


def test_canonical_basis_empty():
    basis, expansion = canonical_basis([])
    assert basis == [] and expansion == {}
    assert GammaSpec([]).rank == 0


def test_coordinates_examples():
    g = GammaSpec(SIG_K)
    assert coordinates_of(g, (2, 0, 3, 0)) == (2, 1)
    assert coordinates_of(g, (0, 0, 1, 0)) == (0, 1)
    assert coordinates_of(g, (1, 0, Fraction(1, 2), 0)) is None


def test_coordinates_with_indeterminates():
    g = GammaSpec([(1, 0, 1, 0), (0, 0, a, 0)], indeterminates=["a"])
    assert coordinates_of(g, (3, 0, 3 - 2 * a, 0)) == (3, -2)
    assert coordinates_of(g, (0, 0, a * a, 0)) is None
    assert coordinates_of(g, (0, 0, a / 2, 0)) is None


def test_projection_kernel_examples():
    assert projection_kernel(GammaSpec(Z4), 4).rows == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
    assert projection_kernel(GammaSpec(SIG_K), 2).rows == ((1, 0), (0, 1))
    assert projection_kernel(GammaSpec([(1, 0, 0, 0), (0, 1, 0, 1)]), 4).rows == ((1, 0),)


def test_validate_accepts_examples():
    for n in (1, 2, 3, 4):
        for m in (1, -2):
            getattr(catalog, f"example{n}")(m)


def test_validate_rejects_missing_j():
    assert spec_violations([(1, 0, 0, 0), (0, 0, 1, 0)], 1, (0, 0, 0, 0)) == ["J2_must_be_N", "J4_must_be_N"]


def test_validate_rejects_kernel_condition():
    gens = [(1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0)]
    for m in [(0, 0, 0, 0), (1, 1, 1, 1)]:
        assert spec_violations(gens, 1, m) == ["ker_pi4_inside_ker_pi2"]


def test_validate_rejects_printed_case4_delta():
    gens = [(1, 0, 1, 0), (0, 1, b, 0), (0, 0, c, 0), (a, 0, 0, 1)]
    assert spec_violations(gens, b, (0, 0, 0, 1), ["a", "b", "c"]) == ["delta_not_in_gamma"]


def test_validate_raises_and_delta_zero():
    with pytest.raises(InvalidSpecError) as err:
        validate_spec([(1, 0, 0, 0), (0, 0, 1, 0)], 1, (0, 0, 0, 0))
    assert err.value.violations == ["J2_must_be_N", "J4_must_be_N"]
    with pytest.raises(DeltaZero):
        validate_spec(Z4, 0, (0, 0, 0, 0))
    assert spec_violations([unit(2), unit(4), unit(3)], 1, (1, 1, 1, 1)) == ["sigma_not_in_gamma"]


def test_subgroup_equal_examples():
    assert subgroup_equal(GammaSpec(Z4), GammaSpec(list(reversed(Z4))))
    assert not subgroup_equal(GammaSpec(Z4), GammaSpec([unit(1, 2), unit(2), unit(3), unit(4)]))
    assert subgroup_equal(GammaSpec(SIG_K), GammaSpec([(1, 0, 0, 0), (0, 0, 1, 0)]))


def test_config_json():
    cfg = {"indeterminates": ["a"], "delta3": "a", "generators": [["1", "0", "1", "0"], ["0", "0", "a", "0"]], "J": [0, 1, 0, 1]}
    spec = spec_from_dict(json.loads(json.dumps(cfg)))
    assert spec.rank == 2 and spec.delta_coords == (0, 1)
    assert spec_from_dict(spec.to_json()).gamma.basis == spec.gamma.basis
    with pytest.raises(ConfigError):
        spec_from_dict({"delta3": "1", "generators": [["1", "0"]], "J": [0, 0, 0, 0]})
    with pytest.raises(ConfigError):
        spec_from_dict({"indeterminates": ["t2"], "delta3": "1", "generators": [], "J": [0, 0, 0, 0]})


# -- properties ------------------------------------------------------------


@pytest.mark.parametrize("name", CONFIG_NAMES)
def test_canonical_basis_generates_same_group(name):
    spec = catalog.get(name)
    g = spec.gamma
    assert subgroup_equal(g, GammaSpec(g.generators))
    assert subgroup_equal(g, GammaSpec(g.basis))
    for gen, coords in g.expansion.items():
        assert g.element(coords) == gen


@pytest.mark.parametrize("name", CONFIG_NAMES)
@given(data=st.data())
def test_coordinates_round_trip(name, data):
    g = catalog.get(name).gamma
    coords = data.draw(st.tuples(*[st.integers(-50, 50) for _ in range(g.rank)]))
    assert g.coordinates_of(g.element(coords)) == coords


@pytest.mark.parametrize("name", CONFIG_NAMES)
def test_projection_kernel_rows_vanish(name):
    g = catalog.get(name).gamma
    for p in range(1, 5):
        for row in projection_kernel(g, p).rows:
            assert g.element(row)[p - 1] == 0


@given(st.lists(st.tuples(*[st.integers(-4, 4) for _ in range(4)]), min_size=1, max_size=5))
def test_canonical_basis_random_generators(gens):
    basis, expansion = canonical_basis(gens)
    g, h = GammaSpec(gens), GammaSpec(basis)
    assert subgroup_equal(g, h)
    for gen in gens:
        assert h.element(expansion[tuple(gen)]) == tuple(gen)
