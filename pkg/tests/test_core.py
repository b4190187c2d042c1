import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gitstab.core import (
    NormalizationCone,
    check_monomial,
    coordinate_blocks,
    enumerate_monomials,
    lattice_contains,
    mu_monomial,
    mu_support,
    permute_monomial,
    permute_support,
    pull_back_weight,
    same_ray,
    stabilizer_lattice,
    weight,
)
from oracles import monomials


@pytest.mark.parametrize("n,d", [(1, 3), (2, 5), (3, 4), (4, 3), (5, 5)])
def test_enumeration_matches_product_filter(n, d):
    got = enumerate_monomials(n, d)
    assert len(got) == math.comb(n + d - 1, d)
    assert sorted(got, reverse=True) == monomials(n, d)


def test_check_monomial_rejects_bad_input():
    with pytest.raises(ValueError):
        check_monomial((1, -1, 5))
    with pytest.raises(ValueError):
        check_monomial((1, 1), degree=3)
    assert check_monomial([2, 3], n_vars=2, degree=5) == (2, 3)


def test_weight_requires_sum_zero_and_is_primitive():
    assert weight((2, 2, -4)) == (1, 1, -2)
    with pytest.raises(ValueError):
        weight((1, 0, 0))


def test_mu_of_support_is_maximum():
    s = [(5, 0, 0, 0, 0), (0, 0, 0, 0, 5)]
    assert mu_monomial((3, 0, 0, 2, 0), (1, 1, 1, -1, -2)) == 1
    assert mu_support(s, (1, 0, 0, 0, -1)) == 5
    with pytest.raises(ValueError):
        mu_support([], (1, -1))


weights5 = st.lists(st.integers(-6, 6), min_size=4, max_size=4).map(lambda v: tuple(v) + (-sum(v),))
supports5 = st.sets(st.sampled_from(enumerate_monomials(5, 5)), min_size=1, max_size=8)
perms5 = st.permutations(range(5)).map(tuple)


@given(supports5, weights5, perms5)
def test_pull_back_weight_transports_mu(s, w, p):
    assert mu_support(permute_support(s, p), w) == mu_support(s, pull_back_weight(w, p))


@given(st.lists(st.integers(0, 5), min_size=5, max_size=5), perms5)
def test_permutation_preserves_degree(m, p):
    assert sorted(permute_monomial(m, p)) == sorted(m)


@given(supports5)
@settings(max_examples=60)
def test_stabilizer_lattice_equalizes_support(s):
    lat = stabilizer_lattice(s)
    for v in lat:
        assert sum(v) == 0
        assert len({mu_monomial(m, v) for m in s}) == 1
    # rank = n - 1 - rank of the differences
    import numpy as np

    diffs = [[a - b for a, b in zip(m, next(iter(s)))] for m in s]
    rk = np.linalg.matrix_rank(np.array(diffs + [[1] * 5], dtype=float))
    assert len(lat) == 5 - rk


@given(supports5, weights5)
@settings(max_examples=60)
def test_lattice_membership_is_equalization(s, w):
    equal = len({mu_monomial(m, w) for m in s}) == 1
    assert lattice_contains(stabilizer_lattice(s), w) == equal


def test_same_ray():
    assert same_ray((2, -2), (1, -1))
    assert not same_ray((1, -1), (-1, 1))


def test_coordinate_blocks_group_equal_columns():
    assert coordinate_blocks([(3, 3, -2, -2, -2)], 5) == ((0, 1), (2, 3, 4))
    assert coordinate_blocks([], 3) == ((0, 1, 2),)


def test_cone_membership_and_leaders():
    cone = NormalizationCone.standard(5)
    assert cone.contains((4, -1, -1, -1, -1))
    assert not cone.contains((-1, 4, -1, -1, -1))
    assert cone.dim == 4
    blocked = NormalizationCone(5, ((0, 1), (2, 3, 4)), ((3, 3, -2, -2, -2),))
    assert blocked.contains((1, -1, 4, -1, -3))
    assert not blocked.contains((3, 3, -2, -2, -2))
    assert blocked.dim == 3
    assert blocked.leaders() == [0, 2]
    assert len(blocked.block_permutations()) == 2 * 6
