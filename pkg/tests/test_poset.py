import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gitstab.core import NormalizationCone, enumerate_monomials
from gitstab.poset import downset, hasse, leq, leq_blocks, leq_oracle, order_matrix, transitive_closure_of_covers
from oracles import leq_by_partial_sums


@pytest.mark.parametrize("n,d", [(3, 4), (4, 3), (3, 5)])
def test_leq_matches_partial_sums_and_lp(n, d):
    cone = NormalizationCone.standard(n)
    uni = enumerate_monomials(n, d)
    for a, b in itertools.product(uni, repeat=2):
        expect = leq_by_partial_sums(a, b)
        assert leq(a, b, cone) == expect
        assert leq_oracle(a, b, cone) == expect


def test_blocked_order_requires_equal_block_degrees():
    blocks = ((0, 1), (2, 3, 4))
    assert leq_blocks((1, 1, 1, 1, 1), (2, 0, 1, 1, 1), blocks)
    assert not leq_blocks((1, 1, 1, 1, 1), (3, 0, 0, 1, 1), blocks)


def test_blocked_order_agrees_with_lp():
    cone = NormalizationCone(4, ((0, 1), (2, 3)), ((1, 1, -1, -1),))
    uni = [m for m in enumerate_monomials(4, 4) if m[0] + m[1] == 2]
    for a, b in itertools.product(uni, repeat=2):
        assert leq(a, b, cone) == leq_oracle(a, b, cone)


def test_two_variable_order_is_a_chain():
    p = hasse(enumerate_monomials(2, 5), NormalizationCone.standard(2))
    assert len(p.covers) == 5
    assert p.maximal() == [(5, 0)] and p.minimal() == [(0, 5)]


@pytest.mark.parametrize("n,d", [(3, 4), (4, 4), (5, 3)])
def test_covers_generate_the_order(n, d):
    cone = NormalizationCone.standard(n)
    p = hasse(enumerate_monomials(n, d), cone)
    assert (transitive_closure_of_covers(p) == order_matrix(p.universe, cone)).all()


@given(st.sets(st.sampled_from(enumerate_monomials(4, 4)), min_size=1, max_size=4))
def test_downset_is_closed_below(tops):
    p = hasse(enumerate_monomials(4, 4), NormalizationCone.standard(4))
    ds = downset(p, tops)
    for m in p.universe:
        assert (m in ds) == any(leq_by_partial_sums(m, t) for t in tops)


def test_dot_lists_every_node():
    p = hasse(enumerate_monomials(3, 3), NormalizationCone.standard(3))
    dot = p.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == len(p.covers)
    assert sum(1 for line in dot.splitlines() if line.strip().endswith('";') and "->" not in line) == 10


def test_order_is_antisymmetric():
    cone = NormalizationCone.standard(4)
    R = order_matrix(enumerate_monomials(4, 4), cone)
    assert not (R & R.T & ~np.eye(len(R), dtype=bool)).any()
