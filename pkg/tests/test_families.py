import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gitstab.core import NormalizationCone, enumerate_monomials, mu_monomial
from gitstab.families import (
    NonStable,
    Stable,
    Unstable,
    associated_flag,
    classify_support,
    family_of,
    ideal_power_predicate,
    maximal_nonstable_families,
    topmost_nonstable,
    verdict_to_json,
    verify_family,
)
from gitstab.poset import hasse
from oracles import maximal_families, torus_verdict


@pytest.mark.parametrize("n,d", [(3, 3), (3, 4), (4, 3), (3, 5), (4, 4)])
@pytest.mark.parametrize("strict", [False, True])
def test_families_match_box_search(n, d, strict):
    got = maximal_nonstable_families(enumerate_monomials(n, d), NormalizationCone.standard(n), strict, certify=False)
    assert {r.support for r in got} == maximal_families(n, d, 10, strict)


def test_quintic_family_count_matches_independent_search():
    uni = enumerate_monomials(5, 5)
    got = maximal_nonstable_families(uni, NormalizationCone.standard(5), certify=False)
    assert {r.support for r in got} == maximal_families(5, 5, 40)
    assert len(got) == 38


@pytest.mark.parametrize("n,d", [(3, 4), (4, 3)])
def test_certificates_verify(n, d):
    cone = NormalizationCone.standard(n)
    uni = enumerate_monomials(n, d)
    for strict in (False, True):
        for r in maximal_nonstable_families(uni, cone, strict):
            assert verify_family(r, uni, cone)
            assert len(r.maximality) == len(uni) - len(r.support)


def test_family_of_rejects_zero_weight():
    with pytest.raises(ValueError):
        family_of((0, 0, 0), enumerate_monomials(3, 2))


def test_topmost_quintic_monomials():
    p = hasse(enumerate_monomials(5, 5), NormalizationCone.standard(5))
    assert set(topmost_nonstable(p)) == {(3, 0, 0, 2, 0), (4, 0, 0, 0, 1), (2, 0, 3, 0, 0), (1, 4, 0, 0, 0)}


@pytest.mark.parametrize(
    "w,flag",
    [
        ((1, 0, 0, 0, -1), ((1, 2, 3, 4), (4,))),
        ((4, -1, -1, -1, -1), ((1, 2, 3, 4),)),
        ((2, 2, 2, -3, -3), ((3, 4),)),
        ((4, 4, -1, -1, -6), ((2, 3, 4), (4,))),
    ],
)
def test_flags(w, flag):
    assert associated_flag(w) == flag


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_flag_is_strictly_nested(v):
    w = tuple(sorted(v + [-sum(v)], reverse=True))
    if not any(w):
        return
    flag = associated_flag(w)
    for a, b in zip(flag, flag[1:]):
        assert set(b) < set(a)
    assert all(0 < len(s) < 5 for s in flag)


UNI33 = enumerate_monomials(3, 3)


@given(st.sets(st.sampled_from(UNI33), min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_classification_matches_unnormalized_search(s):
    v = classify_support(s, UNI33, NormalizationCone.standard(3))
    name = {Stable: "stable", NonStable: "non-stable", Unstable: "unstable"}[type(v)]
    assert name == torus_verdict(s, 3, 9)
    if not isinstance(v, Stable):
        mus = [mu_monomial(m, v.weight) for m in s]
        assert max(mus) <= (-1 if isinstance(v, Unstable) else 0)


def test_classify_examples():
    uni = enumerate_monomials(5, 5)
    cone = NormalizationCone.standard(5)
    fermat = [tuple(5 if i == j else 0 for i in range(5)) for j in range(5)]
    assert isinstance(classify_support(fermat, uni, cone), Stable)
    v = classify_support([(5, 0, 0, 0, 0)], uni, cone)
    assert isinstance(v, Unstable)
    assert verdict_to_json(v)["verdict"] == "unstable"
    with pytest.raises(ValueError):
        classify_support([], uni, cone)


def test_ideal_power_predicate():
    s = [(3, 0, 0, 2, 0), (2, 1, 0, 2, 0)]
    assert ideal_power_predicate(s, [1, 2, 3, 4], 2)
    assert not ideal_power_predicate(s, [1, 2, 3, 4], 3)
    with pytest.raises(ValueError):
        ideal_power_predicate(s, [0], 0)


def test_each_family_is_a_downset():
    from gitstab.poset import leq

    cone = NormalizationCone.standard(4)
    uni = enumerate_monomials(4, 4)
    for r in maximal_nonstable_families(uni, cone, certify=False):
        for a, b in itertools.product(uni, r.support):
            if leq(a, b, cone):
                assert a in r.support
