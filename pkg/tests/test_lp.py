from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gitstab.core import NormalizationCone, enumerate_monomials
from gitstab.lp import (
    FarkasBranch,
    FeasibilityQuery,
    Feasible,
    Infeasible,
    certificate_to_json,
    find_weight,
    is_feasible,
    satisfies,
    verify_certificate,
)
from oracles import normalized_weights

CONE4 = NormalizationCone.standard(4)
UNI = enumerate_monomials(4, 3)
BOX = normalized_weights(4, 9)  # small weights suffice for degree-3 hyperplane vertices


def brute(q: FeasibilityQuery) -> bool:
    U = np.array(sorted(q.nonpositive | q.strict), dtype=np.int64).reshape(-1, 4)
    mu = U @ BOX
    ok = np.ones(BOX.shape[1], dtype=bool)
    for i, m in enumerate(sorted(q.nonpositive | q.strict)):
        ok &= mu[i] <= (-1 if m in q.strict else 0)
    return bool(ok.any())


@given(st.sets(st.sampled_from(UNI), min_size=1, max_size=7), st.booleans())
@settings(max_examples=150, deadline=None)
def test_feasibility_agrees_with_box_search(s, strict):
    q = FeasibilityQuery(CONE4, nonpositive=s, strict=s if strict else frozenset(), nontrivial=True)
    cert = find_weight(q)
    assert verify_certificate(q, cert)
    assert isinstance(cert, Feasible) == brute(q)
    if isinstance(cert, Feasible):
        assert satisfies(q, cert.weight)


def test_minimal_witness_has_least_max_norm():
    s = frozenset({(0, 0, 0, 3), (0, 0, 1, 2)})
    q = FeasibilityQuery(CONE4, nonpositive=s, nontrivial=True)
    cert = find_weight(q)
    assert cert.minimal
    assert max(map(abs, cert.weight)) == 1


def test_infeasible_certificate_json_and_tamper():
    q = FeasibilityQuery(CONE4, nonpositive={(3, 0, 0, 0)}, nontrivial=True)
    cert = find_weight(q)
    assert isinstance(cert, Infeasible)
    assert verify_certificate(q, cert)
    data = certificate_to_json(cert)
    assert data["feasible"] is False and len(data["branches"]) == len(cert.branches)
    br = cert.branches[0]
    bad = FarkasBranch(br.lead, tuple((lab, y * 2 if i == 0 else y) for i, (lab, y) in enumerate(br.multipliers)), br.equality)
    if len(br.multipliers) > 1:
        assert not verify_certificate(q, Infeasible((bad,) + cert.branches[1:]))
    negative = FarkasBranch(br.lead, ((br.multipliers[0][0], Fraction(-1)),) + br.multipliers[1:], br.equality)
    assert not verify_certificate(q, Infeasible((negative,) + cert.branches[1:]))


def test_feasible_certificate_must_satisfy():
    q = FeasibilityQuery(CONE4, nonpositive={(3, 0, 0, 0)})
    assert not verify_certificate(q, Feasible((1, 0, 0, -1)))
    assert verify_certificate(q, Feasible((0, 0, 0, 0)))


def test_some_negative_and_extra_rows():
    cone = NormalizationCone.standard(2)
    q = FeasibilityQuery(cone, nonpositive={(1, 1)}, some_negative={(1, 1)})
    assert not is_feasible(q)
    q = FeasibilityQuery(cone, nonpositive={(0, 2)}, some_negative={(0, 2)})
    assert is_feasible(q)
    q = FeasibilityQuery(cone, extra=(((-1, 1), -1),))
    assert is_feasible(q)


def test_query_validation():
    with pytest.raises(ValueError):
        FeasibilityQuery(CONE4, nonpositive={(1, 2)})
    with pytest.raises(ValueError):
        FeasibilityQuery(CONE4, nonpositive={(3, 0, 0, 0), (2, 0, 0, 0)})
    with pytest.raises(ValueError):
        FeasibilityQuery(CONE4, extra=(((1, 0, 0, -1), 1),))
