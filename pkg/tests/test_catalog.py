import pytest

from gitstab import catalog
from gitstab.core import mu_monomial


def test_top_family_sizes():
    sizes = {t.label: len(catalog.top_support(t.label)) for t in catalog.TOP_FAMILIES}
    assert sizes == {"SS1": 75, "SS2": 70, "SS3": 81, "SS4": 91, "SS5": 80, "SS6": 73, "SS7": 76}


def test_top_families_sit_below_their_destabilizers():
    for t in catalog.TOP_FAMILIES:
        mus = [mu_monomial(m, t.destabilizer) for m in catalog.top_support(t.label)]
        assert max(mus) == 0


def test_orbit_sizes():
    sizes = {k: len(catalog.orbit_support(k)) for k in ("MO-A", "MO-B", "MO-C", "MO-D", "MO2-V")}
    assert sizes == {"MO-A": 30, "MO-B": 34, "MO-C": 23, "MO-D": 35, "MO2-V": 1}


def test_expansion_records_dropped_terms():
    e = catalog.expand(catalog.sub_family("US3-II").expression)
    assert not e.support and e.dropped


def test_sub_family_lookup():
    f = catalog.sub_family("SS1-A")
    assert f.context == "MO-A" and not f.unstable
    assert catalog.sub_family("US1-IX").context == "MO2-IX"
    with pytest.raises(KeyError):
        catalog.sub_family("SS99-Z")
    assert all(f.unstable for f in catalog.sub_families("MO-C", unstable=True))
