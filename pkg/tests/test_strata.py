import json

from hypothesis import given, settings
from hypothesis import strategies as st

from gitstab import audit, catalog
from gitstab.core import enumerate_monomials, permute_support, stabilizer_lattice
from gitstab.strata import build_stratification, canonicalize, dumps, label_index, replay_edges

UNI = enumerate_monomials(5, 5)


@given(st.sets(st.sampled_from(UNI), min_size=1, max_size=6), st.permutations(range(5)))
@settings(max_examples=60)
def test_canonical_form_is_permutation_invariant(s, p):
    a = canonicalize(s)
    b = canonicalize(permute_support(s, p))
    assert a.support == b.support
    for q in a.witnesses:
        assert tuple(sorted(permute_support(s, q))) == a.support


def test_label_index_joins_relabelled_families():
    idx = label_index({k: catalog.orbit_support(k) for k in catalog.MINIMAL_ORBITS})
    assert "MO2-I=MO2-VII" in idx.values()
    assert len(idx) == len(catalog.MINIMAL_ORBITS) - 1


def test_quintic_graph_structure():
    g = audit.quintic_strata()
    assert g.is_acyclic()
    assert [g.name(s) for s in g.sinks()] == ["MO2-V"]
    sink = g.find("MO2-V")
    assert sink == ((1, 1, 1, 1, 1),)
    assert all(g.reaches(c, sink) for c in g.nodes)
    assert all(ok for *_, ok in replay_edges(g))
    for e in g.edges:
        assert len(stabilizer_lattice(e.target)) > len(stabilizer_lattice(e.source))
    for k in ("MO-A", "MO-B", "MO-C", "MO-D"):
        assert g.find(k) in g.closed


def test_graph_serialization_is_deterministic():
    seeds = [canonicalize(catalog.orbit_support("MO-D"), "MO-D")]
    labels = label_index({k: catalog.orbit_support(k) for k in catalog.MINIMAL_ORBITS})
    a = dumps(build_stratification(seeds, labels))
    b = dumps(build_stratification(seeds, labels))
    assert a == b
    data = json.loads(a)
    names = {n["name"] for n in data["nodes"]}
    assert {e["source"] for e in data["edges"]} <= names
    assert "digraph" in build_stratification(seeds, labels).to_dot()
