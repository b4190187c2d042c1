"""Reproducibility audit of the quintic catalog.

Every check recomputes its quantities from scratch and compares them with the
reference data in ``catalog``. A check never adjusts itself to match: a
mismatch is reported as a failed check with enough detail to see why.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import catalog
from .core import (
    NormalizationCone,
    enumerate_monomials,
    lattice_contains,
    mu_monomial,
    same_ray,
    stabilizer_lattice,
)
from .families import (
    FamilyRecord,
    NonStable,
    Unstable,
    associated_flag,
    classify_support,
    label_families,
    maximal_nonstable_families,
    topmost_nonstable,
    verify_family,
)
from .linalg import project_out, rational_to_primitive
from .luna import (
    CentralizerContext,
    UnstablePoint,
    context_for_support,
    limit_support,
    luna_classify,
    sublevel_families,
    verify_verdict,
)
from .poset import hasse, leq, leq_oracle
from .strata import (
    StratGraph,
    build_stratification,
    canonicalize,
    label_index,
    replay_edges,
)

FIRST_LEVEL = ("MO-A", "MO-B", "MO-C", "MO-D")
SECOND_LEVEL = tuple(k for k in catalog.MINIMAL_ORBITS if k.startswith("MO2-"))
SINK = "MO2-V"


@dataclass(frozen=True)
class Check:
    key: str
    title: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"key": self.key, "title": self.title, "passed": self.passed, "details": self.details}

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.key}: {self.title}"


def _m(m) -> list[int]:
    return list(m)


# ------------------------------------------------------------------ shared data


def quintic_cone() -> NormalizationCone:
    return NormalizationCone.standard(catalog.N_VARS)


def quintic_universe() -> list:
    return sorted(enumerate_monomials(catalog.N_VARS, catalog.DEGREE), reverse=True)


@lru_cache(maxsize=None)
def top_records(certify: bool = True) -> tuple[FamilyRecord, ...]:
    known = {catalog.top_support(t.label): t.label for t in catalog.TOP_FAMILIES}
    recs = maximal_nonstable_families(quintic_universe(), quintic_cone(), certify=certify)
    return tuple(label_families(recs, known))


@lru_cache(maxsize=None)
def orbit_context(label: str) -> CentralizerContext:
    return context_for_support(catalog.orbit_support(label))


@lru_cache(maxsize=None)
def orbit_labels() -> dict:
    return label_index({k: catalog.orbit_support(k) for k in catalog.MINIMAL_ORBITS})


def degeneration_label(support, w) -> str | None:
    """Catalog name of the canonical limit of ``support`` along ``w``, if any."""
    return orbit_labels().get(canonicalize(limit_support(support, w)).support)


@lru_cache(maxsize=None)
def quintic_strata() -> StratGraph:
    seeds = [canonicalize(catalog.orbit_support(k), k) for k in FIRST_LEVEL]
    return build_stratification(seeds, orbit_labels())


# ------------------------------------------------------------------ checks


def check_universe() -> Check:
    uni = quintic_universe()
    cone = quintic_cone()
    disagree = [
        (_m(a), _m(b)) for a in uni for b in uni if leq(a, b, cone) != leq_oracle(a, b, cone)
    ]
    p = hasse(uni, cone)
    mx, mn = p.maximal(), p.minimal()
    ok = len(uni) == 126 and not disagree and mx == [(5, 0, 0, 0, 0)] and mn == [(0, 0, 0, 0, 5)]
    return Check(
        "universe",
        "quintic monomials and their dominance order",
        ok,
        {
            "monomials": len(uni),
            "pairs_compared": len(uni) ** 2,
            "oracle_disagreements": disagree[:10],
            "maximal": [_m(m) for m in mx],
            "minimal": [_m(m) for m in mn],
            "covers": len(p.covers),
        },
    )


def check_topmost() -> Check:
    p = hasse(quintic_universe(), quintic_cone())
    got = sorted(topmost_nonstable(p), reverse=True)
    want = sorted(catalog.TOPMOST_NONSTABLE, reverse=True)
    return Check(
        "topmost",
        "topmost non-stable monomials",
        got == want,
        {"computed": [_m(m) for m in got], "expected": [_m(m) for m in want]},
    )


def check_top_families() -> Check:
    recs = top_records()
    uni, cone = quintic_universe(), quintic_cone()
    by_support = {r.support: r for r in recs}
    rows = {}
    for t in catalog.TOP_FAMILIES:
        s = catalog.top_support(t.label)
        r = by_support.get(s)
        rows[t.label] = {
            "support_size": len(s),
            "found": r is not None,
            "destabilizer": list(r.destabilizer) if r else None,
            "matches_listed_destabilizer": bool(r and same_ray(r.destabilizer, t.destabilizer)),
            "certified": bool(r and verify_family(r, uni, cone)),
            "excluded_monomials_certified": len(r.maximality) if r else 0,
        }
    others = [r for r in recs if r.label is None]
    all_certified = all(verify_family(r, uni, cone) for r in others)
    listed_ok = all(
        v["found"] and v["matches_listed_destabilizer"] and v["certified"] for v in rows.values()
    )
    ok = listed_ok and len(recs) == len(catalog.TOP_FAMILIES) and all_certified
    return Check(
        "families",
        "maximal non-stable families of quintics",
        ok,
        {
            "computed_count": len(recs),
            "expected_count": len(catalog.TOP_FAMILIES),
            "listed": rows,
            "additional": [
                {
                    "destabilizer": list(r.destabilizer),
                    "support_size": len(r.support),
                    "maximal_monomials": [_m(m) for m in r.maximal_monomials],
                }
                for r in others
            ],
            "additional_all_certified": all_certified,
        },
    )


def check_flags() -> Check:
    rows = {}
    for t in catalog.TOP_FAMILIES:
        got = associated_flag(t.destabilizer)
        rows[t.label] = {"computed": [list(s) for s in got], "expected": [list(s) for s in t.flag], "match": got == t.flag}
    return Check("flags", "destabilizing flags", all(r["match"] for r in rows.values()), rows)


def check_degenerations() -> Check:
    rows = {}
    for t in catalog.TOP_FAMILIES:
        got = degeneration_label(catalog.top_support(t.label), t.destabilizer)
        rows[t.label] = {"computed": got, "expected": t.degeneration, "match": got == t.degeneration}
    targets = sorted({t.degeneration for t in catalog.TOP_FAMILIES})
    return Check(
        "degenerations",
        "limits of the maximal families",
        all(r["match"] for r in rows.values()) and targets == list(FIRST_LEVEL),
        {"families": rows, "distinct_targets": targets},
    )


def invariant_report(label: str) -> dict:
    """Compare a listed invariant weight with the computed stabilizer lattice."""
    s = catalog.orbit_support(label)
    h = catalog.LISTED_INVARIANT[label]
    lat = stabilizer_lattice(s)
    mus = sorted({mu_monomial(m, h) for m in s})
    member = lattice_contains(lat, h)
    out = {
        "listed": list(h),
        "lattice": [list(v) for v in lat],
        "rank": len(lat),
        "member": member,
        "sum": sum(h),
        "weights_on_support": mus,
    }
    if not member:
        reasons = []
        if sum(h):
            reasons.append("entries do not sum to zero")
        if len(mus) > 1:
            reasons.append("weights differ across the support")
        out["reasons"] = reasons
        # orthogonal projection of h onto the span of the lattice
        proj = [x - y for x, y in zip(h, project_out(h, lat))]
        cand = rational_to_primitive(proj) if any(proj) else None
        out["replacement"] = list(cand if cand and lattice_contains(lat, cand) else lat[0])
    return out


def check_invariants() -> Check:
    rows = {k: invariant_report(k) for k in catalog.LISTED_INVARIANT}
    flagged = sorted(k for k, r in rows.items() if not r["member"])
    expected_flagged = ["MO2-I", "MO2-V"]
    replacements_ok = all(
        lattice_contains(r["lattice"], r["replacement"]) for r in rows.values() if not r["member"]
    )
    return Check(
        "invariants",
        "invariant weights lie in the stabilizer lattices",
        flagged == expected_flagged and replacements_ok,
        {"families": rows, "flagged": flagged, "expected_flagged": expected_flagged},
    )


def printed_witness_report(label: str) -> dict:
    sub = catalog.sub_family(label)
    w = catalog.SUB_DESTABILIZERS.get(label)
    s = catalog.expand(sub.expression).support
    mus = [mu_monomial(m, w) for m in s]
    return {
        "weight": list(w),
        "support_size": len(s),
        "max_weight": max(mus),
        "ok": max(mus) == 0,
    }


def check_sublevel() -> Check:
    counts, witnesses = {}, {}
    for k in FIRST_LEVEL:
        semi, unst = sublevel_families(orbit_context(k), certify=False)
        counts[k] = {
            "computed": len(semi),
            "expected": catalog.EXPECTED_SUBLEVEL_COUNTS[k],
            "unstable_computed": len(unst),
            "destabilizers": [list(r.destabilizer) for r in semi],
        }
        for sub in catalog.sub_families(k, unstable=False):
            if catalog.SUB_DESTABILIZERS.get(sub.label):
                witnesses[sub.label] = printed_witness_report(sub.label)
    counts_ok = all(v["computed"] == v["expected"] for v in counts.values())
    wit_ok = all(v["ok"] for v in witnesses.values())
    return Check(
        "sublevel",
        "semistable sub-families of the first-level orbits",
        counts_ok and wit_ok,
        {"counts": counts, "counts_match": counts_ok, "witnesses": witnesses, "witnesses_match": wit_ok},
    )


def check_unstable() -> Check:
    rows = {}
    for sub in catalog.SUB_FAMILIES:
        if not sub.unstable:
            continue
        ctx = orbit_context(sub.context)
        s = catalog.expand(sub.expression).support
        inside = s & ctx.invariant_universe
        row: dict = {"context": sub.context, "support_size": len(s), "outside_fixed_space": [_m(m) for m in sorted(s - inside, reverse=True)]}
        if not inside:
            row.update(verdict=None, certified=False)
        else:
            v = luna_classify(inside, ctx)
            row["verdict"] = type(v).__name__
            row["certified"] = isinstance(v, UnstablePoint) and verify_verdict(inside, ctx, v)
            if isinstance(v, UnstablePoint):
                row["weight"] = list(v.weight)
        rows[sub.label] = row
    failed = sorted(k for k, r in rows.items() if not r["certified"])
    return Check(
        "unstable",
        "listed unstable sub-families are certified unstable",
        not failed,
        {"families": rows, "uncertified": failed, "total": len(rows)},
    )


def check_strata() -> Check:
    g = quintic_strata()
    sinks = [g.name(s) for s in g.sinks()]
    pairs = g.labelled_pairs()
    missing = [list(e) for e in catalog.EXPECTED_EDGES if e not in pairs]
    sink = g.find(SINK)
    reach = {}
    for k in SECOND_LEVEL:
        node = g.find(k)
        if node is not None:
            reach[k] = {"in_graph": True, "reaches_sink": sink is not None and g.reaches(node, sink)}
        else:
            # not produced from the seeds; test reachability from the family itself
            sub = build_stratification([canonicalize(catalog.orbit_support(k), k)], orbit_labels())
            target = sub.find(SINK)
            reach[k] = {
                "in_graph": False,
                "reaches_sink": target is not None and sub.reaches(sub.find(k), target),
            }
    replays = replay_edges(g)
    monotone = all(
        len(stabilizer_lattice(e.target)) > len(stabilizer_lattice(e.source)) for e in g.edges
    )
    expected = set(catalog.EXPECTED_EDGES)
    extras = sorted(
        [a, b] for (a, b) in g.edge_pairs() if a in catalog.MINIMAL_ORBITS or b in catalog.MINIMAL_ORBITS
        if not any((x, y) in expected for x in a.split("=") for y in b.split("="))
    )
    ok = (
        not missing
        and sinks == [SINK]
        and g.is_acyclic()
        and all(r for *_, r in replays)
        and all(v["reaches_sink"] and v["in_graph"] for v in reach.values())
    )
    return Check(
        "strata",
        "degeneration graph of the boundary families",
        ok,
        {
            "nodes": len(g.nodes),
            "edges": len(g.edges),
            "sinks": sinks,
            "acyclic": g.is_acyclic(),
            "missing_edges": missing,
            "reachability": reach,
            "replayed": sum(1 for *_, r in replays if r),
            "stabilizer_rank_increases": monotone,
            "extra_labelled_edges": extras,
            "unlabelled_nodes": sum(1 for c in g.nodes if g.nodes[c].label is None),
        },
    )


# ------------------------------------------------------------------ binary forms


def brute_force_verdict(support, degree: int) -> str:
    """Binary forms: scan all nonzero sum-zero weights (a, -a) with |a| <= 3d."""
    best = None
    for a in range(-3 * degree, 3 * degree + 1):
        if a == 0:
            continue
        mu = max(m[0] * a - m[1] * a for m in support)
        best = mu if best is None else min(best, mu)
    if best < 0:
        return "unstable"
    return "non-stable" if best == 0 else "stable"


def _verdict_name(v) -> str:
    if isinstance(v, Unstable):
        return "unstable"
    return "non-stable" if isinstance(v, NonStable) else "stable"


def check_binary_forms(degrees: tuple[int, ...] = (4, 5, 6), max_size: int = 3) -> Check:
    rows = {}
    bad = []
    for d in degrees:
        uni = enumerate_monomials(2, d)
        cone = NormalizationCone.standard(2)
        n = 0
        for k in range(1, max_size + 1):
            for s in combinations(uni, k):
                n += 1
                got = _verdict_name(classify_support(s, uni, cone))
                want = brute_force_verdict(s, d)
                if got != want:
                    bad.append({"degree": d, "support": [_m(m) for m in s], "computed": got, "oracle": want})
        rows[str(d)] = n
    return Check(
        "binary-forms",
        "binary forms agree with exhaustive weight search",
        not bad,
        {"supports_checked": rows, "disagreements": bad},
    )


# ------------------------------------------------------------------ bundle

CHECKS = (
    check_universe,
    check_topmost,
    check_top_families,
    check_flags,
    check_degenerations,
    check_invariants,
    check_sublevel,
    check_unstable,
    check_strata,
    check_binary_forms,
)


def run_all() -> list[Check]:
    return [c() for c in CHECKS]


def report(checks: list[Check]) -> dict:
    return {"passed": all(c.passed for c in checks), "checks": [c.to_json() for c in checks]}


def dumps(checks: list[Check]) -> str:
    return json.dumps(report(checks), sort_keys=True, indent=1)


def summary(checks: list[Check]) -> str:
    return "\n".join(c.line() for c in checks)

