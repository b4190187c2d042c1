"""Maximal non-stable (and unstable) families, flags and support classification."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

from .arrangement import cell_points, cone_rays
from .core import (
    Monomial,
    NormalizationCone,
    Weight,
    mu_monomial,
    permute_support,
    pull_back_weight,
)
from .linalg import primitive
from .lp import (
    Certificate,
    FeasibilityQuery,
    Feasible,
    Infeasible,
    certificate_to_json,
    find_weight,
    verify_certificate,
)
from .poset import leq

Flag = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FamilyRecord:
    support: frozenset
    destabilizer: Weight
    maximal_monomials: tuple[Monomial, ...]
    flag: Flag
    label: str | None = None
    strict: bool = False
    # excluded monomial -> certificate that adding it admits no destabilizer
    maximality: Mapping[Monomial, Infeasible] = field(default_factory=dict, compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "strict": self.strict,
            "destabilizer": list(self.destabilizer),
            "maximal_monomials": [list(m) for m in self.maximal_monomials],
            "support": [list(m) for m in sorted(self.support, reverse=True)],
            "flag": [list(s) for s in self.flag],
        }


def family_of(w: Sequence[int], universe: Iterable[Monomial], strict: bool = False) -> frozenset:
    """Monomials with mu <= 0 (mu < 0 when ``strict``) against w."""
    if not any(w):
        raise ValueError("zero weight vector")
    bound = -1 if strict else 0
    return frozenset(m for m in universe if mu_monomial(m, w) <= bound)


def destabilizing_query(support: Iterable[Monomial], cone: NormalizationCone, strict: bool = False) -> FeasibilityQuery:
    s = frozenset(support)
    if strict:
        return FeasibilityQuery(cone, nonpositive=s, strict=s, nontrivial=True)
    return FeasibilityQuery(cone, nonpositive=s, nontrivial=True)


def maximal_elements(support: Iterable[Monomial], cone: NormalizationCone) -> tuple[Monomial, ...]:
    s = sorted(set(support), reverse=True)
    return tuple(m for m in s if not any(o != m and leq(m, o, cone) for o in s))


def topmost_nonstable(poset) -> list[Monomial]:
    """Monomials admitting a destabilizer on their own while none of their strict ancestors do."""
    ok: dict[Monomial, bool] = {}
    for m in poset.universe:  # sorted from the top
        ok[m] = isinstance(find_weight(destabilizing_query([m], poset.cone), minimal=False), Feasible)
    return sorted(
        (m for m in poset.universe if ok[m] and not any(ok[a] for a in poset.above(m) if a != m)),
        reverse=True,
    )


def associated_flag(w: Sequence[int]) -> Flag:
    """Coordinate subspaces spanned by the top weight groups, each given by its vanishing coordinates.

    The empty subspace and the whole space are left implicit.
    """
    if not any(w):
        raise ValueError("zero weight vector")
    values = sorted(set(w), reverse=True)
    n = len(w)
    out = []
    kept: set[int] = set()
    for v in values[:-1]:
        kept |= {i for i in range(n) if w[i] == v}
        out.append(tuple(i for i in range(n) if i not in kept))
    return tuple(out)


def _candidates(universe: list[Monomial], cone: NormalizationCone, strict: bool) -> list[Weight]:
    rays = cone_rays(universe, cone)
    return cell_points(universe, cone, rays) if strict else rays


def maximal_nonstable_families(
    universe: Iterable[Monomial],
    cone: NormalizationCone,
    strict: bool = False,
    certify: bool = True,
) -> list[FamilyRecord]:
    """All inclusion-maximal sets M_{<=0}(w) (M_{<0}(w) when ``strict``) over w in the cone.

    Candidates come from the rays (non-strict) or open cells (strict) of the
    arrangement of monomial hyperplanes; each survivor gets a minimal
    destabilizer and, when ``certify``, one infeasibility certificate per
    excluded monomial.
    """
    universe = sorted(set(universe), reverse=True)
    fams = {family_of(w, universe, strict) for w in _candidates(universe, cone, strict)}
    fams.discard(frozenset())
    ordered = sorted(fams, key=len, reverse=True)
    maximal: list[frozenset] = []
    for f in ordered:
        if not any(f < g for g in maximal):
            maximal.append(f)
    records = []
    for f in maximal:
        cert = find_weight(destabilizing_query(f, cone, strict))
        if not isinstance(cert, Feasible) or family_of(cert.weight, universe, strict) != f:
            raise AssertionError("destabilizer does not reproduce its family")
        proofs: dict[Monomial, Infeasible] = {}
        if certify:
            for m in universe:
                if m in f:
                    continue
                c = find_weight(destabilizing_query(f | {m}, cone, strict), minimal=False)
                if not isinstance(c, Infeasible):
                    raise AssertionError(f"family is not maximal: {m} can be added")
                proofs[m] = c
        records.append(
            FamilyRecord(
                support=f,
                destabilizer=cert.weight,
                maximal_monomials=maximal_elements(f, cone),
                flag=associated_flag(cert.weight),
                strict=strict,
                maximality=proofs,
            )
        )
    return sorted(records, key=lambda r: (-len(r.support), r.maximal_monomials))


def verify_family(rec: FamilyRecord, universe: Iterable[Monomial], cone: NormalizationCone) -> bool:
    """Re-check the destabilizer and every maximality certificate from scratch."""
    universe = list(universe)
    q = destabilizing_query(rec.support, cone, rec.strict)
    if not verify_certificate(q, Feasible(rec.destabilizer)):
        return False
    if family_of(rec.destabilizer, universe, rec.strict) != rec.support:
        return False
    outside = [m for m in universe if m not in rec.support]
    if set(rec.maximality) != set(outside):
        return False
    return all(
        verify_certificate(destabilizing_query(rec.support | {m}, cone, rec.strict), c)
        for m, c in rec.maximality.items()
    )


def label_families(records: Iterable[FamilyRecord], known: Mapping[frozenset, str]) -> list[FamilyRecord]:
    return [replace(r, label=known.get(r.support, r.label)) for r in records]


# ---------------------------------------------------------------- classification


@dataclass(frozen=True)
class Stable:
    """No diagonal destabilizer after any coordinate permutation (torus-level certificate)."""

    certificates: tuple  # ((permutation, Infeasible), ...) one per distinct permuted support


@dataclass(frozen=True)
class NonStable:
    weight: Weight  # in the original coordinates
    permutation: tuple[int, ...]
    normalized: Weight  # cone weight for the permuted support
    families: tuple[str, ...] = ()


@dataclass(frozen=True)
class Unstable:
    weight: Weight
    permutation: tuple[int, ...]
    normalized: Weight
    families: tuple[str, ...] = ()


Verdict = Union[Stable, NonStable, Unstable]


def classify_support(
    support: Iterable[Monomial],
    universe: Iterable[Monomial],
    cone: NormalizationCone,
    families: Sequence[FamilyRecord] = (),
    perms: Sequence[Sequence[int]] | None = None,
) -> Verdict:
    """Strongest torus verdict over all coordinate permutations of the support.

    Permutations are tried in lexicographic order; the first one admitting a
    witness wins. ``families`` are used only to name containing families.
    """
    s = frozenset(support)
    uni = set(universe)
    if not s:
        raise ValueError("empty support")
    if not s <= uni:
        raise ValueError("support is not contained in the universe")
    n = cone.n_vars
    perms = sorted(tuple(p) for p in (perms if perms is not None else permutations(range(n))))
    moved: dict[frozenset, tuple[int, ...]] = {}
    for p in perms:
        moved.setdefault(permute_support(s, p), p)
    infeasible = []
    for strict, kind in ((True, Unstable), (False, NonStable)):
        for t, p in moved.items():
            cert = find_weight(destabilizing_query(t, cone, strict))
            if isinstance(cert, Feasible):
                names = tuple(
                    r.label or "unlabelled" for r in families if r.strict == strict and t <= r.support
                )
                return kind(pull_back_weight(cert.weight, p), p, cert.weight, names)
            if not strict:
                infeasible.append((p, cert))
    return Stable(tuple(infeasible))


def verdict_to_json(v: Verdict) -> dict:
    if isinstance(v, Stable):
        return {
            "verdict": "stable",
            "scope": "torus-diagonal certificate after coordinate permutation",
            "certificates": len(v.certificates),
        }
    return {
        "verdict": "unstable" if isinstance(v, Unstable) else "non-stable",
        "weight": list(v.weight),
        "permutation": list(v.permutation),
        "normalized_weight": list(v.normalized),
        "families": list(v.families),
    }


def ideal_power_predicate(support: Iterable[Monomial], coords: Iterable[int], p: int) -> bool:
    """Every monomial has total degree at least p in the given variables."""
    if p < 1:
        raise ValueError("p must be positive")
    cs = list(coords)
    return all(sum(m[i] for i in cs) >= p for m in support)


def certificate_json(c: Certificate) -> dict:
    return certificate_to_json(c)
