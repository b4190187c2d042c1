"""Analysis inside the fixed subspace of a diagonal stabilizer.

A closed-orbit family is fixed by its diagonal stabilizer lattice K. Stability
of its members is decided by the centralizer of K acting on the monomials of
matching K-weight: weights are restricted to the orthogonal complement of the
trivially acting directions and normalized only inside blocks of coordinates
that K does not separate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import (
    Monomial,
    NormalizationCone,
    Weight,
    coordinate_blocks,
    enumerate_monomials,
    mu_monomial,
    mu_support,
    permute_support,
    pull_back_weight,
    stabilizer_lattice,
)
from .families import FamilyRecord, maximal_nonstable_families
from .lp import FeasibilityQuery, Feasible, Infeasible, find_weight, verify_certificate


@dataclass(frozen=True)
class CentralizerContext:
    h: tuple[Weight, ...]  # basis of the stabilizer lattice
    values: tuple[int, ...]  # common weight of the fixed family under each basis vector
    cone: NormalizationCone
    invariant_universe: frozenset
    degree: int

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.cone.blocks

    def to_json(self) -> dict:
        return {
            "h": [list(v) for v in self.h],
            "blocks": [list(b) for b in self.blocks],
            "universe_size": len(self.invariant_universe),
        }


def _context(lattice: Sequence[Weight], values: Sequence[int], n: int, degree: int) -> CentralizerContext:
    uni = frozenset(
        m for m in enumerate_monomials(n, degree)
        if all(mu_monomial(m, k) == v for k, v in zip(lattice, values))
    )
    if not uni:
        raise ValueError("no monomial has the required weights")
    blocks = coordinate_blocks(lattice, n)
    trivial = stabilizer_lattice(uni)
    for v in trivial:
        if any(len({v[i] for i in b}) > 1 for b in blocks):
            raise ValueError("trivially acting direction is not constant on centralizer blocks")
    cone = NormalizationCone(n, blocks, tuple(trivial))
    return CentralizerContext(tuple(lattice), tuple(values), cone, uni, degree)


def centralizer_context(h: Sequence[int], degree: int) -> CentralizerContext:
    """Context of a single one-parameter subgroup acting with weight 0."""
    h = tuple(int(x) for x in h)
    if not any(h):
        raise ValueError("zero weight vector")
    if sum(h) != 0:
        raise ValueError("weight does not sum to zero")
    return _context([h], [0], len(h), degree)


def context_for_support(support: Iterable[Monomial]) -> CentralizerContext:
    """Context of the full diagonal stabilizer of a support."""
    s = sorted(set(support))
    if not s:
        raise ValueError("empty support")
    lattice = stabilizer_lattice(s)
    values = [mu_monomial(s[0], k) for k in lattice]
    return _context(lattice, values, len(s[0]), sum(s[0]))


def limit_support(support: Iterable[Monomial], w: Sequence[int]) -> frozenset:
    """Weight-zero part of a support: the support of its limit along w."""
    s = frozenset(support)
    top = mu_support(s, w)
    if top < 0:
        raise ValueError("support is unstable along w: the limit is the zero form")
    if top > 0:
        raise ValueError("no limit along w: some monomial has positive weight")
    return frozenset(m for m in s if mu_monomial(m, w) == 0)


@dataclass(frozen=True)
class ClosedOrbit:
    certificates: tuple  # ((permutation, strict Infeasible, degenerate Infeasible), ...)


@dataclass(frozen=True)
class Degenerates:
    weight: Weight
    limit: frozenset
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class UnstablePoint:
    weight: Weight
    permutation: tuple[int, ...]


LunaVerdict = Union[ClosedOrbit, Degenerates, UnstablePoint]


def unstable_query(support: Iterable[Monomial], cone: NormalizationCone) -> FeasibilityQuery:
    s = frozenset(support)
    return FeasibilityQuery(cone, nonpositive=s, strict=s, nontrivial=True)


def degenerate_query(support: Iterable[Monomial], cone: NormalizationCone) -> FeasibilityQuery:
    """All weights non-positive and at least one negative."""
    s = frozenset(support)
    return FeasibilityQuery(cone, nonpositive=s, some_negative=s)


def luna_classify(support: Iterable[Monomial], ctx: CentralizerContext) -> LunaVerdict:
    s = frozenset(support)
    if not s:
        raise ValueError("empty support")
    if not s <= ctx.invariant_universe:
        raise ValueError("support is not contained in the invariant universe")
    moved: dict[frozenset, tuple[int, ...]] = {}
    for p in ctx.cone.block_permutations():
        moved.setdefault(permute_support(s, p), p)
    strict_certs = {}
    for t, p in moved.items():
        c = find_weight(unstable_query(t, ctx.cone))
        if isinstance(c, Feasible):
            return UnstablePoint(pull_back_weight(c.weight, p), p)
        strict_certs[t] = c
    closed = []
    for t, p in moved.items():
        c = find_weight(degenerate_query(t, ctx.cone))
        if isinstance(c, Feasible):
            w = pull_back_weight(c.weight, p)
            return Degenerates(w, limit_support(s, w), p)
        closed.append((p, strict_certs[t], c))
    return ClosedOrbit(tuple(closed))


def verify_verdict(support: Iterable[Monomial], ctx: CentralizerContext, v: LunaVerdict) -> bool:
    s = frozenset(support)
    if isinstance(v, UnstablePoint):
        t = permute_support(s, v.permutation)
        w = tuple(v.weight[i] for i in v.permutation)
        return verify_certificate(unstable_query(t, ctx.cone), Feasible(w)) and mu_support(s, v.weight) <= -1
    if isinstance(v, Degenerates):
        t = permute_support(s, v.permutation)
        w = tuple(v.weight[i] for i in v.permutation)
        return (
            verify_certificate(degenerate_query(t, ctx.cone), Feasible(w))
            and mu_support(s, v.weight) == 0
            and v.limit == limit_support(s, v.weight)
            and v.limit < s
        )
    perms = {permute_support(s, p) for p in ctx.cone.block_permutations()}
    seen = set()
    for p, a, b in v.certificates:
        t = permute_support(s, p)
        if not (isinstance(a, Infeasible) and isinstance(b, Infeasible)):
            return False
        if not (verify_certificate(unstable_query(t, ctx.cone), a) and verify_certificate(degenerate_query(t, ctx.cone), b)):
            return False
        seen.add(t)
    return seen == perms


def verdict_to_json(v: LunaVerdict) -> dict:
    if isinstance(v, ClosedOrbit):
        return {"verdict": "closed-orbit", "branches": len(v.certificates)}
    if isinstance(v, UnstablePoint):
        return {"verdict": "unstable", "weight": list(v.weight), "permutation": list(v.permutation)}
    return {
        "verdict": "degenerates",
        "weight": list(v.weight),
        "permutation": list(v.permutation),
        "limit": [list(m) for m in sorted(v.limit, reverse=True)],
    }


def sublevel_families(ctx: CentralizerContext, certify: bool = True) -> tuple[list[FamilyRecord], list[FamilyRecord]]:
    """Maximal non-stable and maximal unstable families inside the context."""
    uni = sorted(ctx.invariant_universe, reverse=True)
    semi = maximal_nonstable_families(uni, ctx.cone, strict=False, certify=certify)
    unst = maximal_nonstable_families(uni, ctx.cone, strict=True, certify=certify)
    return semi, unst
