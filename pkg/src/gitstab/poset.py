"""Dominance order on monomials induced by a normalization cone."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence

import numpy as np

from .core import Monomial, NormalizationCone


def leq_blocks(m1: Sequence[int], m2: Sequence[int], blocks: Sequence[Sequence[int]]) -> bool:
    """m1 <= m2 for every weight that is non-increasing inside each block.

    Block totals must agree (constants per block are in the cone in both
    directions) and inside each block m2's prefix sums dominate m1's.
    """
    if len(m1) != len(m2):
        raise ValueError("monomials have different lengths")
    if sum(m1) != sum(m2):
        raise ValueError("monomials have different degrees")
    for b in blocks:
        p1 = list(accumulate(m1[i] for i in b))
        p2 = list(accumulate(m2[i] for i in b))
        if len(blocks) > 1 and p1[-1] != p2[-1]:
            return False
        if any(x > y for x, y in zip(p1[:-1], p2[:-1])):
            return False
    return True


def leq(m1: Sequence[int], m2: Sequence[int], cone: NormalizationCone) -> bool:
    """Whether mu(m1, w) <= mu(m2, w) for every w in the cone."""
    if cone.quotient:
        return leq_oracle(m1, m2, cone)
    return leq_blocks(m1, m2, cone.blocks)


def leq_oracle(m1: Sequence[int], m2: Sequence[int], cone: NormalizationCone) -> bool:
    """Decide dominance by asking the LP for a cone weight with mu(m1) > mu(m2)."""
    if len(m1) != len(m2) or sum(m1) != sum(m2):
        raise ValueError("monomials must share variables and degree")
    diff = tuple(int(b) - int(a) for a, b in zip(m1, m2))
    return _oracle(diff, cone)


@lru_cache(maxsize=None)
def _oracle(diff: tuple[int, ...], cone: NormalizationCone) -> bool:
    from .lp import FeasibilityQuery, is_feasible

    if not any(diff):
        return True
    q = FeasibilityQuery(cone, extra=((diff, -1),))
    return not is_feasible(q)


@dataclass(frozen=True)
class MonomialPoset:
    universe: tuple[Monomial, ...]
    cone: NormalizationCone
    covers: frozenset = field(default=frozenset())
    _order: np.ndarray = field(default=None, repr=False, compare=False)

    def index(self, m: Monomial) -> int:
        return self.universe.index(tuple(m))

    def le(self, a: Monomial, b: Monomial) -> bool:
        return bool(self._order[self.index(a), self.index(b)])

    def maximal(self) -> list[Monomial]:
        strict = self._order & ~np.eye(len(self.universe), dtype=bool)
        return [m for i, m in enumerate(self.universe) if not strict[i].any()]

    def minimal(self) -> list[Monomial]:
        strict = self._order & ~np.eye(len(self.universe), dtype=bool)
        return [m for i, m in enumerate(self.universe) if not strict[:, i].any()]

    def above(self, m: Monomial) -> list[Monomial]:
        """Elements strictly above m."""
        i = self.index(m)
        return [u for j, u in enumerate(self.universe) if j != i and self._order[i, j]]

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
        for m in self.universe:
            lines.append(f'  "{_label(m)}";')
        for a, b in sorted(self.covers, reverse=True):
            lines.append(f'  "{_label(a)}" -> "{_label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label(m: Monomial) -> str:
    return "[" + ",".join(map(str, m)) + "]"


def order_matrix(universe: Sequence[Monomial], cone: NormalizationCone) -> np.ndarray:
    """Boolean matrix R with R[i, j] true iff universe[i] <= universe[j]."""
    U = np.array(universe, dtype=np.int64).reshape(len(universe), -1)
    if cone.quotient:
        n = len(universe)
        return np.array([[leq(universe[i], universe[j], cone) for j in range(n)] for i in range(n)])
    ok = np.ones((len(U), len(U)), dtype=bool)
    for b in cone.blocks:
        pre = np.cumsum(U[:, list(b)], axis=1)
        if len(cone.blocks) > 1:
            ok &= pre[:, None, -1] == pre[None, :, -1]
        if len(b) > 1:
            ok &= (pre[:, None, :-1] <= pre[None, :, :-1]).all(axis=2)
    return ok


def hasse(universe: Iterable[Monomial], cone: NormalizationCone) -> MonomialPoset:
    univ = tuple(sorted(set(map(tuple, universe)), reverse=True))
    if not univ:
        raise ValueError("empty universe")
    order = order_matrix(univ, cone)
    strict = order & ~np.eye(len(univ), dtype=bool)
    s = strict.astype(np.int64)
    covered = strict & ~((s @ s) > 0)
    covers = frozenset((univ[j], univ[i]) for i, j in zip(*np.nonzero(covered)))
    return MonomialPoset(univ, cone, covers, order)


def downset(poset: MonomialPoset, tops: Iterable[Monomial]) -> frozenset:
    out = set()
    for t in tops:
        t = tuple(t)
        if t not in poset.universe:
            raise ValueError(f"{list(t)} is not in the universe")
        j = poset.index(t)
        out.update(poset.universe[i] for i in np.flatnonzero(poset._order[:, j]))
    return frozenset(out)


def transitive_closure_of_covers(poset: MonomialPoset) -> np.ndarray:
    """Recompute the order from the cover relation (used to check reduction)."""
    n = len(poset.universe)
    idx = {m: i for i, m in enumerate(poset.universe)}
    reach = np.eye(n, dtype=bool)
    adj = np.zeros((n, n), dtype=bool)
    for parent, child in poset.covers:
        adj[idx[child], idx[parent]] = True
    frontier = reach.copy()
    while True:
        nxt = (frontier.astype(np.int64) @ adj.astype(np.int64)) > 0
        new = reach | nxt
        if (new == reach).all():
            return reach
        reach, frontier = new, nxt
