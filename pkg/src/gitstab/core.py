"""Monomials, weight vectors, the numerical function mu and normalization cones."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .linalg import dot, integer_kernel, primitive

Monomial = tuple[int, ...]
Weight = tuple[int, ...]
Support = frozenset  # frozenset[Monomial]


def enumerate_monomials(n_vars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given degree, in lexicographic order."""
    if n_vars < 1 or degree < 1:
        raise ValueError("n_vars and degree must both be positive")
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for k in range(left + 1):
            rec(prefix + [k], left - k, slots - 1)

    rec([], degree, n_vars)
    return out


def check_monomial(m: Sequence[int], n_vars: int | None = None, degree: int | None = None) -> Monomial:
    m = tuple(int(x) for x in m)
    if any(x < 0 for x in m):
        raise ValueError(f"negative exponent in {list(m)}")
    if n_vars is not None and len(m) != n_vars:
        raise ValueError(f"{list(m)} has {len(m)} variables, expected {n_vars}")
    if degree is not None and sum(m) != degree:
        raise ValueError(f"{list(m)} has degree {sum(m)}, expected {degree}")
    return m


def weight(values: Sequence[int]) -> Weight:
    """Validate a sum-zero integer vector and return it in primitive form."""
    w = tuple(int(x) for x in values)
    if sum(w) != 0:
        raise ValueError(f"weight {list(w)} does not sum to zero")
    return primitive(w)


def mu_monomial(m: Sequence[int], w: Sequence[int]) -> int:
    if len(m) != len(w):
        raise ValueError("monomial and weight lengths differ")
    return dot(m, w)


def mu_support(support: Iterable[Monomial], w: Sequence[int]) -> int:
    vals = [mu_monomial(m, w) for m in support]
    if not vals:
        raise ValueError("empty support")
    return max(vals)


def same_ray(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when a and b are positive multiples of each other."""
    return any(a) and primitive(a) == primitive(b)


def stabilizer_lattice(support: Iterable[Monomial]) -> list[Weight]:
    """Basis of the sum-zero weights giving every monomial of the support the same value."""
    mons = sorted(set(support))
    if not mons:
        raise ValueError("empty support")
    n = len(mons[0])
    rows = [[1] * n] + [[a - b for a, b in zip(m, mons[0])] for m in mons[1:]]
    return [tuple(v) for v in integer_kernel(rows, n)]


def lattice_contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Rational membership of v in span(basis); for saturated lattices this is integral membership."""
    from .linalg import rank

    if not any(v):
        return True
    return rank(list(basis) + [list(v)]) == rank(basis) if basis else False


def coordinate_blocks(lattice: Sequence[Sequence[int]], n_vars: int) -> tuple[tuple[int, ...], ...]:
    """Group coordinates that no lattice vector separates; blocks are ordered by first index."""
    key = {i: tuple(v[i] for v in lattice) for i in range(n_vars)}
    blocks: dict[tuple[int, ...], list[int]] = {}
    for i in range(n_vars):
        blocks.setdefault(key[i], []).append(i)
    return tuple(sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0]))


@dataclass(frozen=True)
class NormalizationCone:
    """Weights that are non-increasing inside each block, sum to zero and are
    orthogonal to ``quotient`` (directions acting trivially on the universe)."""

    n_vars: int
    blocks: tuple[tuple[int, ...], ...]
    quotient: tuple[Weight, ...] = field(default=())

    def __post_init__(self) -> None:
        seen = sorted(i for b in self.blocks for i in b)
        if seen != list(range(self.n_vars)):
            raise ValueError(f"blocks {self.blocks} do not partition range({self.n_vars})")
        if any(list(b) != sorted(b) for b in self.blocks):
            raise ValueError("block indices must be increasing")

    @classmethod
    def standard(cls, n_vars: int) -> NormalizationCone:
        return cls(n_vars, (tuple(range(n_vars)),))

    @classmethod
    def torus(cls, n_vars: int) -> NormalizationCone:
        return cls(n_vars, tuple((i,) for i in range(n_vars)))

    @property
    def is_standard(self) -> bool:
        return len(self.blocks) == 1 and not self.quotient

    def wall_rows(self) -> list[tuple[int, ...]]:
        """Rows r with r.w <= 0 expressing w[b_k] >= w[b_{k+1}] inside every block."""
        rows = []
        for b in self.blocks:
            for i, j in zip(b, b[1:]):
                r = [0] * self.n_vars
                r[j], r[i] = 1, -1
                rows.append(tuple(r))
        return rows

    def equality_rows(self) -> list[tuple[int, ...]]:
        return [tuple([1] * self.n_vars)] + [tuple(q) for q in self.quotient]

    @cached_property
    def basis(self) -> tuple[Weight, ...]:
        """Integer lattice basis of the linear space the cone lives in."""
        return tuple(integer_kernel(self.equality_rows(), self.n_vars))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, w: Sequence[int]) -> bool:
        if len(w) != self.n_vars or any(dot(r, w) != 0 for r in self.equality_rows()):
            return False
        return all(dot(r, w) <= 0 for r in self.wall_rows())

    def leaders(self) -> list[int]:
        """First coordinate of every block: the largest weight inside it."""
        return [b[0] for b in self.blocks]

    def block_permutations(self) -> list[tuple[int, ...]]:
        """Coordinate permutations preserving every block (the Weyl group of the centralizer)."""
        from itertools import permutations

        per_block = [list(permutations(b)) for b in self.blocks]
        out = []
        for choice in product(*per_block):
            p = list(range(self.n_vars))
            for b, img in zip(self.blocks, choice):
                for src, dst in zip(b, img):
                    p[src] = dst
            out.append(tuple(p))
        return sorted(out)


def permute_monomial(m: Sequence[int], p: Sequence[int]) -> Monomial:
    """Relabel variables: the exponent of x_i in the result is m[p[i]]."""
    return tuple(m[p[i]] for i in range(len(m)))


def permute_support(s: Iterable[Monomial], p: Sequence[int]) -> frozenset:
    return frozenset(permute_monomial(m, p) for m in s)


def pull_back_weight(w: Sequence[int], p: Sequence[int]) -> Weight:
    """Weight v with mu(m, v) == mu(permute_monomial(m, p), w) for every m."""
    v = [0] * len(w)
    for i, pi in enumerate(p):
        v[pi] = w[i]
    return tuple(v)
