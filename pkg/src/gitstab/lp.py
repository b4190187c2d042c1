"""Exact feasibility of sign conditions on mu over a normalization cone.

Solving is Fourier-Motzkin elimination in integer coordinates of the cone's
linear span, so equalities never enter the elimination. Every answer comes
with a certificate that ``verify_certificate`` re-checks from scratch:
a weight vector for feasible queries, Farkas multipliers otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

import numpy as np

from .core import Monomial, NormalizationCone, Weight
from .linalg import dot, primitive, rational_to_primitive, solve_left

RowLabel = tuple  # ("wall", i, j) | ("le0", m) | ("lt0", m) | ("agg",) | ("extra", k) | ("lead", j)

WITNESS_CAP = 12


@dataclass(frozen=True)
class FeasibilityQuery:
    cone: NormalizationCone
    nonpositive: frozenset = frozenset()  # mu(m, w) <= 0
    strict: frozenset = frozenset()  # mu(m, w) <= -1
    nontrivial: bool = False  # w != 0
    some_negative: frozenset = frozenset()  # sum of mu over these <= -1
    extra: tuple = ()  # additional rows (vector, rhs) meaning vector.w <= rhs, rhs <= 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "nonpositive", frozenset(self.nonpositive))
        object.__setattr__(self, "strict", frozenset(self.strict))
        object.__setattr__(self, "some_negative", frozenset(self.some_negative))
        n = self.cone.n_vars
        for m in self.nonpositive | self.strict | self.some_negative:
            if len(m) != n:
                raise ValueError(f"monomial {m} does not have {n} variables")
        degrees = {sum(m) for m in self.nonpositive | self.strict | self.some_negative}
        if len(degrees) > 1:
            raise ValueError("monomials of mixed degree in one query")
        for vec, rhs in self.extra:
            if len(vec) != n or rhs > 0:
                raise ValueError("extra rows need n entries and a non-positive right-hand side")


@dataclass(frozen=True)
class Feasible:
    weight: Weight
    minimal: bool = True  # False when the box search cap was exceeded


@dataclass(frozen=True)
class FarkasBranch:
    lead: int | None
    multipliers: tuple  # ((label, Fraction), ...)
    equality: tuple  # multipliers for the equality rows of the cone


@dataclass(frozen=True)
class Infeasible:
    branches: tuple  # one FarkasBranch per nontriviality case


Certificate = Union[Feasible, Infeasible]


# ---------------------------------------------------------------- rows


def _row(label: RowLabel, cone: NormalizationCone, q: FeasibilityQuery) -> tuple[tuple[int, ...], int]:
    n = cone.n_vars
    kind = label[0]
    if kind == "wall":
        _, i, j = label
        r = [0] * n
        r[j], r[i] = 1, -1
        return tuple(r), 0
    if kind == "le0":
        return tuple(label[1]), 0
    if kind == "lt0":
        return tuple(label[1]), -1
    if kind == "agg":
        return tuple(sum(m[k] for m in q.some_negative) for k in range(n)), -1
    if kind == "extra":
        vec, rhs = q.extra[label[1]]
        return tuple(vec), int(rhs)
    if kind == "lead":
        r = [0] * n
        r[label[1]] = -1
        return tuple(r), -1
    raise ValueError(f"unknown row {label}")


def _labels(q: FeasibilityQuery, lead: int | None, prune: bool) -> list[RowLabel]:
    from .poset import leq_blocks

    labels: list[RowLabel] = []
    for b in q.cone.blocks:
        labels += [("wall", i, j) for i, j in zip(b, b[1:])]
    strict = sorted(q.strict)
    nonpos = sorted(q.nonpositive - q.strict)
    if prune:
        # rows implied by a dominating monomial plus the cone walls
        blocks = q.cone.blocks
        strict = [m for m in strict if not any(o != m and leq_blocks(m, o, blocks) for o in strict)]
        nonpos = [m for m in nonpos if not any(o != m and leq_blocks(m, o, blocks) for o in nonpos + strict)]
    labels += [("lt0", m) for m in strict]
    labels += [("le0", m) for m in nonpos]
    if q.some_negative:
        labels.append(("agg",))
    labels += [("extra", k) for k in range(len(q.extra))]
    if lead is not None:
        labels.append(("lead", lead))
    return labels


def _branches(q: FeasibilityQuery) -> list[int | None]:
    return list(q.cone.leaders()) if q.nontrivial else [None]


# ---------------------------------------------------------------- elimination


@dataclass
class _Ineq:
    coeffs: tuple[int, ...]
    rhs: Fraction
    hist: dict = field(default_factory=dict)


def _normalize(coeffs: list[int], rhs: Fraction, hist: dict) -> _Ineq:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        rhs = rhs / g
        hist = {k: v / g for k, v in hist.items()}
    return _Ineq(tuple(coeffs), rhs, hist)


def _combine(p: _Ineq, q: _Ineq, v: int) -> _Ineq:
    a, b = -q.coeffs[v], p.coeffs[v]  # both positive
    coeffs = [a * x + b * y for x, y in zip(p.coeffs, q.coeffs)]
    hist = {k: a * val for k, val in p.hist.items()}
    for k, val in q.hist.items():
        hist[k] = hist.get(k, 0) + b * val
    return _normalize(coeffs, a * p.rhs + b * q.rhs, hist)


def _dedupe(rows: Iterable[_Ineq]) -> list[_Ineq]:
    best: dict[tuple[int, ...], _Ineq] = {}
    for r in rows:
        cur = best.get(r.coeffs)
        if cur is None or (r.rhs, len(r.hist)) < (cur.rhs, len(cur.hist)):
            best[r.coeffs] = r
    return [best[k] for k in sorted(best)]


def _eliminate(rows: list[_Ineq], d: int, chernikov: bool = True):
    """Returns ("infeasible", hist) or ("feasible", point in y-space)."""
    saved: list[list[_Ineq]] = [[] for _ in range(d)]
    current = []
    for r in rows:
        if not any(r.coeffs):
            if r.rhs < 0:
                return "infeasible", r.hist
            continue
        current.append(r)
    current = _dedupe(current)
    for step, v in enumerate(range(d - 1, -1, -1)):
        pos = [r for r in current if r.coeffs[v] > 0]
        neg = [r for r in current if r.coeffs[v] < 0]
        rest = [r for r in current if r.coeffs[v] == 0]
        saved[v] = pos + neg
        limit = step + 2  # Chernikov: at most (eliminated variables + 1) parents
        new = list(rest)
        for p in pos:
            for q in neg:
                c = _combine(p, q, v)
                if chernikov and len(c.hist) > limit:
                    continue
                if not any(c.coeffs):
                    if c.rhs < 0:
                        return "infeasible", c.hist
                    continue
                new.append(c)
        current = _dedupe(new)
    point: list[Fraction] = [Fraction(0)] * d
    for v in range(d):
        lo, hi = None, None
        for r in saved[v]:
            rest = sum(r.coeffs[k] * point[k] for k in range(v))
            bound = (r.rhs - rest) / r.coeffs[v]
            if r.coeffs[v] > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        point[v] = _pick(lo, hi)
    return "feasible", point


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """A simple value in [lo, hi]: zero if allowed, else the integer nearest to zero."""
    if lo is not None and hi is not None and lo > hi:
        raise ArithmeticError("elimination produced an empty interval")
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is not None and lo > 0:
        c = Fraction(-((-lo.numerator) // lo.denominator))
        return c if hi is None or c <= hi else lo
    f = Fraction(hi.numerator // hi.denominator)
    return f if lo is None or f >= lo else hi


def _solve_branch(q: FeasibilityQuery, lead: int | None):
    cone = q.cone
    basis = cone.basis
    labels = _labels(q, lead, prune=True)
    for chernikov in (True, False):
        rows = []
        for idx, lab in enumerate(labels):
            vec, rhs = _row(lab, cone, q)
            rows.append(_normalize([dot(vec, b) for b in basis], Fraction(rhs), {idx: Fraction(1)}))
        try:
            status, data = _eliminate(rows, len(basis), chernikov)
        except ArithmeticError:
            continue
        if status == "feasible":
            w = [sum(data[k] * basis[k][i] for k in range(len(basis))) for i in range(cone.n_vars)]
            if all(dot(_row(lab, cone, q)[0], w) <= _row(lab, cone, q)[1] for lab in labels):
                return "feasible", w
            continue
        branch = _farkas_branch(q, lead, labels, data)
        if branch is not None:
            return "infeasible", branch
    raise ArithmeticError("elimination failed to produce a verified answer")


def _farkas_branch(q, lead, labels, hist) -> FarkasBranch | None:
    cone = q.cone
    n = cone.n_vars
    total = [Fraction(0)] * n
    rhs = Fraction(0)
    for idx, y in hist.items():
        vec, b = _row(labels[idx], cone, q)
        total = [t + y * a for t, a in zip(total, vec)]
        rhs += y * b
    if rhs >= 0:
        return None
    eq = cone.equality_rows()
    z = solve_left(eq, [-t for t in total])
    if z is None:
        return None
    scale = -1 / rhs
    mult = tuple((labels[idx], hist[idx] * scale) for idx in sorted(hist) if hist[idx] != 0)
    branch = FarkasBranch(lead, mult, tuple(x * scale for x in z))
    return branch if _check_branch(q, branch) else None


# ---------------------------------------------------------------- witness search


@lru_cache(maxsize=None)
def _box(n: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Sum-zero integer points sorted by max-norm, then lexicographically descending."""
    cap = WITNESS_CAP
    while cap > 1 and (2 * cap + 1) ** (n - 1) > 1_500_000:
        cap -= 1
    if n == 1:
        pts = np.zeros((1, 1), dtype=np.int64)
    else:
        grid = np.indices((2 * cap + 1,) * (n - 1)).reshape(n - 1, -1).T - cap
        last = -grid.sum(axis=1, keepdims=True)
        pts = np.hstack([grid, last])
        pts = pts[np.abs(last[:, 0]) <= cap]
    norms = np.abs(pts).max(axis=1)
    order = np.lexsort([-pts[:, k] for k in range(n - 1, -1, -1)] + [norms])
    pts = pts[order]
    norms = norms[order]
    starts = tuple(int(np.searchsorted(norms, r)) for r in range(cap + 2))
    return pts, starts


def _minimal_witness(q: FeasibilityQuery, bound: int) -> Weight | None:
    pts, starts = _box(q.cone.n_vars)
    cap = len(starts) - 2
    labels = _labels(q, None, prune=True)
    A = np.array([_row(lab, q.cone, q)[0] for lab in labels], dtype=np.int64).reshape(-1, q.cone.n_vars)
    b = np.array([_row(lab, q.cone, q)[1] for lab in labels], dtype=np.int64)
    E = np.array(q.cone.equality_rows()[1:], dtype=np.int64).reshape(-1, q.cone.n_vars)
    first = 1 if q.nontrivial else 0
    for r in range(first, min(bound, cap) + 1):
        chunk = pts[starts[r]:starts[r + 1]]
        ok = (chunk @ A.T <= b).all(axis=1)
        if len(E):
            ok &= (chunk @ E.T == 0).all(axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return tuple(int(x) for x in chunk[hit[0]])
    return None


# ---------------------------------------------------------------- public API


def find_weight(q: FeasibilityQuery, minimal: bool = True) -> Certificate:
    """Feasible witness (primitive; smallest max-norm unless the cap is exceeded) or Farkas certificate."""
    branches = []
    for lead in _branches(q):
        status, data = _solve_branch(q, lead)
        if status == "feasible":
            w = rational_to_primitive(data)
            if not minimal:
                return Feasible(w, minimal=False)
            bound = max(abs(x) for x in w)
            best = _minimal_witness(q, bound)
            if best is not None:
                return Feasible(best, minimal=True)
            return Feasible(w, minimal=bound <= len(_box(q.cone.n_vars)[1]) - 2)
        branches.append(data)
    return Infeasible(tuple(branches))


def is_feasible(q: FeasibilityQuery) -> bool:
    return isinstance(find_weight(q, minimal=False), Feasible)


def satisfies(q: FeasibilityQuery, w: Weight) -> bool:
    if not q.cone.contains(w):
        return False
    if q.nontrivial and not any(w):
        return False
    for lab in _labels(q, None, prune=False):
        vec, rhs = _row(lab, q.cone, q)
        if dot(vec, w) > rhs:
            return False
    return True


def _check_branch(q: FeasibilityQuery, br: FarkasBranch) -> bool:
    allowed = set(_labels(q, br.lead, prune=False))
    n = q.cone.n_vars
    total = [Fraction(0)] * n
    rhs = Fraction(0)
    for lab, y in br.multipliers:
        if lab not in allowed or y < 0:
            return False
        vec, b = _row(lab, q.cone, q)
        total = [t + y * a for t, a in zip(total, vec)]
        rhs += y * b
    eq = q.cone.equality_rows()
    if len(br.equality) != len(eq):
        return False
    for z, row in zip(br.equality, eq):
        total = [t + z * a for t, a in zip(total, row)]
    return all(t == 0 for t in total) and rhs < 0


def verify_certificate(q: FeasibilityQuery, cert: Certificate) -> bool:
    if isinstance(cert, Feasible):
        return tuple(cert.weight) == primitive(cert.weight) and satisfies(q, tuple(cert.weight))
    if isinstance(cert, Infeasible):
        leads = [br.lead for br in cert.branches]
        if sorted(leads, key=lambda x: -1 if x is None else x) != sorted(
            _branches(q), key=lambda x: -1 if x is None else x
        ):
            return False
        return all(_check_branch(q, br) for br in cert.branches)
    return False


def certificate_to_json(cert: Certificate) -> dict:
    if isinstance(cert, Feasible):
        return {"feasible": True, "weight": list(cert.weight), "minimal": cert.minimal}
    return {
        "feasible": False,
        "branches": [
            {
                "lead": br.lead,
                "multipliers": [[_label_json(lab), str(y)] for lab, y in br.multipliers],
                "equality": [str(z) for z in br.equality],
            }
            for br in cert.branches
        ],
    }


def _label_json(lab: RowLabel) -> list:
    return [lab[0]] + [list(x) if isinstance(x, tuple) else x for x in lab[1:]]
