"""Rays and open-cell representatives of the arrangement cut out by monomial
hyperplanes mu(m, .) = 0 inside a normalization cone.

Every set M_{<=0}(w) is contained in M_{<=0}(r) for a ray r of the cell of w,
and every set M_{<0}(w) is contained in the one of an interior point of a
full-dimensional cell, so these finite lists suffice for maximal families.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .core import Monomial, NormalizationCone, Weight
from .linalg import primitive


def _det(stack: np.ndarray) -> np.ndarray:
    """Exact integer determinants of a stack of small square int64 matrices."""
    k = stack.shape[-1]
    if k == 0:
        return np.ones(stack.shape[0], dtype=np.int64)
    if k == 1:
        return stack[:, 0, 0].copy()
    if k == 2:
        return stack[:, 0, 0] * stack[:, 1, 1] - stack[:, 0, 1] * stack[:, 1, 0]
    total = np.zeros(stack.shape[0], dtype=np.int64)
    for j in range(k):
        minor = np.delete(np.delete(stack, 0, axis=1), j, axis=2)
        total += (-1) ** j * stack[:, 0, j] * _det(minor)
    return total


def _primitive_rows(a: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(np.abs(a), axis=1)
    g[g == 0] = 1
    return a // g[:, None]


def hyperplane_normals(universe: Iterable[Monomial], cone: NormalizationCone) -> np.ndarray:
    """Distinct (up to sign) nonzero normals in the cone's integer coordinates."""
    B = np.array(cone.basis, dtype=np.int64).T  # n x d
    vecs = [tuple(m) for m in universe] + cone.wall_rows()
    if B.shape[1] == 0:
        return np.zeros((0, 0), dtype=np.int64)
    N = _primitive_rows(np.array(vecs, dtype=np.int64) @ B)
    N = N[np.abs(N).sum(axis=1) > 0]
    # fix the sign by the first nonzero entry
    first = np.array([row[np.flatnonzero(row)[0]] for row in N])
    N = N * np.sign(first)[:, None]
    return np.unique(N, axis=0)


def cone_rays(universe: Iterable[Monomial], cone: NormalizationCone) -> list[Weight]:
    """All primitive rays of the arrangement lying in the cone, as weight vectors."""
    d = cone.dim
    B = np.array(cone.basis, dtype=np.int64).T
    if d == 0:
        return []
    if d == 1:
        cands = np.array([[1], [-1]], dtype=np.int64)
    else:
        N = hyperplane_normals(universe, cone)
        if np.linalg.matrix_rank(N.astype(float)) < d:
            raise ValueError("arrangement is not pointed: add the trivially acting directions to the cone quotient")
        out = []
        idx = np.array(list(combinations(range(len(N)), d - 1)), dtype=np.int64)
        for start in range(0, len(idx), 200_000):
            sub = N[idx[start:start + 200_000]]  # (k, d-1, d)
            cross = np.stack(
                [(-1) ** j * _det(np.delete(sub, j, axis=2)) for j in range(d)], axis=1
            )
            cross = cross[np.abs(cross).sum(axis=1) > 0]
            out.append(_primitive_rows(cross))
        if not out:
            return []
        cands = np.unique(np.vstack(out), axis=0)
        cands = np.vstack([cands, -cands])
    W = cands @ B.T
    keep = np.ones(len(W), dtype=bool)
    for r in cone.wall_rows():
        keep &= W @ np.array(r) <= 0
    W = np.unique(_primitive_rows(W[keep]), axis=0)
    return sorted((tuple(int(x) for x in w) for w in W), reverse=True)


def _coords(rays: np.ndarray, B: np.ndarray) -> np.ndarray:
    Y = np.rint(np.linalg.lstsq(B.astype(float), rays.T.astype(float), rcond=None)[0].T).astype(np.int64)
    if not (Y @ B.T == rays).all():
        raise ArithmeticError("ray coordinates are not integral in the cone basis")
    return Y


def _cliques(adj: np.ndarray, size: int) -> list[list[tuple[int, ...]]]:
    """Cliques of the (upper-triangular) adjacency matrix, grouped by size 1..size."""
    k = len(adj)
    level = [(i,) for i in range(k)]
    common = {(i,): adj[i] for i in range(k)}
    out = [level]
    for _ in range(size - 1):
        nxt, nxt_common = [], {}
        for c in level:
            mask = common[c]
            for j in np.flatnonzero(mask):
                t = c + (int(j),)
                nxt.append(t)
                nxt_common[t] = mask & adj[j]
        level, common = nxt, nxt_common
        out.append(level)
    return out


def _compatibility(universe: list[Monomial], cone: NormalizationCone, R: np.ndarray):
    B = np.array(cone.basis, dtype=np.int64).T
    Y = _coords(R, B)
    N = hyperplane_normals(universe, cone)
    S = np.sign(Y @ N.T)
    pos, neg = (S > 0).astype(np.int32), (S < 0).astype(np.int32)
    compat = (pos @ neg.T + neg @ pos.T) == 0
    k = len(R)
    return Y, compat & np.triu(np.ones((k, k), dtype=bool), 1)


def _by_signs(universe: list[Monomial], cone: NormalizationCone, R: np.ndarray, cliques) -> dict[bytes, Weight]:
    U = np.array(universe, dtype=np.int64)
    walls = np.array(cone.wall_rows(), dtype=np.int64).reshape(-1, cone.n_vars)
    seen: dict[bytes, Weight] = {}
    for start in range(0, len(cliques), 100_000):
        chunk = cliques[start:start + 100_000]
        sums = R[chunk].sum(axis=1)
        signs = np.sign(np.hstack([sums @ U.T, sums @ walls.T])).astype(np.int8)
        for s, w in zip(signs, sums):
            key = s.tobytes()
            if key not in seen:
                seen[key] = tuple(primitive(w.tolist()))
    return seen


def cell_points(universe: Iterable[Monomial], cone: NormalizationCone, rays: Sequence[Weight] | None = None) -> list[Weight]:
    """One interior point of every full-dimensional cell of the arrangement.

    Rays of a common cell never sit on opposite sides of a hyperplane. Conversely
    the sum of ``dim`` independent, pairwise sign-compatible rays is nonzero on every
    hyperplane, hence interior to a cell; so cliques of the compatibility graph
    reach every cell.
    """
    universe = list(universe)
    d = cone.dim
    if rays is None:
        rays = cone_rays(universe, cone)
    if d == 0 or not rays:
        return []
    if d == 1:
        return sorted({tuple(primitive(r)) for r in rays}, reverse=True)
    R = np.array(rays, dtype=np.int64)
    Y, adj = _compatibility(universe, cone, R)
    top = _cliques(adj, d)[-1]
    if not top:
        return []
    cl = np.array(top, dtype=np.int64)
    cl = cl[_det(Y[cl]) != 0]
    return sorted(_by_signs(universe, cone, R, cl).values(), reverse=True)


def face_points(universe: Iterable[Monomial], cone: NormalizationCone, rays: Sequence[Weight] | None = None) -> list[Weight]:
    """One relative-interior point of every nonzero face of the arrangement inside the cone.

    A set of pairwise compatible rays sums to a point whose sign on each
    hyperplane is the common sign of the rays, so it lies in the relative
    interior of the face they span; every face is reached by its own rays.
    """
    universe = list(universe)
    d = cone.dim
    if rays is None:
        rays = cone_rays(universe, cone)
    if d == 0 or not rays:
        return []
    R = np.array(rays, dtype=np.int64)
    if d == 1:
        return sorted({tuple(primitive(r)) for r in rays}, reverse=True)
    _, adj = _compatibility(universe, cone, R)
    seen: dict[bytes, Weight] = {}
    for level in _cliques(adj, d):
        if level:
            seen.update((k, v) for k, v in _by_signs(universe, cone, R, np.array(level, dtype=np.int64)).items() if k not in seen)
    return sorted(seen.values(), reverse=True)
