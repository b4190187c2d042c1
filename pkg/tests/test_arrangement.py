import numpy as np
import pytest

from gitstab.arrangement import cell_points, cone_rays, face_points, hyperplane_normals
from gitstab.core import NormalizationCone, enumerate_monomials, mu_monomial
from gitstab.linalg import rank


@pytest.mark.parametrize("n,d", [(3, 3), (4, 3), (4, 4)])
def test_rays_lie_on_enough_hyperplanes(n, d):
    cone = NormalizationCone.standard(n)
    uni = enumerate_monomials(n, d)
    walls = cone.wall_rows()
    for r in cone_rays(uni, cone):
        assert cone.contains(r) and sum(r) == 0
        tight = [m for m in uni if mu_monomial(m, r) == 0] + [w for w in walls if np.dot(w, r) == 0]
        assert rank(tight + [(1,) * n]) == n - 1


@pytest.mark.parametrize("n,d", [(3, 3), (4, 3), (4, 4)])
def test_cells_avoid_every_hyperplane(n, d):
    cone = NormalizationCone.standard(n)
    uni = enumerate_monomials(n, d)
    cells = cell_points(uni, cone)
    assert cells
    signs = set()
    for c in cells:
        assert cone.contains(c)
        # the balanced monomial has weight zero under every sum-zero vector
        assert all(mu_monomial(m, c) != 0 for m in uni if len(set(m)) > 1)
        signs.add(tuple(mu_monomial(m, c) > 0 for m in uni))
    assert len(signs) == len(cells)


def test_faces_include_rays_and_cells():
    cone = NormalizationCone.standard(4)
    uni = enumerate_monomials(4, 3)
    faces = face_points(uni, cone)
    sign = lambda w: tuple(int(np.sign(mu_monomial(m, w))) for m in uni)
    fs = {sign(f) for f in faces}
    assert {sign(r) for r in cone_rays(uni, cone)} <= fs
    assert {sign(c) for c in cell_points(uni, cone)} <= fs


def test_normals_are_primitive_and_distinct():
    cone = NormalizationCone.standard(4)
    normals = hyperplane_normals(enumerate_monomials(4, 3), cone)
    assert len(set(map(tuple, normals))) == len(normals)


def test_one_dimensional_cone():
    cone = NormalizationCone.standard(2)
    assert cone_rays(enumerate_monomials(2, 3), cone) == [(1, -1)]
