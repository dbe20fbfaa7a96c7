import random

import numpy as np
import pytest

from mapclass.homology import SympMatrix, abelianize, identity_matrix, matrix_order, transvection
from mapclass.surface import build_surface, symplectic_form


def test_identity_and_boundary_twist():
    m = build_surface(3)
    assert abelianize(m.catalog.identity()).is_identity()
    assert abelianize(m.catalog.element("Td")).is_identity()
    assert matrix_order(abelianize(m.catalog.identity()), 5) == 1


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_rotation_is_minus_identity(g):
    m = build_surface(g)
    M = abelianize(m.catalog.element("S", 2 * g + 1))
    assert np.array_equal(M.entries, -identity_matrix(2 * g))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_order_of_S_on_homology(g):
    m = build_surface(g)
    n = matrix_order(abelianize(m.catalog.element("S")), 100)
    assert n is not None and (4 * g + 2) % n == 0 and (2 * g + 1) % n != 0


def test_order_examples():
    m = build_surface(1)
    assert matrix_order(abelianize(m.catalog.element("S")), 20) == 6
    assert matrix_order(abelianize(build_surface(3).catalog.element("A1")), 200) is None
    with pytest.raises(ValueError):
        matrix_order(abelianize(m.catalog.element("S")), 0)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_catalog_preserves_form(g):
    m = build_surface(g)
    J = m.homology_form
    for name in m.catalog.names():
        phi = m.catalog.element(name)
        M = abelianize(phi)
        assert M.sign == phi.sign
        assert M.preserves_form(J), name


@pytest.mark.parametrize("g", [2, 3])
def test_functoriality(g):
    m = build_surface(g)
    cat = m.catalog
    names = cat.names()
    rnd = random.Random(g)
    for _ in range(100):
        a = cat.evaluate(" ".join(rnd.choice(names) for _ in range(3)))
        b = cat.evaluate(" ".join(rnd.choice(names) for _ in range(3)))
        assert abelianize(a * b) == abelianize(a) @ abelianize(b)


def test_transvection_formula():
    J = symplectic_form(1)
    T = transvection([1, 0], J, 1)
    # v -> v + <v, c> c with <u, v> = u^T J v
    v = np.array([0, 1], dtype=object)
    assert list(T.dot(v)) == list(v + (v @ J @ np.array([1, 0], dtype=object)) * np.array([1, 0], dtype=object))
    assert SympMatrix(T, 1).preserves_form(J)


def test_entries_are_exact_integers():
    m = build_surface(2)
    M = abelianize(m.catalog.element("S", 40) * m.catalog.element("A1", 10))
    P = M.entries
    for _ in range(6):
        P = P.dot(P)
    assert all(isinstance(x, int) for x in P.flat)
