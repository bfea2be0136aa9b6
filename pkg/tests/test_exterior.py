import random

import pytest

from noetherpairs.exterior import (DependentVectorsError, ExteriorVector, NotDecomposableError,
                                   PluckerPoint, contraction, grassmann_equations, in_subspace,
                                   is_decomposable, plucker_coordinates, plucker_ring,
                                   random_subspace, subspace_from_plucker, wedge)
from noetherpairs.fields import GF, QQ


def test_plucker_examples():
    assert str(plucker_coordinates([[1, 0, 0], [0, 1, 0]])) == "(1:0:0)"
    assert str(plucker_coordinates([[1, 2, 3]])) == "(1:2:3)"


def test_plucker_independent_of_basis():
    a = plucker_coordinates([[1, 2, 0, 1], [0, 1, 1, 3]])
    b = plucker_coordinates([[1, 3, 1, 4], [2, 3, -1, -1]])
    assert a == b


def test_dependent_basis_rejected():
    with pytest.raises(DependentVectorsError):
        plucker_coordinates([[1, 2, 3], [2, 4, 6]])


def test_contraction_examples():
    e01 = ExteriorVector.basis_vector((0, 1), 3)
    assert contraction((0,), e01) == [0, 1, 0]
    assert contraction((1,), e01) == [-1, 0, 0]
    assert contraction((2,), e01) == [0, 0, 0]


def test_wedge_sign():
    e0 = ExteriorVector.basis_vector((0,), 3)
    e1 = ExteriorVector.basis_vector((1,), 3)
    assert wedge(e1, e0).as_dict() == {(0, 1): -1}
    assert wedge(e0, e0).is_zero()


def test_grassmann_equations_examples():
    assert grassmann_equations(1, 5) == []
    assert grassmann_equations(2, 3) == []
    eqs = grassmann_equations(2, 4)
    assert len(eqs) == 1
    R = plucker_ring(4, 2)
    rel = R("p01*p23 - p02*p13 + p03*p12")
    assert eqs[0].primitive() in (rel.primitive(), (-rel).primitive())


def test_recover_subspace():
    assert subspace_from_plucker(plucker_coordinates([[1, 0, 0], [0, 1, 0]])) == [[1, 0, 0], [0, 1, 0]]


def test_round_trip_random_planes():
    rng = random.Random(3)
    for F in (QQ, GF(101)):
        for _ in range(10):
            B = random_subspace(rng, 2, 4, F)
            eta = plucker_coordinates(B, F)
            for method in ("kernel", "contraction"):
                assert plucker_coordinates(subspace_from_plucker(eta, method), F) == eta
            assert all(in_subspace(v, eta) for v in B)


def test_non_decomposable():
    eta = PluckerPoint.from_coordinates(2, 4, [1, 0, 0, 0, 0, 1])  # e01 + e23
    assert not is_decomposable(eta)
    with pytest.raises(NotDecomposableError):
        subspace_from_plucker(eta)


def test_zero_vector_is_not_a_point():
    with pytest.raises(ValueError):
        PluckerPoint.from_coordinates(1, 2, [0, 0])
