import pytest

from noetherpairs.exterior import PluckerPoint
from noetherpairs.groebner import Ideal
from noetherpairs.hilbscheme import (HilbertPolynomialMismatch, OffSchemeError, form_coefficients,
                                     hilbert_scheme_data, ideal_from_point, membership_test,
                                     on_scheme, point_from_ideal)
from noetherpairs.numerical import NumericalPolynomial as NP


@pytest.fixture(scope="module")
def line_point():
    return hilbert_scheme_data(1, NP.constant(1))


def P(*coords, grade=1):
    return PluckerPoint.from_coordinates(grade, len(coords) if grade == 1 else 3, coords)


def test_data_n1_Q1(line_point):
    D = line_point
    assert (D.d0, D.N0, D.s) == (1, 1, 2)
    assert D.ambient_dimension == 1
    assert D.scheme_equations == []
    assert [str(f) for f in D.S_template] == ["x0*p0 + x1*p1"]


def test_data_n1_Q2():
    D = hilbert_scheme_data(1, NP.constant(2))
    assert (D.d0, D.N0, D.ambient_dimension) == (2, 1, 2)
    assert D.scheme_equations == []
    for c in ([1, 0, 0], [0, 1, 0], [1, 2, 3], [0, 0, 1]):
        assert on_scheme(P(*c), D)


def test_data_n2_Q1():
    D = hilbert_scheme_data(2, NP.constant(1))
    assert (D.d0, D.N0, D.s) == (1, 2, 3)
    assert D.ambient_dimension == 2
    for c in ([1, 0, 0], [0, 1, 0], [1, -1, 2]):
        assert on_scheme(PluckerPoint.from_coordinates(2, 3, c), D)


def test_point_from_ideal(line_point):
    R = line_point.x_ring
    assert point_from_ideal(Ideal(R, ["x1"]), line_point).eta == P(0, 1)
    assert point_from_ideal(Ideal(R, ["x1 - 2*x0"]), line_point).eta == P(-2, 1)
    with pytest.raises(HilbertPolynomialMismatch):
        point_from_ideal(Ideal(R, ["x0*x1"]), line_point)


def test_ideal_from_point(line_point):
    R = line_point.x_ring
    assert ideal_from_point(P(0, 1), line_point) == Ideal(R, ["x1"])
    D = hilbert_scheme_data(1, NP.constant(2))
    for c in ([1, 0, 0], [1, 1, 1], [0, 2, -3], [0, 0, 1]):
        eta = P(*c)
        assert point_from_ideal(ideal_from_point(eta, D), D).eta == eta


def test_off_scheme_point_rejected():
    D = hilbert_scheme_data(3, NP.from_power_coefficients([1, 1]))  # lines in P^3
    assert (D.N0, D.s) == (2, 4)
    eta = PluckerPoint.from_coordinates(2, 4, [1, 0, 0, 0, 0, 1])
    assert not on_scheme(eta, D)
    with pytest.raises(OffSchemeError):
        ideal_from_point(eta, D)


def test_membership_examples(line_point):
    R = line_point.x_ring
    eta = P(0, 1)
    assert membership_test(form_coefficients(R("x1"), line_point), eta, 1, line_point)
    assert not membership_test(form_coefficients(R("x0"), line_point), eta, 1, line_point)
    assert membership_test(form_coefficients(R("x1^2"), line_point), eta, 2, line_point)
    assert membership_test(form_coefficients(R("0"), line_point, 0), eta, 0, line_point)


def test_membership_below_d0():
    D = hilbert_scheme_data(1, NP.constant(2))
    R = D.x_ring
    eta = point_from_ideal(Ideal(R, ["x0*x1"]), D).eta
    assert not membership_test(form_coefficients(R("x0"), D), eta, 1, D)
    eta = point_from_ideal(Ideal(R, ["x1^2"]), D).eta
    assert not membership_test(form_coefficients(R("x1"), D), eta, 1, D)


def test_templates_integral_and_bihomogeneous():
    D = hilbert_scheme_data(1, NP.constant(3))
    xs = D.x_ring.names
    for f in D.S_template:
        assert f.is_homogeneous(xs) and f.degree_in(xs) == D.d0
        assert f.is_homogeneous(D.eta_names) and f.degree_in(D.eta_names) == 1
        assert all(c.denominator == 1 for c in f.terms.values())


def test_serialization_is_deterministic():
    a = hilbert_scheme_data(1, NP.constant(2)).to_text()
    b = hilbert_scheme_data(1, NP.constant(2)).to_text()
    assert a == b and "d0 = 2" in a
