import pytest

from noetherpairs.groebner import Ideal
from noetherpairs.hilbert import (NotHomogeneousError, graded_dimension, graded_dimension_gb,
                                  gotzmann_number, gotzmann_representation, hilbert_polynomial,
                                  is_saturated, saturate, saturated_equal, saturation_exponent)
from noetherpairs.numerical import NumericalPolynomial
from noetherpairs.poly import Ring

NP = NumericalPolynomial


def twisted_cubic():
    R = Ring(("x0", "x1", "x2", "x3"))
    return Ideal(R, ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"])


def test_graded_dimension_examples():
    R2 = Ring(("x0", "x1"))
    assert graded_dimension(Ideal(R2, []), 5) == 0
    assert graded_dimension(Ideal(R2, ["x0"]), 3) == 3
    R3 = Ring(("x0", "x1", "x2"))
    quad = [str(R3.monomial(m)) for m in R3.monomial_basis(2)]
    assert graded_dimension(Ideal(R3, quad), 2) == 6


def test_graded_dimension_matches_groebner_count():
    J = twisted_cubic()
    for d in range(5):
        assert graded_dimension(J, d) == graded_dimension_gb(J, d)


def test_hilbert_polynomial_examples():
    R2 = Ring(("x0", "x1"))
    assert hilbert_polynomial(Ideal(R2, ["x1"])) == NP.constant(1)
    assert hilbert_polynomial(Ideal(R2, [])) == NP.from_power_coefficients([1, 1])
    Q = hilbert_polynomial(twisted_cubic())
    assert Q == NP.from_power_coefficients([1, 3])
    assert str(Q) == "3*d + 1"


def test_saturate_examples(x01):
    assert saturate(Ideal(x01, ["x0^2", "x0*x1"])) == Ideal(x01, ["x0"])
    assert saturate(Ideal(x01, ["x0"])) == Ideal(x01, ["x0"])
    assert saturate(Ideal(x01, ["x0^2", "x0*x1", "x1^2"])).is_unit()


def test_saturate_rejects_inhomogeneous(x01):
    with pytest.raises(NotHomogeneousError):
        saturate(Ideal(x01, ["x0 + 1"]))


def test_saturation_exponent(x01):
    J = Ideal(x01, ["x0^2", "x0*x1"])
    assert saturation_exponent(J) == 1
    assert saturation_exponent(Ideal(x01, ["x0"])) == 0


@pytest.mark.parametrize("Q, d0", [(NP.constant(1), 1), (NP.constant(2), 2),
                                   (NP.from_power_coefficients([1, 1]), 1),
                                   (NP.from_power_coefficients([1, 3]), 4)])
def test_gotzmann_number(Q, d0):
    assert gotzmann_number(Q) == d0


def test_gotzmann_representation_sums_back():
    Q = NP.from_power_coefficients([1, 3])
    total = NP(())
    for i, a in enumerate(gotzmann_representation(Q)):
        total = total + NP.binomial(a - i, a)
    assert total == Q


def test_saturated_equal(x01):
    a = Ideal(x01, ["x0"])
    assert saturated_equal(a, Ideal(x01, ["x0"]))
    assert not saturated_equal(a, Ideal(x01, ["x1"]))
    assert saturated_equal(saturate(Ideal(x01, ["x0^2", "x0*x1"])), a)
    assert is_saturated(a)
    with pytest.raises(ValueError):
        saturated_equal(Ideal(x01, ["x0^2", "x0*x1"]), a)


def test_numerical_polynomial_fit():
    Q = NP.fit(3, [10, 13, 16])
    assert Q(0) == 1 and Q(7) == 22 and Q.degree == 1
    assert NP.fit(0, [0, 1, 3]) == NP.binomial(1, 2)
