import pytest

from noetherpairs.pairs.model import element, elements
from noetherpairs.pairs.rewrite import (RewriteError, disjoin_conjugates, rewrite_lambda_elim,
                                        substitute_parameter)
from noetherpairs.pairs.tame import make_formula, tame_eval

E = element
SHAPE = make_formula(["x"], [["z"]], ["(x - e9)*z"])


def pt(*texts):
    return elements(texts)


def test_lambda_elim_linear():
    psi = rewrite_lambda_elim(SHAPE, "e9", "e1*t + e1^2*t", ["t"])
    assert str(psi) == ("exists (z) != 0 exists (w0, w1) != 0: "
                        "(e1^2*t + e1*t)*w0 - t*w1 = 0 and x*z*w0 - z*w1 = 0")
    inst = substitute_parameter(SHAPE, "e9", "e1 + e1^2")
    for b in ("e1 + e1^2", "e1", "t", "0"):
        assert tame_eval(psi, pt(b)) == tame_eval(inst, pt(b))
    assert tame_eval(psi, pt("e1^2 + e1"))


def test_lambda_elim_square():
    phi = make_formula(["x"], [["z"]], ["(x - e9^2)*z"])
    psi = rewrite_lambda_elim(phi, "e9", "e2*t", ["t"])
    text = str(psi)
    assert "w0^2" in text and "w1^2" in text
    inst = substitute_parameter(phi, "e9", "e2")
    for b in ("e2^2", "e2", "-e2^2", "t"):
        assert tame_eval(psi, pt(b)) == tame_eval(inst, pt(b))


def test_lambda_elim_second_coordinate():
    psi = rewrite_lambda_elim(SHAPE, "e9", "t + e3*t^2", ["t", "t^2"], index=2)
    inst = substitute_parameter(SHAPE, "e9", "e3")
    for b in ("e3", "1", "t", "e3 + 1"):
        assert tame_eval(psi, pt(b)) == tame_eval(inst, pt(b))


def test_lambda_elim_without_parameter():
    assert rewrite_lambda_elim(SHAPE, None) is SHAPE
    assert rewrite_lambda_elim(SHAPE, "e4", "t", ["t"]) is SHAPE


def test_lambda_elim_errors():
    with pytest.raises(RewriteError):
        rewrite_lambda_elim(SHAPE, "e9", "t^2", ["t"])  # λ-value 0
    with pytest.raises(RewriteError):
        rewrite_lambda_elim(SHAPE, "e9", "e9*t", ["t"])
    with pytest.raises(RewriteError):
        rewrite_lambda_elim(SHAPE, "e9", "t", ["t"], index=2)


CONJ = make_formula(["x", "b"], [["z"]], ["(x - b)*z"])


def test_disjoin_square_roots():
    psi = disjoin_conjugates(CONJ, "b", minpoly="b^2 - e")
    assert str(psi) == "exists (z) != 0: x^2*z^2 - e*z^2 = 0"


def test_disjoin_semantics():
    psi = disjoin_conjugates(CONJ, "b", minpoly="b^2 - e1^2")
    for b, want in (("e1", True), ("-e1", True), ("t", False), ("e2", False), ("0", False)):
        assert tame_eval(psi, pt(b)) is want


def test_disjoin_single_root_unchanged():
    psi = disjoin_conjugates(CONJ, "b", roots=["e2"])
    assert str(psi) == str(substitute_parameter_free(CONJ, "b", "e2"))


def substitute_parameter_free(phi, var, value):
    return make_formula([v for v in phi.free if v != var], phi.blocks,
                        ["(x - %s)*z" % value])


def test_disjoin_two_pairs_is_quartic():
    psi = disjoin_conjugates(CONJ, "b", minpoly="(b^2 - e1)*(b^2 - e2)")
    assert psi.equations[0].degree_in(["x"]) == 4
    assert tame_eval(psi, pt("0")) is False


def test_disjoin_large_block():
    shape = make_formula(["x", "b"], [["z0", "z1"]], ["z1 - x*z0", "(x - b)*z0"])
    psi = disjoin_conjugates(shape, "b", roots=["e1", "-e1"])
    for b, want in (("e1", True), ("-e1", True), ("t", False), ("e2", False), ("0", False),
                    ("e1*t", False)):
        assert tame_eval(psi, pt(b)) is want


def test_disjoin_errors():
    with pytest.raises(RewriteError):
        disjoin_conjugates(CONJ, "y", minpoly="y^2 - e")
    with pytest.raises(RewriteError):
        disjoin_conjugates(CONJ, "b")
    with_nonzero = make_formula(["x", "b"], [["z"]], ["(x - b)*z"], nonzero=["z"])
    with pytest.raises(RewriteError):
        disjoin_conjugates(with_nonzero, "b", roots=["e1", "e2"])
