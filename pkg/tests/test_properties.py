"""Property tests for the algebraic invariants."""

import random

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from noetherpairs.exterior import (is_decomposable, plucker_coordinates, random_subspace,
                                   subspace_from_plucker)
from noetherpairs.fields import GF, QQ
from noetherpairs.groebner import Ideal, buchberger, is_groebner, normal_form
from noetherpairs.hilbert import graded_dimension, graded_dimension_gb, saturate
from noetherpairs.pairs.lam import lambda_eval
from noetherpairs.pairs.model import element
from noetherpairs.pairs.tame import make_formula, tame_conjoin, tame_eval
from noetherpairs.poly import Polynomial, Ring
from noetherpairs.topology import random_family

R3 = Ring(("x", "y", "z"))
P3 = Ring(("x0", "x1", "x2"))

FAST = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def polys(ring, max_deg=3, max_terms=4, homogeneous=False):
    exps = st.tuples(*[st.integers(0, max_deg)] * ring.nvars).filter(lambda m: sum(m) <= max_deg)
    if homogeneous:
        exps = st.integers(1, max_deg).flatmap(
            lambda d: st.lists(st.tuples(*[st.integers(0, d)] * ring.nvars)
                               .filter(lambda m: sum(m) == d), min_size=1, max_size=max_terms))
        return st.tuples(exps, st.lists(st.integers(-3, 3), min_size=max_terms,
                                        max_size=max_terms)).map(
            lambda t: Polynomial(ring, {m: QQ.convert(c) for m, c in zip(t[0], t[1]) if c}))
    terms = st.dictionaries(exps, st.integers(-5, 5).filter(bool), max_size=max_terms)
    return terms.map(lambda d: Polynomial(ring, {m: QQ.convert(c) for m, c in d.items()}))


@FAST
@given(polys(R3), polys(R3), polys(R3))
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@FAST
@given(polys(R3))
def test_print_parse_round_trip(f):
    assert R3(str(f)) == f


@FAST
@given(st.lists(polys(R3, 2, 3), min_size=1, max_size=3), polys(R3))
def test_groebner_basis_properties(gens, f):
    assume(any(gens))
    G = buchberger([g for g in gens if g])
    assert is_groebner(G)
    r = normal_form(f, G)
    assert normal_form(r, G) == r
    I = Ideal(R3, gens)
    assert (f - r) in I
    assert all(g in I for g in gens)


@FAST
@given(st.lists(polys(P3, 2, 3, homogeneous=True), min_size=1, max_size=3))
def test_saturation_idempotent_and_larger(gens):
    assume(any(gens))
    J = Ideal(P3, [g for g in gens if g])
    S = saturate(J)
    assert saturate(S) == S
    assert S.contains(J)


@FAST
@given(st.lists(polys(P3, 2, 3, homogeneous=True), min_size=1, max_size=3), st.integers(0, 4))
def test_graded_dimension_two_ways(gens, d):
    assume(any(gens))
    J = Ideal(P3, [g for g in gens if g])
    assert graded_dimension(J, d) == graded_dimension_gb(J, d)


@FAST
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(0, 3), st.booleans())
def test_plucker_round_trip(seed, r, extra, prime):
    F = GF(101) if prime else QQ
    s = r + extra
    B = random_subspace(random.Random(seed), r, s, F)
    eta = plucker_coordinates(B, F)
    assert is_decomposable(eta)
    assert next(c for c in eta.coords if c) == F.one
    assert plucker_coordinates(subspace_from_plucker(eta), F) == eta


@FAST
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_boundary_has_smaller_rank(seed, size):
    rng = random.Random(seed)
    fam = random_family(rng, size)
    for Y in range(1, 1 << size):
        if fam.is_constructible(Y):
            boundary = fam.closure_mask(Y) & ~Y
            assert fam.rirr_rank(boundary) < fam.rirr_rank(Y)


@FAST
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_degree_adds_on_disjoint_sets_of_equal_rank(seed, size):
    rng = random.Random(seed)
    fam = random_family(rng, size)
    cons = [Y for Y in range(1, 1 << size) if fam.is_constructible(Y)]
    for Y1 in cons:
        for Y2 in cons:
            if Y1 & Y2 == 0 and fam.rirr_rank(Y1) == fam.rirr_rank(Y2):
                assert fam.degree(Y1 | Y2) == fam.degree(Y1) + fam.degree(Y2)


coeffs = st.sampled_from(["e1", "e2", "e1 + 1", "2", "-e2^2", "1/(e1 + 2)"])


@FAST
@given(coeffs, coeffs, coeffs)
def test_lambda_reconstructs(c0, c1, c2):
    basis = [element("t"), element("t^2 + e1"), element("1")]
    lam = [element(c) for c in (c0, c1, c2)]
    a0 = sum((l * b for l, b in zip(lam[1:], basis[1:])), lam[0] * basis[0])
    assert lambda_eval(a0, basis) == lam


values = st.sampled_from(["0", "1", "e1", "e2^2 + 1", "t", "e1*t", "t + e2", "1/(t + 1)"])
IN_E = make_formula(["x"], [["z0", "z1"]], ["z1 - x*z0"])
ZERO = make_formula(["y"], [["w"]], ["w*y"])


@FAST
@given(values, values)
def test_conjunction_semantics(a, b):
    both = tame_conjoin(IN_E, ZERO)
    pt = (element(a), element(b))
    assert tame_eval(both, pt) == (tame_eval(IN_E, pt[:1]) and tame_eval(ZERO, pt[1:]))
