"""Acceptance criteria 1-10, each run at its stated size and time limit."""

import random
import subprocess
import sys
from itertools import product
from math import comb

import pytest
from acceptance_log import criterion

from noetherpairs.exterior import (grassmann_equations, plucker_coordinates, plucker_ring,
                                   random_subspace, subspace_from_plucker)
from noetherpairs.fields import GF, QQ
from noetherpairs.groebner import Ideal, intersect, normal_form
from noetherpairs.hilbert import (graded_dimension, graded_piece, gotzmann_number,
                                  hilbert_polynomial, saturate, saturation_exponent)
from noetherpairs.hilbscheme import (form_coefficients, hilbert_scheme_data, ideal_from_point,
                                     membership_test, on_scheme, point_from_ideal)
from noetherpairs.numerical import NumericalPolynomial as NP
from noetherpairs.poly import Polynomial, Ring, monomial_basis

pytestmark = pytest.mark.slow


def random_form(rng, ring, d, bound=3, density=0.6):
    terms = {}
    for m in monomial_basis(ring, d):
        if rng.random() < density:
            c = rng.randint(-bound, bound)
            if c:
                terms[m] = ring.field.convert(c)
    return Polynomial(ring, terms)


def random_ring(rng, char=0):
    n = rng.randint(1, 3)
    names = ("x", "y", "z")[:n]
    order = rng.choice(("grevlex", "lex"))
    F = QQ if not char else GF(char)
    return Ring(names, F, order=order)


# ---------------------------------------------------------------- 1

def test_c1_groebner_soundness():
    rng = random.Random(1)
    with criterion(1, "Groebner membership vs row reduction", 60) as info:
        checks = 0
        for _ in range(200):
            ring = random_ring(rng)
            gens = [random_form(rng, ring, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if g] or [ring.gen(ring.names[0])]
            I = Ideal(ring, gens)
            G = I.groebner()
            for d in range(7):
                piece = graded_piece(I, d)
                inside = ring.zero()
                for g in gens:
                    e = g.total_degree()
                    if e <= d:
                        inside = inside + random_form(rng, ring, d - e) * g
                for f in (random_form(rng, ring, d), inside,
                          inside + ring.monomial(rng.choice(monomial_basis(ring, d)))):
                    assert normal_form(f, G).is_zero() == piece.contains(f), (I, d, f)
                    checks += 1
        info["detail"] = "200 ideals, %d membership checks agree" % checks


# ---------------------------------------------------------------- 2

def random_monomial_ideal(rng, ring):
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 3)
        gens.append(ring.monomial(rng.choice(monomial_basis(ring, d))))
    return Ideal(ring, gens)


def random_binomial_ideal(rng, ring):
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, 3)
        a, b = rng.sample(monomial_basis(ring, d), 2) if len(monomial_basis(ring, d)) > 1 else (
            monomial_basis(ring, d)[0],) * 2
        gens.append(ring.monomial(a) - ring.monomial(b).scale(rng.choice((1, -1, 2))))
    gens = [g for g in gens if g]
    return Ideal(ring, gens or [ring.gen(ring.names[0])])


def test_c2_saturation():
    rng = random.Random(2)
    with criterion(2, "saturation", 60) as info:
        count = 0
        for kind in ["monomial"] * 100 + ["binomial"] * 50:
            ring = Ring(("x0", "x1", "x2")[:rng.randint(2, 3)])
            J = (random_monomial_ideal if kind == "monomial" else random_binomial_ideal)(rng, ring)
            S = saturate(J)
            assert saturate(S) == S
            assert S.contains(J)
            n = ring.nvars - 1
            D = saturation_exponent(J, S)
            top = max((g.total_degree() for g in S.gens), default=0)
            bound = 0 if D == 0 else (n + 1) * (D - 1) + top
            # strictly beyond: at the bound itself x0^(D-1)...xn^(D-1) can escape J
            for d in range(bound + 1, bound + 5):
                assert graded_dimension(J, d) == graded_dimension(S, d), (J, d)
            if not S.is_unit():
                assert hilbert_polynomial(J) == hilbert_polynomial(S)
            count += 1
        info["detail"] = "%d ideals (100 monomial, 50 binomial)" % count


# ---------------------------------------------------------------- 3

def points_ideal(rng, ring, k):
    """Vanishing ideal of k random rational points of P^n (saturated)."""
    n = ring.nvars
    I = None
    for _ in range(k):
        p = [rng.randint(-3, 3) for _ in range(n)]
        if not any(p):
            p[0] = 1
        j = next(i for i, c in enumerate(p) if c)
        lin = [ring.gen(ring.names[i]).scale(p[j]) - ring.gen(ring.names[j]).scale(p[i])
               for i in range(n) if i != j]
        P = Ideal(ring, lin)
        I = P if I is None else intersect(I, P)
    return Ideal(ring, list(I.groebner()))


def curve_ideal(rng, ring):
    """A plane curve, or a plane curve together with points."""
    f = random_form(rng, ring, rng.randint(1, 3), density=0.8)
    while not f:
        f = random_form(rng, ring, rng.randint(1, 3), density=0.8)
    return Ideal(ring, [f])


def saturated_instance(rng):
    ring = Ring(("x0", "x1", "x2")[:rng.choice((2, 3))])
    if ring.nvars == 3 and rng.random() < 0.4:
        return curve_ideal(rng, ring)
    return points_ideal(rng, ring, rng.randint(1, 5))


def test_c3_macaulay_and_mumford():
    rng = random.Random(3)
    with criterion(3, "Macaulay growth and generation at d0", 120) as info:
        grown = 0
        for _ in range(100):
            J = saturated_instance(rng)
            ring = J.ring
            n = ring.nvars - 1
            Q = hilbert_polynomial(J)
            d0 = gotzmann_number(Q)
            # generation: <J_d0> agrees with J in degrees d0..d0+4
            K = Ideal(ring, graded_piece(J, d0).basis_polynomials(ring))
            for d in range(d0, d0 + 5):
                assert graded_dimension(K, d) == graded_dimension(J, d), (J, d)
            # growth: a subspace of F[X]_d1 of dimension C(d1+n,n) - Q(d1) keeps the bound
            d1 = d0 + rng.randint(0, 1)
            need = comb(d1 + n, n) - Q(d1)
            monos = monomial_basis(ring, d1)
            if rng.random() < 0.5:
                gens = [ring.monomial(m) for m in rng.sample(monos, need)]
            else:
                gens = [random_form(rng, ring, d1) for _ in range(need)]
            U = Ideal(ring, gens)
            if graded_dimension(U, d1) < need:
                continue
            for d in range(d1, d1 + 5):
                assert graded_dimension(U, d) >= comb(d + n, n) - Q(d), (gens, d)
            grown += 1
        info["detail"] = "100 ideals generated at d0; %d growth instances; 5 degrees" % grown


# ---------------------------------------------------------------- 4

def evaluate(f, values):
    total = f.ring.field.zero
    for m, c in f.terms.items():
        term = c
        for v, e in zip(values, m):
            if e:
                term = term * v ** e
        total = total + term
    return total


def test_c4_grassmannian():
    rng = random.Random(4)
    with criterion(4, "Grassmannian relations and recovery", 30) as info:
        cache = {}
        for i in range(200):
            F = QQ if i % 2 == 0 else GF(101)
            r = rng.randint(1, 3)
            s = rng.randint(r, 6)
            B = random_subspace(rng, r, s, F)
            eta = plucker_coordinates(B, F)
            key = (r, s, F)
            if key not in cache:
                cache[key] = grassmann_equations(r, s, F)
            for rel in cache[key]:
                assert not evaluate(rel, eta.coords)
            for method in ("kernel", "contraction"):
                back = subspace_from_plucker(eta, method)
                assert plucker_coordinates(back, F) == eta
        eqs = grassmann_equations(2, 4)
        R = plucker_ring(4, 2)
        rel = R("p01*p23 - p02*p13 + p03*p12")
        assert len(eqs) == 1 and eqs[0].monic() in (rel.monic(), (-rel).monic())
        info["detail"] = "200 subspaces over Q and GF(101), r <= 3, s <= 6"


# ---------------------------------------------------------------- 5

def random_point_on_scheme(rng, data):
    """A random decomposable point (N0 <= 1 or n = 2, Q = 1: every point is on the scheme)."""
    s, N0 = data.s, data.N0
    B = random_subspace(rng, N0, s, data.field, bound=4)
    return plucker_coordinates(B, data.field)


def random_saturated_ideal(rng, data):
    ring = data.x_ring
    if data.n == 1:
        f = random_form(rng, ring, data.Q(0), bound=4, density=0.8)
        while not f:
            f = random_form(rng, ring, data.Q(0), bound=4, density=0.8)
        return Ideal(ring, [f])
    return points_ideal(rng, ring, 1)


def test_c5_hilbert_scheme_bijection():
    rng = random.Random(5)
    cases = [(1, 1), (1, 2), (1, 3), (2, 1)]
    with criterion(5, "Hilbert scheme bijection and membership", 120) as info:
        trips = 0
        forms = 0
        for n, q in cases:
            data = hilbert_scheme_data(n, NP.constant(q))
            ring = data.x_ring
            pts = []
            for _ in range(50):
                I = random_saturated_ideal(rng, data)
                eta = point_from_ideal(I, data).eta
                assert on_scheme(eta, data)
                assert ideal_from_point(eta, data) == I
                eta2 = random_point_on_scheme(rng, data)
                assert on_scheme(eta2, data)
                assert point_from_ideal(ideal_from_point(eta2, data), data).eta == eta2
                pts.append((eta, I))
                trips += 2
            for k in range(125):
                eta, I = rng.choice(pts)
                d = rng.randint(0, data.d0 + 2)
                if k % 2:
                    f = random_form(rng, ring, d, bound=4)
                else:
                    f = ring.zero()
                    for g in I.gens:
                        if g.total_degree() <= d:
                            f = f + random_form(rng, ring, d - g.total_degree()) * g
                c = form_coefficients(f, data, d)
                assert membership_test(c, eta, d, data) == I.contains(f), (I, f)
                forms += 1
        info["detail"] = "%d round trips over 4 schemes, %d forms" % (trips, forms)


# ---------------------------------------------------------------- 6

def check_family(fam):
    size = len(fam.points)
    cons = [Y for Y in range(1, 1 << size) if fam.is_constructible(Y)]
    rank = {Y: fam.rirr_rank(Y) for Y in cons}
    deg = {Y: fam.degree(Y) for Y in cons}
    for Y in cons:
        boundary = fam.closure_mask(Y) & ~Y
        assert fam.rirr_rank(boundary) < rank[Y]
    pairs = 0
    for Y1 in cons:
        for Y2 in cons:
            if Y1 & Y2 == 0 and rank[Y1] == rank[Y2]:
                U = Y1 | Y2
                du = deg[U] if U in deg else fam.degree(U)
                assert du == deg[Y1] + deg[Y2]
                pairs += 1
    return len(cons), pairs


def test_c6_noetherian_topology():
    from noetherpairs.topology import FiniteClosedFamily, all_families, random_family
    rng = random.Random(6)
    cap = 2000
    with criterion(6, "Noetherian topology lemmas", 60) as info:
        fams = sets = pairs = 0
        for size in range(1, 6):
            total = 2 ** (2 ** size)
            it = all_families(size) if total <= cap else (
                random_family(rng, size) for _ in range(cap))
            for fam in it:
                c, p = check_family(fam)
                fams += 1
                sets += c
                pairs += p
        chain = FiniteClosedFamily([1, 2, 3], [{1, 2, 3}, {1}, {1, 2}, set()])
        assert [chain.rirr_rank(S) for S in ({1}, {1, 2}, {1, 2, 3})] == [0, 1, 2]
        info["detail"] = "%d families, %d constructible sets, %d equal-rank disjoint pairs" % (
            fams, sets, pairs)


# ---------------------------------------------------------------- 7

def test_c7_pairs_catalog():
    from noetherpairs.pairs import (Sampler, catalog, element, emit_chi, emit_theta, rm_rank,
                                    tame_eval)
    with criterion(7, "pairs catalog ranks and chi bound", 60) as info:
        assert str(rm_rank([element("t")])) == "ω"
        assert str(rm_rank([element("e")])) == "1"
        assert str(rm_rank([element("t"), element("e*t")])) == "ω+1"
        sampler = Sampler(7)
        realized = 0
        for p in catalog():
            a, base = p.point, p.base
            assert tame_eval(emit_theta(a, base), a), p.name
            chi = emit_chi(a, base)
            assert tame_eval(chi, a), p.name
            bound = rm_rank(a, base)
            for b in sampler.realizations(chi, a, base, 50):
                assert rm_rank(b, base) <= bound, (p.name, b)
                realized += 1
        info["detail"] = "%d catalog points, %d chi-realizations within rank" % (
            len(catalog()), realized)


# ---------------------------------------------------------------- 8

def test_c8_minimal_tame_formula():
    from noetherpairs.pairs import (Sampler, element, emit_minimal_tame, enumerate_tame,
                                    is_e_name, tame_eval)
    with criterion(8, "minimal tame formula for a = e", 120) as info:
        a = (element("e"),)
        phi = emit_minimal_tame(a)
        sampler = Sampler(8)
        in_e = 0
        for _ in range(100):
            b = sampler.value()
            expected = all(is_e_name(n) for n in b.names)
            assert tame_eval(phi, (b,)) == expected, b
            in_e += expected
        real = sampler.realizations(phi, a, None, 50)
        enumerated = true_at_a = 0
        for equations in (1, 2):
            for psi in enumerate_tame(1, max_block=3, max_degree=2, budget=2000,
                                      equations=equations):
                enumerated += 1
                if tame_eval(psi, a):
                    true_at_a += 1
                    for b in real:
                        assert tame_eval(psi, b), (psi, b)
        info["detail"] = ("E-membership on 100 samples (%d in E); %d formulas enumerated, "
                          "%d true at a, checked on %d realizations" % (
                              in_e, enumerated, true_at_a, len(real)))


# ---------------------------------------------------------------- 9

def shifted_shape(chi, var="b"):
    """chi(x1 - b, x2, ...) as a formula in the free variables and b."""
    from noetherpairs.pairs.tame import TameFormula, formula_ring
    free = chi.free + (var,)
    ring = formula_ring(free, chi.blocks, chi.parameters)
    x1 = chi.free[0]
    shift = {x1: ring.gen(x1) - ring.gen(var)}
    eqs = tuple(f.to_ring(ring).substitute(shift, ring) for f in chi.equations)
    return TameFormula(free, chi.blocks, tuple(g for g in eqs if g), (), (), ring)


def e_membership_shape(arity):
    from noetherpairs.pairs.tame import make_formula
    x1 = "x" if arity == 1 else "x1"
    free = [x1] if arity == 1 else ["x%d" % i for i in range(1, arity + 1)]
    return make_formula(free, [["u0", "u1"]], ["u1 - e9*%s*u0" % x1])


def difference_in_e_shape(arity):
    """x1 - b lies in E."""
    from noetherpairs.pairs.tame import make_formula
    free = ["x"] if arity == 1 else ["x%d" % i for i in range(1, arity + 1)]
    return make_formula(free + ["b"], [["u0", "u1"]], ["u1 - (%s - b)*u0" % free[0]])


def test_c9_rewrites():
    from noetherpairs.pairs import (Sampler, catalog, element, emit_chi, tame_conjoin,
                                    tame_eval)
    from noetherpairs.pairs.rewrite import (disjoin_conjugates, rewrite_lambda_elim,
                                            substitute_parameter)
    lambda_data = [("e1*t + e1^2*t", ["t"], 1, "e1 + e1^2"),
                   ("t + e3*t^2", ["t", "t^2"], 2, "e3")]
    root_data = [{"roots": ["e5", "e5 + 1"]}, {"minpoly": "b^2 - e6^2"}]
    explicit = [["e5", "e5 + 1"], ["e6", "-e6"]]
    sampler = Sampler(9)
    with criterion(9, "rewrites preserve tame_eval", 30) as info:
        lam_cases = dis_cases = evals = 0
        for p in catalog():
            a = p.point
            chi = emit_chi(a, p.base)
            shape = tame_conjoin(chi, e_membership_shape(len(a)))
            points = [a, sampler.generic_copy(a)] + sampler.candidates(a, count=4)
            for a0, basis, index, value in lambda_data:
                psi = rewrite_lambda_elim(shape, "e9", a0, basis, index)
                inst = substitute_parameter(shape, "e9", value)
                # points where e9*x1 lies in E, so the instance can be true
                extra = [(element("1/(%s)" % value),) + tuple(a[1:])]
                for b in points + extra:
                    assert tame_eval(psi, b) == tame_eval(inst, b), (p.name, a0, b)
                    evals += 1
                lam_cases += 1
            shapes = [difference_in_e_shape(len(a))]
            if chi.blocks and max(chi.block_arities) <= 2:
                shapes.append(shifted_shape(chi))
            for base_shape in shapes:
                for data, roots in zip(root_data, explicit):
                    psi = disjoin_conjugates(base_shape, "b", **data)
                    insts = [_instance(base_shape, r) for r in roots]
                    shifted = [(a[0] + element(r),) + tuple(a[1:]) for r in roots]
                    for b in [a] + shifted + sampler.candidates(a, count=3):
                        want = any(tame_eval(f, b) for f in insts)
                        assert tame_eval(psi, b) == want, (p.name, roots, b)
                        evals += 1
                    dis_cases += 1
        assert lam_cases >= 20 and dis_cases >= 20
        info["detail"] = "%d lambda-elim cases, %d disjoin cases, %d evaluations agree" % (
            lam_cases, dis_cases, evals)


def _instance(shape, root):
    """shape with the free variable b replaced by the value ``root``."""
    from noetherpairs.pairs.model import element, recast
    from noetherpairs.pairs.tame import TameFormula, formula_ring
    r = element(root)
    free = tuple(v for v in shape.free if v != "b")
    ring = formula_ring(free, shape.blocks, set(shape.parameters) | set(r.names))
    wide = formula_ring(shape.free, shape.blocks, set(shape.parameters) | set(r.names))
    value = ring.constant(recast(r.value, ring.field))
    eqs = tuple(f.to_ring(wide).substitute({"b": value}, ring) for f in shape.equations)
    return TameFormula(free, shape.blocks, tuple(g for g in eqs if g), (), (), ring)


# ---------------------------------------------------------------- 10

RUNNER = """
import pathlib, sys
from noetherpairs.cli import run_text
for job in sorted(pathlib.Path(sys.argv[1]).glob("*.job")):
    sys.stdout.write("### " + job.name + "\\n" + run_text(job.read_text()))
"""


def test_c10_determinism():
    import os
    import pathlib
    golden = pathlib.Path(__file__).parent / "golden"
    with criterion(10, "CLI golden corpus byte-identical", None) as info:
        runs = []
        for hashseed in ("1", "2"):
            env = dict(os.environ, PYTHONHASHSEED=hashseed)
            res = subprocess.run([sys.executable, "-c", RUNNER, str(golden)], env=env,
                                 capture_output=True, check=True)
            runs.append(res.stdout)
        assert runs[0] == runs[1]
        expected = "".join("### %s\n%s" % (p.name, p.with_suffix(".out").read_text())
                           for p in sorted(golden.glob("*.job")))
        assert runs[0].decode() == expected
        info["detail"] = "%d jobs, two runs (different hash seeds) identical to the stored outputs" % (
            len(list(golden.glob("*.job"))))
