"""Formulas read off from a point: θ (dominating), χ (rank-isolating), minimal tame.

All three start from the vanishing ideal of the point over E, whose
coefficients lie in Q(e).  After clearing denominators each coefficient is
a polynomial in the e-variables outside the base, and every e-monomial
becomes a witness coordinate.
"""

from __future__ import annotations

from ..fields import FunctionField
from ..groebner import Ideal, eliminate
from ..hilbert import hilbert_polynomial
from ..hilbscheme import SchemeTooLargeError, hilbert_scheme_data, point_from_ideal
from ..linalg import solve
from ..poly import Polynomial, Ring
from .model import PairElement, element, field_over, is_e_name, recast
from .rank import (
    Base, homogeneous_vanishing_ideal, point_order, point_variables, transcendence_degree,
    vanishing_ideal,
)
from .tame import TameFormula, TameFormulaError, formula_ring, top


class EmitError(ValueError):
    pass


# ---------------------------------------------------------------- coefficient bookkeeping

class _Splitter:
    """Write Q(e)-coefficients as k-combinations of monomials in the free e-variables."""

    def __init__(self, efield, base: Base):
        self.efield = efield
        self.base = base
        enames = efield.names if isinstance(efield, FunctionField) else ()
        self.enames = enames
        self.free = tuple(n for n in enames if n not in base.e_names)
        self.kfield = base.field
        self.free_pos = [i for i, n in enumerate(enames) if n in self.free]
        self.base_pos = [(i, n) for i, n in enumerate(enames) if n in base.e_names]

    def split(self, c) -> dict:
        """{free e-monomial: k-coefficient} for a polynomial-in-e coefficient."""
        if not hasattr(c, "numer"):
            return {(0,) * len(self.free): self.kfield.convert(c)} if c else {}
        if not c.denom.is_ground:
            raise EmitError("coefficient %s still has a denominator" % c)
        den = c.denom.LC
        groups: dict = {}
        for m, k in c.numer.items():
            fm = tuple(m[i] for i in self.free_pos)
            bm = tuple(m[i] for i, _ in self.base_pos)
            groups.setdefault(fm, {})[bm] = k / den
        out = {}
        for fm, d in groups.items():
            if isinstance(self.kfield, FunctionField):
                names = tuple(n for _, n in self.base_pos)
                sub = FunctionField(names)
                val = recast(sub.frac(sub.frac.ring.from_dict(d)), self.kfield)
            else:
                val = self.kfield.convert(d[()])
            if val:
                out[fm] = val
        return out

    def monomial_value(self, fm) -> PairElement:
        v = PairElement(field_over(()).one)
        for n, e in zip(self.free, fm):
            if e:
                v = v * element(n) ** e
        return v


def _clear(f: Polynomial) -> Polynomial:
    """Multiply by the lcm of the coefficient denominators."""
    field = f.ring.field
    if not isinstance(field, FunctionField) or not f:
        return f
    den = None
    for c in f.terms.values():
        den = c.denom if den is None else den.lcm(c.denom)
    scale = field.frac.new(den, field.frac.ring.one)
    return f.scale(scale)


def _monomial_key(fm):
    return (sum(fm), tuple(-e for e in fm))


def _split_poly(f: Polynomial, sp: _Splitter, target: Ring) -> dict:
    """{free e-monomial: polynomial in target's variables over k}."""
    groups: dict = {}
    for m, c in f.terms.items():
        for fm, k in sp.split(c).items():
            groups.setdefault(fm, {})[m] = k
    out = {}
    for fm, d in groups.items():
        p = Polynomial(Ring(f.ring.names, sp.kfield), d)
        out[fm] = p
    return out


def _to_formula_ring(p: Polynomial, R: Ring) -> Polynomial:
    """Re-index a polynomial over (a subset of) R's variables into R."""
    idx = [R.index(v) for v in p.ring.names]
    out = {}
    for m, c in p.terms.items():
        nm = [0] * R.nvars
        for i, e in zip(idx, m):
            nm[i] = e
        out[tuple(nm)] = recast(c, R.field)
    return Polynomial(R, out)


def _independent_combination(vectors, field):
    """Greedy basis of the vectors; returns (kept indices, coefficient rows).

    ``coeffs[i][j]`` expresses vector i through kept vector j.
    """
    kept: list = []
    coeffs = []
    for i, v in enumerate(vectors):
        sol = None
        if kept:
            rows = [[vectors[k][r] for k in kept] for r in range(len(v))]
            sol = solve(field, rows, list(v))
        elif not any(v):
            sol = []
        if sol is None:
            kept.append(i)
            coeffs.append(None)
        else:
            coeffs.append(sol)
    out = []
    for i, c in enumerate(coeffs):
        if c is None:
            row = [field.zero] * len(kept)
            row[kept.index(i)] = field.one
        else:
            row = list(c) + [field.zero] * (len(kept) - len(c))
        out.append(row)
    return kept, out


def block_locus(values, names, base: Base, efree=()):
    """Multi-homogeneous ideal of a tuple of projective points over k.

    ``values[i][j]`` is a dict {free e-monomial: k-coefficient} for coordinate
    j of point i; ``names[i][j]`` the corresponding variable.  Returns the
    generators of the ideal as polynomials in a ring over k in those names.
    """
    kfield = base.field
    flat = [z for blk in names for z in blk]
    snames = ["_s%d" % i for i in range(len(names))]
    elim = tuple("_%s" % n for n in efree) + tuple(snames)
    ring = Ring(elim + tuple(flat), kfield, blocks={"aux": elim, "z": tuple(flat)})
    gens = []
    for i, (blk, vals) in enumerate(zip(names, values)):
        s = ring.gen(snames[i])
        for z, d in zip(blk, vals):
            f = ring.zero()
            for fm, c in d.items():
                mono = [0] * ring.nvars
                for j, e in enumerate(fm):
                    mono[j] = e
                f = f + ring.monomial(mono, c)
            gens.append(ring.gen(z) - s * f)
    res = eliminate(Ideal(ring, gens), ring.block("aux"))
    return list(res.groebner())


# ---------------------------------------------------------------- θ

def emit_theta(a, base=None) -> TameFormula:
    """θ(x): ∃ζ (γ(ζ), σ(ζ) ≠ 0, r_i(x, ζ) = 0) built from the reduced basis of I(a/E·k).

    ζ0 stands for the constant monomial and the remaining coordinates for the
    e-monomials occurring in the cleared basis, so the defining point is the
    witness (1, monomials of e).
    """
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    I = vanishing_ideal(a, base)
    xs = point_variables(len(a))
    if I.is_zero():
        return top(xs)
    sp = _Splitter(I.ring.field, base)
    gb = [_clear(g) for g in I.groebner()]
    parts = [_split_poly(g, sp, None) for g in gb]
    zero = (0,) * len(sp.free)
    monos = sorted({fm for p in parts for fm in p} - {zero}, key=_monomial_key)
    monos = [zero] + monos
    zs = tuple("z%d" % i for i in range(len(monos)))
    R = formula_ring(xs, (zs,), base.e_names)
    pos = {fm: R.gen(z) for fm, z in zip(monos, zs)}
    eqs = []
    sigma = R.gen(zs[0])
    for g, p in zip(gb, parts):
        eq = R.zero()
        for fm, P in p.items():
            eq = eq + _to_formula_ring(P, R) * pos[fm]
        eqs.append(eq)
        lc = R.zero()
        for fm, k in sp.split(g.LC).items():
            lc = lc + pos[fm].scale(recast(k, R.field))
        if lc.monic() != R.gen(zs[0]):
            sigma = sigma * lc
    values = [[{fm: base.field.one} for fm in monos]]
    loc = [_to_formula_ring(f, R) for f in block_locus(values, [zs], base, sp.free)]
    return TameFormula(xs, (zs,), tuple(eqs), tuple(loc), (sigma,), R)


def theta_witness(a, base=None) -> tuple:
    """The witness (1, e-monomials) used by :func:`emit_theta` for the point itself."""
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    I = vanishing_ideal(a, base)
    sp = _Splitter(I.ring.field, base)
    zero = (0,) * len(sp.free)
    monos = {fm for g in I.groebner() for c in _clear(g).terms.values() for fm in sp.split(c)}
    monos = [zero] + sorted(monos - {zero}, key=_monomial_key)
    return tuple(sp.monomial_value(fm) for fm in monos)


# ---------------------------------------------------------------- χ

def _subtuple_witnesses(I: Ideal, n_tr: int, have):
    """One relation among each (n_tr+1) coordinates not yet covered by ``have``."""
    from itertools import combinations
    xs = I.ring.names
    out = []
    covered = [set(g.variables()) for g in have]
    for T in combinations(xs, n_tr + 1):
        if any(c <= set(T) for c in covered):
            continue
        drop = [v for v in xs if v not in T]
        J = eliminate(I, drop) if drop else I
        sub = Ring(T, I.ring.field, order=point_order(len(T)))
        gb = Ideal(sub, [g.to_ring(sub) for g in J.groebner()]).groebner() if J.gens else []
        if not gb:
            raise EmitError("coordinates %s are independent, contradicting the degree" % (T,))
        g = list(gb)[-1]
        g = g.to_ring(I.ring)
        out.append(g)
        covered.append(set(g.variables()))
    return out


def emit_chi(a, base=None) -> TameFormula:
    """χ(x): one block per relation, coefficients rewritten over a k-basis.

    Relation i reads sum_j B_ij(x) ζ_ij with the B_ij linearly independent
    over k, so no nonzero witness makes it trivial; γ is the multi-homogeneous
    locus of the witness tuple of the point itself.
    """
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    I = vanishing_ideal(a, base)
    xs = point_variables(len(a))
    if I.is_zero():
        return top(xs)
    n_tr = transcendence_degree(a, base, over="E")
    rels = list(I.groebner())
    if n_tr + 1 <= len(a):
        rels += _subtuple_witnesses(I, n_tr, rels)
    sp = _Splitter(I.ring.field, base)
    kfield = base.field
    blocks, block_values, forms = [], [], []
    for i, g in enumerate(rels):
        p = _split_poly(_clear(g), sp, None)
        monos = sorted(p, key=_monomial_key)
        xmonos = sorted({m for P in p.values() for m in P.terms}, reverse=True)
        vectors = [[p[fm].terms.get(m, kfield.zero) for m in xmonos] for fm in monos]
        kept, coeffs = _independent_combination(vectors, kfield)
        vals = []
        for j, kidx in enumerate(kept):
            vals.append({fm: coeffs[r][j] for r, fm in enumerate(monos) if coeffs[r][j]})
        blocks.append(tuple("z%d_%d" % (i, j) for j in range(len(kept))) if len(rels) > 1
                      else tuple("z%d" % j for j in range(len(kept))))
        block_values.append(vals)
        forms.append([p[monos[k]] for k in kept])
    R = formula_ring(xs, blocks, base.e_names)
    eqs = []
    for blk, fs in zip(blocks, forms):
        eq = R.zero()
        for z, P in zip(blk, fs):
            eq = eq + _to_formula_ring(P, R) * R.gen(z)
        eqs.append(eq)
    loc = [_to_formula_ring(f, R) for f in block_locus(block_values, blocks, base, sp.free)]
    return TameFormula(xs, tuple(blocks), tuple(eqs), tuple(loc), (), R)


# ---------------------------------------------------------------- minimal tame formula

def minimal_tame_data(a, base=None):
    """Hilbert polynomial, scheme data and Plücker point of the ideal of (1, a)."""
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    Ih = homogeneous_vanishing_ideal(a, base)
    Q = hilbert_polynomial(Ih)
    try:
        data = hilbert_scheme_data(len(a), Q)
    except SchemeTooLargeError as exc:
        raise EmitError("Hilbert scheme for Q(d) = %s is too large: %s" % (Q, exc)) from None
    eta = point_from_ideal(Ih, data)
    return Ih, Q, data, eta


def _positive(f: Polynomial) -> Polynomial:
    """``f`` or ``-f``, whichever has a leading coefficient with positive sign."""
    if not f:
        return f
    c = f.LC
    lead = c.numer.LC if hasattr(c, "numer") else c
    return -f if lead < 0 else f


def emit_minimal_tame(a, base=None) -> TameFormula:
    """φ(x): ∃ζ ≠ 0 (γ(ζ), hs(η(ζ)), S(1, x, η(ζ)) = 0)."""
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    xs = point_variables(len(a))
    Ih, Q, data, eta = minimal_tame_data(a, base)
    if data.N0 == 0:
        return top(xs)
    # Scheme conditions above the minor cap are left out: every zeta on the
    # locus gamma specializes the point's own witness, and the Hilbert scheme
    # is closed over Q, so those conditions already vanish on V(gamma).
    efield = Ih.ring.field
    coords = list(eta.eta.coords)
    if isinstance(efield, FunctionField):
        den = None
        for c in coords:
            den = c.denom if den is None else den.lcm(c.denom)
        scale = efield.frac.new(den, efield.frac.ring.one)
        coords = [c * scale for c in coords]
    sp = _Splitter(efield, base)
    kfield = base.field
    split = [sp.split(c) for c in coords]
    monos = sorted({fm for d in split for fm in d}, key=_monomial_key)
    vectors = [[d.get(fm, kfield.zero) for d in split] for fm in monos]
    kept, coeffs = _independent_combination(vectors, kfield)
    zs = tuple("z%d" % j for j in range(len(kept)))
    R = formula_ring(xs, (zs,), base.e_names)
    eta_forms = []
    for T in range(len(coords)):
        f = R.zero()
        for j, k in enumerate(kept):
            c = vectors[k][T]
            if c:
                f = f + R.gen(zs[j]).scale(recast(c, R.field))
        eta_forms.append(f)
    vals = [[{fm: coeffs[r][j] for r, fm in enumerate(monos) if coeffs[r][j]}
             for j in range(len(kept))]]
    eta_map = dict(zip(data.eta_names, eta_forms))
    eqs = []
    seen = set()
    mapping = dict(eta_map)
    mapping["x0"] = R.one()
    for i, x in enumerate(xs, start=1):
        mapping["x%d" % i] = R.gen(x)
    for tmpl in data.S_template:
        f = _positive(tmpl.substitute(mapping, R))
        if f and f not in seen:
            seen.add(f)
            eqs.append(f)
    for h in data.scheme_equations:
        f = _positive(h.substitute(eta_map, R))
        if f and f not in seen:
            seen.add(f)
            eqs.append(f)
    loc = [_to_formula_ring(f, R) for f in block_locus(vals, [zs], base, sp.free)]
    try:
        return TameFormula(xs, (zs,), tuple(eqs), tuple(loc), (), R)
    except TameFormulaError as exc:  # pragma: no cover - construction guarantees homogeneity
        raise EmitError(str(exc)) from None
