"""Rewrites that turn instances with special parameters into ordinary instances.

``rewrite_lambda_elim`` removes a parameter whose value is a λ-function
value: the value is pinned down by a fresh projective block ξ subject to
``ξ0*a0 = ξ1*a1 + ... + ξn*an``.

``disjoin_conjugates`` replaces the disjunction of an instance over all
roots of a polynomial by one instance with invariant coefficients.  The
roots enter through auxiliary variables tied together by the elementary
symmetric relations, which are then eliminated.
"""

from __future__ import annotations

import re
from itertools import combinations, product

from ..groebner import Ideal, eliminate
from ..poly import Polynomial, Ring, parse_expression
from .lam import lambda_eval
from .model import (
    PairElement, element, field_names, field_over, recast,
)
from .tame import TameFormula, _FormulaAlgebra, _fresh_names, formula_ring


class RewriteError(ValueError):
    pass


def _move(f: Polynomial, ring: Ring, pad=0) -> Polynomial:
    """Re-home ``f`` in ``ring``: monomials extended by ``pad`` zeros, coefficients recast."""
    terms = {}
    for m, c in f.terms.items():
        terms[tuple(m) + (0,) * pad] = recast(c, ring.field)
    return Polynomial(ring, terms)


def _split_by_param(f: Polynomial, param: str):
    """Write ``f`` as sum_k param^k * f_k; returns {k: f_k} over the field without ``param``."""
    names = field_names(f.ring.field)
    rest = field_over([n for n in names if n != param])
    ring = f.ring.with_field(rest)
    if param not in names:
        return {0: _move(f, ring)}
    pos = names.index(param)
    pieces: dict = {}
    for m, c in f.terms.items():
        if c.denom.degree(pos) > 0:
            raise RewriteError("parameter %s occurs in a denominator" % param)
        den = recast(f.ring.field.frac(c.denom), rest)
        by_power: dict = {}
        for em, k in c.numer.items():
            rm = em[:pos] + (0,) + em[pos + 1:]
            by_power.setdefault(em[pos], {})[rm] = k
        for k, d in by_power.items():
            num = f.ring.field.frac(f.ring.field.frac.ring.from_dict(d))
            val = recast(num, rest) / den
            pieces.setdefault(k, {})[m] = val
    return {k: Polynomial(ring, d) for k, d in pieces.items()}


def substitute_parameter(phi: TameFormula, param: str, value) -> TameFormula:
    """The instance obtained by giving the model name ``param`` the value ``value``."""
    value = element(value)
    names = (set(phi.parameters) - {param}) | set(value.names)
    ring = formula_ring(phi.free, phi.blocks, names)

    def sub(f):
        out = ring.zero()
        for k, g in _split_by_param(f, param).items():
            out = out + _move(g, ring).scale(recast((value ** k).value, ring.field))
        return out

    groups = [tuple(sub(f) for f in grp) for grp in (phi.equations, phi.locus, phi.nonzero)]
    return TameFormula(phi.free, phi.blocks, tuple(g for g in groups[0] if g),
                       tuple(g for g in groups[1] if g), groups[2], ring)


def rewrite_lambda_elim(phi: TameFormula, param, a0=None, basis=(), index: int = 1) -> TameFormula:
    """Eliminate the parameter ``param`` standing for λ_n^index(a0; basis).

    With ``param=None`` (or a parameter that does not occur) ``phi`` is
    returned unchanged.  Each condition, expanded as sum_k param^k q_k,
    becomes sum_k ξ_index^k ξ0^(N-k) q_k where N is the largest power of
    ``param`` in the formula.
    """
    if param is None or param not in phi.parameters:
        return phi
    a0 = element(a0)
    basis = [element(a) for a in basis]
    n = len(basis)
    if not 1 <= index <= n:
        raise RewriteError("index %d outside 1..%d" % (index, n))
    for v in [a0] + basis:
        if param in v.names:
            raise RewriteError("the λ data may not mention the parameter %s" % param)
    value = lambda_eval(a0, basis)[index - 1]
    if value.is_zero():
        raise RewriteError("λ-value is zero: the basis is dependent or a0 is outside its span")
    split = {grp: [_split_by_param(f, param) for f in polys]
             for grp, polys in (("eq", phi.equations), ("locus", phi.locus),
                                ("nonzero", phi.nonzero))}
    N = max(k for grp in split.values() for pieces in grp for k in pieces)
    taken = set(phi.free) | set(phi.bound)
    xi = tuple(_fresh_names("w", n + 1, taken))
    blocks = phi.blocks + (xi,)
    names = set(phi.parameters) - {param}
    for v in [a0] + basis:
        names |= set(v.names)
    ring = formula_ring(phi.free, blocks, names)
    g0, gi = ring.gen(xi[0]), ring.gen(xi[index])

    def clear(pieces):
        out = ring.zero()
        for k, g in pieces.items():
            out = out + _move(g, ring, pad=n + 1) * gi ** k * g0 ** (N - k)
        return out

    link = g0.scale(recast(a0.value, ring.field))
    for x, a in zip(xi[1:], basis):
        link = link - ring.gen(x).scale(recast(a.value, ring.field))
    eqs = (link,) + tuple(clear(p) for p in split["eq"])
    locus = tuple(clear(p) for p in split["locus"])
    nonzero = tuple(clear(p) for p in split["nonzero"])
    return TameFormula(phi.free, blocks, tuple(g for g in eqs if g),
                       tuple(g for g in locus if g), nonzero, ring)


# ---------------------------------------------------------------- conjugates

def _minpoly_coefficients(var, minpoly=None, roots=None):
    """Coefficients c_0..c_n (c_n = 1) of the monic polynomial, as PairElements."""
    if (minpoly is None) == (roots is None):
        raise RewriteError("give exactly one of a polynomial or an explicit list of roots")
    if roots is not None:
        coeffs = [PairElement(field_over(()).one)]
        for r in map(element, roots):
            # multiply by (y - r)
            nxt = [PairElement(field_over(()).zero)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - c * r
            coeffs = nxt
        return coeffs
    text = minpoly if isinstance(minpoly, str) else str(minpoly)
    params = {tok for tok in re.findall(r"[A-Za-z_]\w*", text) if tok != var}
    ring = Ring((var,), field_over(params))
    f = parse_expression(text, _FormulaAlgebra(ring))
    n = f.total_degree()
    if n < 1:
        raise RewriteError("the root polynomial must have positive degree")
    lead = f.coefficient((n,))
    return [PairElement(f.coefficient((k,)) / lead).normalized() for k in range(n + 1)]


def disjoin_conjugates(shape: TameFormula, var: str, minpoly=None, roots=None) -> TameFormula:
    """One instance equivalent to OR over the roots b of ``shape(x, b)``.

    ``var`` is a free variable of ``shape`` standing for the conjugate
    parameter; the roots are given by a polynomial in ``var`` with
    coefficients in the model (``minpoly``) or listed explicitly
    (``roots``).  The result is the product-ideal instance: each
    condition is a product, one factor per root, and the roots are
    eliminated through their symmetric functions.  Blocks of arity one
    are shared between the factors; larger blocks are copied per root.
    """
    if var not in shape.free:
        raise RewriteError("%s is not a free variable of the shape" % var)
    if shape.locus or shape.nonzero:
        raise RewriteError("shapes with locus or inequation conditions are not supported")
    coeffs = _minpoly_coefficients(var, minpoly, roots)
    n = len(coeffs) - 1
    free = tuple(v for v in shape.free if v != var)
    if n == 1:
        root = -coeffs[0]
        names = set(shape.parameters) | set(root.names)
        ring = formula_ring(free, shape.blocks, names)
        src = shape.ring.with_field(ring.field)
        mapping = {var: ring.constant(recast(root.value, ring.field))}
        eqs = tuple(_move(f, src).substitute(mapping, ring) for f in shape.equations)
        return TameFormula(free, shape.blocks, tuple(g for g in eqs if g), (), (), ring)
    shared = all(len(b) == 1 for b in shape.blocks)
    taken = set(shape.free) | set(shape.bound)
    if shared:
        copies = [dict() for _ in range(n)]
        blocks = shape.blocks
    else:
        copies, blocks = [], []
        for i in range(n):
            fresh = _fresh_names("z%d_" % i, len(shape.bound), taken)
            taken |= set(fresh)
            copies.append(dict(zip(shape.bound, fresh)))
            it = iter(fresh)
            blocks.extend(tuple(next(it) for _ in b) for b in shape.blocks)
        blocks = tuple(blocks)
    ys = tuple(_fresh_names("_y", n, taken))
    bound = tuple(z for b in blocks for z in b)
    names = set(shape.parameters)
    for c in coeffs:
        names |= set(c.names)
    field = field_over(names)
    block_map = {"y": ys, "rest": free + bound}
    big = Ring(ys + free + bound, field, blocks=block_map)
    src = shape.ring.with_field(field)
    gens = []
    # elementary symmetric relations: e_k(y) = (-1)^k c_{n-k}
    for k in range(1, n + 1):
        ek = big.zero()
        for idx in combinations(range(n), k):
            term = big.one()
            for i in idx:
                term = term * big.gen(ys[i])
            ek = ek + term
        target = recast(coeffs[n - k].value, field)
        gens.append(ek - big.constant(target if k % 2 == 0 else -target))
    factors = []
    for i in range(n):
        mapping = {var: big.gen(ys[i])}
        for old, new in copies[i].items():
            mapping[old] = big.gen(new)
        factors.append([_move(f, src).substitute(mapping, big) for f in shape.equations])
    for choice in product(*factors):
        g = big.one()
        for f in choice:
            g = g * f
        gens.append(g)
    res = eliminate(Ideal(big, gens), ys)
    ring = formula_ring(free, blocks, names)
    out = []
    for g in res.groebner():
        h = g.to_ring(ring)
        if h:
            out.append(h.monic())
    if shared and out:
        out = [_rehomogenize(h, blocks, n, shape) for h in out]
    return TameFormula(free, blocks, tuple(out), (), (), ring)


def _rehomogenize(h: Polynomial, blocks, n: int, shape: TameFormula) -> Polynomial:
    """Give a generator the block degrees of an n-fold product of shape conditions."""
    ring = h.ring
    for b in blocks:
        z = b[0]
        want = n * max((f.degree_in([z]) for f in shape.equations), default=0)
        idx = ring.index(z)
        terms = {}
        for m, c in h.terms.items():
            mm = list(m)
            mm[idx] = want
            terms[tuple(mm)] = c
        h = Polynomial(ring, terms)
    return h


__all__ = ["RewriteError", "substitute_parameter", "rewrite_lambda_elim", "disjoin_conjugates"]
