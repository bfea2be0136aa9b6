"""Buchberger's algorithm, the division algorithm and ideal operations."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .poly import (
    Polynomial, Ring, mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul,
)


# ---------------------------------------------------------------- reduction

def _reduce_terms(terms, divisors, ring, full=True):
    """Reduce a term dict by ``[(lm, poly), ...]``; returns the remainder dict."""
    key = ring.key
    p = dict(terms)
    heap = [(tuple(-k for k in key(m)), m) for m in p]
    heapq.heapify(heap)
    r = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in divisors:
            if mono_divides(lm, m):
                break
        else:
            r[m] = c
            if not full:
                r.update(p)
                return r
            continue
        sh = mono_div(m, lm)
        fac = c / g.terms[lm]
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            tm = mono_mul(gm, sh)
            old = p.get(tm)
            if old is None:
                p[tm] = -(fac * gc)
                heapq.heappush(heap, (tuple(-k for k in key(tm)), tm))
            else:
                v = old - fac * gc
                if v:
                    p[tm] = v
                else:
                    del p[tm]
    return r


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (a basis or list of polynomials).

    The remainder has no term divisible by a leading monomial of ``G``.
    """
    if isinstance(G, GroebnerBasis):
        if not G.ring.same_variables(f.ring):
            raise ValueError("ring mismatch in normal_form")
        if G.ring.order != f.ring.order:
            raise ValueError("order mismatch: %s vs %s" % (G.ring.order, f.ring.order))
        polys = G.polys
    else:
        polys = [g for g in G if g]
        for g in polys:
            if g.ring != f.ring:
                raise ValueError("ring or order mismatch in normal_form")
    ring = f.ring
    divisors = [(g.LM, g) for g in polys]
    return Polynomial(ring, _reduce_terms(f.terms, divisors, ring))


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    L = mono_lcm(f.LM, g.LM)
    a = f.mul_term(mono_div(L, f.LM), f.ring.field.one / f.LC)
    b = g.mul_term(mono_div(L, g.LM), g.ring.field.one / g.LC)
    return a - b


# ---------------------------------------------------------------- Buchberger

@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by decreasing leading monomial."""

    ring: Ring
    polys: tuple

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and [p.terms for p in self.polys] == [q.terms for q in other.polys])

    def __hash__(self):
        return hash(tuple(self.polys))

    @property
    def leading_monomials(self):
        return [g.LM for g in self.polys]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f.to_ring(self.ring), self)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.polys) + "]"


def _gm_update(G, lms, pairs, f, key):
    """Gebauer-Moeller installation of a new basis element ``f``."""
    lmf = f.LM
    t = len(G)
    kept = set()
    for (i, j) in pairs:
        L = mono_lcm(lms[i], lms[j])
        if (mono_divides(lmf, L) and mono_lcm(lms[i], lmf) != L
                and mono_lcm(lms[j], lmf) != L):
            continue
        kept.add((i, j))
    groups: dict = {}
    for i in range(t):
        groups.setdefault(mono_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for L in sorted(groups, key=key):
        if not any(mono_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = groups[L]
        if any(mono_coprime(lms[i], lmf) for i in idx):
            continue
        kept.add((min(idx), t))
    G.append(f)
    lms.append(lmf)
    return kept


def buchberger(gens, order=None, stop_on_unit: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are chosen by the normal strategy (smallest lcm first) and
    filtered by the Gebauer-Moeller criteria, which include Buchberger's
    coprimality criterion.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("buchberger needs at least one polynomial to fix the ring")
    ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    gens = [g.to_ring(ring) for g in gens if g]
    if not gens:
        return GroebnerBasis(ring, ())
    key = ring.key
    field = ring.field
    G: list = []
    lms: list = []
    pairs: set = set()
    # sort input so the result is independent of generator order
    gens = sorted((g.monic() for g in gens), key=lambda g: (key(g.LM), str(g)))
    for g in gens:
        h = normal_form(g, G) if G else g
        if h:
            h = h.monic()
            if stop_on_unit and h.is_constant():
                return GroebnerBasis(ring, (ring.one(),))
            pairs = _gm_update(G, lms, pairs, h, key)
    while pairs:
        best = min(pairs, key=lambda p: (key(mono_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard(best)
        i, j = best
        s = spoly(G[i], G[j])
        h = Polynomial(ring, _reduce_terms(s.terms, list(zip(lms, G)), ring))
        if h:
            h = h.scale(field.one / h.LC)
            if stop_on_unit and h.is_constant():
                return GroebnerBasis(ring, (ring.one(),))
            pairs = _gm_update(G, lms, pairs, h, key)
    return GroebnerBasis(ring, tuple(reduce_basis(G)))


def reduce_basis(G):
    """Minimalize and interreduce a Groebner basis; monic, sorted."""
    G = [g for g in G if g]
    if not G:
        return []
    ring = G[0].ring
    key = ring.key
    G = sorted(G, key=lambda g: key(g.LM))
    minimal = []
    for g in G:
        if not any(mono_divides(h.LM, g.LM) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [(h.LM, h) for k, h in enumerate(minimal) if k != idx]
        lm, lc = g.LM, g.LC
        tail = {m: c for m, c in g.terms.items() if m != lm}
        red = _reduce_terms(tail, others, ring)
        red[lm] = lc
        out.append(Polynomial(ring, red).monic())
    out.sort(key=lambda g: key(g.LM), reverse=True)
    return out


def is_groebner(G) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if normal_form(spoly(G[a], G[b]), G):
                return False
    return True


# ---------------------------------------------------------------- ideals

class Ideal:
    """Ideal of a polynomial ring, with a write-once cached reduced basis."""

    def __init__(self, ring: Ring, gens=()):
        self.ring = ring
        self.gens = tuple(ring(g) if not isinstance(g, Polynomial) else g.to_ring(ring)
                          for g in gens)
        self.gens = tuple(g for g in self.gens if g)
        self._gb = None

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            if not self.gens:
                self._gb = GroebnerBasis(self.ring, ())
            else:
                self._gb = buchberger(self.gens, self.ring.order)
        return self._gb

    def _set_groebner(self, gb: GroebnerBasis):
        if self._gb is None:
            self._gb = gb

    def normal_form(self, f) -> Polynomial:
        f = f if isinstance(f, Polynomial) else self.ring(f)
        return self.groebner().normal_form(f)

    def contains(self, f) -> bool:
        if isinstance(f, Ideal):
            return all(self.contains(g) for g in f.gens)
        return not self.normal_form(f)

    __contains__ = contains

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self, variables=None) -> bool:
        return all(g.is_homogeneous(variables) for g in self.gens)

    def with_order(self, order) -> "Ideal":
        ring = self.ring.with_order(order)
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if not self.ring.same_variables(other.ring):
            return False
        if other.ring.order != self.ring.order:
            other = other.with_order(self.ring.order)
        return self.groebner() == other.groebner()

    def __hash__(self):
        return hash(self.groebner())

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return "Ideal%s" % self


def _same_ring(I: Ideal, J: Ideal):
    if not I.ring.same_variables(J.ring):
        raise ValueError("ring mismatch: %r vs %r" % (I.ring, J.ring))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + tuple(g.to_ring(I.ring) for g in J.gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """Ideal generated by pairwise products of generators."""
    _same_ring(I, J)
    prods = []
    seen = set()
    for f in I.gens:
        for g in J.gens:
            h = (f * g.to_ring(I.ring)).monic()
            if h not in seen:
                seen.add(h)
                prods.append(f * g.to_ring(I.ring))
    return Ideal(I.ring, prods)


def eliminate(I: Ideal, drop) -> Ideal:
    """``I`` intersected with the subring without the variables ``drop``.

    ``drop`` is a block name or an iterable of variable names.  The result
    lives in that subring (grevlex) and carries its reduced basis.
    """
    ring = I.ring
    if isinstance(drop, str):
        drop = ring.block(drop) if drop in ring.blocks else (drop,)
    drop = [v for v in ring.names if v in set(drop)]
    sub = ring.drop(drop).with_order("grevlex")
    if not I.gens:
        return Ideal(sub, ())
    eorder = ring.elimination_order(drop)
    gb = buchberger(I.gens, eorder)
    idx = [ring.index(v) for v in drop]
    kept = [g for g in gb if all(m[i] == 0 for m in g.terms for i in idx)]
    kept = [g.to_ring(sub) for g in kept]
    out = Ideal(sub, kept)
    out._set_groebner(GroebnerBasis(sub, tuple(sorted(kept, key=lambda g: sub.key(g.LM), reverse=True))))
    return out


def _fresh(ring: Ring, base: str) -> str:
    name = base
    k = 0
    while name in ring.names:
        k += 1
        name = "%s%d" % (base, k)
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I`` meet ``J`` via elimination of an auxiliary variable."""
    _same_ring(I, J)
    if not I.gens or not J.gens:
        return Ideal(I.ring, ())
    t = _fresh(I.ring, "_t")
    big = I.ring.extend([t], block="_aux", front=True)
    tv = big.gen(t)
    gens = [tv * f.to_ring(big) for f in I.gens] + [(1 - tv) * g.to_ring(big) for g in J.gens]
    res = eliminate(Ideal(big, gens), [t])
    return Ideal(I.ring, [g.to_ring(I.ring) for g in res.gens])


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f``."""
    from .poly import exact_div
    f = f.to_ring(I.ring)
    if not f:
        return Ideal(I.ring, [I.ring.one()])
    meet = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [exact_div(g, f) for g in meet.gens])


def saturate_by(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f^infinity`` through ``I + (1 - u f)`` and elimination of ``u``."""
    f = f.to_ring(I.ring)
    u = _fresh(I.ring, "_u")
    big = I.ring.extend([u], block="_aux", front=True)
    uv = big.gen(u)
    gens = [g.to_ring(big) for g in I.gens] + [1 - uv * f.to_ring(big)]
    res = eliminate(Ideal(big, gens), [u])
    return Ideal(I.ring, [g.to_ring(I.ring) for g in res.gens])


def saturate_by_variable(I: Ideal, var: str) -> Ideal:
    """``I : var^infinity`` for an ideal homogeneous in all variables.

    With grevlex and ``var`` least significant, dividing each basis element
    by its largest power of ``var`` yields a basis of the saturation.
    """
    ring = I.ring
    if not I.gens:
        return Ideal(ring, ())
    if not I.is_homogeneous():
        return saturate_by(I, ring.gen(var))
    i = ring.index(var)
    prio = tuple(k for k in range(ring.nvars) if k != i) + (i,)
    from .poly import MonomialOrder
    gb = buchberger(I.gens, MonomialOrder("grevlex", prio))
    out = []
    for g in gb:
        k = min(m[i] for m in g.terms)
        if k:
            sh = [0] * ring.nvars
            sh[i] = k
            g = Polynomial(gb.ring, {mono_div(m, tuple(sh)): c for m, c in g.terms.items()})
        out.append(g.to_ring(ring))
    return Ideal(ring, out)


def is_unit_ideal(gens) -> bool:
    """Fast test for ``1 in (gens)``."""
    gens = [g for g in gens if g]
    if not gens:
        return False
    return buchberger(gens, stop_on_unit=True).is_unit()
