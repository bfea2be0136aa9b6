"""Test points of the generic pair, seeded samplers and a bounded formula enumeration."""

from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from gmpy2 import mpq

from ..fields import QQ
from ..poly import Polynomial
from .model import PairElement, element, is_e_name, is_t_name
from .rank import Base
from .tame import TameFormula, formula_ring, tame_eval


@dataclass(frozen=True)
class CatalogPoint:
    name: str
    coords: tuple
    base: str = "Q"

    @property
    def point(self) -> tuple:
        return tuple(element(c) for c in self.coords)

    @property
    def arity(self) -> int:
        return len(self.coords)


CATALOG = (
    CatalogPoint("t", ("t",)),
    CatalogPoint("e", ("e",)),
    CatalogPoint("e^2", ("e^2",)),
    CatalogPoint("t^2+e", ("t^2 + e",)),
    CatalogPoint("(t,e*t)", ("t", "e*t")),
    CatalogPoint("(t1,t2)", ("t1", "t2")),
    CatalogPoint("(e1,e2)", ("e1", "e2")),
    CatalogPoint("(e,t)", ("e", "t")),
    CatalogPoint("(t,e1*t+e2)", ("t", "e1*t + e2")),
    CatalogPoint("(t1,t2,e*t1+t2)", ("t1", "t2", "e*t1 + t2")),
    CatalogPoint("(t,e*t) over Q(e)", ("t", "e*t"), "Q(e)"),
)


def catalog(max_arity: int | None = None) -> tuple:
    return tuple(p for p in CATALOG if max_arity is None or p.arity <= max_arity)


# ---------------------------------------------------------------- samplers

@dataclass
class Sampler:
    """Seeded generator of model elements.

    Fresh variables (``e7, e8, t7, t8`` by default) keep samples generic
    with respect to the catalog points.
    """

    seed: int = 0
    e_pool: tuple = ("e7", "e8")
    t_pool: tuple = ("t7", "t8")
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    def _coeff(self):
        return self.rng.choice((-2, -1, 1, 1, 2, 3))

    def _poly_text(self, names, max_deg=2, terms=2):
        parts = []
        for _ in range(self.rng.randint(1, terms)):
            deg = self.rng.randint(0, max_deg)
            mon = "*".join(self.rng.choice(names) for _ in range(deg)) if deg else "1"
            parts.append("(%d)*%s" % (self._coeff(), mon))
        return " + ".join(parts)

    def e_value(self, names=None) -> PairElement:
        """A random nonzero element of Q(e...)."""
        names = tuple(names or self.e_pool)
        while True:
            v = element(self._poly_text(names))
            if self.rng.random() < 0.3:
                d = element(self._poly_text(names, 1, 1))
                if not d.is_zero():
                    v = v / d
            if not v.is_zero():
                return v

    def k_value(self) -> PairElement:
        """A random element that depends on at least one t-variable."""
        while True:
            v = element(self._poly_text(self.e_pool + self.t_pool))
            if any(is_t_name(n) for n in v.names):
                return v

    def value(self) -> PairElement:
        r = self.rng.random()
        if r < 0.15:
            return PairElement(mpq(self.rng.randint(-3, 3)))
        return self.e_value() if r < 0.55 else self.k_value()

    def tuple_(self, n: int) -> tuple:
        return tuple(self.value() for _ in range(n))

    def specialization(self, a, base=None) -> tuple:
        """The image of ``a`` under a random substitution fixing the base.

        e-variables outside the base go to random E-values, t-variables to
        random elements (possibly in E).  Every tame formula over the base
        true of ``a`` stays true of the image.
        """
        base = Base.parse(base)
        a = tuple(element(v) for v in a)
        names = {n for v in a for n in v.names}
        while True:
            mapping = {}
            for n in sorted(names):
                if is_e_name(n) and n not in base.e_names:
                    mapping[n] = self.e_value()
                elif is_t_name(n):
                    mapping[n] = self.k_value() if self.rng.random() < 0.7 else self.e_value()
            try:
                return tuple(v.substitute(mapping) for v in a)
            except ZeroDivisionError:
                continue

    def generic_copy(self, a, base=None) -> tuple:
        """``a`` with its non-base variables renamed to fresh ones (same type over the base)."""
        base = Base.parse(base)
        a = tuple(element(v) for v in a)
        names = sorted({n for v in a for n in v.names})
        e_fresh = iter("e%d" % i for i in range(20, 40))
        t_fresh = iter("t%d" % i for i in range(20, 40))
        mapping = {}
        for n in names:
            if is_e_name(n) and n not in base.e_names:
                mapping[n] = element(next(e_fresh))
            elif is_t_name(n):
                mapping[n] = element(next(t_fresh))
        return tuple(v.substitute(mapping) for v in a)

    def candidates(self, a, base=None, count: int = 50) -> list:
        """Candidate realizations: specializations of ``a`` mixed with random tuples."""
        out = [self.generic_copy(a, base)]
        while len(out) < count:
            if self.rng.random() < 0.6:
                out.append(self.specialization(a, base))
            else:
                out.append(self.tuple_(len(a)))
        return out

    def realizations(self, phi: TameFormula, a, base=None, count: int = 50) -> list:
        """Sampled tuples satisfying ``phi`` (drawn from :meth:`candidates`)."""
        return [b for b in self.candidates(a, base, count) if tame_eval(phi, b)]


# ---------------------------------------------------------------- enumeration

def _monomials(nfree: int, k: int, max_degree: int):
    """Exponent vectors (x-part, zeta-part) homogeneous of positive degree in zeta."""
    out = []
    for dz in range(1, max_degree + 1):
        zetas = [m for m in _exponents(k, dz)]
        for dx in range(0, max_degree - dz + 1):
            for xm in _exponents(nfree, dx):
                for zm in zetas:
                    out.append((dz, xm + zm))
    return out


def _exponents(n: int, d: int):
    res = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        res.append(tuple(e))
    return res


def enumerate_tame(nfree: int, max_block: int = 3, max_degree: int = 2,
                   coefficients=range(-2, 3), budget: int = 20000, seed: int = 0,
                   equations: int = 1):
    """Tame formulas ``exists zeta != 0: q(x, zeta) = 0`` with small integer coefficients.

    One block of arity ≤ ``max_block``; each q homogeneous in zeta with
    total degree ≤ ``max_degree``.  Spaces with at most ``budget``
    members are listed in full, larger ones are sampled (``budget``
    formulas, seeded).  With ``equations=2`` pairs of conditions sharing
    the block are sampled as well.
    """
    free = ("x",) if nfree == 1 else tuple("x%d" % i for i in range(1, nfree + 1))
    coefficients = tuple(coefficients)
    rng = random.Random(seed)
    for k in range(1, max_block + 1):
        block = tuple("z%d" % i for i in range(k))
        ring = formula_ring(free, (block,))
        by_degree: dict = {}
        for dz, m in _monomials(nfree, k, max_degree):
            by_degree.setdefault(dz, []).append(m)
        for dz, monos in sorted(by_degree.items()):
            size = len(coefficients) ** len(monos)
            if size <= budget:
                choices = product(coefficients, repeat=len(monos))
            else:
                choices = (tuple(rng.choice(coefficients) for _ in monos) for _ in range(budget))
            for cs in choices:
                if not _primitive(cs):
                    continue  # a scalar multiple of another member
                q = _poly(ring, monos, cs)
                if not q:
                    continue
                eqs = (q,)
                if equations > 1:
                    extra = _poly(ring, monos, tuple(rng.choice(coefficients) for _ in monos))
                    if extra:
                        eqs = (q, extra)
                yield TameFormula(free, (block,), eqs, (), (), ring)


def _primitive(cs) -> bool:
    """First nonzero entry positive and the entries coprime."""
    lead = next((c for c in cs if c), 0)
    return lead > 0 and gcd(*cs) == 1


def _poly(ring, monos, cs) -> Polynomial:
    return Polynomial(ring, {m: QQ.convert(c) for m, c in zip(monos, cs) if c})


__all__ = ["CatalogPoint", "CATALOG", "catalog", "Sampler", "enumerate_tame"]
