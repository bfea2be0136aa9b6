"""Vanishing ideals of points, transcendence degrees and Poizat's rank rm."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from ..fields import FunctionField
from ..groebner import Ideal, eliminate
from ..linalg import rank
from ..poly import MonomialOrder, Polynomial, Ring
from .model import (
    PairElement, canonical_names, element, field_names, field_over, is_e_name, is_t_name,
    split_e_t,
)


class BaseError(ValueError):
    pass


@dataclass(frozen=True)
class Base:
    """A base field Q(e_S) for named e-variables S (λ-closed by construction)."""

    e_names: tuple = ()

    def __post_init__(self):
        for n in self.e_names:
            if not is_e_name(n):
                raise BaseError("base fields may only adjoin e-variables, got %r" % n)
        object.__setattr__(self, "e_names", canonical_names(self.e_names))

    @classmethod
    def parse(cls, text) -> "Base":
        """``Q``, ``QQ`` or ``Q(e1, e2)``."""
        if isinstance(text, Base):
            return text
        if text is None:
            return cls()
        s = str(text).replace(" ", "")
        if s in ("Q", "QQ", ""):
            return cls()
        m = re.fullmatch(r"QQ?\(([^()]*)\)", s)
        if not m:
            raise BaseError("unsupported base descriptor %r" % text)
        names = [v for v in m.group(1).split(",") if v]
        return cls(tuple(names))

    def extend(self, names) -> "Base":
        return Base(tuple(set(self.e_names) | set(names)))

    @property
    def field(self):
        return field_over(self.e_names)

    def __str__(self):
        return "Q(%s)" % ", ".join(self.e_names) if self.e_names else "Q"


@total_ordering
@dataclass(frozen=True)
class OrdinalRank:
    """The ordinal omega*m + r."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 0 or self.r < 0:
            raise ValueError("ordinal coefficients must be non-negative")

    def __lt__(self, other):
        return (self.m, self.r) < (other.m, other.r)

    def __str__(self):
        if self.m == 0:
            return str(self.r)
        head = "ω" if self.m == 1 else "ω·%d" % self.m
        return head + ("+%d" % self.r if self.r else "")

    @classmethod
    def parse(cls, text: str) -> "OrdinalRank":
        s = text.replace(" ", "").replace("omega", "ω").replace("*", "·")
        m = re.fullmatch(r"(?:ω(?:·(\d+))?)?(?:\+?(\d+))?", s)
        if not s or not m:
            raise ValueError("cannot read ordinal %r" % text)
        has_omega = "ω" in s
        mm = int(m.group(1)) if m.group(1) else (1 if has_omega else 0)
        return cls(mm, int(m.group(2)) if m.group(2) else 0)


def point_order(n: int) -> MonomialOrder:
    """grevlex with x_n > ... > x_1, so bases read ``x2 - e*x1``."""
    return MonomialOrder("grevlex", tuple(reversed(range(n))))


def point_variables(n: int) -> tuple:
    """Names for the coordinates of an n-tuple: ``x`` or ``x1..xn``."""
    return ("x",) if n == 1 else tuple("x%d" % i for i in range(1, n + 1))


# ---------------------------------------------------------------- vanishing ideals

def _e_field_for(a, base: Base):
    names = set(base.e_names)
    for v in a:
        names |= {n for n in v.names if is_e_name(n)}
    return field_over(names)


def _as_t_polynomial(poly, src_names, ring: Ring, efield):
    """A sympy polynomial in e and t as a polynomial in t (ring vars) over Q(e)."""
    t_pos = [(i, ring.index(n)) for i, n in enumerate(src_names) if is_t_name(n)]
    e_pos = [i for i, n in enumerate(src_names) if is_e_name(n)]
    e_names = [src_names[i] for i in e_pos]
    groups: dict = {}
    for m, c in poly.items():
        tm = [0] * ring.nvars
        for i, j in t_pos:
            tm[j] = m[i]
        groups.setdefault(tuple(tm), {})[tuple(m[i] for i in e_pos)] = c
    out = {}
    for tm, d in groups.items():
        if e_names:
            sub = FunctionField(tuple(e_names))
            val = sub.frac(sub.frac.ring.from_dict(d))
            from .model import recast
            out[tm] = recast(val, efield)
        else:
            out[tm] = efield.convert(d[()])
    return Polynomial(ring, {m: c for m, c in out.items() if c})


def vanishing_ideal(a, base=None) -> Ideal:
    """I(a / E·k): the ideal of a over Q(e), in grevlex on ``point_variables``.

    The result carries its reduced basis.  Since E/Q(e) is algebraic and
    the t-variables are generic, extending scalars to E changes nothing.
    """
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    efield = _e_field_for(a, base)
    xs = point_variables(len(a))
    xring = Ring(xs, efield, order=point_order(len(xs)))
    t_names = sorted({n for v in a for n in v.names if is_t_name(n)}, key=lambda n: canonical_names([n]))
    t_names = list(canonical_names(t_names))
    if not t_names:
        gens = [xring.gen(x) - xring.constant(v.in_field(efield)) for x, v in zip(xs, a)]
        I = Ideal(xring, gens)
        gb = I.groebner()
        out = Ideal(xring, list(gb))
        out._set_groebner(gb)
        return out
    big = Ring(tuple(t_names) + ("_u",) + xs, efield,
               blocks={"t": tuple(t_names) + ("_u",), "X": xs})
    gens = []
    denom_prod = big.one()
    for x, v in zip(xs, a):
        c = v.canonical()
        src = [str(s) for s in c.field.symbols] if hasattr(c, "field") else []
        if hasattr(c, "numer"):
            num = _as_t_polynomial(c.numer, src, big, efield)
            den = _as_t_polynomial(c.denom, src, big, efield)
        else:
            num, den = big.constant(c), big.one()
        gens.append(den * big.gen(x) - num)
        if not den.is_constant():
            denom_prod = denom_prod * den
    gens.append(big.one() - big.gen("_u") * denom_prod)
    res = eliminate(Ideal(big, gens), big.block("t"))
    kept = [g.to_ring(xring) for g in res.groebner()]
    gb = Ideal(xring, kept).groebner()
    out = Ideal(xring, list(gb))
    out._set_groebner(gb)
    return out


def homogeneous_vanishing_ideal(a, base=None) -> Ideal:
    """The ideal of the projective point (1 : a_1 : ... : a_n) in x0..xn."""
    I = vanishing_ideal(a, base)
    n = I.ring.nvars
    names = tuple("x%d" % i for i in range(n + 1))
    ring = Ring(names, I.ring.field)
    mapping = {old: ring.gen(new) for old, new in zip(I.ring.names, names[1:])}
    gens = [g.substitute(mapping, ring).homogenize("x0") for g in I.groebner()]
    return Ideal(ring, gens)


# ---------------------------------------------------------------- degrees

def jacobian_rank(elems, variables) -> int:
    """Rank of d(elems)/d(variables) over the common function field."""
    elems = [element(v) for v in elems]
    variables = list(variables)
    if not elems or not variables:
        return 0
    names = set(variables)
    for v in elems:
        names |= set(v.names)
    F = field_over(names)
    if not isinstance(F, FunctionField):
        return 0
    rows = []
    for v in elems:
        c = v.in_field(F)
        rows.append([c.diff(F.gen(x)) if hasattr(c, "diff") else F.zero for x in variables])
    return rank(F, rows, len(variables))


def transcendence_degree(elems, base=None, over: str = "E") -> int:
    """tr(elems / E·k) (``over="E"``) or tr(elems / k) (``over="k"``)."""
    elems = [element(v) for v in elems]
    base = Base.parse(base)
    names = set()
    for v in elems:
        names |= set(v.names)
    if over == "E":
        variables = [n for n in canonical_names(names) if is_t_name(n)]
    elif over == "k":
        variables = [n for n in canonical_names(names) if n not in base.e_names]
    else:
        raise ValueError("over must be 'E' or 'k', got %r" % over)
    return jacobian_rank(elems, variables)


@dataclass(frozen=True)
class LambdaGenerators:
    generators: tuple  # e-only PairElements
    degree: int        # transcendence degree over λ(k) = k


def lambda_field_generators(a, base=None) -> LambdaGenerators:
    """Coefficients of the reduced basis of I(a/E·k), with their degree over k."""
    base = Base.parse(base)
    I = vanishing_ideal(a, base)
    gens = []
    seen = set()
    for g in I.groebner():
        for c in g.terms.values():
            p = PairElement(c).normalized()
            if all(n in base.e_names for n in p.names):
                continue
            if p.canonical().numer.LC < 0:
                p = -p
            key = str(p)
            if key not in seen:
                seen.add(key)
                gens.append(p)
    gens.sort(key=lambda p: (len(str(p)), str(p)))
    return LambdaGenerators(tuple(gens), transcendence_degree(gens, base, over="k"))


def rm_rank(a, base=None) -> OrdinalRank:
    """omega * tr(a/E·k) + tr(λ(k(a))/λ(k))."""
    a = tuple(element(v) for v in a)
    base = Base.parse(base)
    m = transcendence_degree(a, base, over="E")
    r = lambda_field_generators(a, base).degree
    return OrdinalRank(m, r)


def e_names_of(a) -> tuple:
    names = set()
    for v in a:
        names |= {n for n in element(v).names if is_e_name(n)}
    return canonical_names(names)


__all__ = [
    "Base", "BaseError", "OrdinalRank", "point_variables", "vanishing_ideal",
    "homogeneous_vanishing_ideal", "jacobian_rank", "transcendence_degree",
    "LambdaGenerators", "lambda_field_generators", "rm_rank", "e_names_of", "split_e_t",
    "field_names",
]
