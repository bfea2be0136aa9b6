"""The generic pair: E = acl(Q(e...)), K = acl(E(t...)).

Elements are rational functions in two blocks of variables.  Names that
match ``e<digits>`` live in E, names matching ``t<digits>`` are generic
over E.  Every element is stored as a sympy fraction over a canonical
function field, so the same value always has the same representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from ..fields import QQ, FunctionField, Field
from ..poly import parse_expression

E_NAME = re.compile(r"e\d*")
T_NAME = re.compile(r"t\d*")


def is_e_name(name: str) -> bool:
    return bool(E_NAME.fullmatch(name))


def is_t_name(name: str) -> bool:
    return bool(T_NAME.fullmatch(name))


def is_param_name(name: str) -> bool:
    return is_e_name(name) or is_t_name(name)


def _name_key(name: str):
    # e-names before t-names, then by numeric suffix ("e" first)
    kind = 0 if name[0] == "e" else 1
    suffix = name[1:]
    return (kind, -1 if suffix == "" else int(suffix), name)


def canonical_names(names) -> tuple:
    names = set(names)
    bad = [n for n in names if not is_param_name(n)]
    if bad:
        raise ValueError("not a model variable: %s" % ", ".join(sorted(bad)))
    return tuple(sorted(names, key=_name_key))


def field_over(names) -> Field:
    """QQ(names) in canonical order, or QQ when there are none."""
    names = canonical_names(names)
    return FunctionField(names) if names else QQ


def field_names(field: Field) -> tuple:
    return field.names if isinstance(field, FunctionField) else ()


def support(c) -> set:
    """Names of the variables a coefficient actually depends on."""
    if not hasattr(c, "numer"):
        return set()
    syms = [str(s) for s in c.field.symbols]
    used = set()
    for poly in (c.numer, c.denom):
        for m in poly.monoms():
            for s, k in zip(syms, m):
                if k:
                    used.add(s)
    return used


def recast(c, field: Field):
    """Move a coefficient into ``field`` (which must contain its variables)."""
    if not hasattr(c, "numer"):
        return field.convert(c)
    if isinstance(field, FunctionField) and c.field == field.frac:
        return c
    syms = [str(s) for s in c.field.symbols]
    if not isinstance(field, FunctionField):
        if support(c):
            raise ValueError("%s is not a rational number" % c)
        return mpq(c.numer.LC if c.numer else 0) / mpq(c.denom.LC)
    target = field.names
    pos = {n: i for i, n in enumerate(target)}
    where = []
    for i, s in enumerate(syms):
        where.append(pos.get(s))
    ring = field.frac.ring

    def move(poly):
        out = {}
        for m, k in poly.items():
            nm = [0] * len(target)
            for i, e in enumerate(m):
                if e:
                    j = where[i]
                    if j is None:
                        raise ValueError("variable %s is missing from %r" % (syms[i], field))
                    nm[j] = e
            out[tuple(nm)] = k
        return ring.from_dict(out)

    return field.frac.new(move(c.numer), move(c.denom))


@dataclass(frozen=True)
class PairElement:
    """A rational function in e- and t-variables, in canonical reduced form."""

    value: object  # FracElement over field_over(names), or mpq

    @property
    def names(self) -> tuple:
        return canonical_names(support(self.value))

    @property
    def field(self) -> Field:
        return field_over(self.names)

    def canonical(self):
        """The value recast over exactly its own variables."""
        return recast(self.value, self.field)

    def in_field(self, field: Field):
        return recast(self.value, field)

    def is_e_only(self) -> bool:
        """True when the element lies in Q(e...), hence in E."""
        return all(is_e_name(n) for n in self.names)

    def is_zero(self) -> bool:
        return not self.value

    def _combine(self, other, op):
        if not isinstance(other, PairElement):
            other = PairElement(QQ.convert(other))
        F = field_over(set(self.names) | set(other.names))
        return PairElement(op(recast(self.value, F), recast(other.value, F))).normalized()

    def normalized(self) -> "PairElement":
        return PairElement(self.canonical())

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    def __truediv__(self, other):
        return self._combine(other, lambda a, b: a / b)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return PairElement(-self.value)

    def __pow__(self, k: int):
        return PairElement(self.value ** k).normalized()

    def __eq__(self, other):
        if not isinstance(other, PairElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(str(self))

    def substitute(self, mapping: dict) -> "PairElement":
        """Replace model variables by other elements (names absent stay fixed)."""
        names = self.names
        if not names:
            return self
        vals = {n: (mapping[n] if n in mapping else element(n)) for n in names}
        vals = {n: v if isinstance(v, PairElement) else PairElement(QQ.convert(v))
                for n, v in vals.items()}
        F = field_over(set().union(*[set(v.names) for v in vals.values()]) or set())
        imgs = [recast(vals[n].value, F) for n in names]
        c = self.canonical()

        def ev(poly):
            total = F.zero
            for m, k in poly.items():
                term = F.convert(mpq(k))
                for v, e in zip(imgs, m):
                    if e:
                        term = term * v ** e
                total = total + term
            return total

        den = ev(c.denom)
        if not den:
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return PairElement(ev(c.numer) / den).normalized()

    def __str__(self):
        if not hasattr(self.value, "numer"):
            return str(self.value)
        return str(self.canonical()).replace("**", "^")

    __repr__ = __str__


class _ElementAlgebra:
    def const(self, n):
        return PairElement(mpq(n))

    def var(self, name):
        if not is_param_name(name):
            raise KeyError(name)
        F = FunctionField((name,))
        return PairElement(F.gen(name))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b.is_zero():
            raise ZeroDivisionError("division by zero")
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k


def element(text) -> PairElement:
    """Parse ``(e1*t1 + t2^2)/(1 - e2)``-style text (ints and elements pass through)."""
    if isinstance(text, PairElement):
        return text
    if isinstance(text, (int, mpq)):
        return PairElement(mpq(text))
    return parse_expression(str(text), _ElementAlgebra())


def elements(texts) -> tuple:
    return tuple(element(t) for t in texts)


def common_field(*groups) -> Field:
    """Smallest canonical function field holding every given element/coefficient."""
    names: set = set()
    for g in groups:
        for c in g:
            if isinstance(c, PairElement):
                names |= set(c.names)
            else:
                names |= support(c)
    return field_over(names)


def split_e_t(names) -> tuple:
    names = canonical_names(names)
    return tuple(n for n in names if is_e_name(n)), tuple(n for n in names if is_t_name(n))


def t_expand(coeffs: dict, field: Field):
    """Separate the t-dependence of a family of coefficients.

    ``coeffs`` maps keys to elements of ``field`` (a function field in e- and
    t-variables).  After clearing a common denominator, every coefficient is
    a polynomial in t over Q[e]; the result is a list of dicts, one per
    t-monomial, mapping keys to elements of ``field_over(e-names)``.  A
    combination of the keys with coefficients in E vanishes in K exactly when
    every returned dict gives a vanishing combination.
    """
    coeffs = {k: v for k, v in coeffs.items() if v}
    names = field_names(field)
    e_names, t_names = split_e_t(names)
    efield = field_over(e_names)
    if not coeffs:
        return [], efield
    if not isinstance(field, FunctionField):
        return [dict(coeffs)], efield
    den = None
    for v in coeffs.values():
        den = v.denom if den is None else den.lcm(v.denom)
    return t_expand_numerators({k: v.numer * den.exquo(v.denom) for k, v in coeffs.items()},
                               field)


def t_expand_numerators(nums: dict, field: Field):
    """:func:`t_expand` for coefficients already given as polynomials of ``field``'s ring."""
    names = field_names(field)
    e_names, _ = split_e_t(names)
    efield = field_over(e_names)
    t_pos = [i for i, n in enumerate(names) if is_t_name(n)]
    e_pos = [i for i, n in enumerate(names) if is_e_name(n)]
    groups: dict = {}
    for key, num in nums.items():
        for m, k in num.items():
            tm = tuple(m[i] for i in t_pos)
            em = tuple(m[i] for i in e_pos)
            groups.setdefault(tm, {}).setdefault(key, {})[em] = k
    out = []
    for tm in sorted(groups):
        row = {}
        for key, d in groups[tm].items():
            if isinstance(efield, FunctionField):
                c = efield.frac(efield.frac.ring.from_dict(d))
            else:
                c = QQ.convert(mpq(d[()]))
            if c:
                row[key] = c
        if row:
            out.append(row)
    return out, efield
