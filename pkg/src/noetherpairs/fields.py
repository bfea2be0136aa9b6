"""Exact coefficient fields.

Three kinds of field are used throughout the package:

* ``QQ`` -- the rationals, elements are ``gmpy2.mpq``;
* ``GF(p)`` -- a prime field, elements are :class:`ModInt`;
* ``FunctionField(names)`` -- rational functions over QQ in the given
  variables, elements are sympy ``FracElement`` objects.

Every element type supports ``+ - * /``, unary minus, equality with
integers and truth testing (false exactly for zero), so the polynomial
and linear-algebra kernels are written once against plain operators.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq, is_prime
from sympy import QQ as _SYMPY_QQ
from sympy.polys.fields import FracField
from sympy.polys.orderings import lex


class Field:
    """Base class; subclasses define ``convert`` and ``characteristic``."""

    characteristic = 0

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def convert(self, value):
        raise NotImplementedError

    def is_exact_rational(self):
        return False

    def format(self, c) -> str:
        return str(c)


class RationalField(Field):
    """The field of rational numbers."""

    characteristic = 0

    def convert(self, value):
        if isinstance(value, mpq):
            return value
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        if isinstance(value, ModInt):
            raise TypeError("cannot embed a prime-field residue in QQ")
        return mpq(value)

    def is_exact_rational(self):
        return True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ModInt:
    """Residue modulo a prime ``p``, kept in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError("residues modulo different primes")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, mpq)):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModInt(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return ModInt(pow(self.v, -1, self.p), self.p) ** (-k)
        return ModInt(pow(self.v, k, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return str(self.v)


class PrimeField(Field):
    """GF(p) for a prime p < 2**31."""

    def __init__(self, p: int):
        if p < 2 or p >= 2 ** 31 or not is_prime(p):
            raise ValueError("GF(p) requires a prime p < 2^31, got %r" % (p,))
        self.p = p
        self.characteristic = p

    def convert(self, value):
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise ValueError("residue modulo %d given to GF(%d)" % (value.p, self.p))
            return value
        if isinstance(value, (Fraction, mpq)):
            den = int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return ModInt(int(value.numerator) * pow(den, -1, self.p), self.p)
        return ModInt(int(value), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_FRAC_FIELDS: dict = {}


def _frac_field(names: tuple):
    fld = _FRAC_FIELDS.get(names)
    if fld is None:
        fld = FracField(",".join(names), _SYMPY_QQ, lex)
        _FRAC_FIELDS[names] = fld
    return fld


class FunctionField(Field):
    """QQ(v1, ..., vm): rational functions with automatic cancellation."""

    characteristic = 0

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("a function field needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("repeated variable names %r" % (names,))
        self.names = names
        self.frac = _frac_field(names)
        self.gens = dict(zip(names, self.frac.gens))

    def convert(self, value):
        if hasattr(value, "field") and value.field == self.frac:
            return value
        if isinstance(value, (Fraction, mpq)):
            return self.frac(_SYMPY_QQ(int(value.numerator), int(value.denominator)))
        if hasattr(value, "field") or hasattr(value, "ring"):
            # element of a smaller function field: rebuild through expressions
            return self.frac.from_expr(value.as_expr())
        return self.frac(value)

    def gen(self, name: str):
        return self.gens[name]

    def format(self, c) -> str:
        if c.numer and c.numer.LC < 0 and len(c.numer.terms()) == 1:
            return "-" + self.format(-c)
        text = str(c).replace("**", "^")
        if c.denom.is_ground and c.denom.LC == 1 and len(c.numer.terms()) <= 1:
            return text
        return "(%s)" % text

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.names == self.names

    def __hash__(self):
        return hash(("QQ(..)", self.names))

    def __repr__(self):
        return "QQ(%s)" % ",".join(self.names)


def field_from_char(char: int) -> Field:
    return QQ if char == 0 else GF(char)


def is_constant(c) -> bool:
    """True when a function-field element has no variables."""
    if hasattr(c, "numer"):
        return c.numer.is_ground and c.denom.is_ground
    return True


def to_rational(c):
    """Return a constant function-field element (or rational) as ``mpq``."""
    if hasattr(c, "numer"):
        if not is_constant(c):
            raise ValueError("%s is not constant" % c)
        n = c.numer.LC if c.numer else 0
        return mpq(n) / mpq(c.denom.LC)
    return mpq(c)
