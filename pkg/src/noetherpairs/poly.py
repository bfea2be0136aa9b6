"""Sparse multivariate polynomials over an exact field.

A :class:`Ring` fixes the variable names (grouped in named blocks), the
coefficient field and a :class:`MonomialOrder`.  Monomials are dense
exponent tuples; a :class:`Polynomial` is an immutable map from monomials
to nonzero coefficients.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb

from .fields import QQ, Field


# ---------------------------------------------------------------- monomials

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------- orders

ORDER_KINDS = ("lex", "grevlex", "block")


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative total order on monomials.

    ``priority`` lists variable indices from most to least significant
    (``None`` means the ring's own order).  For ``kind="block"`` the first
    ``split`` variables of the priority list form the front block, each
    block ordered by grevlex and the front block compared first.
    """

    kind: str = "grevlex"
    priority: tuple | None = None
    split: int = 0

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError("unknown monomial order %r" % (self.kind,))

    def key_function(self, nvars: int):
        prio = tuple(range(nvars)) if self.priority is None else tuple(self.priority)
        if sorted(prio) != list(range(nvars)):
            raise ValueError("priority %r is not a permutation of %d variables" % (prio, nvars))
        if self.kind == "lex":
            if self.priority is None:
                return lambda m: m
            return lambda m: tuple(m[i] for i in prio)
        if self.kind == "grevlex":
            rev = prio[::-1]
            return lambda m: (sum(m),) + tuple(-m[i] for i in rev)
        front, back = prio[: self.split], prio[self.split:]
        rf, rb = front[::-1], back[::-1]

        def key(m):
            return ((sum(m[i] for i in front),) + tuple(-m[i] for i in rf)
                    + (sum(m[i] for i in back),) + tuple(-m[i] for i in rb))
        return key


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------- rings

class Ring:
    """Polynomial ring ``field[names]`` with named variable blocks."""

    def __init__(self, names, field: Field = QQ, order=GREVLEX, blocks=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("repeated variable names in %r" % (names,))
        for nm in names:
            if not _IDENT.fullmatch(nm):
                raise ValueError("bad variable name %r" % (nm,))
        if isinstance(order, str):
            order = MonomialOrder(order)
        self.names = names
        self.field = field
        self.order = order
        self.nvars = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}
        if blocks is None:
            blocks = {"X": names}
        blocks = {b: tuple(v) for b, v in blocks.items()}
        if sorted(itertools.chain.from_iterable(blocks.values())) != sorted(names):
            raise ValueError("blocks must partition the variables")
        self.blocks = blocks
        self.key = order.key_function(self.nvars)
        self.zero_mono = (0,) * self.nvars

    # -- identity
    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def same_variables(self, other) -> bool:
        return self.names == other.names and self.field == other.field

    def __repr__(self):
        return "Ring(%s; %r; %s)" % (",".join(self.names), self.field, self.order.kind)

    # -- derived rings
    def with_order(self, order) -> "Ring":
        if isinstance(order, str):
            order = MonomialOrder(order)
        if order == self.order:
            return self
        return Ring(self.names, self.field, order, self.blocks)

    def with_field(self, field: Field) -> "Ring":
        return Ring(self.names, field, self.order, self.blocks)

    def elimination_order(self, drop) -> MonomialOrder:
        """Block order with the variables ``drop`` in the front block."""
        drop_idx = [self.index(v) for v in drop]
        rest = [i for i in range(self.nvars) if i not in drop_idx]
        return MonomialOrder("block", tuple(drop_idx + rest), len(drop_idx))

    def drop(self, drop) -> "Ring":
        """Subring without the variables ``drop`` (grevlex/lex kept)."""
        drop = set(drop)
        keep = tuple(v for v in self.names if v not in drop)
        blocks = {}
        for b, vs in self.blocks.items():
            kept = tuple(v for v in vs if v not in drop)
            if kept:
                blocks[b] = kept
        order = self.order if self.order.kind != "block" and self.order.priority is None else GREVLEX
        return Ring(keep, self.field, order, blocks or None)

    def extend(self, names, block="aux", front=False) -> "Ring":
        names = tuple(names)
        blocks = dict(self.blocks)
        blocks[block] = blocks.get(block, ()) + names
        new = names + self.names if front else self.names + names
        order = self.order if self.order.priority is None and self.order.kind != "block" else GREVLEX
        return Ring(new, self.field, order, blocks)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("no variable %r in %r" % (name, self)) from None

    def block(self, name: str) -> tuple:
        return self.blocks[name]

    # -- element construction
    def gen(self, name: str) -> "Polynomial":
        m = [0] * self.nvars
        m[self.index(name)] = 1
        return Polynomial(self, {tuple(m): self.field.one})

    def gens(self):
        return [self.gen(v) for v in self.names]

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {self.zero_mono: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.field.convert(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms) -> "Polynomial":
        conv = self.field.convert
        out = {}
        for m, c in terms.items():
            c = conv(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_expression(text, _PolyAlgebra(self))

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def sort_monomials(self, monos, reverse=True):
        return sorted(monos, key=self.key, reverse=reverse)

    def monomial_basis(self, d: int, variables=None):
        return monomial_basis(self, d, variables)


# ---------------------------------------------------------------- polynomials

class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_mono in self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def LM(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def LC(self):
        return self.terms[self.LM]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: self.ring.key(mc[0]), reverse=True)

    def monomials(self):
        return [m for m, _ in self.sorted_terms()]

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, variables) -> int:
        idx = [self.ring.index(v) for v in variables]
        return max((sum(m[i] for i in idx) for m in self.terms), default=-1)

    def is_homogeneous(self, variables=None) -> bool:
        """Homogeneity in ``variables`` (default: all variables)."""
        if variables is None:
            degs = {sum(m) for m in self.terms}
        else:
            idx = [self.ring.index(v) for v in variables]
            degs = {sum(m[i] for i in idx) for m in self.terms}
        return len(degs) <= 1

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.names[i] for i in sorted(used)]

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.constant(other)
        if not self.ring.same_variables(other.ring):
            raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                raise ValueError("polynomial division only by nonzero constants; use divmod_poly")
            c = c.terms[c.ring.zero_mono]
        return self.scale(self.ring.field.one / self.ring.field.convert(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono, coeff=None):
        """Multiply by ``coeff * X^mono``."""
        if coeff is None:
            return Polynomial(self.ring, {mono_mul(m, mono): c for m, c in self.terms.items()})
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.one / self.LC)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.same_variables(other.ring) and self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.is_constant() and self.terms[self.ring.zero_mono] == other

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and conversion
    def evaluate(self, values):
        """Substitute values for all variables (a dict by name, or a sequence)."""
        if isinstance(values, dict):
            vals = [values[v] for v in self.ring.names]
        else:
            vals = list(values)
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vals, m):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def substitute(self, mapping, target: Ring | None = None) -> "Polynomial":
        """Substitute polynomials (in ``target``) for the named variables.

        Variables not in ``mapping`` must exist in ``target`` under the same
        name.  Values may also be constants.
        """
        target = target or self.ring
        images = []
        for v in self.ring.names:
            if v in mapping:
                img = mapping[v]
                images.append(img if isinstance(img, Polynomial) else target.constant(img))
            else:
                images.append(target.gen(v))
        out = target.zero()
        powers: dict = {}
        for m, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    pw = powers.get(key)
                    if pw is None:
                        pw = images[i] ** e
                        powers[key] = pw
                    term = term * pw
            out = out + term
        return out

    def to_ring(self, target: Ring) -> "Polynomial":
        """Re-express in ``target``, matching variables by name."""
        if target is self.ring:
            return self
        if target.names == self.ring.names:
            if target.field == self.ring.field:
                return Polynomial(target, self.terms)
            return target.from_dict(self.terms)
        pos = []
        for i, v in enumerate(self.ring.names):
            if v in target._index:
                pos.append((i, target._index[v]))
        out = {}
        conv = target.field.convert
        for m, c in self.terms.items():
            if any(e and self.ring.names[i] not in target._index for i, e in enumerate(m)):
                raise ValueError("variable %r is missing in %r" % (
                    [self.ring.names[i] for i, e in enumerate(m)
                     if e and self.ring.names[i] not in target._index], target))
            nm = [0] * target.nvars
            for i, j in pos:
                nm[j] = m[i]
            out[tuple(nm)] = conv(c)
        return Polynomial(target, out)

    def homogenize(self, var: str) -> "Polynomial":
        """Homogenize with the (already present) variable ``var``."""
        d = self.total_degree()
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            nm = list(m)
            nm[i] += d - sum(m)
            out[tuple(nm)] = c
        return Polynomial(self.ring, out)

    def diff(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                nm = list(m)
                nm[i] -= 1
                out[tuple(nm)] = c * m[i]
        return Polynomial(self.ring, out)

    def coefficients_in(self, variables):
        """Split as ``{monomial in variables: polynomial in the others}``."""
        idx = [self.ring.index(v) for v in variables]
        groups: dict = {}
        for m, c in self.terms.items():
            outer = tuple(m[i] for i in idx)
            inner = list(m)
            for i in idx:
                inner[i] = 0
            groups.setdefault(outer, {})[tuple(inner)] = c
        return {k: Polynomial(self.ring, v) for k, v in groups.items()}

    def primitive(self) -> "Polynomial":
        """Over QQ: scale to integer coprime coefficients with positive LC."""
        if not self.terms or not self.ring.field.is_exact_rational():
            return self.monic()
        from math import gcd, lcm
        den = 1
        for c in self.terms.values():
            den = lcm(den, int(c.denominator))
        ints = {m: int(c * den) for m, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        sign = -1 if ints[self.LM] < 0 else 1
        return self.ring.from_dict({m: v // (g * sign) for m, v in ints.items()})

    # -- printing
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        fmt = self.ring.field.format
        for m, c in self.sorted_terms():
            mon = "*".join(
                v if e == 1 else "%s^%d" % (v, e)
                for v, e in zip(self.ring.names, m) if e)
            cs = fmt(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not mon:
                body = cs
            elif cs == "1":
                body = mon
            else:
                body = cs + "*" + mon
            if neg:
                parts.append(("- " if parts else "-") + body)
            else:
                parts.append(("+ " if parts else "") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self


def divmod_poly(f: Polynomial, g: Polynomial):
    """Divide by a single polynomial: ``f = q*g + r`` with ``r`` reduced."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    lm, lc = g.LM, g.LC
    p = dict(f.terms)
    q: dict = {}
    r: dict = {}
    key = ring.key
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        if mono_divides(lm, m):
            sh = mono_div(m, lm)
            fac = c / lc
            q[sh] = fac
            for gm, gc in g.terms.items():
                if gm == lm:
                    continue
                tm = mono_mul(gm, sh)
                v = p.get(tm, 0) - fac * gc
                if v:
                    p[tm] = v
                else:
                    p.pop(tm, None)
        else:
            r[m] = c
    return Polynomial(ring, q), Polynomial(ring, r)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = divmod_poly(f, g)
    if r:
        raise ValueError("%s is not divisible by %s" % (f, g))
    return q


def monomial_basis(ring_or_nvars, d: int, variables=None):
    """All monomials of total degree ``d``, largest first in the ring's order.

    With an integer first argument, returns exponent tuples over that many
    variables in grevlex order.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if isinstance(ring_or_nvars, int):
        n = ring_or_nvars
        monos = list(_compositions(d, n))
        key = GREVLEX.key_function(n)
        return sorted(monos, key=key, reverse=True)
    ring = ring_or_nvars
    if variables is None:
        idx = list(range(ring.nvars))
    else:
        idx = [ring.index(v) for v in variables]
    monos = []
    for comp in _compositions(d, len(idx)):
        m = [0] * ring.nvars
        for i, e in zip(idx, comp):
            m[i] = e
        monos.append(tuple(m))
    return ring.sort_monomials(monos)


def _compositions(d: int, n: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


def basis_size(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1) if nvars else int(d == 0)


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    """Syntax error with a 0-based character position."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__("%s at position %d: %r" % (message, pos, text))


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError("unexpected character", text, pos + (len(text[pos:]) - len(text[pos:].lstrip())))
        start = mt.start(mt.lastindex)
        if mt.group(1) is not None:
            tokens.append(("num", int(mt.group(1)), start))
        elif mt.group(2) is not None:
            tokens.append(("id", mt.group(2), start))
        else:
            op = mt.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = mt.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, algebra):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.alg = algebra

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token %r" % (self.peek()[1],))
        return val

    def expr(self):
        val = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = self.alg.add(val, rhs) if op == "+" else self.alg.sub(val, rhs)
        return val

    def term(self):
        val = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                val = self.alg.mul(val, rhs)
            else:
                try:
                    val = self.alg.div(val, rhs)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(str(exc), self.text, tok[2]) from None
        return val

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return self.alg.neg(self.unary())
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            return self.alg.pow(base, tok[1])
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return self.alg.const(tok[1])
        if tok[0] == "id":
            try:
                return self.alg.var(tok[1])
            except KeyError:
                raise ParseError("unknown variable %r" % tok[1], self.text, tok[2]) from None
        if tok[:2] == ("op", "("):
            val = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.error("expected ')'", self.tokens[self.i - 1])
            return val
        if tok[0] == "end":
            self.error("unexpected end of input", tok)
        self.error("unexpected token %r" % (tok[1],), tok)


def parse_expression(text: str, algebra):
    """Parse ``text`` with a generic algebra (const/var/add/sub/mul/div/neg/pow)."""
    return _Parser(text, algebra).parse()


class _PolyAlgebra:
    def __init__(self, ring):
        self.ring = ring

    def const(self, n):
        return self.ring.constant(n)

    def var(self, name):
        return self.ring.gen(name)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b.is_constant() or b.is_zero():
            raise ValueError("division by a non-constant or zero polynomial")
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k
