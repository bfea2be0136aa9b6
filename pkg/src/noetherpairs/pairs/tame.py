"""Tame formulas: existential statements about nonzero E-points of projective blocks.

A formula ``phi(x)`` reads

    exists zeta_1 != 0, ..., zeta_m != 0 in E:
        q_j(x, zeta) = 0 for all j,  gamma(zeta) = 0,  sigma(zeta) != 0,

each ``q_j`` homogeneous in every block separately.  Coefficients are
rational functions in model variables (e... and t...), so instances with
parameters are formulas like any other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product

from ..fields import QQ, FunctionField
from ..groebner import Ideal, eliminate, intersect, is_unit_ideal, saturate_by, saturate_by_variable
from ..linalg import rank
from ..poly import ParseError, Polynomial, Ring, parse_expression
from .model import (
    PairElement, canonical_names, common_field, element, field_names, field_over,
    is_param_name, is_t_name, recast, support, t_expand, t_expand_numerators,
)


class TameFormulaError(ValueError):
    pass


@dataclass(frozen=True)
class TameFormula:
    """Free variables, witness blocks and polynomial conditions over ``ring``.

    ``ring`` has the free variables first, then the block variables; its
    coefficient field is generated by the parameters that occur.
    """

    free: tuple
    blocks: tuple  # tuple of tuples of variable names
    equations: tuple
    locus: tuple = ()
    nonzero: tuple = ()
    ring: Ring | None = None

    def __post_init__(self):
        bound = [z for b in self.blocks for z in b]
        for b in self.blocks:
            if not b:
                raise TameFormulaError("empty witness block")
        names = tuple(self.free) + tuple(bound)
        if len(set(names)) != len(names):
            raise TameFormulaError("variable names repeat across free variables and blocks")
        for v in names:
            if is_param_name(v):
                raise TameFormulaError("variable %r clashes with a model parameter" % v)
        for f in self.all_polys():
            if f.ring.names != names:
                raise TameFormulaError("polynomial %s is not over the formula ring" % f)
        for f in self.equations:
            self._check_block_homogeneous(f)
        for f in self.locus + self.nonzero:
            self._check_block_homogeneous(f)
            if any(f.degree_in([x]) for x in self.free):
                raise TameFormulaError("side condition %s mentions a free variable" % f)
        for f in self.nonzero:
            if any(is_t_name(n) for c in f.terms.values() for n in support(c)):
                raise TameFormulaError("inequation %s has generic (t) parameters" % f)

    def _check_block_homogeneous(self, f):
        for b in self.blocks:
            if not f.is_homogeneous(b):
                raise TameFormulaError("%s is not homogeneous in block (%s)" % (f, ", ".join(b)))

    def all_polys(self):
        return tuple(self.equations) + tuple(self.locus) + tuple(self.nonzero)

    @property
    def arity(self) -> int:
        return len(self.free)

    @property
    def block_arities(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    @property
    def bound(self) -> tuple:
        return tuple(z for b in self.blocks for z in b)

    @property
    def parameters(self) -> tuple:
        used = set()
        for f in self.all_polys():
            for c in f.terms.values():
                used |= support(c)
        return canonical_names(used)

    def is_top(self) -> bool:
        """Syntactically the true formula: no conditions at all."""
        return not self.equations and not self.locus and not self.nonzero

    def is_tame(self) -> bool:
        """Tame in the strict sense: no inequations."""
        return not self.nonzero

    def to_text(self) -> str:
        lines = ["free: %s" % ", ".join(self.free)]
        for b in self.blocks:
            lines.append("block: %s" % ", ".join(b))
        for tag, polys in (("eq", self.equations), ("locus", self.locus), ("nonzero", self.nonzero)):
            for f in polys:
                lines.append("%s: %s" % (tag, f))
        return "\n".join(lines) + "\n"

    def __str__(self):
        if self.is_top() and not self.blocks:
            return "true"
        head = " ".join("exists (%s) != 0" % ", ".join(b) for b in self.blocks)
        conds = ["%s = 0" % f for f in self.equations + self.locus]
        conds += ["%s != 0" % f for f in self.nonzero]
        body = " and ".join(conds) or "true"
        return ("%s: %s" % (head, body)) if head else body


# ---------------------------------------------------------------- construction

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


class _FormulaAlgebra:
    def __init__(self, ring):
        self.ring = ring

    def const(self, n):
        return self.ring.constant(n)

    def var(self, name):
        if name in self.ring._index:
            return self.ring.gen(name)
        if is_param_name(name) and isinstance(self.ring.field, FunctionField) \
                and name in self.ring.field.names:
            return self.ring.constant(self.ring.field.gen(name))
        raise KeyError(name)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b.is_constant() or b.is_zero():
            raise ValueError("division by a non-constant or zero expression")
        return a.scale(self.ring.field.one / b.LC)

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k


def formula_ring(free, blocks, params=()) -> Ring:
    names = tuple(free) + tuple(z for b in blocks for z in b)
    field = field_over(params)
    block_map = {"x": tuple(free)} if free else {}
    for i, b in enumerate(blocks):
        block_map["zeta%d" % i] = tuple(b)
    if not names:
        block_map = None
    return Ring(names, field, blocks=block_map)


def _coerce(f, ring: Ring, extra_params=()):
    """Bring a polynomial (or text) into ``ring``."""
    if isinstance(f, Polynomial):
        if f.ring.names != ring.names:
            f = f.to_ring(Ring(ring.names, f.ring.field))
        return Polynomial(ring, {m: recast(c, ring.field) for m, c in f.terms.items()})
    return parse_expression(str(f), _FormulaAlgebra(ring))


def _params_in_text(texts, variables) -> set:
    out = set()
    for t in texts:
        for tok in _IDENT.findall(t):
            if tok not in variables and is_param_name(tok):
                out.add(tok)
    return out


def make_formula(free, blocks, equations=(), locus=(), nonzero=(), params=()) -> TameFormula:
    """Build a formula from text or polynomials; parameters are detected automatically."""
    free = tuple(free)
    blocks = tuple(tuple(b) for b in blocks)
    variables = set(free) | {z for b in blocks for z in b}
    groups = (tuple(equations), tuple(locus), tuple(nonzero))
    names = set(params)
    texts = [g for grp in groups for g in grp if not isinstance(g, Polynomial)]
    names |= _params_in_text(texts, variables)
    for grp in groups:
        for g in grp:
            if isinstance(g, Polynomial):
                for c in g.terms.values():
                    names |= support(c)
    for v in variables:
        if is_param_name(v):
            raise TameFormulaError("variable %r clashes with a model parameter" % v)
    ring = formula_ring(free, blocks, names)
    conv = [tuple(_coerce(g, ring) for g in grp) for grp in groups]
    conv = [tuple(g for g in grp if g or i == 2) for i, grp in enumerate(conv)]
    return TameFormula(free, blocks, conv[0], conv[1], conv[2], ring)


def top(free=()) -> TameFormula:
    """The true formula in the given free variables."""
    return make_formula(free, ())


def parse_formula(text: str) -> TameFormula:
    """Read the line format ``free:``/``block:``/``eq:``/``locus:``/``nonzero:``."""
    free: list = []
    blocks: list = []
    groups = {"eq": [], "locus": [], "nonzero": []}
    seen_free = False
    offset = 0
    entries = []
    for line in text.splitlines(keepends=True):
        raw = line.rstrip("\n")
        body = raw.split("#", 1)[0]
        if body.strip():
            if ":" not in body:
                raise ParseError("expected 'key: value'", text, offset + len(raw) - len(raw.lstrip()))
            key, val = body.split(":", 1)
            entries.append((key.strip(), val, offset + len(key) + 1))
        offset += len(line)
    for key, val, pos in entries:
        if key == "free":
            if seen_free:
                raise ParseError("repeated 'free' line", text, pos)
            seen_free = True
            free = [v.strip() for v in val.split(",") if v.strip()]
        elif key == "block":
            blocks.append([v.strip() for v in val.split(",") if v.strip()])
        elif key in groups:
            groups[key].append((val, pos))
        else:
            raise ParseError("unknown key %r" % key, text, pos - len(key) - 1)
    for v in free + [z for b in blocks for z in b]:
        if not _IDENT.fullmatch(v):
            raise TameFormulaError("bad variable name %r" % v)
    variables = set(free) | {z for b in blocks for z in b}
    params = _params_in_text([v for g in groups.values() for v, _ in g], variables)
    ring = formula_ring(free, blocks, params)
    conv = {}
    for key, items in groups.items():
        polys = []
        for val, pos in items:
            try:
                polys.append(parse_expression(val, _FormulaAlgebra(ring)))
            except ParseError as exc:
                raise ParseError(str(exc).split(" at position")[0], text,
                                 pos + exc.pos) from None
        conv[key] = tuple(polys)
    return TameFormula(tuple(free), tuple(tuple(b) for b in blocks),
                       tuple(g for g in conv["eq"] if g), tuple(g for g in conv["locus"] if g),
                       conv["nonzero"], ring)


def rename_bound(phi: TameFormula, avoid=(), prefix="z") -> TameFormula:
    """Rename block variables to ``prefix0, prefix1, ...`` avoiding ``avoid`` and the free ones."""
    taken = set(avoid) | set(phi.free)
    mapping = {}
    k = 0
    for z in phi.bound:
        while "%s%d" % (prefix, k) in taken:
            k += 1
        mapping[z] = "%s%d" % (prefix, k)
        k += 1
    blocks = tuple(tuple(mapping[z] for z in b) for b in phi.blocks)
    ring = formula_ring(phi.free, blocks, field_names(phi.ring.field))

    def move(f):
        return Polynomial(ring, dict(f.terms))

    return TameFormula(phi.free, blocks, tuple(map(move, phi.equations)),
                       tuple(map(move, phi.locus)), tuple(map(move, phi.nonzero)), ring)


def with_field(phi: TameFormula, field) -> TameFormula:
    ring = formula_ring(phi.free, phi.blocks, field_names(field))
    conv = [tuple(Polynomial(ring, {m: recast(c, field) for m, c in f.terms.items()}) for f in grp)
            for grp in (phi.equations, phi.locus, phi.nonzero)]
    return TameFormula(phi.free, phi.blocks, conv[0], conv[1], conv[2], ring)


# ---------------------------------------------------------------- evaluation

def _substitute_free(f: Polynomial, values, field, zring: Ring):
    """q(b, zeta) as a dict zeta-monomial -> coefficient in ``field``."""
    nfree = len(values)
    out: dict = {}
    powers: dict = {}
    for m, c in f.terms.items():
        val = recast(c, field)
        for i in range(nfree):
            e = m[i]
            if e:
                key = (i, e)
                pw = powers.get(key)
                if pw is None:
                    pw = values[i] ** e
                    powers[key] = pw
                val = val * pw
        zm = m[nfree:]
        out[zm] = out.get(zm, field.zero) + val
    return {k: v for k, v in out.items() if v}


def _substitute_free_cleared(f: Polynomial, values, field):
    """q(b, zeta) times a nonzero common denominator, with numerators in ``field``'s ring.

    Only the zero set matters, so each condition may be rescaled; staying
    in the polynomial ring avoids a gcd per term.
    """
    R = field.frac.ring
    nfree = len(values)
    nums = [v.numer for v in values]
    dens = [v.denom for v in values]
    degx = [0] * nfree
    cden = R.one
    coeffs = {}
    for m, c in f.terms.items():
        if hasattr(c, "numer"):
            cc = recast(c, field)
            coeffs[m] = (cc.numer, cc.denom)
            if cc.denom != R.one:
                cden = cden.lcm(cc.denom)
        else:
            coeffs[m] = (R.ground_new(c), R.one)  # rational constants need no cancelling
        for i in range(nfree):
            degx[i] = max(degx[i], m[i])
    powers: dict = {}

    def power(seq, i, e):
        key = (id(seq), i, e)
        pw = powers.get(key)
        if pw is None:
            pw = seq[i] ** e
            powers[key] = pw
        return pw

    out: dict = {}
    for m, (cn, cd) in coeffs.items():
        val = cn if cd == cden else cn * cden.exquo(cd)
        for i in range(nfree):
            e = m[i]
            if e:
                val = val * power(nums, i, e)
            if degx[i] - e:
                val = val * power(dens, i, degx[i] - e)
        zm = m[nfree:]
        out[zm] = out[zm] + val if zm in out else val
    return {k: v for k, v in out.items() if v}


def reduce_to_e(phi: TameFormula, b):
    """The E-side system of ``phi(b)``: polynomials in the block variables over Q(e).

    Returns ``(ring, equations, nonzero)``, or ``None`` when some condition
    already fails (a nonzero constant equation).
    """
    b = tuple(element(v) for v in b)
    if len(b) != phi.arity:
        raise TameFormulaError("formula has %d free variables, got %d values" % (phi.arity, len(b)))
    field = common_field([c for f in phi.all_polys() for c in f.terms.values()], b)
    values = [v.in_field(field) for v in b]
    efield = field_over([n for n in field_names(field) if not is_t_name(n)])
    blocks = {"zeta%d" % i: blk for i, blk in enumerate(phi.blocks)} or None
    zring = Ring(phi.bound, efield, blocks=blocks) if phi.bound else Ring((), efield)
    eqs = []
    cleared = isinstance(field, FunctionField)
    for f in phi.equations + phi.locus:
        if cleared:
            rows, _ = t_expand_numerators(_substitute_free_cleared(f, values, field), field)
        else:
            rows, _ = t_expand(_substitute_free(f, values, field, zring), field)
        for row in rows:
            g = Polynomial(zring, {m: recast(c, efield) for m, c in row.items()})
            if g.is_constant():
                return None
            eqs.append(g)
    nz = []
    for f in phi.nonzero:
        g = Polynomial(zring, {m[phi.arity:]: recast(c, efield) for m, c in f.terms.items()})
        if not g:
            return None
        nz.append(g)
    return zring, eqs, nz


def projective_point_exists(ring: Ring, blocks, equations, nonzero=()) -> bool:
    """A point of the product of projective spaces over the algebraic closure.

    Checked stratum by stratum: in each block the first nonzero coordinate
    is set to 1 and the ones before it to 0, which gives an affine system
    decided by the weak Nullstellensatz (with one extra variable for the
    inequations).  The strata partition the product of projective spaces.
    """
    equations = [g for g in equations if g]
    if any(g.is_constant() for g in equations):
        return False
    if any(not g for g in nonzero):
        return False
    if not blocks:
        return not any(not g.is_constant() or not g for g in nonzero) if nonzero else True
    if len(blocks) == 1 and not nonzero and len(equations) < len(blocks[0]):
        # r hypersurfaces in P^(k-1) with r < k always meet
        return True
    if len(blocks) == 1 and not nonzero and all(g.total_degree() == 1 for g in equations):
        blk = blocks[0]
        if not equations:
            return True
        idx = [ring.index(z) for z in blk]
        rows = []
        for g in equations:
            row = [ring.field.zero] * len(blk)
            for m, c in g.terms.items():
                row[next(j for j, i in enumerate(idx) if m[i])] = c
            rows.append(row)
        return rank(ring.field, rows, len(blk)) < len(blk)
    sigma = None
    for g in nonzero:
        sigma = g if sigma is None else sigma * g
    one, zero = ring.field.one, ring.field.zero
    for chart in product(*[range(len(b)) for b in blocks]):
        # stratum: first nonzero coordinate of each block is set to 1, earlier ones to 0
        mapping = {}
        for blk, j in zip(blocks, chart):
            mapping.update({z: zero for z in blk[:j]})
            mapping[blk[j]] = one
        rest = [v for v in ring.names if v not in mapping]
        names = rest + (["_u"] if sigma is not None else [])
        affine = Ring(names, ring.field) if names else None
        if affine is None:
            point = [mapping[v] for v in ring.names]
            if all(not g.evaluate(point) for g in equations) and \
                    (sigma is None or sigma.evaluate(point)):
                return True
            continue
        gens = [g.substitute(mapping, affine) for g in equations]
        if sigma is not None:
            gens.append(affine.one() - affine.gen("_u") * sigma.substitute(mapping, affine))
        gens = [g for g in gens if g]
        if not gens or not is_unit_ideal(gens):
            return True
    return False


def tame_eval(phi: TameFormula, b) -> bool:
    """Truth of ``phi(b)`` in the generic pair."""
    red = reduce_to_e(phi, b)
    if red is None:
        return False
    ring, eqs, nz = red
    return projective_point_exists(ring, phi.blocks, eqs, nz)


# ---------------------------------------------------------------- conjunction

def _fresh_names(prefix, count, taken):
    out = []
    k = 0
    while len(out) < count:
        nm = "%s%d" % (prefix, k)
        if nm not in taken:
            out.append(nm)
        k += 1
    return out


def _segre_merge(phi: TameFormula, i: int, j: int, wname: str = "w") -> TameFormula:
    """Replace blocks i and j by one block of products w_ab = xi_a * zeta_b."""
    xi, ze = phi.blocks[i], phi.blocks[j]
    others = [b for k, b in enumerate(phi.blocks) if k not in (i, j)]
    taken = set(phi.free) | set(phi.bound)
    wn = _fresh_names(wname, len(xi) * len(ze), taken)
    W = {(a, c): wn[a * len(ze) + c] for a in range(len(xi)) for c in range(len(ze))}
    new_blocks = [tuple(wn)] + others
    ring = formula_ring(phi.free, new_blocks, field_names(phi.ring.field))
    old = phi.ring
    xi_idx = [old.index(v) for v in xi]
    ze_idx = [old.index(v) for v in ze]
    keep = [(old.index(v), ring.index(v)) for v in old.names if v not in xi and v not in ze]

    def balance(f):
        a, c = f.degree_in(xi), f.degree_in(ze)
        if a < c:
            return [f * old.gen(v) ** (c - a) for v in xi]
        if a > c:
            return [f * old.gen(v) ** (a - c) for v in ze]
        return [f]

    def convert(f):
        out = {}
        for m, coef in f.terms.items():
            rows = [k for k, idx in enumerate(xi_idx) for _ in range(m[idx])]
            cols = [k for k, idx in enumerate(ze_idx) for _ in range(m[idx])]
            nm = [0] * ring.nvars
            for src, dst in keep:
                nm[dst] = m[src]
            for r, s in zip(rows, cols):
                nm[ring.index(W[(r, s)])] += 1
            key = tuple(nm)
            out[key] = out.get(key, ring.field.zero) + coef
        return ring.from_dict(out)

    eqs = [convert(g) for f in phi.equations for g in balance(f)]
    loc = [convert(g) for f in phi.locus for g in balance(f)]
    for (a, c), (a2, c2) in combinations(sorted(W), 2):
        if a < a2 and c != c2:
            lo, hi = min(c, c2), max(c, c2)
            rel = ring.gen(W[(a, lo)]) * ring.gen(W[(a2, hi)]) - ring.gen(W[(a, hi)]) * ring.gen(W[(a2, lo)])
            if rel not in loc:
                loc.append(rel)
    seen = set()
    eqs_u = []
    for g in eqs:
        if g and g not in seen:
            seen.add(g)
            eqs_u.append(g)
    return TameFormula(phi.free, tuple(new_blocks), tuple(eqs_u), tuple(loc), (), ring)


def merge_blocks(phi: TameFormula) -> TameFormula:
    """An equivalent formula with at most one block (Segre products)."""
    if phi.nonzero:
        raise TameFormulaError("inequations cannot be carried through a block merge")
    while len(phi.blocks) > 1:
        phi = _segre_merge(phi, 0, 1)
    return rename_bound(phi) if phi.blocks else phi


def concatenate(phi: TameFormula, psi: TameFormula) -> TameFormula:
    """phi and psi side by side, with psi's block variables renamed apart."""
    free = tuple(phi.free) + tuple(v for v in psi.free if v not in phi.free)
    a = rename_bound(phi, avoid=set(free) | set(psi.free), prefix="u")
    b = rename_bound(psi, avoid=set(free) | set(a.bound), prefix="v")
    blocks = a.blocks + b.blocks
    params = set(field_names(a.ring.field)) | set(field_names(b.ring.field))
    ring = formula_ring(free, blocks, params)
    conv = lambda f: _coerce(f, ring)  # noqa: E731
    return TameFormula(free, blocks,
                       tuple(map(conv, a.equations + b.equations)),
                       tuple(map(conv, a.locus + b.locus)),
                       tuple(map(conv, a.nonzero + b.nonzero)), ring)


def tame_conjoin(phi: TameFormula, psi: TameFormula) -> TameFormula:
    """A single-block formula equivalent to ``phi and psi``.

    Free variables are matched by name; the result lists phi's free
    variables first.
    """
    both = concatenate(phi, psi)
    return merge_blocks(both)


# ---------------------------------------------------------------- closed sets on E

def tame_to_zariski_on_E(phi: TameFormula):
    """Polynomials in x (over the parameter field) whose common zeros in E are phi(E).

    Each block is removed by saturating at its irrelevant ideal and
    eliminating its variables.
    """
    if any(is_t_name(n) for n in phi.parameters):
        raise TameFormulaError("parameters must lie in E (no t-variables)")
    if phi.nonzero:
        raise TameFormulaError("inequations are not supported here")
    ring = phi.ring
    I = Ideal(ring, phi.equations + phi.locus)
    blocks = list(phi.blocks)
    while blocks:
        blk = blocks.pop()
        if not I.gens:
            I = Ideal(ring.drop(blk), ())
            ring = I.ring
            continue
        parts = []
        for z in blk:
            S = saturate_by_variable(I, z)
            if not S.is_unit():
                parts.append(S)
        if not parts:
            return [Ring(phi.free, phi.ring.field).one()]
        J = parts[0]
        for S in parts[1:]:
            J = intersect(J, S)
        I = eliminate(J, blk)
        ring = I.ring
    xr = Ring(phi.free, phi.ring.field)
    gens = [g.to_ring(xr) for g in I.groebner()] if I.gens else []
    return [g.monic() for g in gens]


def zariski_holds(polys, values) -> bool:
    """All polynomials vanish at the given E-values."""
    values = [element(v) for v in values]
    for f in polys:
        field = common_field(list(f.terms.values()), values)
        vals = [v.in_field(field) for v in values]
        total = field.zero
        for m, c in f.terms.items():
            term = recast(c, field)
            for v, e in zip(vals, m):
                if e:
                    term = term * v ** e
            total = total + term
        if total:
            return False
    return True
