"""Graded pieces, Hilbert polynomials, saturation and Gotzmann numbers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .groebner import Ideal, intersect, saturate_by_variable
from .linalg import in_row_space, rref
from .numerical import NumericalPolynomial
from .poly import Polynomial, monomial_basis, mono_divides, mono_div


class NotHomogeneousError(ValueError):
    pass


class NoStabilizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedPiece:
    """The subspace J_d, as an RREF matrix over the degree-d monomial basis."""

    degree: int
    monomials: tuple
    rows: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def vector(self, f: Polynomial):
        return [f.coefficient(m) for m in self.monomials]

    def contains(self, f: Polynomial) -> bool:
        if f and (not f.is_homogeneous() or f.total_degree() != self.degree):
            return False
        field = f.ring.field
        return in_row_space(field, self.rows, self.pivots, self.vector(f))

    def basis_polynomials(self, ring):
        return [ring.from_dict({m: c for m, c in zip(self.monomials, row) if c})
                for row in self.rows]


def _require_homogeneous(J: Ideal):
    if not J.is_homogeneous():
        raise NotHomogeneousError("ideal %s is not homogeneous" % J)


def graded_piece(J: Ideal, d: int) -> GradedPiece:
    """Row-reduce the span of ``M*g`` over generators ``g`` and monomials ``M``."""
    _require_homogeneous(J)
    ring = J.ring
    monos = tuple(monomial_basis(ring, d))
    index = {m: i for i, m in enumerate(monos)}
    field = ring.field
    rows = []
    for g in J.gens:
        e = g.total_degree()
        if e > d:
            continue
        for M in monomial_basis(ring, d - e):
            row = [field.zero] * len(monos)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, M))]] = c
            rows.append(row)
    red, piv = rref(field, rows, len(monos)) if rows else ([], [])
    return GradedPiece(d, monos, tuple(tuple(r) for r in red), tuple(piv))


def graded_dimension(J: Ideal, d: int) -> int:
    """dim J_d by linear algebra on the generators."""
    return graded_piece(J, d).dim


def graded_dimension_gb(J: Ideal, d: int) -> int:
    """dim J_d as the number of degree-d monomials in the initial ideal."""
    _require_homogeneous(J)
    lms = J.groebner().leading_monomials
    if not lms:
        return 0
    count = 0
    for m in monomial_basis(J.ring, d):
        if any(mono_divides(l, m) for l in lms):
            count += 1
    return count


def hilbert_function(J: Ideal, d: int) -> int:
    """codim of J_d in F[X]_d."""
    return comb(d + J.ring.nvars - 1, J.ring.nvars - 1) - graded_dimension_gb(J, d)


@dataclass(frozen=True)
class HilbertProfile:
    ideal: Ideal
    stabilization: int
    polynomial: NumericalPolynomial


def hilbert_profile(J: Ideal, cap: int = 200) -> HilbertProfile:
    """Fit the Hilbert polynomial and record where the fit starts.

    The window starts where the Hilbert function of the initial ideal is
    guaranteed polynomial (degree of the lcm of its generators minus n),
    and the fit is confirmed on n+1 further degrees.
    """
    _require_homogeneous(J)
    nv = J.ring.nvars
    n = nv - 1
    lms = J.groebner().leading_monomials
    maxdeg = max((sum(m) for m in lms), default=0)
    lcm_deg = sum(max((m[i] for m in lms), default=0) for i in range(nv))
    start = max(maxdeg, lcm_deg - n, 0)
    while start <= cap:
        vals = [hilbert_function(J, start + k) for k in range(2 * n + 2)]
        Q = NumericalPolynomial.fit(start, vals[: n + 1])
        if all(Q(start + k) == vals[k] for k in range(n + 1, 2 * n + 2)):
            return HilbertProfile(J, start, Q)
        start += 1
    raise NoStabilizationError("Hilbert function did not stabilize below degree %d" % cap)


def hilbert_polynomial(J: Ideal, cap: int = 200) -> NumericalPolynomial:
    return hilbert_profile(J, cap).polynomial


def saturate(J: Ideal) -> Ideal:
    """Saturation with respect to the irrelevant ideal (X_0, ..., X_n).

    Computed as the intersection of the saturations ``J : X_i^infinity``.
    """
    _require_homogeneous(J)
    ring = J.ring
    if not J.gens:
        return Ideal(ring, ())
    parts = []
    for v in ring.names:
        S = saturate_by_variable(J, v)
        if S.is_unit():
            continue
        parts.append(S)
    if not parts:
        return Ideal(ring, [ring.one()])
    out = parts[0]
    for S in parts[1:]:
        if out.contains(S):
            out = S
        elif not S.contains(out):
            out = intersect(out, S)
    gb = out.groebner()
    res = Ideal(ring, list(gb))
    res._set_groebner(gb)
    return res


def is_saturated(J: Ideal) -> bool:
    return saturate(J) == J


def saturated_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of saturated ideals via their reduced bases."""
    if not I.ring.same_variables(J.ring):
        raise ValueError("ring mismatch")
    for K in (I, J):
        if not is_saturated(K):
            raise ValueError("ideal %s is not saturated" % K)
    return I == J


def saturation_exponent(J: Ideal, sat: Ideal | None = None) -> int:
    """Least D with ``X_i^D * p`` in J for every generator p of Sat(J)."""
    sat = sat if sat is not None else saturate(J)
    ring = J.ring
    D = 0
    for p in sat.gens:
        for v in ring.names:
            k = 0
            x = ring.gen(v)
            q = p
            while not J.contains(q):
                q = q * x
                k += 1
            D = max(D, k)
    return D


def gotzmann_representation(Q: NumericalPolynomial):
    """Exponents a_1 >= ... >= a_s with Q(t) = sum C(t + a_i - i + 1, a_i)."""
    rest = Q
    out = []
    limit = 10 ** 6
    while not rest.is_zero():
        a = rest.degree
        if rest.leading_coefficient() < 0:
            raise ValueError("%s has no Gotzmann representation" % Q)
        if out and a > out[-1]:
            raise ValueError("%s has no Gotzmann representation" % Q)
        i = len(out)
        rest = rest - NumericalPolynomial.binomial(a - i, a)
        out.append(a)
        if len(out) > limit:
            raise ValueError("Gotzmann representation of %s is too long" % Q)
    return out


def gotzmann_number(Q: NumericalPolynomial) -> int:
    """Number of terms in the Gotzmann representation of Q."""
    return len(gotzmann_representation(Q))


def generated_piece_dimension(basis_polys, ring, d: int) -> int:
    """dim of the degree-d part of the ideal generated by homogeneous ``basis_polys``."""
    return graded_dimension(Ideal(ring, basis_polys), d)


def divide_monomial(m, by):
    return mono_div(m, by)
