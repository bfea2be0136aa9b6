"""Hilbert schemes of P^n as subvarieties of a Grassmannian.

A saturated ideal I with Hilbert polynomial Q is recorded by its graded
piece I_{d0}, an N0-dimensional subspace of F[X]_{d0}, through Plücker
coordinates.  ``d0`` is the Gotzmann number of Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .exterior import (
    PluckerPoint, contraction, grassmann_equations, is_decomposable, plucker_coordinates,
    plucker_names, subsets, subspace_from_plucker, symbolic_contractions, zero_subspace_point,
)
from .fields import FunctionField, QQ, Field
from .groebner import Ideal
from .hilbert import graded_piece, gotzmann_number, hilbert_polynomial, is_saturated, saturate
from .linalg import rank
from .numerical import NumericalPolynomial
from .poly import Polynomial, Ring, exact_div, mono_mul, monomial_basis


class OffSchemeError(ValueError):
    pass


class SchemeTooLargeError(ValueError):
    """The Plücker space is beyond what symbolic expansion can handle."""


class HilbertPolynomialMismatch(ValueError):
    pass


DEFAULT_MINOR_CAP = 2000
DEFAULT_PLUCKER_LIMIT = 2000


def symbolic_det(matrix):
    """Fraction-free (Bareiss) determinant of a square matrix of polynomials."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    ring = m[0][0].ring
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return ring.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


@dataclass(frozen=True)
class DeterminantalCondition:
    """rank(rows) <= bound, entries polynomial in the parameters."""

    degree: int
    rows: tuple
    bound: int

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def minor_count(self) -> int:
        k = self.bound + 1
        if k > len(self.rows) or k > self.ncols:
            return 0
        return comb(len(self.rows), k) * comb(self.ncols, k)

    def equations(self, cap: int = DEFAULT_MINOR_CAP):
        """All nonzero (bound+1)-minors, or ``None`` if there are more than ``cap``."""
        count = self.minor_count()
        if count == 0:
            return []
        if count > cap:
            return None
        k = self.bound + 1
        seen = set()
        out = []
        for R in combinations(range(len(self.rows)), k):
            for C in combinations(range(self.ncols), k):
                f = symbolic_det([[self.rows[i][j] for j in C] for i in R])
                if f:
                    f = f.primitive()
                    if f not in seen:
                        seen.add(f)
                        out.append(f)
        return out

    def holds_at(self, values: dict, field: Field) -> bool:
        num = [[field.convert(e.evaluate(values)) if e else field.zero for e in row]
               for row in self.rows]
        return rank(field, num, self.ncols) <= self.bound


@dataclass(frozen=True)
class SchemePoint:
    eta: PluckerPoint

    def __str__(self):
        return str(self.eta)


@dataclass
class HilbertSchemeData:
    n: int
    Q: NumericalPolynomial
    d0: int
    N0: int
    s: int
    field: Field
    x_ring: Ring
    ring: Ring
    monomials: tuple
    eta_names: tuple
    grassmann: list
    determinantal: list
    S_template: list
    window: tuple
    minor_cap: int = DEFAULT_MINOR_CAP
    _eqs: list | None = dc_field(default=None, repr=False)

    @property
    def ambient_dimension(self) -> int:
        """N with the Grassmannian inside P^N."""
        return comb(self.s, self.N0) - 1

    def codimension(self, d: int) -> int:
        """C(d+n, n) - Q(d), the required dimension of the degree-d piece."""
        return comb(d + self.n, self.n) - self.Q(d)

    @property
    def scheme_equations(self):
        """Grassmann quadrics plus expanded minors (conditions above the cap stay pointwise)."""
        if self._eqs is None:
            eqs = list(self.grassmann)
            seen = set(eqs)
            for cond in self.determinantal:
                part = cond.equations(self.minor_cap)
                for f in part or ():
                    if f not in seen:
                        seen.add(f)
                        eqs.append(f)
            self._eqs = eqs
        return self._eqs

    def unexpanded_conditions(self):
        return [c for c in self.determinantal if c.equations(self.minor_cap) is None]

    def point(self, eta) -> SchemePoint:
        eta = _as_plucker(eta)
        if not on_scheme(eta, self):
            raise OffSchemeError("%s is not on the Hilbert scheme" % eta)
        return SchemePoint(eta)

    def sd_conditions(self, d: int):
        """Determinantal conditions in (c, eta) deciding membership of sum c_b X^b."""
        names = ["c%d" % i for i in range(comb(d + self.n, self.n))]
        cring = Ring(tuple(names) + self.eta_names, self.field,
                     blocks={"c": tuple(names), "eta": self.eta_names})
        cvars = [cring.gen(v) for v in names]
        dmonos = monomial_basis(self.x_ring, d)
        if d >= self.d0:
            return [_membership_condition(self, cring, d, {m: c for m, c in zip(dmonos, cvars)})]
        out = []
        for i in range(self.n + 1):
            shift = [0] * (self.n + 1)
            shift[i] = self.d0
            shifted = {mono_mul(m, tuple(shift)): c for m, c in zip(dmonos, cvars)}
            out.append(_membership_condition(self, cring, d + self.d0, shifted))
        return out

    def sd_templates(self, d: int, cap: int | None = None):
        """The polynomials S_d(c, eta), or ``None`` when expansion exceeds the cap."""
        out = []
        for cond in self.sd_conditions(d):
            eqs = cond.equations(self.minor_cap if cap is None else cap)
            if eqs is None:
                return None
            out.extend(eqs)
        return out

    def to_text(self) -> str:
        lines = [
            "n = %d" % self.n,
            "Q(d) = %s" % self.Q,
            "d0 = %d" % self.d0,
            "N0 = %d" % self.N0,
            "ambient = Gr_%d(F^%d) in P^%d" % (self.N0, self.s, self.ambient_dimension),
            "monomial basis (degree %d): %s" % (
                self.d0, ", ".join(_mono_str(self.x_ring, m) for m in self.monomials)),
            "plucker coordinates: %s" % ", ".join(self.eta_names),
            "window = %s" % ", ".join(str(d) for d in self.window),
        ]
        eqs = self.scheme_equations
        lines.append("scheme equations: %d" % len(eqs))
        lines.extend("  %s" % f for f in eqs)
        for cond in self.determinantal:
            status = cond.equations(self.minor_cap)
            lines.append("determinantal degree %d: %dx%d matrix, rank <= %d, %s" % (
                cond.degree, len(cond.rows), cond.ncols, cond.bound,
                "pointwise only" if status is None else "%d minors nonzero" % len(status)))
        lines.append("S templates: %d" % len(self.S_template))
        lines.extend("  %s" % f for f in self.S_template)
        return "\n".join(lines) + "\n"


def _mono_str(ring, m):
    parts = [v if e == 1 else "%s^%d" % (v, e) for v, e in zip(ring.names, m) if e]
    return "*".join(parts) or "1"


def _as_plucker(eta) -> PluckerPoint:
    return eta.eta if isinstance(eta, SchemePoint) else eta


def _multiplied_rows(data: HilbertSchemeData, ring: Ring, d: int):
    """Rows M * (e^* -| eta) over the degree-d monomial basis, symbolic in eta."""
    dmonos = monomial_basis(data.x_ring, d)
    index = {m: i for i, m in enumerate(dmonos)}
    if data.N0 == 0:
        return [], dmonos
    vecs = symbolic_contractions(ring, data.s, data.N0, list(data.eta_names))
    rows = []
    for M in monomial_basis(data.x_ring, d - data.d0):
        for vec in vecs:
            row = [ring.zero()] * len(dmonos)
            for m0, entry in zip(data.monomials, vec):
                if entry:
                    row[index[mono_mul(m0, M)]] = entry
            rows.append(tuple(row))
    return rows, dmonos


def _membership_condition(data, cring, d, cterms):
    rows, dmonos = _multiplied_rows(data, cring, d)
    crow = tuple(cterms.get(m, cring.zero()) for m in dmonos)
    return DeterminantalCondition(d, (crow,) + tuple(rows), data.codimension(d))


def hilbert_scheme_data(n: int, Q: NumericalPolynomial, window: int = 2, field: Field = QQ,
                        minor_cap: int = DEFAULT_MINOR_CAP, var_prefix: str = "x",
                        plucker_limit: int = DEFAULT_PLUCKER_LIMIT) -> HilbertSchemeData:
    """Assemble d0, N0, the Grassmannian, the scheme conditions and the templates."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if window < 1:
        raise ValueError("window must contain at least one degree")
    d0 = gotzmann_number(Q)
    s = comb(d0 + n, n)
    N0 = s - Q(d0)
    if N0 < 0:
        raise ValueError("Q(d0) exceeds the ambient dimension: no ideal has Hilbert polynomial %s" % Q)
    if comb(s, N0) > plucker_limit:
        raise SchemeTooLargeError(
            "Gr_%d(F^%d) has %d Plücker coordinates (limit %d)" % (N0, s, comb(s, N0), plucker_limit))
    xnames = tuple("%s%d" % (var_prefix, i) for i in range(n + 1))
    x_ring = Ring(xnames, field)
    eta_names = tuple(plucker_names(s, N0))
    ring = Ring(xnames + eta_names, field, blocks={"X": xnames, "eta": eta_names})
    monos = tuple(monomial_basis(x_ring, d0))
    eta_ring = Ring(eta_names, field, blocks={"eta": eta_names})
    grass = grassmann_equations(N0, s, field, eta_ring) if N0 >= 1 else []
    data = HilbertSchemeData(n, Q, d0, N0, s, field, x_ring, ring, monos, eta_names,
                             grass, [], [], tuple(range(d0, d0 + window)), minor_cap)
    if N0 >= 1:
        for d in data.window:
            rows, _ = _multiplied_rows(data, eta_ring, d)
            data.determinantal.append(DeterminantalCondition(d, tuple(rows), data.codimension(d)))
        xidx = [ring.index(v) for v in xnames]
        for vec in symbolic_contractions(ring, s, N0, list(eta_names)):
            f = ring.zero()
            for m0, entry in zip(monos, vec):
                if entry:
                    mono = [0] * ring.nvars
                    for i, e in zip(xidx, m0):
                        mono[i] = e
                    f = f + entry * ring.monomial(mono)
            if f:
                data.S_template.append(f)
    return data


# ---------------------------------------------------------------- point queries

def _check_ambient(eta: PluckerPoint, data: HilbertSchemeData):
    if (eta.grade, eta.dim) != (data.N0, data.s):
        raise ValueError("point of Gr_%d(F^%d) expected, got grade %d in dimension %d"
                         % (data.N0, data.s, eta.grade, eta.dim))


def template_at(eta, data: HilbertSchemeData):
    """S(X, eta): the contractions e^* -| eta as forms of degree d0."""
    eta = _as_plucker(eta)
    _check_ambient(eta, data)
    if data.N0 == 0:
        return []
    ext = eta.exterior()
    out = []
    for S in subsets(data.s, data.N0 - 1):
        vec = contraction(S, ext)
        f = data.x_ring.from_dict({m: c for m, c in zip(data.monomials, vec) if c})
        if f:
            out.append(f)
    return out


def generated_dimension(eta, data: HilbertSchemeData, d: int) -> int:
    """dim of <U>_d for the subspace U with Plücker coordinates eta."""
    gens = template_at(eta, data)
    if not gens:
        return 0
    return graded_piece(Ideal(data.x_ring, gens), d).dim


def on_scheme(eta, data: HilbertSchemeData, window=None) -> bool:
    """Decomposable and dim <U>_d <= C(d+n,n) - Q(d) on the window of degrees."""
    eta = _as_plucker(eta)
    _check_ambient(eta, data)
    if data.N0 == 0:
        return True
    if not is_decomposable(eta):
        return False
    degrees = data.window if window is None else tuple(window)
    gens = template_at(eta, data)
    J = Ideal(data.x_ring, gens)
    return all(graded_piece(J, d).dim <= data.codimension(d) for d in degrees)


def point_from_ideal(I: Ideal, data: HilbertSchemeData, check_saturated: bool = True) -> SchemePoint:
    """Plücker coordinates of I_{d0}."""
    if I.ring.nvars != data.n + 1:
        raise ValueError("ideal lives in %d variables, expected %d" % (I.ring.nvars, data.n + 1))
    # function-field ideals keep their own coefficients; otherwise use the data's field
    field = I.ring.field if isinstance(I.ring.field, FunctionField) else data.field
    xr = data.x_ring if field == data.field else data.x_ring.with_field(field)
    J = Ideal(xr, [Polynomial(xr, {m: field.convert(c) for m, c in g.terms.items()}) for g in I.gens])
    Q = hilbert_polynomial(J)
    if Q != data.Q:
        raise HilbertPolynomialMismatch("ideal has Hilbert polynomial %s, expected %s" % (Q, data.Q))
    if check_saturated and not is_saturated(J):
        raise ValueError("ideal %s is not saturated" % I)
    piece = graded_piece(J, data.d0)
    if piece.dim != data.N0:
        raise ValueError("dim I_%d = %d differs from N0 = %d" % (data.d0, piece.dim, data.N0))
    if data.N0 == 0:
        return SchemePoint(zero_subspace_point(data.s, field))
    return SchemePoint(plucker_coordinates([list(r) for r in piece.rows], field))


def ideal_from_point(eta, data: HilbertSchemeData) -> Ideal:
    """Sat(<S(X, eta)>)."""
    eta = _as_plucker(eta)
    if not on_scheme(eta, data):
        raise OffSchemeError("%s is not on the Hilbert scheme" % eta)
    gens = template_at(eta, data)
    if not gens:
        return Ideal(data.x_ring, ())
    return saturate(Ideal(data.x_ring, gens))


def form_coefficients(f: Polynomial, data: HilbertSchemeData, d: int | None = None):
    """Coefficient tuple of a form on the degree-d monomial basis of data."""
    d = f.total_degree() if d is None else d
    g = Polynomial(data.x_ring, {m: data.field.convert(c) for m, c in f.terms.items()})
    if g and (not g.is_homogeneous() or g.total_degree() != d):
        raise ValueError("%s is not a form of degree %d" % (f, d))
    return [g.coefficient(m) for m in monomial_basis(data.x_ring, d)]


def membership_test(c, eta, d: int, data: HilbertSchemeData) -> bool:
    """Decide sum c_b X^b in I^(eta) by the rank conditions behind S_d."""
    eta = _as_plucker(eta)
    _check_ambient(eta, data)
    nb = comb(d + data.n, data.n)
    if len(c) != nb:
        raise ValueError("expected %d coefficients for degree %d, got %d" % (nb, d, len(c)))
    field = data.field
    c = [field.convert(v) for v in c]
    dmonos = monomial_basis(data.x_ring, d)
    if d >= data.d0:
        return _rank_with(data, eta, d, dict(zip(dmonos, c)))
    for i in range(data.n + 1):
        shift = [0] * (data.n + 1)
        shift[i] = data.d0
        if not _rank_with(data, eta, d + data.d0,
                          {mono_mul(m, tuple(shift)): v for m, v in zip(dmonos, c)}):
            return False
    return True


def _rank_with(data, eta, d, cterms) -> bool:
    field = data.field
    gens = template_at(eta, data)
    piece_rows = []
    if gens:
        piece = graded_piece(Ideal(data.x_ring, gens), d)
        piece_rows = [list(r) for r in piece.rows]
        monos = piece.monomials
    else:
        monos = tuple(monomial_basis(data.x_ring, d))
    crow = [cterms.get(m, field.zero) for m in monos]
    return rank(field, piece_rows + [crow], len(monos)) <= data.codimension(d)


def recover_subspace(eta, data: HilbertSchemeData):
    """Basis of U as forms of degree d0."""
    eta = _as_plucker(eta)
    if data.N0 == 0:
        return []
    return [data.x_ring.from_dict({m: c for m, c in zip(data.monomials, row) if c})
            for row in subspace_from_plucker(eta)]
