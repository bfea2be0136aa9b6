"""Numerical (integer-valued) polynomials in the basis C(t+i, i)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from gmpy2 import mpq

from .fields import QQ
from .linalg import solve


def binom_at(t: int, i: int) -> int:
    """C(t+i, i) as a polynomial in t, evaluated at an integer."""
    num = 1
    for j in range(1, i + 1):
        num *= t + j
    return num // factorial(i)


def _power_basis_of_binom(shift: int, k: int):
    """Power-basis coefficients (constant first) of C(t+shift, k)."""
    coeffs = [mpq(1)]
    for j in range(k):
        # multiply by (t + shift - j)
        a = shift - j
        new = [mpq(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += c * a
            new[i + 1] += c
        coeffs = new
    f = factorial(k)
    return [c / f for c in coeffs]


@dataclass(frozen=True)
class NumericalPolynomial:
    """``Q(t) = sum_i coords[i] * C(t+i, i)`` with integer ``coords``."""

    coords: tuple = ()

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        while coords and coords[-1] == 0:
            coords = coords[:-1]
        object.__setattr__(self, "coords", coords)

    @property
    def degree(self) -> int:
        return len(self.coords) - 1

    def __call__(self, t: int) -> int:
        return sum(c * binom_at(t, i) for i, c in enumerate(self.coords))

    def power_coefficients(self):
        """Rational coefficients in the power basis, constant term first."""
        out = [mpq(0)] * max(len(self.coords), 1)
        for i, c in enumerate(self.coords):
            for j, v in enumerate(_power_basis_of_binom(i, i)):
                out[j] += c * v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def leading_coefficient(self):
        return self.power_coefficients()[-1]

    def __sub__(self, other):
        n = max(len(self.coords), len(other.coords))
        a = self.coords + (0,) * (n - len(self.coords))
        b = other.coords + (0,) * (n - len(other.coords))
        return NumericalPolynomial(tuple(x - y for x, y in zip(a, b)))

    def __add__(self, other):
        n = max(len(self.coords), len(other.coords))
        a = self.coords + (0,) * (n - len(self.coords))
        b = other.coords + (0,) * (n - len(other.coords))
        return NumericalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def is_zero(self) -> bool:
        return not self.coords

    @classmethod
    def constant(cls, c: int) -> "NumericalPolynomial":
        return cls((c,))

    @classmethod
    def fit(cls, start: int, values) -> "NumericalPolynomial":
        """Interpolate values at ``start, start+1, ...``; degree < len(values)."""
        values = list(values)
        k = len(values)
        rows = [[QQ.convert(binom_at(start + r, i)) for i in range(k)] for r in range(k)]
        sol = solve(QQ, rows, [QQ.convert(v) for v in values])
        if sol is None:
            raise ValueError("interpolation system is singular")
        if any(c.denominator != 1 for c in sol):
            raise ValueError("values are not those of an integer-valued polynomial")
        return cls(tuple(int(c) for c in sol))

    @classmethod
    def from_power_coefficients(cls, coeffs) -> "NumericalPolynomial":
        coeffs = [QQ.convert(c) for c in coeffs]
        k = len(coeffs)
        vals = [sum(c * t ** j for j, c in enumerate(coeffs)) for t in range(k)]
        return cls.fit(0, vals)

    @classmethod
    def binomial(cls, shift: int, k: int) -> "NumericalPolynomial":
        """C(t+shift, k) as a numerical polynomial."""
        return cls.from_power_coefficients(_power_basis_of_binom(shift, k))

    def __str__(self):
        return format_power(self.power_coefficients(), "d")


def format_power(coeffs, var="d") -> str:
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if j == 0:
            body = str(a)
        else:
            mon = var if j == 1 else "%s^%d" % (var, j)
            body = mon if a == 1 else "%s*%s" % (a, mon)
        if terms:
            terms.append(("- " if neg else "+ ") + body)
        else:
            terms.append(("-" if neg else "") + body)
    return " ".join(terms) if terms else "0"


def ambient_dimension(n: int, d: int) -> int:
    """dim F[X_0..X_n]_d."""
    return comb(d + n, n)
