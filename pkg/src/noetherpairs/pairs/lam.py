"""Delon's λ-functions: E-coordinates of an element against an E-independent tuple."""

from __future__ import annotations

from ..linalg import rref
from .model import PairElement, common_field, element, field_over, t_expand


def _coefficient_matrix(elems, field):
    """Columns = elements, rows = t-monomials; entries in Q(e)."""
    vals = {i: a.in_field(field) for i, a in enumerate(elems)}
    rows, efield = t_expand(vals, field)
    return [[r.get(i, efield.zero) for i in range(len(elems))] for r in rows], efield


def e_rank(elems) -> int:
    """Dimension of the E-span of the elements."""
    elems = [element(a) for a in elems]
    if not elems:
        return 0
    field = common_field(elems)
    mat, efield = _coefficient_matrix(elems, field)
    if not mat:
        return 0
    return len(rref(efield, mat, len(elems))[1])


def e_independent(elems) -> bool:
    return e_rank(elems) == len(list(elems))


def lambda_eval(a0, basis) -> list:
    """λ_n(a0; a1..an): the E-coefficients of a0, or zeros when undefined.

    Values are returned as e-only :class:`PairElement` objects.
    """
    a0 = element(a0)
    basis = [element(a) for a in basis]
    n = len(basis)
    zeros = [PairElement(field_over(()).zero) for _ in range(n)]
    if n == 0:
        return []
    elems = basis + [a0]
    field = common_field(elems)
    mat, efield = _coefficient_matrix(elems, field)
    if not mat:
        return zeros
    red, piv = rref(efield, mat, n + 1)
    if len([p for p in piv if p < n]) < n:
        return zeros  # basis dependent over E
    if n in piv:
        return zeros  # a0 outside the span
    # reduced rows: row i reads x_i = red[i][n]
    return [PairElement(red[i][n]).normalized() for i in range(n)]
