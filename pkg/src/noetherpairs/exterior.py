"""Exterior powers of F^s, Plücker coordinates and Grassmannians.

Index subsets are sorted tuples.  The contraction convention is

    e_S^* -| e_T = sign(S, T \\ S) * e_{T \\ S}   if S is contained in T, else 0,

where ``sign(A, B)`` is the sign of the permutation sorting the
concatenation ``A + B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import QQ, Field
from .linalg import det, nullspace, rank, rref
from .poly import Ring


class DependentVectorsError(ValueError):
    pass


class NotDecomposableError(ValueError):
    pass


def merge_sign(a, b) -> int:
    """Sign of the permutation sorting ``a + b`` (0 if they overlap)."""
    if set(a) & set(b):
        return 0
    inversions = 0
    for x in a:
        for y in b:
            if x > y:
                inversions += 1
    return -1 if inversions % 2 else 1


def subsets(s: int, r: int):
    """r-subsets of range(s) in lex order."""
    return list(combinations(range(s), r))


@dataclass(frozen=True)
class ExteriorVector:
    """Element of the r-th exterior power of F^s, stored sparsely."""

    grade: int
    dim: int
    coords: tuple  # ((subset, value), ...) sorted by subset, values nonzero
    field: Field = QQ

    @classmethod
    def from_dict(cls, grade, dim, values: dict, field: Field = QQ):
        items = []
        for S, v in values.items():
            S = tuple(S)
            if len(S) != grade or list(S) != sorted(set(S)) or (S and (S[0] < 0 or S[-1] >= dim)):
                raise ValueError("bad index subset %r for grade %d in dimension %d" % (S, grade, dim))
            v = field.convert(v)
            if v:
                items.append((S, v))
        return cls(grade, dim, tuple(sorted(items)), field)

    @classmethod
    def basis_vector(cls, S, dim, field: Field = QQ):
        return cls.from_dict(len(S), dim, {tuple(S): 1}, field)

    @classmethod
    def from_vector(cls, v, field: Field = QQ):
        return cls.from_dict(1, len(v), {(i,): c for i, c in enumerate(v)}, field)

    def as_dict(self) -> dict:
        return dict(self.coords)

    def dense(self):
        """Coordinates on the lex-ordered basis of subsets."""
        d = self.as_dict()
        zero = self.field.zero
        return [d.get(S, zero) for S in subsets(self.dim, self.grade)]

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other):
        self._compatible(other)
        d = self.as_dict()
        for S, v in other.coords:
            d[S] = d.get(S, self.field.zero) + v
        return ExteriorVector.from_dict(self.grade, self.dim, d, self.field)

    def scale(self, c):
        c = self.field.convert(c)
        return ExteriorVector.from_dict(self.grade, self.dim,
                                        {S: v * c for S, v in self.coords}, self.field)

    def _compatible(self, other):
        if (other.grade, other.dim) != (self.grade, self.dim):
            raise ValueError("grade/dimension mismatch")


def wedge(u: ExteriorVector, v: ExteriorVector) -> ExteriorVector:
    if u.dim != v.dim:
        raise ValueError("dimension mismatch")
    out: dict = {}
    zero = u.field.zero
    for S, a in u.coords:
        for T, b in v.coords:
            sg = merge_sign(S, T)
            if sg:
                U = tuple(sorted(S + T))
                out[U] = out.get(U, zero) + (a * b if sg > 0 else -(a * b))
    return ExteriorVector.from_dict(u.grade + v.grade, u.dim, out, u.field)


def contract(S, eta: ExteriorVector) -> ExteriorVector:
    """e_S^* -| eta, an element of grade ``eta.grade - len(S)``."""
    S = tuple(sorted(S))
    if len(S) > eta.grade:
        raise ValueError("covector grade %d exceeds %d" % (len(S), eta.grade))
    out = {}
    sset = set(S)
    for T, v in eta.coords:
        if sset <= set(T):
            rest = tuple(x for x in T if x not in sset)
            sg = merge_sign(S, rest)
            out[rest] = v if sg > 0 else -v
    return ExteriorVector.from_dict(eta.grade - len(S), eta.dim, out, eta.field)


def contraction(S, eta: ExteriorVector):
    """The vector e_S^* -| eta in F^s, for a covector of grade ``eta.grade - 1``."""
    if len(tuple(S)) != eta.grade - 1:
        raise ValueError("grade mismatch: covector of grade %d against grade %d"
                         % (len(tuple(S)), eta.grade))
    c = contract(S, eta).as_dict()
    zero = eta.field.zero
    return [c.get((j,), zero) for j in range(eta.dim)]


# ---------------------------------------------------------------- Plücker points

@dataclass(frozen=True)
class PluckerPoint:
    """A nonzero exterior vector up to scalars; first nonzero coordinate is 1."""

    grade: int
    dim: int
    coords: tuple  # dense, lex-ordered subsets
    field: Field = QQ

    @classmethod
    def from_exterior(cls, eta: ExteriorVector) -> "PluckerPoint":
        return cls.from_coordinates(eta.grade, eta.dim, eta.dense(), eta.field)

    @classmethod
    def from_coordinates(cls, grade, dim, coords, field: Field = QQ) -> "PluckerPoint":
        coords = [field.convert(c) for c in coords]
        if len(coords) != len(subsets(dim, grade)):
            raise ValueError("expected %d Plücker coordinates, got %d"
                             % (len(subsets(dim, grade)), len(coords)))
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = field.one / lead
        return cls(grade, dim, tuple(c * inv for c in coords), field)

    def exterior(self) -> ExteriorVector:
        return ExteriorVector.from_dict(
            self.grade, self.dim, dict(zip(subsets(self.dim, self.grade), self.coords)), self.field)

    def __str__(self):
        return "(" + ":".join(self.field.format(c) for c in self.coords) + ")"


def plucker_coordinates(basis, field: Field = QQ) -> PluckerPoint:
    """Normalized wedge of the rows of ``basis``."""
    rows = [[field.convert(c) for c in v] for v in basis]
    if not rows:
        raise ValueError("empty basis: use the grade-0 point directly")
    s = len(rows[0])
    r = len(rows)
    # row reduce first: same subspace, and minors become cheap
    red, piv = rref(field, rows, s)
    if len(piv) < r:
        raise DependentVectorsError("input vectors are linearly dependent")
    coords = []
    for S in subsets(s, r):
        coords.append(det(field, [[row[j] for j in S] for row in red]))
    return PluckerPoint.from_coordinates(r, s, coords, field)


def zero_subspace_point(s: int, field: Field = QQ) -> PluckerPoint:
    """The single point of the Grassmannian of 0-dimensional subspaces."""
    return PluckerPoint(0, s, (field.one,), field)


def is_decomposable(eta) -> bool:
    """All quadratic relations eta ^ (e^* -| eta) = 0 hold."""
    if isinstance(eta, PluckerPoint):
        eta = eta.exterior()
    r = eta.grade
    if r <= 1 or r >= eta.dim - 1:
        return True
    for S in subsets(eta.dim, r - 1):
        v = ExteriorVector.from_dict(1, eta.dim, {(j,): c for j, c in enumerate(contraction(S, eta))},
                                     eta.field)
        if not wedge(v, eta).is_zero():
            return False
    return True


def _kernel_matrix(eta: ExteriorVector):
    """Rows of the linear map v -> v ^ eta, one per (r+1)-subset."""
    s, r = eta.dim, eta.grade
    field = eta.field
    d = eta.as_dict()
    rows = []
    for U in subsets(s, r + 1):
        row = [field.zero] * s
        for j in U:
            rest = tuple(x for x in U if x != j)
            c = d.get(rest)
            if c:
                row[j] = c if merge_sign((j,), rest) > 0 else -c
        rows.append(row)
    return rows


def subspace_from_plucker(eta, method: str = "kernel"):
    """RREF basis of the subspace with Plücker coordinates ``eta``.

    ``method="kernel"`` solves v ^ eta = 0; ``method="contraction"`` spans
    the vectors e^* -| eta.  Both raise for non-decomposable input.
    """
    if isinstance(eta, PluckerPoint):
        eta = eta.exterior()
    field, s, r = eta.field, eta.dim, eta.grade
    if r == 0:
        return []
    if method == "kernel":
        rows = _kernel_matrix(eta)
        vecs = nullspace(field, rows, s) if rows else [
            [field.one if i == j else field.zero for i in range(s)] for j in range(s)]
    elif method == "contraction":
        vecs = [contraction(S, eta) for S in subsets(s, r - 1)]
    else:
        raise ValueError("unknown recovery method %r" % method)
    red, piv = rref(field, vecs, s)
    if len(piv) != r or not is_decomposable(eta):
        raise NotDecomposableError("Plücker vector is not decomposable")
    return [list(row) for row in red]


def in_subspace(v, eta) -> bool:
    """v lies in the subspace iff v ^ eta = 0."""
    if isinstance(eta, PluckerPoint):
        eta = eta.exterior()
    return wedge(ExteriorVector.from_vector(v, eta.field), eta).is_zero()


# ---------------------------------------------------------------- symbolic relations

def plucker_names(s: int, r: int, prefix: str = "p"):
    """Variable names for the coordinates, e.g. ``p01`` (``p0_12`` once s > 10)."""
    sep = "" if s <= 10 else "_"
    return [prefix + sep.join(str(i) for i in S) if S else prefix for S in subsets(s, r)]


def plucker_ring(s: int, r: int, field: Field = QQ, prefix: str = "p") -> Ring:
    names = plucker_names(s, r, prefix)
    return Ring(names, field, blocks={"eta": tuple(names)})


def symbolic_contractions(ring: Ring, s: int, r: int, names=None):
    """The vectors e_S^* -| eta, entries linear forms in the coordinate ring."""
    names = names or plucker_names(s, r)
    var = dict(zip(subsets(s, r), names))
    out = []
    for S in subsets(s, r - 1):
        vec = []
        for j in range(s):
            if j in S:
                vec.append(ring.zero())
                continue
            T = tuple(sorted(S + (j,)))
            g = ring.gen(var[T])
            vec.append(g if merge_sign(S, (j,)) > 0 else -g)
        out.append(vec)
    return out


def grassmann_equations(r: int, s: int, field: Field = QQ, ring: Ring | None = None):
    """Quadrics cutting out the decomposable vectors in P(wedge^r F^s).

    Coefficients of eta ^ (e^* -| eta), nonzero ones only, deduplicated up
    to scalars and listed in a deterministic order.
    """
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s, got r=%d, s=%d" % (r, s))
    ring = ring or plucker_ring(s, r, field)
    names = plucker_names(s, r)
    var = dict(zip(subsets(s, r), names))
    seen = set()
    out = []
    for vec in symbolic_contractions(ring, s, r, names):
        for U in subsets(s, r + 1):
            acc = ring.zero()
            for j in U:
                if not vec[j]:
                    continue
                rest = tuple(x for x in U if x != j)
                term = vec[j] * ring.gen(var[rest])
                acc = acc + term if merge_sign((j,), rest) > 0 else acc - term
            if acc:
                key = acc.primitive()
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    out.sort(key=lambda f: (f.total_degree(), [ring.key(m) for m, _ in f.sorted_terms()]),
             reverse=True)
    return out


def gr_dimension(r: int, s: int) -> int:
    return r * (s - r)


def random_subspace(rng, r: int, s: int, field: Field = QQ, bound: int = 5):
    """A random r-dimensional subspace of F^s (as a basis), seeded by ``rng``."""
    while True:
        rows = [[field.convert(rng.randint(-bound, bound)) for _ in range(s)] for _ in range(r)]
        if rank(field, rows, s) == r:
            return rows
