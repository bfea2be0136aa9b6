"""Noetherian collections on finite universes: irreducibility, rank, degree.

Subsets of the universe are handled internally as bitmasks over the
point list; the public API speaks frozensets of labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, total_ordering


@total_ordering
@dataclass(frozen=True)
class RankValue:
    """A finite rank or minus infinity (``value is None``)."""

    value: int | None = None

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        other = _rank(other)
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return isinstance(other, RankValue) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return "-inf" if self.value is None else str(self.value)


NEG_INF = RankValue(None)


def _rank(x) -> RankValue:
    return x if isinstance(x, RankValue) else RankValue(int(x))


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class FiniteClosedFamily:
    """A collection of subsets of a finite universe, closed under intersection.

    The given sets are completed by the universe and by all pairwise
    intersections.  Finite unions of members form the closed sets of the
    associated Noetherian topology.
    """

    def __init__(self, universe, closed):
        self.points = tuple(universe)
        if len(set(self.points)) != len(self.points):
            raise ValueError("repeated points in the universe")
        self.index = {p: i for i, p in enumerate(self.points)}
        self.full = (1 << len(self.points)) - 1
        members = {self.full}
        for C in closed:
            members.add(self._mask(C))
        # intersection closure
        changed = True
        while changed:
            changed = False
            cur = list(members)
            for i, a in enumerate(cur):
                for b in cur[i + 1:]:
                    m = a & b
                    if m not in members:
                        members.add(m)
                        changed = True
        self.members = frozenset(members)

    # -- conversion
    def _mask(self, S) -> int:
        m = 0
        for p in S:
            if p not in self.index:
                raise KeyError("point %r is outside the universe" % (p,))
            m |= 1 << self.index[p]
        return m

    def _set(self, mask: int) -> frozenset:
        return frozenset(self.points[i] for i in _bits(mask))

    def as_mask(self, S) -> int:
        return S if isinstance(S, int) else self._mask(S)

    # -- the topology
    @cached_property
    def closed_masks(self) -> frozenset:
        """Finite unions of members (the closed sets of the topology)."""
        closed = set(self.members)
        changed = True
        while changed:
            changed = False
            cur = list(closed)
            for i, a in enumerate(cur):
                for b in cur[i + 1:]:
                    m = a | b
                    if m not in closed:
                        closed.add(m)
                        changed = True
        return frozenset(closed)

    def is_closed(self, S) -> bool:
        return self.as_mask(S) in self.closed_masks

    def closure_mask(self, mask: int) -> int:
        out = self.full
        for C in self.closed_masks:
            if C & mask == mask:
                out &= C
        return out

    def closure(self, S) -> frozenset:
        return self._set(self.closure_mask(self.as_mask(S)))

    def minimal_closed_containing(self, point) -> frozenset:
        if point not in self.index:
            raise KeyError("point %r is outside the universe" % (point,))
        bit = 1 << self.index[point]
        out = self.full
        for C in self.members:
            if C & bit:
                out &= C
        return self._set(out)

    # -- irreducibility
    @cached_property
    def irreducible_masks(self) -> tuple:
        out = []
        for C in self.closed_masks:
            if self._irreducible_mask(C):
                out.append(C)
        return tuple(sorted(out))

    def _irreducible_mask(self, C: int) -> bool:
        if C == 0:
            return False
        union = 0
        for D in self.closed_masks:
            if D != C and D & C == D:
                union |= D
        return union != C

    def _require_closed(self, S) -> int:
        m = self.as_mask(S)
        if m not in self.closed_masks:
            raise ValueError("%s is not closed" % sorted(self._set(m), key=str))
        return m

    def is_irreducible(self, C) -> bool:
        return self._irreducible_mask(self._require_closed(C))

    def _components_mask(self, C: int):
        inside = [D for D in self.irreducible_masks if D & C == D]
        maximal = [D for D in inside if not any(E != D and E & D == D for E in inside)]
        return sorted(maximal)

    def irreducible_components(self, C):
        m = self._require_closed(C)
        return [self._set(D) for D in self._components_mask(m)]

    # -- rank and degree
    @cached_property
    def _irr_rank(self) -> dict:
        ranks: dict = {}
        for C in sorted(self.irreducible_masks, key=lambda m: bin(m).count("1")):
            below = [ranks[D] + 1 for D in self.irreducible_masks
                     if D != C and D & C == D]
            ranks[C] = max(below, default=0)
        return ranks

    def rank_of_closed_mask(self, C: int) -> RankValue:
        if C == 0:
            return NEG_INF
        return RankValue(max(self._irr_rank[D] for D in self._components_mask(C)))

    def rirr_rank(self, Y) -> RankValue:
        """Rank of any subset (a ConstructibleSet or labels), through its closure."""
        mask = Y.mask if isinstance(Y, ConstructibleSet) else self.as_mask(Y)
        return self.rank_of_closed_mask(self.closure_mask(mask))

    def degree(self, Y) -> int:
        mask = Y.mask if isinstance(Y, ConstructibleSet) else self.as_mask(Y)
        if mask == 0:
            raise ValueError("the empty set has no degree")
        Z = self.closure_mask(mask)
        comps = self._components_mask(Z)
        top = max(self._irr_rank[D] for D in comps)
        return sum(1 for D in comps if self._irr_rank[D] == top)

    # -- constructible sets
    def pieces_mask(self, mask: int):
        """Normal form ``[(C, O)]`` with C irreducible closed, O open, C&O nonempty.

        Raises ``ValueError`` if the set is not constructible.
        """
        out = []
        Y = mask
        while Y:
            Z = self.closure_mask(Y)
            B = self.closure_mask(Z & ~Y)
            O = self.full & ~B
            for C in self._components_mask(Z):
                if not C & O:
                    raise ValueError("%s is not constructible" % sorted(self._set(mask), key=str))
                out.append((C, O))
            Y = Y & B
        return out

    def constructible(self, S) -> "ConstructibleSet":
        m = self.as_mask(S)
        return ConstructibleSet(self, m, tuple(self.pieces_mask(m)))

    def is_constructible(self, S) -> bool:
        try:
            self.pieces_mask(self.as_mask(S))
        except ValueError:
            return False
        return True


@dataclass(frozen=True)
class ConstructibleSet:
    """An explicit point set together with its ``C_i & O_i`` pieces."""

    family: FiniteClosedFamily
    mask: int
    pieces: tuple

    @property
    def points(self) -> frozenset:
        return self.family._set(self.mask)

    def piece_sets(self):
        f = self.family
        return [(f._set(C), f._set(O)) for C, O in self.pieces]

    def union(self, other: "ConstructibleSet") -> "ConstructibleSet":
        return self.family.constructible(self.mask | other.mask)

    def rank_from_pieces(self) -> RankValue:
        """max R_irr(C_i) over the pieces."""
        if not self.pieces:
            return NEG_INF
        return RankValue(max(self.family._irr_rank[C] for C, _ in self.pieces))


# module-level spellings of the family methods

def minimal_closed_containing(family: FiniteClosedFamily, point):
    return family.minimal_closed_containing(point)


def is_irreducible(family: FiniteClosedFamily, C) -> bool:
    return family.is_irreducible(C)


def irreducible_components(family: FiniteClosedFamily, C):
    return family.irreducible_components(C)


def rirr_rank(family: FiniteClosedFamily, Y) -> RankValue:
    return family.rirr_rank(Y)


def degree(family: FiniteClosedFamily, Y) -> int:
    return family.degree(Y)


def random_family(rng, size: int, nsets: int | None = None) -> FiniteClosedFamily:
    """Random intersection-closed family on points 1..size."""
    pts = list(range(1, size + 1))
    k = rng.randint(1, 2 ** size) if nsets is None else nsets
    sets = []
    for _ in range(k):
        m = rng.getrandbits(size) if size else 0
        sets.append([p for i, p in enumerate(pts) if m >> i & 1])
    return FiniteClosedFamily(pts, sets)


def all_families(size: int):
    """Every family of subsets of 1..size (before intersection closure)."""
    pts = list(range(1, size + 1))
    nsub = 2 ** size
    for code in range(2 ** nsub):
        sets = [[p for i, p in enumerate(pts) if m >> i & 1] for m in range(nsub) if code >> m & 1]
        yield FiniteClosedFamily(pts, sets)
