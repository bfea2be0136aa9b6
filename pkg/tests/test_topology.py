import random

import pytest

from noetherpairs.topology import (NEG_INF, FiniteClosedFamily, RankValue, degree,
                                   irreducible_components, is_irreducible,
                                   minimal_closed_containing, random_family, rirr_rank)

X = {1, 2, 3}


@pytest.fixture
def chain():
    return FiniteClosedFamily([1, 2, 3], [X, {1}, {1, 2}, set()])


@pytest.fixture
def two_points():
    return FiniteClosedFamily([1, 2, 3], [X, {1}, {2}, {1, 2}, set()])


def test_minimal_closed_containing(chain):
    assert minimal_closed_containing(chain, 1) == {1}
    assert minimal_closed_containing(chain, 2) == {1, 2}
    assert minimal_closed_containing(chain, 3) == X


def test_irreducibility(chain, two_points):
    assert is_irreducible(chain, {1, 2})
    assert not is_irreducible(chain, set())
    assert not is_irreducible(two_points, {1, 2})


def test_components(chain, two_points):
    assert sorted(map(sorted, irreducible_components(two_points, {1, 2}))) == [[1], [2]]
    assert irreducible_components(chain, {1, 2}) == [frozenset({1, 2})]
    assert irreducible_components(chain, set()) == []


def test_ranks(chain):
    assert [rirr_rank(chain, S) for S in ({1}, {1, 2}, X)] == [0, 1, 2]
    assert rirr_rank(chain, set()) == NEG_INF
    assert str(NEG_INF) == "-inf" and NEG_INF < RankValue(0)


def test_degree(chain, two_points):
    assert degree(chain, {1, 2}) == 1
    assert degree(two_points, {1, 2}) == 2
    fam = FiniteClosedFamily([1, 2, 3, 4], [{1, 2}, {1}, {3}, set()])
    # {1,2} has rank 1, {3} rank 0: only the top component counts
    assert degree(fam, {1, 2, 3}) == 1


def test_rank_of_union_is_max():
    rng = random.Random(5)
    for _ in range(100):
        fam = random_family(rng, 4)
        cons = [S for S in range(1, 16) if fam.is_constructible(S)]
        Y1, Y2 = rng.choice(cons), rng.choice(cons)
        assert fam.rirr_rank(Y1 | Y2) == max(fam.rirr_rank(Y1), fam.rirr_rank(Y2))


def test_pieces_rank_matches_closure(chain):
    Y = chain.constructible({2, 3})
    assert all(C & O for C, O in Y.pieces)
    assert Y.rank_from_pieces() == chain.rirr_rank(Y) == 2


def test_non_constructible():
    fam = FiniteClosedFamily([1, 2], [set()])
    # the only closed sets are the empty set and X, so {1} is neither open nor closed
    assert not fam.is_constructible({1})


def test_components_independent_of_storage_order():
    rng = random.Random(9)
    for _ in range(50):
        fam = random_family(rng, 4)
        sets = [sorted(fam._set(m)) for m in fam.members]
        rng.shuffle(sets)
        other = FiniteClosedFamily(list(reversed(fam.points)), sets)
        for C in fam.closed_masks:
            S = fam._set(C)
            assert sorted(map(sorted, fam.irreducible_components(S))) == \
                sorted(map(sorted, other.irreducible_components(S)))


def test_finite_unions_closed_under_intersection():
    rng = random.Random(2)
    for _ in range(50):
        fam = random_family(rng, 4)
        for a in fam.closed_masks:
            for b in fam.closed_masks:
                assert a & b in fam.closed_masks and a | b in fam.closed_masks


def test_outside_point():
    with pytest.raises(KeyError):
        FiniteClosedFamily([1], [{2}])
