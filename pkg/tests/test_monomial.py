from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from csgin import BlockRing, MonomialIdeal, borel_prime, intersect_all
from csgin.monomial import minimal_transversals

from strategies import monomial_ideals, squarefree_ideals


def test_minimal_generators_and_membership():
    R = BlockRing([3])
    I = MonomialIdeal.parse(R, ["x1_1^2", "x1_1^3*x1_2", "x1_2*x1_3"])
    assert I.to_strings() == ["x1_1^2", "x1_2*x1_3"]
    assert I.contains_exp((2, 5, 0))
    assert not I.contains_exp((1, 1, 0))


def test_borel_prime_and_intersections():
    R = BlockRing([3, 3])
    P = borel_prime(R, (2, 1))
    assert P.to_strings() == ["x1_1", "x1_2", "x2_1"]
    Q = borel_prime(R, (1, 2))
    assert intersect_all(R, [P, Q]) == P.intersect(Q)
    assert intersect_all(R, []).is_unit()
    assert P.is_borel_fixed() and P.intersect(Q).is_borel_fixed()


def test_borel_fixed_detection():
    R = BlockRing([3])
    assert MonomialIdeal.parse(R, ["x1_1^2", "x1_1*x1_2"]).is_borel_fixed()
    assert not MonomialIdeal.parse(R, ["x1_1*x1_2"]).is_borel_fixed()


def test_alexander_dual_example():
    R = BlockRing([4])
    I = MonomialIdeal.parse(R, ["x1_1*x1_2", "x1_2*x1_3", "x1_3*x1_4"])
    assert I.alexander_dual() == MonomialIdeal.parse(R, ["x1_1*x1_3", "x1_2*x1_3", "x1_2*x1_4"])
    with pytest.raises(ValueError):
        MonomialIdeal.parse(R, ["x1_1^2"]).alexander_dual()


def test_dimension_edge_cases():
    R = BlockRing([2, 2])
    assert MonomialIdeal(R, []).codimension() == 0
    assert MonomialIdeal(R, [(0, 0, 0, 0)]).dimension() == -1
    assert MonomialIdeal.parse(R, ["x1_1*x2_1", "x1_2"]).codimension() == 2


def brute_minimal_covers(n, sups):
    covers = [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r) if all(set(c) & s for s in sups)]
    return {c for c in covers if not any(d < c for d in covers)}


@given(squarefree_ideals())
def test_minimal_primes_are_minimal_covers(I):
    expected = brute_minimal_covers(I.ring.nvars, I.supports())
    assert set(minimal_transversals(I.supports())) == expected
    assert {frozenset(P.supports()[k] for k in range(len(P))) for P in I.minimal_primes()} == {
        frozenset(frozenset([v]) for v in c) for c in expected
    }


@given(squarefree_ideals())
def test_alexander_involution(I):
    assert I.alexander_dual().alexander_dual() == I


@given(squarefree_ideals())
def test_squarefree_ideal_is_intersection_of_its_primes(I):
    assert intersect_all(I.ring, I.minimal_primes()) == I


@given(st.data())
def test_lattice_operations(data):
    A = data.draw(monomial_ideals())
    B = data.draw(monomial_ideals(ring=A.ring))
    C = A.intersect(B)
    assert C.is_subset(A) and C.is_subset(B)
    assert A.is_subset(A + B)
    assert (A * B).is_subset(C)
    for k in range(A.ring.nvars):
        Q = A.colon_var(k)
        assert A.is_subset(Q)
        e = [0] * A.ring.nvars
        e[k] = 1
        assert all(A.contains_exp(tuple(a + b for a, b in zip(g, e))) for g in Q.gens)
