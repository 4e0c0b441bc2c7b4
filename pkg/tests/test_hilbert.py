import pytest
from hypothesis import given
from hypothesis import strategies as st

from csgin import BlockRing, Ideal, LaurentZPoly, MonomialIdeal, g_multidegree, k_polynomial, multidegree
from csgin.hilbert import c_polynomial, mdeg_to_mixed_multiplicities, min_part, multiplicity_free

from oracles import hilbert_numerator_box
from strategies import monomial_ideals


def test_laurent_polynomials():
    p = LaurentZPoly.parse("z1^3 + 2*z1*z2 - 1", 2)
    q = LaurentZPoly.parse("z2 - z1", 2)
    assert str(p) == "z1^3 + 2*z1*z2 - 1"
    assert (p * q).component(4) == LaurentZPoly.parse("-z1^4 + z1^3*z2", 2)
    assert p.shift((-1, 0)).min_degree() == -1
    assert not p.shift((-1, 0)).is_polynomial()
    assert LaurentZPoly.one(2) == 1


def test_c_polynomial_of_one_minus():
    K = LaurentZPoly.parse("1 - z1*z2", 2)
    assert c_polynomial(K) == LaurentZPoly.parse("z1 + z2 - z1*z2", 2)
    with pytest.raises(ValueError):
        c_polynomial(K.shift((-1, 0)))


def test_min_part():
    G = LaurentZPoly.parse("z1^2 + z1*z2 + z1^2*z2 - z2^3", 2)
    assert min_part(G) == LaurentZPoly.parse("z1^2 + z1*z2 - z2^3", 2)


def test_segre_minors_multidegree():
    # the diagonal of P^2 x P^2: MDeg = z1^2 + z1 z2 + z2^2
    R = BlockRing([3, 3])
    I = Ideal.parse(R, [f"x1_{a}*x2_{b} - x1_{b}*x2_{a}" for a in range(1, 4) for b in range(a + 1, 4)])
    assert multidegree(I) == LaurentZPoly.parse("z1^2 + z1*z2 + z2^2", 2)
    assert multiplicity_free(multidegree(I))


def test_linear_prime_multidegree():
    R = BlockRing([3, 2])
    I = MonomialIdeal.parse(R, ["x1_1", "x1_2", "x2_1"])
    assert multidegree(I) == LaurentZPoly.parse("z1^2*z2", 2)
    assert g_multidegree(I) == multidegree(I)


def test_mixed_multiplicities():
    md = LaurentZPoly.parse("z1^2*z2 + z1^2*z3 + z1*z2*z3 + z1*z3^2 + z2*z3^2 + z3^3", 3)
    mm = mdeg_to_mixed_multiplicities(md, (3, 2, 4))
    assert mm.values[(0, 0, 3)] == 1
    assert mm.values[(2, 1, 0)] == 1
    assert sorted(mm.values) == [(0, 0, 3), (0, 1, 2), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 1, 0)]
    assert mm.flagged == []
    assert mdeg_to_mixed_multiplicities(LaurentZPoly.parse("z1^3", 1), (3,)).flagged


@given(monomial_ideals())
def test_k_polynomial_matches_hilbert_function(I):
    R = I.ring
    K = k_polynomial(I)
    lcm = [max((g[k] for g in I.gens), default=0) for k in range(R.nvars)]
    box = R.degree(tuple(lcm))
    box = tuple(b + 1 for b in box)
    expected = hilbert_numerator_box(R.block_sizes, I.gens, box)
    got = {e: c for e, c in K.terms()}
    assert got == expected


@given(monomial_ideals())
def test_pivot_heuristics_agree(I):
    assert k_polynomial(I, "most") == k_polynomial(I, "last")


@given(monomial_ideals())
def test_multidegree_is_positive_and_homogeneous(I):
    if I.is_unit() or I.is_zero():
        return
    md = multidegree(I)
    c = I.codimension()
    assert md and all(sum(e) == c and v > 0 for e, v in md.terms())


@given(st.data())
def test_multidegree_additive_on_components(data):
    # two generic linear primes of the same codimension: MDeg(P cap Q) = MDeg(P) + MDeg(Q)
    R = BlockRing([2, 2, 2])
    P = MonomialIdeal.parse(R, ["x1_1", "x2_1"])
    Q = MonomialIdeal.parse(R, ["x2_2", "x3_1"])
    assert multidegree(P.intersect(Q)) == multidegree(P) + multidegree(Q)
