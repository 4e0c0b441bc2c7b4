import pytest
from hypothesis import given
from hypothesis import strategies as st

from csgin import GF, GREVLEX, LEX, QQ, BlockRing, TermOrder, weight_order
from csgin.field import parse_field
from csgin.ring import det, elimination_order, maximal_minors, parse_order

from strategies import homogeneous_polys, rings


def test_default_names_and_degrees():
    R = BlockRing([2, 3])
    assert R.names == ("x1_1", "x1_2", "x2_1", "x2_2", "x2_3")
    assert R.degree(R.parse("x1_2^2*x2_3").lead_exp) == (2, 1)
    assert R.offsets == (0, 2)
    assert list(R.block_vars(1)) == [2, 3, 4]


def test_custom_names_keep_family_aliases():
    R = BlockRing([3, 3], ["x1", "x2", "x3", "y1", "y2", "y3"])
    assert R.parse("x2_1") == R.parse("y1")
    assert R.parse("x1_3*x2_2") == R.parse("x3*y2")


def test_parse_and_print_roundtrip():
    R = BlockRing([2, 2], field=QQ)
    f = R.parse("3*x1_1^2*x2_1 - 1/2*x1_1*x1_2*x2_2 + x1_2^2*x2_1")
    assert R.parse(str(f)) == f
    assert f.is_homogeneous() and f.multidegree == (2, 1)


def test_parse_errors_name_the_position():
    R = BlockRing([2])
    with pytest.raises(ValueError, match="unknown variable"):
        R.parse("x1_1*z")
    with pytest.raises(ValueError):
        R.parse("x1_1 +")


def test_fields():
    assert parse_field("Q") is QQ
    assert parse_field("Fp:101").p == 101
    assert parse_field(None) == GF(32003)
    with pytest.raises(ValueError):
        parse_field("R")
    R = BlockRing([1], field=GF(7))
    assert R.parse("8*x1_1") == R.parse("x1_1")


def test_term_orders():
    R = BlockRing([3])
    a, b = R.parse("x1_1*x1_3").lead_exp, R.parse("x1_2^2").lead_exp
    assert GREVLEX.key(3)(b) > GREVLEX.key(3)(a)
    assert LEX.key(3)(a) > LEX.key(3)(b)
    assert weight_order([1, 1, 5]).key(3)(a) > weight_order([1, 1, 5]).key(3)(b)
    elim = elimination_order([2])
    assert elim.key(3)(R.parse("x1_3").lead_exp) > elim.key(3)(R.parse("x1_1^4").lead_exp)
    assert parse_order("lex") == LEX
    with pytest.raises(ValueError):
        TermOrder("weight", weights=(0, 1))


def test_lead_term_and_monic():
    R = BlockRing([3], field=QQ)
    f = R.parse("2*x1_2^2 + 4*x1_1*x1_3")
    assert f.lead_exp == (0, 2, 0)
    assert f.monic() == R.parse("x1_2^2 + 2*x1_1*x1_3")


def test_homogenize_dehomogenize():
    T = BlockRing([2, 1], ["a", "b", "c"], QQ)
    H = T.homogenization
    S = H.target
    assert S.names == ("a", "b", "y1", "c", "y2")
    f = T.parse("a*b + c + 1")
    F = H.homogenize(f)
    assert F.multidegree == (2, 1)
    assert H.dehomogenize(F) == f


def test_det_and_minors():
    R = BlockRing([2, 2], field=QQ)
    X = [[R.gen(0), R.gen(1)], [R.gen(2), R.gen(3)]]
    assert det(X) == R.parse("x1_1*x2_2 - x1_2*x2_1")
    Y = [[R.gen(0), R.gen(1), R.one()], [R.gen(2), R.gen(3), R.zero()]]
    assert len(maximal_minors(Y)) == 3


@given(st.data())
def test_ring_axioms(data):
    R = data.draw(rings())
    f, g, h = (data.draw(homogeneous_polys(R)) for _ in range(3))
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == R.zero()
    assert f * R.one() == f


@given(st.data())
def test_products_of_homogeneous_are_homogeneous(data):
    R = data.draw(rings())
    f, g = data.draw(homogeneous_polys(R)), data.draw(homogeneous_polys(R))
    h = f * g
    if not h.is_zero():
        assert h.is_homogeneous()
        assert h.multidegree == tuple(a + b for a, b in zip(f.multidegree, g.multidegree))


@given(st.data())
def test_print_parse_roundtrip_property(data):
    R = data.draw(rings())
    f = data.draw(homogeneous_polys(R))
    assert R.parse(str(f)) == f
