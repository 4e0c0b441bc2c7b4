import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csgin import GF, QQ, Ideal, LaurentZPoly, eliminate, gin, multidegree
from csgin.closure import (
    LinearSpaceInput,
    basis_degrees,
    compute_VA,
    gin_from_DV,
    jhom_determinantal,
    jhom_saturation,
    jstar,
    matroid_bases,
    multidegree_matroid,
    random_linear_space,
    y_matrix,
)
from csgin.gin import generator
from csgin.homology import reisner_cm
from csgin.verify import CLOSURE6_JHOM, CLOSURE6_JSTAR, CLOSURE6_BASES, CLOSURE6_GIN, closure6_space

from oracles import matroid_bases_bruteforce


@pytest.fixture(scope="module")
def V():
    return closure6_space()


def test_input_validation():
    with pytest.raises(ValueError, match="row 2"):
        LinearSpaceInput.create([1, 1], [[1, 2], [2, 4]], QQ)
    with pytest.raises(ValueError, match="entries"):
        LinearSpaceInput.create([2], [[1, 2, 3]], QQ)
    with pytest.raises(ValueError, match="blocks"):
        LinearSpaceInput.from_json({"basis": [[1]]})


def test_json_roundtrip(V):
    W = LinearSpaceInput.from_json(V.to_json())
    assert W == V


def test_rings(V):
    assert V.S.names == ("x1", "x2", "y1", "x3", "y2", "x4", "x5", "x6", "y3")
    assert V.S.block_sizes == (3, 2, 4)


def test_supported_subspaces(V):
    assert compute_VA(V, [0, 1, 2]) != []
    assert len(compute_VA(V, [0, 2])) == 2
    assert len(compute_VA(V, [1, 2])) == 1
    assert compute_VA(V, [0]) == []
    with pytest.raises(ValueError):
        compute_VA(V, [])


def test_y_matrix_shape(V):
    Y = y_matrix(V, [0, 1, 2])
    assert len(Y) == 3 and len(Y[0]) == 2
    assert str(Y[1][0]) == "-y2"


def test_closure_ideal_both_routes(V):
    expected = Ideal.parse(V.S, CLOSURE6_JHOM)
    assert jhom_saturation(V).equals(expected)
    assert jhom_determinantal(V).equals(expected)


def test_contraction(V):
    assert jstar(V).equals(Ideal.parse(V.T, CLOSURE6_JSTAR))
    J = eliminate(jhom_saturation(V), V.T.homogenization.y_vars)
    assert J.equals(Ideal.parse(J.ring, CLOSURE6_JSTAR))


def test_matroid_data(V):
    assert ["".join(str(j + 1) for j in b) for b in matroid_bases(V)] == CLOSURE6_BASES
    assert matroid_bases(V) == matroid_bases_bruteforce([[int(QQ.convert(x)) for x in r] for r in V.basis])
    assert len(basis_degrees(V)) == 6
    assert set(gin_from_DV(V).to_strings()) == set(CLOSURE6_GIN)


def test_engine_gin_over_prime_field():
    W = closure6_space(GF())
    assert gin(jhom_saturation(W)).gin == gin_from_DV(W)


@st.composite
def spaces(draw, fine=False):
    seed = draw(st.integers(0, 10**6))
    rng = generator(seed, 1)
    n = draw(st.integers(2, 5))
    if fine:
        blocks = [1] * n
    else:
        u = draw(st.integers(1, min(3, n)))
        cuts = sorted(draw(st.sets(st.integers(1, n - 1), min_size=u - 1, max_size=u - 1)))
        edges = [0] + cuts + [n]
        blocks = [b - a for a, b in zip(edges, edges[1:])]
    v = draw(st.integers(1, min(3, n - 1)))
    return random_linear_space(rng, blocks, v, density=draw(st.sampled_from([0.4, 0.7, 1.0])))


@settings(max_examples=20)
@given(spaces())
def test_routes_and_multidegree(W):
    J = jhom_saturation(W)
    assert J.equals(jhom_determinantal(W))
    assert multidegree(J) == multidegree_matroid(W)
    G = gin(J).gin
    assert G == gin_from_DV(W)
    assert G.is_squarefree() and reisner_cm(G)


@settings(max_examples=10)
@given(spaces(fine=True))
def test_fine_grading_is_cs_star(W):
    G = gin(jhom_saturation(W)).gin
    assert G.uses_only(W.S.offsets)


@settings(max_examples=15)
@given(spaces())
def test_contraction_matches_elimination(W):
    J = eliminate(jhom_saturation(W), W.T.homogenization.y_vars)
    js = jstar(W)
    assert J.equals(Ideal(J.ring, [g.rename(J.ring, {k: k for k in range(J.ring.nvars)}) for g in js.gens]))


def test_multidegree_is_multiplicity_free(V):
    assert all(c == 1 for c in multidegree_matroid(V).coeffs.values())
    assert multidegree_matroid(V) == LaurentZPoly.parse(
        "z1^2*z2 + z1^2*z3 + z1*z2*z3 + z1*z3^2 + z2*z3^2 + z3^3", 3
    )
