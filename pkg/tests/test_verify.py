from csgin.gin import gin
from csgin.verify import (
    SuiteResult,
    closure_instances,
    edge_corpus,
    monomial_corpus,
    multiview_instances,
    random_term_orders,
    colon_instances,
)
from csgin.gin import generator


def test_suite_result_bookkeeping():
    r = SuiteResult("k", "title", 1.0)
    r.add("a", True)
    r.add("b", False, instance=[1, 2])
    assert not r.passed
    js = r.to_json()
    assert js["verdict"] == "FAIL" and js["failed"][0]["detail"] == {"instance": [1, 2]}
    assert "elapsed_s" not in js


def test_instance_generators_are_reproducible():
    a, b = closure_instances(4, 5), closure_instances(4, 5)
    assert a == b
    assert all(V.n <= 6 and V.u <= 3 and V.v <= 3 for V in closure_instances(0))
    for A in multiview_instances(0):
        assert A.m <= 3 and A.n <= 5 and max(A.dims) <= 3 and sum(A.dims) > A.n


def test_edge_corpus_contents():
    keys = [k for k, _ in edge_corpus()]
    assert len(keys) == 14 and keys[-4:] == ["P5", "P6", "C5", "K23"]
    assert all(G.n <= 5 for _, G in edge_corpus(max_vertices=5))


def test_random_orders_are_distinct():
    orders = random_term_orders(6, generator(0, 0))
    assert len(set(orders)) == 5


def test_monomial_corpus_is_nontrivial():
    corpus = monomial_corpus()
    assert all(I.is_squarefree() and I.ring.nvars <= 10 for _, I in corpus)
    assert sum(gin(I).gin != I for _, I in corpus) >= len(corpus) // 2


def test_colon_instances_use_products_of_linear_forms():
    for V, J, F in colon_instances(0):
        assert F.is_homogeneous() and 1 <= F.total_degree() <= 2
