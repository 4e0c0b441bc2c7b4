"""Acceptance suites: golden replays and randomized property runs.

Every suite returns a :class:`SuiteResult` whose checks carry a small JSON
payload; failing checks carry the offending instance.  Random instances are
drawn from Philox streams keyed by ``(seed, stream)`` so reruns reproduce.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .closure import (
    LinearSpaceInput,
    basis_degrees,
    gin_from_DV,
    jhom_determinantal,
    jhom_saturation,
    jstar,
    matroid_bases,
    multidegree_matroid,
    random_linear_space,
)
from .edge import (
    Graph,
    binomial_edge_ideal,
    complete_bipartite,
    connected_graphs,
    cycle_graph,
    gin_minimal_primes,
    intersect_primes,
    path_gin,
    path_graph,
)
from .field import QQ, GF
from .gin import gin, generator, is_CS, is_CS_star
from .groebner import Ideal, colon, eliminate
from .hilbert import LaurentZPoly, g_multidegree, k_polynomial, multidegree
from .homology import betti_squarefree, conjecture_check_monomial, homological_invariants, reisner_cm
from .monomial import MonomialIdeal
from .multiview import (
    generic_camera_system,
    generic_matrix_minors,
    is_CS_multiview,
    multiview_segre_route,
    multiview_star_route,
    normalized_camera_system,
    random_camera_system,
)
from .ring import GREVLEX, BlockRing, TermOrder, weight_order


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "verdict": "PASS" if self.passed else "FAIL"}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteResult:
    key: str
    title: str
    limit: float
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def within_time(self) -> bool:
        return self.elapsed <= self.limit

    @property
    def passed(self) -> bool:
        return self.within_time and all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self, timing: bool = False, verbose: bool = False) -> dict:
        out = {
            "suite": self.key,
            "title": self.title,
            "verdict": "PASS" if self.passed else "FAIL",
            "checks": len(self.checks),
            "failed": [c.to_json() for c in self.failures()],
        }
        if verbose:
            out["all_checks"] = [c.to_json() for c in self.checks]
        if timing or not self.within_time:
            out["elapsed_s"] = round(self.elapsed, 3)
            out["limit_s"] = self.limit
        return out


def _strs(I) -> list[str]:
    if isinstance(I, MonomialIdeal):
        return I.to_strings()
    return [str(g) for g in I.gens]


# ---------------------------------------------------------------------------
# golden instances

def block33_ideal(field=None) -> Ideal:
    R = BlockRing([3, 3], ["x1", "x2", "x3", "y1", "y2", "y3"], field or QQ)
    return Ideal.parse(R, ["x1*y1", "x2*y2", "x3*y2", "x2*y3", "x3*y3"])


BLOCK33_GIN = ["x1*y1", "x2*y1", "x1*y2", "x2*y2", "x3*y1", "x1*x2*y3", "x1^2*y3"]
BLOCK33_MDEG = "z1^3 + z1^2*z2 + z1*z2^2 + z2^3"


def closure6_space(field=None) -> LinearSpaceInput:
    return LinearSpaceInput.create(
        [2, 1, 3], [[1, 1, 0, 0, 0, 1], [0, 1, -1, 0, 1, 0], [0, 0, 1, 1, 0, 0]], field or QQ
    )


CLOSURE6_JHOM = [
    "x4*y2 + x3*y3",
    "x6*y1 + x1*y3 + x2*y3",
    "x4*y1 + x5*y1 + x2*y3",
    "x1*x4 + x2*x4 + x1*x5 + x2*x5 - x2*x6",
]
CLOSURE6_JSTAR = ["(x1 + x2)*(x4 + x5) - x2*x6"]
CLOSURE6_BASES = ["123", "124", "134", "135", "145", "234", "235", "236", "245", "246", "346", "356", "456"]
CLOSURE6_DEGREES = [(2, 1, 0), (2, 0, 1), (1, 1, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)]
CLOSURE6_MDEG = "z1^2*z2 + z1^2*z3 + z1*z2*z3 + z1*z3^2 + z2*z3^2 + z3^3"
CLOSURE6_GIN = ["x1*x4", "x2*x4", "x3*x4", "x1*x5", "x2*x3*x5", "x1*x3*x6"]


def edge_corpus(max_vertices: int | None = None) -> list[tuple[str, Graph]]:
    out = []
    for n in range(1, 5):
        for k, G in enumerate(connected_graphs(n)):
            out.append((f"connected{n}.{k + 1}", G))
    out += [("P5", path_graph(5)), ("P6", path_graph(6)), ("C5", cycle_graph(5)), ("K23", complete_bipartite(2, 3))]
    if max_vertices is not None:
        out = [(k, G) for k, G in out if G.n <= max_vertices]
    return out


def random_term_orders(nvars: int, rng, count: int = 5) -> list[TermOrder]:
    orders = []
    for k in range(count):
        if k % 2 == 0:
            orders.append(weight_order([int(w) for w in rng.integers(1, 20, nvars)]))
        else:
            orders.append(TermOrder("lex", perm=tuple(int(v) for v in rng.permutation(nvars))))
    return orders


def random_blocks(rng, n: int, u: int) -> list[int]:
    cuts = sorted(int(c) for c in rng.choice(range(1, n), size=u - 1, replace=False)) if u > 1 else []
    edges = [0] + cuts + [n]
    return [b - a for a, b in zip(edges, edges[1:])]


def closure_instances(seed: int, count: int = 20) -> list[LinearSpaceInput]:
    rng = generator(seed, 105)
    out = []
    for _ in range(count):
        n = int(rng.integers(3, 7))
        u = int(rng.integers(2, 4))
        v = int(rng.integers(2, 4))
        out.append(random_linear_space(rng, random_blocks(rng, n, u), v))
    return out


def cs_star_instances(seed: int, count: int = 10) -> list[LinearSpaceInput]:
    rng = generator(seed, 106)
    out = []
    for _ in range(count):
        n = int(rng.integers(3, 7))
        v = int(rng.integers(2, 4))
        out.append(random_linear_space(rng, [1] * n, v))
    return out


def multiview_instances(seed: int, count: int = 10):
    rng = generator(seed, 107)
    out = []
    while len(out) < count:
        m = int(rng.integers(2, 4))
        n = int(rng.integers(2, 6))
        dims = [int(d) for d in rng.integers(1, min(3, n) + 1, m)]
        if sum(dims) <= n:
            continue
        out.append(random_camera_system(rng, dims, n))
    return out


# ---------------------------------------------------------------------------
# suites

def suite_block33(seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("block33", "Block (3,3) replay", 1.0)
    I = block33_ideal()
    expected = MonomialIdeal.parse(I.ring, BLOCK33_GIN)
    g = gin(I, seeds=seeds)
    res.add("gin", g.gin == expected, expected=expected.to_strings(), got=g.gin.to_strings())
    target = LaurentZPoly.parse(BLOCK33_MDEG, 2)
    md, gd = multidegree(I), g_multidegree(I)
    res.add("MDeg", md == target, got=str(md))
    res.add("GDeg", gd == target, got=str(gd))
    res.add("not CS", not is_CS(I, seeds=seeds))
    return res


def suite_closure6() -> SuiteResult:
    res = SuiteResult("closure6", "Linear closure replay", 5.0)
    V = closure6_space()
    expected = Ideal.parse(V.S, CLOSURE6_JHOM)
    sat, det = jhom_saturation(V), jhom_determinantal(V)
    res.add("saturation route", sat.equals(expected), got=_strs(sat))
    res.add("determinantal route", det.equals(expected), got=_strs(det))
    js = jstar(V)
    res.add("contraction", js.equals(Ideal.parse(V.T, CLOSURE6_JSTAR)), got=_strs(js))
    elim = eliminate(sat, V.T.homogenization.y_vars)
    res.add("contraction by elimination", elim.equals(Ideal.parse(elim.ring, CLOSURE6_JSTAR)), got=_strs(elim))
    return res


def suite_closure6_matroid(seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("closure6-matroid", "Matroid replay", 30.0)
    V = closure6_space()
    bases = ["".join(str(j + 1) for j in b) for b in matroid_bases(V)]
    res.add("matroid bases", bases == CLOSURE6_BASES, got=bases)
    D = basis_degrees(V)
    res.add("basis degrees", sorted(D) == sorted(CLOSURE6_DEGREES), got=[list(d) for d in D])
    res.add("MDeg", multidegree_matroid(V) == LaurentZPoly.parse(CLOSURE6_MDEG, 3), got=str(multidegree_matroid(V)))
    expected = MonomialIdeal.parse(V.S, CLOSURE6_GIN)
    G = gin_from_DV(V)
    res.add("gin from basis degrees", G == expected, got=G.to_strings())
    Vp = closure6_space(GF())
    J = jhom_saturation(Vp)
    g = gin(J, seeds=seeds).gin
    res.add("engine gin", g == gin_from_DV(Vp), got=g.to_strings())
    res.add("Hilbert-series MDeg", multidegree(J) == LaurentZPoly.parse(CLOSURE6_MDEG, 3), got=str(multidegree(J)))
    return res


def suite_binomial_edge(seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("edge", "Binomial edge ideals: path gin", 300.0)
    rng = generator(seed, 104)
    for key, G in edge_corpus():
        J = binomial_edge_ideal(G)
        pg = path_gin(G)
        g = gin(J, seeds=seeds).gin
        res.add(f"{key}: engine gin = path gin", g == pg, graph=G.to_json(), engine=g.to_strings(), path=pg.to_strings())
        res.add(f"{key}: squarefree", pg.is_squarefree())
        res.add(f"{key}: primes intersect to path gin", intersect_primes(G) == pg, graph=G.to_json())
        reg = homological_invariants(pg).regularity
        res.add(f"{key}: reg <= n", reg is None or reg <= G.n, reg=reg)
        for order in random_term_orders(J.ring.nvars, rng):
            ini = J.initial_ideal(order)
            res.add(f"{key}: in_{order} squarefree", ini.is_squarefree(), initial=ini.to_strings())
    return res


def suite_closure_random(seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("closure-random", "Linear closures: random spaces", 600.0)
    for k, V in enumerate(closure_instances(seed)):
        tag = f"V{k + 1}"
        info = V.to_json()
        sat, det = jhom_saturation(V), jhom_determinantal(V)
        res.add(f"{tag}: saturation = determinantal", sat.equals(det), space=info)
        md = multidegree(sat)
        res.add(f"{tag}: MDeg = matroid multidegree", md == multidegree_matroid(V), space=info, got=str(md))
        g = gin(sat, seeds=seeds).gin
        res.add(f"{tag}: CS", g.is_squarefree(), space=info, gin=g.to_strings())
        res.add(f"{tag}: gin = gin from basis degrees", g == gin_from_DV(V), space=info, gin=g.to_strings())
        res.add(f"{tag}: Reisner CM", g.is_squarefree() and reisner_cm(g), space=info)
    return res


def suite_cs_star(seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("closure-fine", "Linear closures, fine grading: CS*", 120.0)
    for k, V in enumerate(cs_star_instances(seed)):
        J = jhom_saturation(V)
        res.add(f"W{k + 1}: CS*", is_CS_star(J, seeds=seeds), space=V.to_json(), gin=gin(J, seeds=seeds).gin.to_strings())
    return res


def suite_multiview(seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("multiview", "Multiview ideals", 600.0)
    for k, A in enumerate(multiview_instances(seed)):
        star, segre = multiview_star_route(A), multiview_segre_route(A)
        res.add(f"A{k + 1}: routes agree", star.equals(segre), system=A.to_json())
        res.add(f"A{k + 1}: CS", is_CS(star, seeds=seeds), system=A.to_json())
    rng = generator(seed, 108)
    for m, d in [(2, 2), (2, 3), (3, 3)]:
        N = normalized_camera_system(m, d)
        R = N.ring
        star = multiview_star_route(N)
        res.add(f"normalized ({m},{d}): maximal minors", star.equals(Ideal(R, generic_matrix_minors(R, m, d))), got=_strs(star))
        A, expected = generic_camera_system(m, d, rng)
        star = multiview_star_route(A)
        res.add(f"generic ({m},{d}): star route", star.equals(expected), system=A.to_json())
        if (m, d) != (3, 3):
            res.add(f"generic ({m},{d}): Segre route", multiview_segre_route(A).equals(expected), system=A.to_json())
        res.add(f"generic ({m},{d}): CS", is_CS(star, seeds=seeds))
    return res


def _swap_within_blocks(J: MonomialIdeal) -> MonomialIdeal:
    """Reverse the variable order inside every block (a graded coordinate change)."""
    R = J.ring
    perm = {}
    for b in range(R.nblocks):
        vs = list(R.block_vars(b))
        for a, c in zip(vs, reversed(vs)):
            perm[a] = c
    return J.rename(R, perm)


def monomial_corpus(seed: int = 0, max_vars: int = 10) -> list[tuple[str, MonomialIdeal]]:
    """Squarefree monomial ideals from the families above, expected to be CS."""
    out = []

    def push(key, I):
        if I.ring.nvars <= max_vars and I.is_squarefree():
            out.append((key, I))

    for key, G in edge_corpus(max_vertices=5):
        J = binomial_edge_ideal(G)
        push(f"edge {key}: in", J.initial_ideal())
        push(f"edge {key}: swapped path gin", _swap_within_blocks(path_gin(G)))
    for k, V in enumerate(closure_instances(seed)):
        J = jhom_saturation(V)
        push(f"closure V{k + 1}: in", J.initial_ideal())
        push(f"closure V{k + 1}: swapped gin", _swap_within_blocks(gin_from_DV(V)))
    for k, V in enumerate(cs_star_instances(seed)):
        push(f"fine W{k + 1}: in", jhom_saturation(V).initial_ideal())
    for k, A in enumerate(multiview_instances(seed)):
        push(f"multiview A{k + 1}: in", multiview_star_route(A).initial_ideal())
    V = closure6_space(GF())
    push("example 3.8: in", jhom_saturation(V).initial_ideal())
    push("example 3.8: swapped gin", _swap_within_blocks(gin_from_DV(V)))
    return out


def suite_local_cohomology(seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("local-cohomology", "Local cohomology and extremal Betti numbers: I vs gin(I)", 600.0)
    for key, I in monomial_corpus(seed):
        rep = conjecture_check_monomial(I, seeds=seeds)
        res.add(f"{key}: local cohomology", rep.cohomology_equal, ideal=rep.ideal, gin=rep.gin,
                ideal_table=rep.to_json()["local_cohomology_ideal"], gin_table=rep.to_json()["local_cohomology_gin"])
        res.add(f"{key}: extremal Betti", rep.extremal_equal, ideal=rep.ideal,
                ideal_extremal=rep.to_json()["extremal_ideal"], gin_extremal=rep.to_json()["extremal_gin"])
    I = block33_ideal(GF()).initial_ideal()
    try:
        conjecture_check_monomial(I, seeds=seeds)
        rejected = False
    except ValueError:
        rejected = True
    res.add("non-CS ideal rejected", rejected)
    return res


def random_squarefree(rng, ring: BlockRing, ngens: int, maxdeg: int = 3) -> MonomialIdeal:
    gens = []
    for _ in range(ngens):
        k = int(rng.integers(1, maxdeg + 1))
        gens.append(sorted(int(v) for v in rng.choice(ring.nvars, size=min(k, ring.nvars), replace=False)))
    return MonomialIdeal.from_supports(ring, gens)


def colon_instances(seed: int, count: int = 10):
    """``(J, F)`` with ``J`` a closure ideal and ``F`` a product of at most two graded linear forms."""
    rng = generator(seed, 109)
    out = []
    for V in closure_instances(seed + 1, count):
        S = V.S
        J = jhom_saturation(V)
        F = S.one()
        for _ in range(int(rng.integers(1, 3))):
            b = int(rng.integers(0, S.nblocks))
            form = S.zero()
            for k in S.block_vars(b):
                form = form + S.gen(k).scale(int(rng.integers(1, S.field.p)))
            F = F * form
        out.append((V, J, F))
    return out


def below_one(deg) -> bool:
    return all(a <= 1 for a in deg) and any(a < 1 for a in deg)


def suite_cross_formula(seed: int = 0) -> SuiteResult:
    res = SuiteResult("cross", "Cross-formula properties", 300.0)
    rng = generator(seed, 110)
    for k in range(20):
        n = int(rng.integers(2, 8))
        R = BlockRing(random_blocks(rng, n, int(rng.integers(1, min(3, n) + 1))))
        I = random_squarefree(rng, R, int(rng.integers(1, 6)))
        info = {"blocks": list(R.block_sizes), "ideal": I.to_strings()}
        direct, dual = betti_squarefree(I, "direct"), betti_squarefree(I, "dual")
        res.add(f"M{k + 1}: K-polynomial = Betti alternating sum", direct.k_polynomial(R) == k_polynomial(I), **info)
        res.add(f"M{k + 1}: dual Hochster = direct Hochster", direct.multigraded == dual.multigraded, **info)
        res.add(f"M{k + 1}: Alexander dual involution", I.alexander_dual().alexander_dual() == I, **info)
    for k, (V, J, F) in enumerate(colon_instances(seed)):
        Q = colon(J, F)
        J1 = [g for g in Q.gens if below_one(Q.ring.degree(g.lead_exp))]
        res.add(f"T{k + 1}: J:F = J + J_1", Q.equals(Ideal(J.ring, J.gens + tuple(J1))), space=V.to_json(), F=str(F))
    return res


SUITES = {
    "1": ("block33", suite_block33),
    "2": ("closure6", suite_closure6),
    "3": ("closure6-matroid", suite_closure6_matroid),
    "4": ("edge", suite_binomial_edge),
    "5": ("closure-random", suite_closure_random),
    "6": ("closure-fine", suite_cs_star),
    "7": ("multiview", suite_multiview),
    "8": ("local-cohomology", suite_local_cohomology),
    "9": ("cross", suite_cross_formula),
}


def run_suite(number: str, seed: int = 0, seeds=(1, 2, 3)) -> SuiteResult:
    _, fn = SUITES[number]
    t0 = time.perf_counter()
    if fn in (suite_closure6,):
        res = fn()
    elif fn in (suite_block33, suite_closure6_matroid):
        res = fn(seeds=seeds)
    elif fn is suite_cross_formula:
        res = fn(seed)
    else:
        res = fn(seed, seeds=seeds)
    res.elapsed = time.perf_counter() - t0
    return res


def run_all(seed: int = 0, seeds=(1, 2, 3), only=None) -> list[SuiteResult]:
    return [run_suite(k, seed, seeds) for k in SUITES if only is None or k in only]
