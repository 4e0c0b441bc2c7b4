"""Binomial edge ideals of graphs and their generic initial ideals."""

from __future__ import annotations

import json
from itertools import combinations, permutations, product
from typing import Iterable

from .field import Field
from .groebner import Ideal
from .monomial import MonomialIdeal, intersect_all
from .ring import BlockRing


class Graph:
    """Simple graph on vertices ``1..n`` (stored 0-based)."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        es = set()
        for e in edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i},{j}}} has a vertex outside 1..{n}")
            es.add((min(i, j) - 1, max(i, j) - 1))
        self.n = n
        self.edges = tuple(sorted(es))
        self.adj = [set() for _ in range(n)]
        for i, j in self.edges:
            self.adj[i].add(j)
            self.adj[j].add(i)

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError('graph JSON needs an object with keys "n" and "edges"')
        return cls(int(data["n"]), data.get("edges", []))

    @classmethod
    def from_edge_list(cls, text: str, n: int | None = None) -> "Graph":
        """Lines ``"i j"``; ``#`` starts a comment.  ``n`` defaults to the largest label."""
        edges = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
                raise ValueError(f"line {lineno}: expected two vertex labels, got {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
        if n is None:
            n = max((max(e) for e in edges), default=1)
        return cls(n, edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i + 1, j + 1] for i, j in self.edges]}

    def __repr__(self):
        return f"Graph({self.n}, {[(i + 1, j + 1) for i, j in self.edges]})"

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def components(self, vertices: Iterable[int]) -> list[set[int]]:
        """Connected components of the induced subgraph (0-based vertices)."""
        left = set(vertices)
        comps = []
        while left:
            v = left.pop()
            comp, stack = {v}, [v]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w in left:
                        left.discard(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components(range(self.n))) == 1

    def simple_paths(self, i: int, j: int):
        """All simple paths from ``i`` to ``j`` as vertex tuples (0-based)."""
        path = [i]
        on_path = {i}

        def dfs(u):
            for w in sorted(self.adj[u]):
                if w == j:
                    yield tuple(path) + (j,)
                elif w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from dfs(w)
                    path.pop()
                    on_path.discard(w)

        yield from dfs(i)

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]`` (0-based permutation)."""
        return Graph(self.n, [(perm[i] + 1, perm[j] + 1) for i, j in self.edges])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def star_graph(leaves: int) -> Graph:
    """Center ``1`` joined to ``leaves`` further vertices."""
    return Graph(leaves + 1, [(1, k) for k in range(2, leaves + 2)])


def connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on ``n`` vertices, one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        es = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        canon = min(
            tuple(sorted(tuple(sorted((p[i], p[j]))) for i, j in es)) for p in permutations(range(n))
        )
        if canon in seen:
            continue
        seen.add(canon)
        G = Graph(n, [(i + 1, j + 1) for i, j in es])
        if G.is_connected():
            out.append(G)
    return out


def edge_ring(n: int, field: Field | None = None) -> BlockRing:
    """``K[x_1..x_n, y_1..y_n]`` with block ``i`` = ``(x_i, y_i)``."""
    names = [nm for i in range(1, n + 1) for nm in (f"x{i}", f"y{i}")]
    return BlockRing([2] * n, names, field)


def binomial_edge_ideal(G: Graph, field: Field | None = None) -> Ideal:
    R = edge_ring(G.n, field)
    x = [R.gen(2 * i) for i in range(G.n)]
    y = [R.gen(2 * i + 1) for i in range(G.n)]
    return Ideal(R, [x[i] * y[j] - x[j] * y[i] for i, j in G.edges])


def path_gin(G: Graph, field: Field | None = None) -> MonomialIdeal:
    """Monomials ``x_i x_j y_{a_1} ... y_{a_v}`` over simple paths ``i, a, j``."""
    R = edge_ring(G.n, field)
    gens = []
    for i in range(G.n):
        for j in range(i + 1, G.n):
            for p in G.simple_paths(i, j):
                e = [0] * R.nvars
                e[2 * i] = e[2 * j] = 1
                for a in p[1:-1]:
                    e[2 * a + 1] = 1
                gens.append(e)
    return MonomialIdeal(R, gens)


def admissible_sets(G: Graph) -> list[frozenset]:
    """``T`` with ``c(G_{T+i}) < c(G_T)`` for every vertex ``i`` outside ``T``."""
    out = []
    for mask in range(1 << G.n):
        T = frozenset(k for k in range(G.n) if mask >> k & 1)
        c = len(G.components(T))
        if all(len(G.components(T | {i})) < c for i in range(G.n) if i not in T):
            out.append(T)
    return out


def gin_minimal_primes(G: Graph, field: Field | None = None) -> list[MonomialIdeal]:
    """Variable primes indexed by an admissible vertex set and one chosen vertex per component."""
    R = edge_ring(G.n, field)
    primes = set()
    for T in admissible_sets(G):
        outside = [v for i in range(G.n) if i not in T for v in (2 * i, 2 * i + 1)]
        for E in product(*[sorted(c) for c in G.components(T)]):
            gens = [[2 * i] for i in T if i not in E] + [[v] for v in outside]
            primes.add(MonomialIdeal.from_supports(R, gens))
    return sorted(primes, key=lambda P: P.to_strings())


def intersect_primes(G: Graph, field: Field | None = None) -> MonomialIdeal:
    return intersect_all(edge_ring(G.n, field), gin_minimal_primes(G, field))
