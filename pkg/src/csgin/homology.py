"""Simplicial homology, Hochster-type Betti numbers and local cohomology of
squarefree monomial ideals.

Homology is taken over the coefficient field of the ring the ideal lives in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .field import Field, GF, PrimeField
from .hilbert import LaurentZPoly
from .linalg import rank, rank_mod_p
from .monomial import MonomialIdeal


def _maximal(sets: Iterable[frozenset]) -> tuple[frozenset, ...]:
    cand = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset] = []
    for s in cand:
        if not any(s <= t for t in out):
            out.append(s)
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


class SimplicialComplex:
    """Complex on vertices ``0..n-1`` given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``{∅}`` is the
    complex whose only face is the empty set.
    """

    __slots__ = ("nverts", "facets")

    def __init__(self, nverts: int, facets: Iterable[Iterable[int]]):
        self.nverts = nverts
        fs = [frozenset(f) for f in facets]
        for f in fs:
            if any(not 0 <= v < nverts for v in f):
                raise ValueError(f"facet {sorted(f)} has a vertex out of range")
        self.facets = _maximal(fs)

    @classmethod
    def stanley_reisner(cls, I: MonomialIdeal) -> "SimplicialComplex":
        """Faces are the supports of squarefree monomials outside ``I``."""
        if not I.is_squarefree():
            raise ValueError("Stanley-Reisner complex needs a squarefree monomial ideal")
        V = frozenset(range(I.ring.nvars))
        return cls(I.ring.nvars, [V - C for C in I.minimal_covers()])

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and (self.nverts, self.facets) == (other.nverts, other.facets)

    def __hash__(self):
        return hash((self.nverts, self.facets))

    def __repr__(self):
        return f"SimplicialComplex({self.nverts}, {[sorted(f) for f in self.facets]})"

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """``max |F| - 1``; ``-1`` for ``{∅}`` and ``-2`` for the void complex."""
        return max((len(f) for f in self.facets), default=-1) - 1 if self.facets else -2

    def contains(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, set] = {}
        for F in self.facets:
            s = sorted(F)
            for k in range(len(s) + 1):
                out.setdefault(k - 1, set()).update(combinations(s, k))
        return {d: sorted(v) for d, v in sorted(out.items())}

    def induced(self, subset) -> "SimplicialComplex":
        W = frozenset(subset)
        if self.is_void():
            return self
        return SimplicialComplex(self.nverts, [f & W for f in self.facets])

    def link(self, face) -> "SimplicialComplex":
        F = frozenset(face)
        return SimplicialComplex(self.nverts, [f - F for f in self.facets if F <= f])


def _boundary_rank(rows: list, cols: list, field: Field) -> int:
    if not rows or not cols:
        return 0
    index = {f: i for i, f in enumerate(rows)}
    if isinstance(field, PrimeField) and field.p < 2**31:
        A = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for j, t in enumerate(cols):
            for k in range(len(t)):
                A[index[t[:k] + t[k + 1:]], j] = 1 if k % 2 == 0 else -1
        return rank_mod_p(A, field.p)
    M = [[0] * len(cols) for _ in rows]
    for j, t in enumerate(cols):
        for k in range(len(t)):
            M[index[t[:k] + t[k + 1:]]][j] = 1 if k % 2 == 0 else -1
    return rank(M, field)


@lru_cache(maxsize=65536)
def _homology(facets: tuple, nverts: int, field: Field) -> tuple[int, ...]:
    D = SimplicialComplex(nverts, facets)
    if D.is_void():
        return ()
    faces = D.faces()
    top = D.dimension
    ranks = {k: _boundary_rank(faces.get(k - 1, []), faces.get(k, []), field) for k in range(0, top + 1)}
    out = []
    for k in range(-1, top + 1):
        out.append(len(faces.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return tuple(out)


def reduced_homology_ranks(D: SimplicialComplex, field: Field | None = None) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ..., dim H~_{dim D}]``; empty for the void complex."""
    return list(_homology(D.facets, D.nverts, field or GF()))


def reduced_homology(D: SimplicialComplex, i: int, field: Field | None = None) -> int:
    ranks = reduced_homology_ranks(D, field)
    return ranks[i + 1] if 0 <= i + 1 < len(ranks) else 0


@dataclass
class BettiTable:
    """Multigraded Betti numbers ``(i, support) -> beta_{i,support}`` of an ideal."""

    nvars: int
    multigraded: dict = field(default_factory=dict)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, s), b in self.multigraded.items():
            out[(i, len(s))] = out.get((i, len(s)), 0) + b
        return dict(sorted(out.items()))

    def get(self, i: int, j: int) -> int:
        return self.graded().get((i, j), 0)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), b in self.graded().items():
            out[i] = out.get(i, 0) + b
        return out

    def regularity(self) -> int | None:
        return max((j - i for i, j in self.graded()), default=None)

    def projective_dimension(self) -> int | None:
        return max((i for i, _ in self.graded()), default=None)

    def extremal(self) -> dict[tuple[int, int], int]:
        """Nonzero ``beta_{i,j}`` with ``beta_{k,l} = 0`` whenever ``k >= i``,
        ``l - k >= j - i`` and ``(k, l) != (i, j)``."""
        g = self.graded()
        out = {}
        for (i, j), b in g.items():
            if not any((k, l) != (i, j) and k >= i and l - k >= j - i for k, l in g):
                out[(i, j)] = b
        return out

    def k_polynomial(self, ring) -> LaurentZPoly:
        """``K(S/I) = 1 - sum_{i,a} (-1)^i beta_{i,a}(I) z^{deg a}``."""
        n = ring.nblocks
        out: dict = {(0,) * n: 1}
        for (i, s), b in self.multigraded.items():
            deg = [0] * n
            for k in s:
                deg[ring.block_of[k]] += 1
            deg = tuple(deg)
            out[deg] = out.get(deg, 0) - (-1) ** i * b
        return LaurentZPoly(n, out)


def lcm_lattice(I: MonomialIdeal) -> set[frozenset]:
    """Supports of lcms of nonempty subsets of generators."""
    seen: set[frozenset] = set()
    for s in I.supports():
        new = {s} | {s | t for t in seen}
        seen |= new
    return seen


def betti_squarefree(I: MonomialIdeal, method: str = "dual") -> BettiTable:
    """Betti numbers of a squarefree monomial ideal from simplicial homology.

    ``method="direct"`` reads ``beta_{i,s}`` off the induced subcomplex on
    ``s``; ``method="dual"`` reads it off the link of the complement of ``s``
    in the complex of the Alexander dual.
    """
    if not I.is_squarefree():
        raise ValueError("Betti numbers via homology need a squarefree monomial ideal")
    N = I.ring.nvars
    F = I.ring.field
    table = BettiTable(N)
    if I.is_zero():
        return table
    V = frozenset(range(N))
    if method == "direct":
        if I.is_unit():
            table.multigraded[(0, frozenset())] = 1
            return table
        D = SimplicialComplex.stanley_reisner(I)
        for s in lcm_lattice(I):
            ranks = reduced_homology_ranks(D.induced(s), F)
            for k, r in enumerate(ranks):
                i = len(s) - (k - 1) - 2
                if r and i >= 0:
                    table.multigraded[(i, s)] = r
    elif method == "dual":
        Dstar = SimplicialComplex.stanley_reisner(I.alexander_dual())
        for s in lcm_lattice(I):
            ranks = reduced_homology_ranks(Dstar.link(V - s), F)
            for k, r in enumerate(ranks):
                if r:
                    table.multigraded[(k, s)] = r
    else:
        raise ValueError(f"unknown method {method!r}")
    table.multigraded = dict(sorted(table.multigraded.items(), key=lambda t: (t[0][0], sorted(t[0][1]))))
    return table


def local_cohomology_hilbert(I: MonomialIdeal, i: int, degree: int, dual_betti: BettiTable | None = None) -> int:
    """``dim H^i_m(S/I)`` in the given ``Z``-degree.

    Zero in positive degrees; ``beta_{i,N}(I*)`` in degree 0; in degree ``-j``
    the sum over ``v`` of ``C(j-1, v-1) beta_{i-v, N-v}(I*)``.
    """
    if not I.is_squarefree():
        raise ValueError("local cohomology formula needs a squarefree monomial ideal")
    if degree > 0:
        return 0
    N = I.ring.nvars
    B = dual_betti if dual_betti is not None else betti_squarefree(I.alexander_dual())
    g = B.graded()
    if degree == 0:
        return g.get((i, N), 0)
    j = -degree
    return sum(comb(j - 1, v - 1) * g.get((i - v, N - v), 0) for v in range(1, min(i, j) + 1))


def local_cohomology_table(I: MonomialIdeal, degrees: Iterable[int]) -> dict[tuple[int, int], int]:
    """Nonzero ``dim H^i_m(S/I)_d`` for ``0 <= i <= N`` and ``d`` in ``degrees``."""
    B = betti_squarefree(I.alexander_dual())
    out = {}
    for i in range(I.ring.nvars + 1):
        for d in degrees:
            v = local_cohomology_hilbert(I, i, d, B)
            if v:
                out[(i, d)] = v
    return out


@dataclass
class HomologicalInvariants:
    regularity: int | None
    projective_dimension: int | None
    extremal: dict


def homological_invariants(I: MonomialIdeal) -> HomologicalInvariants:
    """Regularity, projective dimension and extremal Betti numbers of ``I``."""
    B = betti_squarefree(I)
    return HomologicalInvariants(B.regularity(), B.projective_dimension(), B.extremal())


def reisner_cm(I: MonomialIdeal) -> bool:
    """Reisner's criterion: every link has vanishing reduced homology below its dimension."""
    D = SimplicialComplex.stanley_reisner(I)
    if D.is_void():
        return True
    F = I.ring.field
    seen = set()
    for faces in D.faces().values():
        for face in faces:
            L = D.link(face)
            if L.facets in seen:
                continue
            seen.add(L.facets)
            ranks = reduced_homology_ranks(L, F)
            if any(ranks[k + 1] for k in range(-1, L.dimension)):
                return False
    return True


@dataclass
class GinComparison:
    ideal: list
    gin: list
    window: tuple[int, int]
    table_ideal: dict
    table_gin: dict
    extremal_ideal: dict
    extremal_gin: dict
    cohomology_equal: bool
    extremal_equal: bool

    @property
    def passed(self) -> bool:
        return self.cohomology_equal and self.extremal_equal

    def to_json(self) -> dict:
        def enc(t):
            return {f"{a},{b}": v for (a, b), v in sorted(t.items())}

        return {
            "ideal": self.ideal,
            "gin": self.gin,
            "window": list(self.window),
            "local_cohomology_ideal": enc(self.table_ideal),
            "local_cohomology_gin": enc(self.table_gin),
            "extremal_ideal": enc(self.extremal_ideal),
            "extremal_gin": enc(self.extremal_gin),
            "cohomology_equal": self.cohomology_equal,
            "extremal_equal": self.extremal_equal,
        }


def conjecture_check_monomial(I: MonomialIdeal, seeds=(1, 2, 3)) -> GinComparison:
    """Compare local cohomology and extremal Betti numbers of ``I`` and ``gin(I)``.

    Tables are compared on the window ``[-(N + pd), pd]``.  Everything above
    degree 0 vanishes, and for ``j >= 1`` the value in degree ``-j`` is a
    polynomial in ``j`` of degree below ``N``, so agreement on the ``N + pd``
    negative degrees of the window forces agreement in every degree.
    """
    from .gin import gin

    if not I.is_squarefree():
        raise ValueError("the ideal must be squarefree")
    J = gin(I, seeds=seeds).gin
    if not J.is_squarefree():
        raise ValueError("the ideal is not Cartwright-Sturmfels (its gin is not squarefree)")
    N = I.ring.nvars
    hi, hj = homological_invariants(I), homological_invariants(J)
    pd = max(hi.projective_dimension or 0, hj.projective_dimension or 0)
    window = (-(N + pd), pd)
    degrees = range(window[0], window[1] + 1)
    ti = local_cohomology_table(I, degrees)
    tj = local_cohomology_table(J, degrees)
    return GinComparison(
        I.to_strings(),
        J.to_strings(),
        window,
        ti,
        tj,
        hi.extremal,
        hj.extremal,
        ti == tj,
        hi.extremal == hj.extremal,
    )
