"""Multigraded closures of linear spaces.

A space ``V`` of linear forms in ``T = K[x_1..x_n]`` (blocks of consecutive
variables) is homogenized in ``S = T[y_1..y_u]``, where ``y_i`` joins block
``i`` after its ``x`` variables.  The homogenized closure ideal is computed
both as a colon of maximal minors and as a sum of minor ideals indexed by
subsets of blocks; its contraction to ``T`` is the largest multigraded ideal
inside the ideal generated by the forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .field import Field, GF, parse_field
from .groebner import Ideal, colon
from .hilbert import LaurentZPoly
from .linalg import left_kernel, rank, row_reduce
from .monomial import MonomialIdeal, borel_prime, intersect_all
from .ring import BlockRing, MultiPoly, maximal_minors


@dataclass(frozen=True)
class LinearSpaceInput:
    """Basis matrix of ``V`` (rows = linear forms) and the block sizes of ``T``."""

    blocks: tuple[int, ...]
    basis: tuple[tuple, ...]
    field: Field

    def __post_init__(self):
        n = sum(self.blocks)
        if any(len(r) != n for r in self.basis):
            raise ValueError(f"every basis row needs {n} entries (one per variable)")
        kept = []
        for idx, row in enumerate(self.basis):
            kept.append(row)
            if rank(kept, self.field) < len(kept):
                raise ValueError(f"basis is rank deficient: row {idx + 1} lies in the span of the previous rows")

    @classmethod
    def create(cls, blocks: Sequence[int], basis, field: Field | None = None) -> "LinearSpaceInput":
        F = field or GF()
        rows = tuple(tuple(F.convert(x) for x in r) for r in basis)
        return cls(tuple(int(b) for b in blocks), rows, F)

    @classmethod
    def from_json(cls, data, field: Field | None = None) -> "LinearSpaceInput":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "blocks" not in data or "basis" not in data:
            raise ValueError('linear space JSON needs keys "blocks" and "basis"')
        F = field or parse_field(data.get("field"))
        return cls.create(data["blocks"], data["basis"], F)

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks), "basis": [[str(x) for x in r] for r in self.basis], "field": self.field.to_json()}

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def v(self) -> int:
        return len(self.basis)

    @property
    def u(self) -> int:
        return len(self.blocks)

    @property
    def T(self) -> BlockRing:
        return BlockRing(self.blocks, [f"x{k + 1}" for k in range(self.n)], self.field)

    @property
    def S(self) -> BlockRing:
        return self.T.homogenization.target

    def column_block(self, j: int) -> int:
        return self.T.block_of[j]

    def forms(self) -> list[MultiPoly]:
        return [row_form(self.T, r) for r in self.basis]


def row_form(T: BlockRing, row) -> MultiPoly:
    terms = {}
    for k, c in enumerate(row):
        if c:
            e = [0] * T.nvars
            e[k] = 1
            terms[tuple(e)] = c
    return MultiPoly(T, terms)


def compute_VA(V: LinearSpaceInput, A) -> list[tuple]:
    """Basis (reduced row echelon) of the forms in ``V`` supported on the blocks ``A``.

    ``A`` holds 0-based block indices.
    """
    A = set(A)
    if not A:
        raise ValueError("A must be nonempty")
    F = V.field
    outside = [j for j in range(V.n) if V.column_block(j) not in A]
    if outside:
        combos = left_kernel([[r[j] for j in outside] for r in V.basis], F)
    else:
        combos = [[F.one if i == k else F.zero for k in range(V.v)] for i in range(V.v)]
    if not combos:
        return []
    vecs = [[_dot(c, [r[j] for r in V.basis], F) for j in range(V.n)] for c in combos]
    R, pivots, _ = row_reduce(vecs, F, V.n)
    return [tuple(r) for r in R[: len(pivots)]]


def _dot(c, col, F):
    acc = F.zero
    for a, b in zip(c, col):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def block_components(V: LinearSpaceInput, row, A: Sequence[int]) -> list[MultiPoly]:
    """Graded pieces of the form ``row`` in the blocks of ``A``, as elements of ``S``."""
    T = V.T
    H = T.homogenization
    out = []
    for b in A:
        piece = [c if V.column_block(j) == b else 0 for j, c in enumerate(row)]
        out.append(H.embed(row_form(T, piece)))
    return out


def y_matrix(V: LinearSpaceInput, A: Sequence[int]) -> list[list[MultiPoly]]:
    """``k x (k-1)`` bidiagonal matrix: ``y_{A_r}`` at ``(r, r)``, ``-y_{A_{r+1}}`` at ``(r+1, r)``."""
    S = V.S
    ys = [S.gen(V.T.homogenization.y_vars[b]) for b in A]
    k = len(A)
    Y = [[S.zero() for _ in range(k - 1)] for _ in range(k)]
    for r in range(k - 1):
        Y[r][r] = ys[r]
        Y[r + 1][r] = -ys[r + 1]
    return Y


def m_matrix(V: LinearSpaceInput, A: Sequence[int], basis=None) -> list[list[MultiPoly]]:
    """Rows indexed by ``A``; column ``q`` holds the graded pieces of the ``q``-th form supported on ``A``."""
    basis = compute_VA(V, A) if basis is None else basis
    cols = [block_components(V, r, A) for r in basis]
    return [[cols[q][r] for q in range(len(cols))] for r in range(len(A))]


def x_matrix(V: LinearSpaceInput, A: Sequence[int], basis=None) -> list[list[MultiPoly]]:
    Y = y_matrix(V, A)
    M = m_matrix(V, A, basis)
    return [Y[r] + M[r] for r in range(len(A))]


def _nonempty_subsets(u: int):
    for k in range(1, u + 1):
        yield from combinations(range(u), k)


def jhom_saturation(V: LinearSpaceInput) -> Ideal:
    """Maximal minors of the full block matrix, divided out by the product of the ``y`` variables (one colon)."""
    S = V.S
    A = list(range(V.u))
    minors = maximal_minors(x_matrix(V, A, [tuple(r) for r in V.basis]))
    I = Ideal(S, minors)
    ys = S.one()
    for y in V.T.homogenization.y_vars:
        ys = ys * S.gen(y)
    return colon(I, ys)


def minors_sum(V: LinearSpaceInput, which: str = "X", bases: dict | None = None) -> Ideal:
    """Maximal minors of the block matrices (``"X"``: with the ``y`` columns; ``"M"``: without), summed over
    the nonempty block subsets ``A`` that support a nonzero form."""
    gens = []
    for A in _nonempty_subsets(V.u):
        basis = (bases or {}).get(A) or compute_VA(V, A)
        if not basis:
            continue
        mat = x_matrix(V, A, basis) if which == "X" else m_matrix(V, A, basis)
        gens.extend(maximal_minors(mat))
    if which == "X":
        return Ideal(V.S, gens)
    H = V.T.homogenization
    inv = {s: t for t, s in H.x_map.items()}
    return Ideal(V.T, [g.rename(V.T, inv) for g in gens if not g.is_zero()])


def jhom_determinantal(V: LinearSpaceInput, bases: dict | None = None) -> Ideal:
    return minors_sum(V, "X", bases)


def jstar(V: LinearSpaceInput, bases: dict | None = None) -> Ideal:
    return minors_sum(V, "M", bases)


def matroid_bases(V: LinearSpaceInput) -> list[tuple[int, ...]]:
    """Column subsets (0-based) forming a basis of the column space of the basis matrix."""
    out = []
    for cols in combinations(range(V.n), V.v):
        sub = [[r[j] for j in cols] for r in V.basis]
        if rank(sub, V.field) == V.v:
            out.append(cols)
    return out


def basis_degrees(V: LinearSpaceInput) -> list[tuple[int, ...]]:
    """Distinct block-degree vectors of the matroid bases, sorted decreasingly."""
    degs = set()
    for b in matroid_bases(V):
        d = [0] * V.u
        for j in b:
            d[V.column_block(j)] += 1
        degs.add(tuple(d))
    return sorted(degs, reverse=True)


def multidegree_matroid(V: LinearSpaceInput) -> LaurentZPoly:
    return LaurentZPoly(V.u, {w: 1 for w in basis_degrees(V)})


def gin_from_DV(V: LinearSpaceInput) -> MonomialIdeal:
    """Intersection of the Borel primes of ``S`` over the basis degree vectors."""
    S = V.S
    return intersect_all(S, [borel_prime(S, w) for w in basis_degrees(V)])


def random_linear_space(rng, blocks: Sequence[int], v: int, field: Field | None = None, density: float = 0.6) -> LinearSpaceInput:
    """Random ``V`` with ``v`` independent rows; entries are zero with probability ``1 - density``."""
    F = field or GF()
    n = sum(blocks)
    while True:
        rows = []
        for _ in range(v):
            row = []
            for _ in range(n):
                if rng.random() < density:
                    x = F.random_element(rng)
                    row.append(x if x else F.one)
                else:
                    row.append(F.zero)
            rows.append(row)
        if rank(rows, F) == v:
            return LinearSpaceInput.create(blocks, rows, F)
