"""Multiview ideals of camera systems, built two independent ways.

The cameras ``A_i`` (``d_i x n``, full row rank) define the rational map
``P^{n-1} -> prod P^{d_i - 1}``; its multiview ideal lives in
``K[x_{ij} : j <= d_i]`` with block ``i`` = ``(x_{i1}, ..., x_{id_i})``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .closure import LinearSpaceInput, jhom_saturation
from .field import Field, GF, parse_field
from .gin import is_CS
from .groebner import Ideal, eliminate
from .linalg import left_kernel, rank, reduce_matrix
from .ring import BlockRing, MultiPoly, maximal_minors


@dataclass(frozen=True)
class CameraSystem:
    n: int
    cameras: tuple
    field: Field

    def __post_init__(self):
        if not self.cameras:
            raise ValueError("need at least one camera")
        for i, A in enumerate(self.cameras):
            if not A or any(len(r) != self.n for r in A):
                raise ValueError(f"camera {i + 1} must have rows of length n = {self.n}")
            if rank(A, self.field) < len(A):
                raise ValueError(f"camera {i + 1} is rank deficient")

    @classmethod
    def create(cls, n: int, cameras, field: Field | None = None) -> "CameraSystem":
        F = field or GF()
        cams = tuple(tuple(tuple(F.convert(x) for x in r) for r in A) for A in cameras)
        return cls(int(n), cams, F)

    @classmethod
    def from_json(cls, data, field: Field | None = None) -> "CameraSystem":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "n" not in data or "cameras" not in data:
            raise ValueError('camera JSON needs keys "n" and "cameras"')
        return cls.create(data["n"], data["cameras"], field or parse_field(data.get("field")))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cameras": [[[str(x) for x in r] for r in A] for A in self.cameras],
            "field": self.field.to_json(),
        }

    @property
    def m(self) -> int:
        return len(self.cameras)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(A) for A in self.cameras)

    @property
    def ring(self) -> BlockRing:
        return BlockRing(self.dims, field=self.field)


def _extend_to_basis(A, n: int, F: Field) -> list[list]:
    """Append standard basis rows to ``A`` until it is square and invertible."""
    rows = [list(r) for r in A]
    for k in range(n):
        if len(rows) == n:
            break
        e = [F.one if j == k else F.zero for j in range(n)]
        if rank(rows + [e], F) > len(rows):
            rows.append(e)
    return rows


def _inverse(B, F: Field) -> list[list]:
    n = len(B)
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(B)]
    red = reduce_matrix(aug, F)
    return [list(r[n:]) for r in red.rref]


def multiview_segre_route(A: CameraSystem) -> Ideal:
    """2-minors of an ``m x n`` matrix of variables, moved by the cameras, then eliminated.

    Camera ``i`` is completed to an invertible ``B_i``; substituting
    ``z_i = B_i^{-1} w_i`` sends the Segre ideal to the kernel of
    ``w_{ij} -> s_i (B_i t)_j``, and the surplus ``w_{ij}`` with ``j > d_i``
    are eliminated.
    """
    F, n, m = A.field, A.n, A.m
    W = BlockRing([n] * m, field=F)
    images = []
    for i, cam in enumerate(A.cameras):
        Binv = _inverse(_extend_to_basis(cam, n, F), F)
        for k in range(n):
            terms = {}
            for j in range(n):
                if Binv[k][j]:
                    e = [0] * W.nvars
                    e[i * n + j] = 1
                    terms[tuple(e)] = Binv[k][j]
            images.append(MultiPoly(W, terms))
    Z = [[images[i * n + k] for k in range(n)] for i in range(m)]
    gens = [Z[a][k] * Z[b][l] - Z[a][l] * Z[b][k] for a in range(m) for b in range(a + 1, m) for k in range(n) for l in range(k + 1, n)]
    I = Ideal(W, [g for g in gens if not g.is_zero()])
    surplus = [i * n + j for i, d in enumerate(A.dims) for j in range(d, n)]
    J = eliminate(I, surplus)
    R = A.ring
    return Ideal(R, [g.rename(R, {k: k for k in range(R.nvars)}) for g in J.gens])


def kernel_forms(A: CameraSystem) -> list[list]:
    """Coefficient vectors of the linear forms in ``x_{ij}`` killed by ``x_{ij} -> (A_i t)_j``."""
    stacked = [list(r) for cam in A.cameras for r in cam]
    return left_kernel(stacked, A.field)


def multiview_star_route(A: CameraSystem) -> Ideal:
    """Largest multigraded subideal of the linear kernel ideal (homogenize, then drop the ``y``)."""
    R = A.ring
    K = kernel_forms(A)
    if not K:
        return Ideal(R, [])
    V = LinearSpaceInput.create(A.dims, K, A.field)
    J = eliminate(jhom_saturation(V), V.T.homogenization.y_vars)
    return Ideal(R, [g.rename(R, {k: k for k in range(R.nvars)}) for g in J.gens])


def is_CS_multiview(A: CameraSystem, seeds=(1, 2, 3)) -> bool:
    return is_CS(multiview_star_route(A), seeds=seeds)


def random_camera_system(rng, dims: Sequence[int], n: int, field: Field | None = None) -> CameraSystem:
    """Uniform random cameras; draws with a rank drop are redrawn."""
    F = field or GF()
    cams = []
    for d in dims:
        while True:
            M = [[F.random_element(rng) for _ in range(n)] for _ in range(d)]
            if rank(M, F) == d:
                cams.append(M)
                break
    return CameraSystem.create(n, cams, F)


def normalized_camera_system(m: int, d: int, field: Field | None = None) -> CameraSystem:
    """The first ``m - 1`` cameras pick out consecutive coordinate blocks; the last one is minus their sum."""
    if not 2 <= m <= d:
        raise ValueError("need 2 <= m <= d")
    F = field or GF()
    n = (m - 1) * d
    cams = []
    for j in range(m - 1):
        cams.append([[1 if c == j * d + h else 0 for c in range(n)] for h in range(d)])
    cams.append([[-1 if c % d == h else 0 for c in range(n)] for h in range(d)])
    return CameraSystem.create(n, cams, F)


def generic_matrix_minors(ring: BlockRing, m: int, d: int) -> list[MultiPoly]:
    """Maximal minors of the ``m x d`` matrix whose row ``i`` is block ``i``."""
    X = [[ring.gen(ring.var_index(i, j)) for j in range(d)] for i in range(m)]
    return maximal_minors(X)


def generic_camera_system(m: int, d: int, rng, field: Field | None = None) -> tuple[CameraSystem, Ideal]:
    """Normalized cameras moved by random invertible maps on both sides, and the expected ideal.

    The expected ideal is the ideal of ``m``-minors with each block moved by the inverse target map.
    """
    F = field or GF()
    N = normalized_camera_system(m, d, F)
    n = N.n

    def invertible(k):
        while True:
            M = [[F.random_element(rng) for _ in range(k)] for _ in range(k)]
            if rank(M, F) == k:
                return M

    h = invertible(n)
    gs = [invertible(d) for _ in range(m)]
    cams = [_matmul(_matmul(g, cam, F), h, F) for g, cam in zip(gs, N.cameras)]
    A = CameraSystem.create(n, cams, F)
    R = A.ring
    images = []
    for i, g in enumerate(gs):
        ginv = _inverse(g, F)
        for a in range(d):
            terms = {}
            for b in range(d):
                if ginv[a][b]:
                    e = [0] * R.nvars
                    e[R.var_index(i, b)] = 1
                    terms[tuple(e)] = ginv[a][b]
            images.append(MultiPoly(R, terms))
    expected = Ideal(R, [f.substitute(images) for f in generic_matrix_minors(R, m, d)])
    return A, expected


def _matmul(P, Q, F: Field) -> list[list]:
    return [
        [
            _sum(F, (F.mul(P[i][k], Q[k][j]) for k in range(len(Q))))
            for j in range(len(Q[0]))
        ]
        for i in range(len(P))
    ]


def _sum(F, it):
    acc = F.zero
    for x in it:
        acc = F.add(acc, x)
    return acc
