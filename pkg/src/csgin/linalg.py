"""Exact Gaussian elimination over a :class:`~csgin.field.Field`."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field, PrimeField


@dataclass(frozen=True)
class Reduction:
    rank: int
    det: object | None
    kernel: list[list]
    rref: list[list]
    pivots: tuple[int, ...]


def _coerce(M, field: Field) -> list[list]:
    rows = [list(r) for r in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    try:
        return [[field.convert(x) for x in r] for r in rows]
    except (TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"matrix entry not in {field!r}: {exc}") from exc


def row_reduce(M, field: Field, ncols: int | None = None) -> tuple[list[list], tuple[int, ...], object]:
    """Reduced row echelon form as ``(rref, pivot_columns, det)``.

    ``det`` is the signed product of the pivots; it equals the determinant
    only for square input of full rank.
    """
    A = _coerce(M, field)
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    zero, one = field.zero, field.one
    det = one
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not field.is_zero(A[i][c])), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            det = field.neg(det)
        a = A[r][c]
        det = field.mul(det, a)
        inv = field.inv(a)
        A[r] = [field.mul(inv, x) for x in A[r]]
        for i in range(m):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        A[i] = [zero] * n
    return A, tuple(pivots), det


def reduce_matrix(M, field: Field) -> Reduction:
    """Rank, determinant (square input only) and a kernel basis of ``M``."""
    M = [list(r) for r in M]
    m = len(M)
    n = len(M[0]) if M else 0
    R, pivots, det = row_reduce(M, field, n)
    rank = len(pivots)
    d = None
    if m == n:
        d = det if rank == n else field.zero
    kernel = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][fc])
        kernel.append(v)
    return Reduction(rank, d, kernel, R[:rank], pivots)


def matrix_rank_det_kernel(M, field: Field):
    """``(rank, det or None, kernel basis)`` of a matrix with entries in ``field``."""
    red = reduce_matrix(M, field)
    return red.rank, red.det, red.kernel


def rank(M, field: Field) -> int:
    if isinstance(field, PrimeField):
        return rank_mod_p(np.asarray(M, dtype=np.int64) if len(M) else np.zeros((0, 0), np.int64), field.p)
    return reduce_matrix(M, field).rank


def left_kernel(M, field: Field) -> list[list]:
    """Basis of ``{c : c^T M = 0}``."""
    M = [list(r) for r in M]
    if not M:
        return []
    T = [list(col) for col in zip(*M)]
    if not T:
        return [[field.one if i == j else field.zero for j in range(len(M))] for i in range(len(M))]
    return reduce_matrix(T, field).kernel


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank over GF(p) with vectorised row operations; ``p < 2**31``."""
    if A.size == 0:
        return 0
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        rows = np.nonzero(A[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        r += 1
    return r
