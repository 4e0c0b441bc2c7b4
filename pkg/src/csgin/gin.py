"""Multigraded generic initial ideals.

A generic coordinate change is a random invertible matrix acting inside each
block.  Matrices are drawn from a Philox counter-based generator keyed by
``(seed, attempt)``, so every candidate is reproducible from its seed alone.
A gin is accepted once every seed yields the same Borel-fixed initial ideal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .groebner import Ideal
from .linalg import rank
from .monomial import MonomialIdeal
from .ring import GREVLEX, BlockRing, MultiPoly, TermOrder

log = logging.getLogger(__name__)

DEFAULT_SEEDS = (1, 2, 3)
RETRIES = 5


class GenericityError(RuntimeError):
    """Random coordinate changes failed to agree on a Borel-fixed initial ideal."""

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = candidates


def generator(seed: int, attempt: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(attempt)])))


@dataclass(frozen=True)
class BlockChange:
    """Invertible block-diagonal linear change of variables."""

    ring: BlockRing
    matrices: tuple
    seed: int | None = None

    @classmethod
    def random(cls, ring: BlockRing, seed: int, attempt: int = 0, bound: int | None = None) -> "BlockChange":
        rng = generator(seed, attempt)
        F = ring.field
        mats = []
        for d in ring.block_sizes:
            while True:
                M = [[F.random_element(rng, bound) for _ in range(d)] for _ in range(d)]
                if rank(M, F) == d:
                    break
            mats.append(tuple(tuple(r) for r in M))
        return cls(ring, tuple(mats), seed)

    @classmethod
    def identity(cls, ring: BlockRing) -> "BlockChange":
        F = ring.field
        mats = tuple(
            tuple(tuple(F.one if i == j else F.zero for j in range(d)) for i in range(d))
            for d in ring.block_sizes
        )
        return cls(ring, mats)

    def images(self) -> list[MultiPoly]:
        """Image of each variable: ``x_{ij} -> sum_k M_i[j][k] x_{ik}``."""
        R = self.ring
        out = []
        for b, M in enumerate(self.matrices):
            o = R.offsets[b]
            for row in M:
                terms = {}
                for k, c in enumerate(row):
                    e = [0] * R.nvars
                    e[o + k] = 1
                    terms[tuple(e)] = c
                out.append(MultiPoly(R, terms))
        return out

    def apply(self, I: Ideal) -> Ideal:
        return I.change_coordinates(self.images())


@dataclass
class GinResult:
    gin: MonomialIdeal
    seeds_used: list = field(default_factory=list)
    borel_certified: bool = True
    agreements: int = 0
    order: TermOrder = GREVLEX

    def to_json(self) -> dict:
        return {
            "gin": self.gin.to_strings(),
            "seeds_used": [list(s) for s in self.seeds_used],
            "borel_certified": self.borel_certified,
            "agreements": self.agreements,
            "order": str(self.order),
        }


def _as_ideal(I) -> Ideal:
    if isinstance(I, MonomialIdeal):
        return Ideal(I.ring, I.polys())
    return I


def gin(I, order: TermOrder = GREVLEX, seeds: Sequence[int] = DEFAULT_SEEDS, retries: int = RETRIES) -> GinResult:
    """Generic initial ideal of ``I`` under ``order``, certified across ``seeds``."""
    I = _as_ideal(I)
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    key = (order, seeds, retries)
    hit = I._gin.get(key)
    if hit is not None:
        return hit
    R = I.ring
    if I.is_zero():
        res = GinResult(MonomialIdeal(R, []), [(s, 0) for s in seeds], True, len(seeds), order)
        I._gin[key] = res
        return res

    accepted: dict[int, tuple[int, MonomialIdeal]] = {}
    next_attempt = {s: 0 for s in seeds}
    history = []
    while True:
        for s in seeds:
            while s not in accepted and next_attempt[s] <= retries:
                a = next_attempt[s]
                next_attempt[s] += 1
                cand = BlockChange.random(R, s, a).apply(I).initial_ideal(order)
                history.append(((s, a), cand))
                if cand.is_borel_fixed():
                    accepted[s] = (a, cand)
                else:
                    log.debug("seed %d attempt %d: initial ideal not Borel-fixed", s, a)
        if len(accepted) < len(seeds):
            break
        # keep the majority candidate, resample dissenting seeds
        groups: dict[MonomialIdeal, list[int]] = {}
        for s, (_, c) in accepted.items():
            groups.setdefault(c, []).append(s)
        if len(groups) == 1:
            J = next(iter(groups))
            used = [(s, accepted[s][0]) for s in seeds]
            res = GinResult(J, used, True, len(seeds), order)
            I._gin[key] = res
            return res
        best = max(groups.values(), key=len)
        dissent = [s for s in seeds if s not in best]
        if all(next_attempt[s] > retries for s in dissent):
            break
        for s in dissent:
            del accepted[s]
    raise GenericityError(
        f"genericity not certified: no agreement on a Borel-fixed initial ideal after {retries} resamples per seed",
        [(sa, str(c)) for sa, c in history],
    )


def is_CS(I, order: TermOrder = GREVLEX, seeds: Sequence[int] = DEFAULT_SEEDS) -> bool:
    """Cartwright-Sturmfels test: the gin is squarefree."""
    return gin(I, order, seeds).gin.is_squarefree()


def is_CS_star(I, order: TermOrder = GREVLEX, seeds: Sequence[int] = DEFAULT_SEEDS) -> bool:
    """The gin is generated by monomials in the first variable of each block."""
    J = gin(I, order, seeds).gin
    R = J.ring
    return J.uses_only(R.offsets)
