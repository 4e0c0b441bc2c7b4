"""Buchberger's algorithm and the ideal toolkit built on it.

The pair bookkeeping (Gebauer-Moeller update, normal selection strategy)
lives here; polynomial reduction is delegated to a kernel context from
:mod:`csgin.kernel`, compiled or pure Python.
"""

from __future__ import annotations

import heapq
import logging
from itertools import combinations
from typing import Iterable, Sequence

from . import kernel
from .field import PrimeField
from .monomial import MonomialIdeal
from .ring import GREVLEX, BlockRing, MultiPoly, TermOrder, elimination_order

log = logging.getLogger(__name__)


def _char(ring: BlockRing) -> int:
    return ring.field.p if isinstance(ring.field, PrimeField) else 0


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Pair:
    __slots__ = ("i", "j", "lcm", "alive")

    def __init__(self, i, j, lcm):
        self.i, self.j, self.lcm, self.alive = i, j, lcm, True


def groebner_raw(ctx, polys, order_key, stats: dict | None = None) -> list:
    """Reduced Groebner basis of kernel polynomials ``polys``.

    ``order_key`` maps an exponent tuple to a sort key of the active order.
    Returns monic kernel polynomials sorted by increasing leading monomial.
    """
    basis: list = []
    leads: list = []
    G: list[int] = []
    heap: list = []
    pairs_by_i: dict = {}
    counter = 0
    nspairs = nzero = 0

    def update(h):
        nonlocal G, counter
        hi = len(basis)
        basis.append(h)
        lh = ctx.lead_exp(h)
        leads.append(lh)
        C = [(g, _lcm(lh, leads[g])) for g in G]
        D = []
        while C:
            g1, l1 = C.pop()
            if _coprime(lh, leads[g1]) or not (
                any(_divides(l2, l1) for _, l2 in C) or any(_divides(l2, l1) for _, l2 in D)
            ):
                D.append((g1, l1))
        E = [(g, l) for g, l in D if not _coprime(lh, leads[g])]
        for plist in pairs_by_i.values():
            for pr in plist:
                if not pr.alive:
                    continue
                if (
                    _divides(lh, pr.lcm)
                    and _lcm(leads[pr.i], lh) != pr.lcm
                    and _lcm(lh, leads[pr.j]) != pr.lcm
                ):
                    pr.alive = False
        for g, l in E:
            pr = _Pair(g, hi, l)
            pairs_by_i.setdefault(hi, []).append(pr)
            heapq.heappush(heap, (sum(l), order_key(l), counter, pr))
            counter += 1
        G = [g for g in G if not _divides(lh, leads[g])] + [hi]

    inputs = [f for f in polys if not ctx.is_zero(f)]
    inputs.sort(key=lambda f: (sum(ctx.lead_exp(f)), order_key(ctx.lead_exp(f))))
    for f in inputs:
        h = ctx.reduce(f, [basis[g] for g in G], False)
        if not ctx.is_zero(h):
            update(ctx.monic(h))
    while heap:
        *_, pr = heapq.heappop(heap)
        if not pr.alive:
            continue
        pr.alive = False
        nspairs += 1
        s = ctx.spoly(basis[pr.i], basis[pr.j])
        h = ctx.reduce(s, [basis[g] for g in G], False)
        if ctx.is_zero(h):
            nzero += 1
            continue
        update(ctx.monic(h))
    Gs = sorted(G, key=lambda g: order_key(leads[g]))
    out = []
    for g in Gs:
        others = [basis[k] for k in Gs if k != g]
        out.append(ctx.monic(ctx.reduce(basis[g], others, True)))
    if stats is not None:
        stats.update(spairs=nspairs, zero_reductions=nzero, size=len(out))
    log.debug("groebner: %d S-pairs, %d zero reductions, %d elements", nspairs, nzero, len(out))
    return out


def _context(ring_nvars: int, order: TermOrder, p: int, backend=None):
    return kernel.context(ring_nvars, order.matrix(ring_nvars), p, backend)


def groebner_terms(
    nvars: int,
    polys: Iterable[Sequence],
    order: TermOrder,
    p: int,
    backend: str | None = None,
    stats: dict | None = None,
) -> list[list]:
    """Reduced GB of polynomials given as ``[(exp, coeff), ...]`` term lists."""
    ctx = _context(nvars, order, p, backend)
    handles = [ctx.make(t) for t in polys]
    G = groebner_raw(ctx, handles, order.key(nvars), stats)
    return [ctx.to_terms(g) for g in G]


class Ideal:
    """An ideal given by multigraded-homogeneous generators.

    Reduced Groebner bases are cached per (term order, backend).
    """

    def __init__(self, ring: BlockRing, gens: Iterable[MultiPoly] = (), *, homogeneous: bool = True):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if homogeneous and not g.is_homogeneous():
                raise ValueError(f"generator is not multigraded-homogeneous: {g}")
        self.ring = ring
        self.gens = gens
        self._gb: dict = {}
        self._gin: dict = {}

    @classmethod
    def parse(cls, ring: BlockRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"

    def _entry(self, order: TermOrder, backend=None):
        backend = backend or kernel.BACKEND
        key = (order, backend)
        entry = self._gb.get(key)
        if entry is None:
            R = self.ring
            ctx = _context(R.nvars, order, _char(R), backend)
            handles = [ctx.make(g.terms) for g in self.gens]
            G = groebner_raw(ctx, handles, order.key(R.nvars))
            G.reverse()
            polys = tuple(MultiPoly._trusted(R, ctx.to_terms(g)) for g in G)
            entry = (polys, ctx, G)
            self._gb[key] = entry
        return entry

    def groebner(self, order: TermOrder = GREVLEX, backend: str | None = None) -> tuple[MultiPoly, ...]:
        """Reduced Groebner basis, monic, sorted by decreasing leading term in ``order``."""
        return self._entry(order, backend)[0]

    def leading_exponents(self, order: TermOrder = GREVLEX) -> list[tuple[int, ...]]:
        polys, ctx, G = self._entry(order)
        return [ctx.lead_exp(g) for g in G]

    def initial_ideal(self, order: TermOrder = GREVLEX) -> MonomialIdeal:
        return MonomialIdeal(self.ring, self.leading_exponents(order))

    def normal_form(self, f: MultiPoly, order: TermOrder = GREVLEX) -> MultiPoly:
        if f.ring != self.ring:
            raise ValueError("polynomial lives in a different ring")
        polys, ctx, G = self._entry(order)
        r = ctx.reduce(ctx.make(f.terms), G, True)
        return MultiPoly._trusted(self.ring, ctx.to_terms(r))

    def __contains__(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero()

    def contains(self, other: "Ideal") -> bool:
        return all(g in self for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")
        return self.contains(other) and other.contains(self)

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(all(a == 0 for a in g.lead_exp) for g in self.groebner())

    def with_gens(self, gens) -> "Ideal":
        return Ideal(self.ring, gens)

    def change_coordinates(self, images: Sequence[MultiPoly]) -> "Ideal":
        return Ideal(self.ring, [g.substitute(images) for g in self.gens])


# ---------------------------------------------------------------------------
# functional interface

def buchberger(I: Ideal, order: TermOrder = GREVLEX) -> tuple[MultiPoly, ...]:
    return I.groebner(order)


def initial_ideal(I: Ideal, order: TermOrder = GREVLEX) -> MonomialIdeal:
    return I.initial_ideal(order)


def normal_form(f: MultiPoly, I: Ideal, order: TermOrder = GREVLEX) -> MultiPoly:
    return I.normal_form(f, order)


def membership(f: MultiPoly, I: Ideal) -> bool:
    return f in I


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.equals(J)


def is_groebner_basis(polys: Sequence[MultiPoly], order: TermOrder = GREVLEX) -> bool:
    """Check every S-pair of ``polys`` reduces to zero (no criteria applied)."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return True
    R = polys[0].ring
    ctx = _context(R.nvars, order, _char(R), "python")
    H = [ctx.monic(ctx.make(f.terms)) for f in polys]
    for a, b in combinations(H, 2):
        if not ctx.is_zero(ctx.reduce(ctx.spoly(a, b), H, True)):
            return False
    return True


def eliminate(I: Ideal, front: Iterable[int]) -> Ideal:
    """``I`` intersected with the subring on the variables outside ``front``."""
    front = frozenset(front)
    R = I.ring
    keep = [k for k in range(R.nvars) if k not in front]
    sub, index_map = R.subring(keep)
    if not front:
        return Ideal(sub, [g.rename(sub, index_map) for g in I.gens])
    G = I.groebner(elimination_order(front))
    gens = [g.rename(sub, index_map) for g in G if not (g.support_vars() & front)]
    return Ideal(sub, gens)


def _tagged_terms(f: MultiPoly, tag: int):
    """Terms of ``t^tag * f`` in the ring with one extra (last) variable ``t``."""
    return [(e + (tag,), c) for e, c in f.terms]


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I`` meet ``J`` via ``(t I + (1 - t) J)`` intersected with the original ring."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    R = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(R, [])
    F = R.field
    N = R.nvars
    polys = [_tagged_terms(g, 1) for g in I.gens]
    for g in J.gens:
        polys.append(_tagged_terms(g, 0) + [(e, F.neg(c)) for e, c in _tagged_terms(g, 1)])
    order = elimination_order([N])
    G = groebner_terms(N + 1, polys, order, _char(R))
    gens = [R.poly([(e[:N], c) for e, c in g]) for g in G if all(e[N] == 0 for e, _ in g)]
    return Ideal(R, gens)


def divide_exact(h: MultiPoly, f: MultiPoly) -> MultiPoly:
    """Quotient ``h / f``; raises ``ValueError`` if ``f`` does not divide ``h``."""
    R = h.ring
    F = R.field
    if f.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lf, cf = f.lead_exp, f.lead_coeff
    inv = F.inv(cf)
    from .ring import grevlex_key

    rem = dict(h.terms)
    quot = {}
    while rem:
        le = max(rem, key=grevlex_key)
        if not _divides(lf, le):
            raise ValueError("polynomial division is not exact")
        m = tuple(a - b for a, b in zip(le, lf))
        c = F.mul(rem[le], inv)
        quot[m] = c
        for e, a in f.terms:
            ne = tuple(x + y for x, y in zip(e, m))
            v = F.sub(rem.get(ne, F.zero), F.mul(c, a))
            if F.is_zero(v):
                rem.pop(ne, None)
            else:
                rem[ne] = v
    return MultiPoly(R, quot)


def colon(I: Ideal, f: MultiPoly) -> Ideal:
    """``I : (f)``, computed as ``(I meet (f)) / f``.

    Monomials are handled one variable at a time since ``I : ab = (I : a) : b``.
    """
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("colon needs a multigraded-homogeneous polynomial")
    R = I.ring
    if all(a == 0 for a in f.lead_exp) and f.is_monomial():
        return Ideal(R, I.gens)
    if f.is_monomial() and sum(f.lead_exp) > 1:
        J = I
        for k, a in enumerate(f.lead_exp):
            for _ in range(a):
                J = colon(J, R.gen(k))
        return J
    if I.is_zero():
        return Ideal(R, [])
    meet = intersect(I, Ideal(R, [f]))
    return Ideal(R, [divide_exact(g, f) for g in meet.gens])


def saturate(I: Ideal, f: MultiPoly, return_rounds: bool = False):
    """``I : f^infinity`` by iterated colon until the ideal stabilises."""
    J = I
    rounds = 0
    while True:
        rounds += 1
        K = colon(J, f)
        if K.contains(J) and J.contains(K):
            break
        J = K
    log.debug("saturation stabilised after %d rounds", rounds)
    return (J, rounds) if return_rounds else J
