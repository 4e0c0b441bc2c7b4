"""Pure-Python reduction kernel.

Monomials are packed into one Python ``int`` per term::

    key(a) = sum_r (W_r . a + 2**31) << (16 N + 32 (R - 1 - r))  +  sum_k a_k << 16 k

where ``W`` is the integer matrix of the term order.  Integer comparison of
keys is the term order, ``key(a + b) = key(a) + key(b) - OFF`` is exact, and
the low ``16 N`` bits hold the exponent vector with a guard bit per field so
divisibility is one subtraction and one mask.

A polynomial is a :class:`Poly` wrapping a dict ``key -> coefficient``.
Coefficients are ``int`` modulo ``p`` when ``p > 0``; for ``p == 0`` they are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

BACKEND = "python"

_EXP_BITS = 16
_ROW_BITS = 32
_ROW_OFF = 1 << 31
_EXP_MAX = (1 << (_EXP_BITS - 1)) - 1


class Poly:
    __slots__ = ("d", "lk", "lc")

    def __init__(self, d: dict):
        self.d = d
        if d:
            self.lk = max(d)
            self.lc = d[self.lk]
        else:
            self.lk = None
            self.lc = None


class Context:
    """Packing and reduction for one ring/order/characteristic."""

    backend = BACKEND

    def __init__(self, nvars: int, matrix, p: int):
        self.n = n = nvars
        self.rows = [tuple(int(w) for w in r) for r in matrix]
        self.p = int(p)
        R = len(self.rows)
        base = _EXP_BITS * n
        self.shifts = [base + _ROW_BITS * (R - 1 - r) for r in range(R)]
        self.off = sum(_ROW_OFF << s for s in self.shifts)
        self.emask = (1 << base) - 1
        self.guard = sum(1 << (_EXP_BITS * k + _EXP_BITS - 1) for k in range(n))
        self.eshift = [_EXP_BITS * k for k in range(n)]

    # packing ------------------------------------------------------------
    def pack(self, e) -> int:
        key = 0
        for k, a in enumerate(e):
            if a:
                if a > _EXP_MAX or a < 0:
                    raise OverflowError(f"exponent {a} out of range")
                key |= a << self.eshift[k]
        for row, s in zip(self.rows, self.shifts):
            v = sum(w * a for w, a in zip(row, e)) + _ROW_OFF
            if not 0 <= v < (1 << _ROW_BITS):
                raise OverflowError("weighted degree out of range")
            key += v << s
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & _EXP_MAX for s in self.eshift)

    def make(self, terms) -> Poly:
        p = self.p
        d = {}
        for e, c in terms:
            if p:
                c %= p
            if c:
                d[self.pack(e)] = c
        return Poly(d)

    def to_terms(self, f: Poly):
        return [(self.unpack(k), f.d[k]) for k in sorted(f.d, reverse=True)]

    def lead_exp(self, f: Poly) -> tuple[int, ...]:
        return self.unpack(f.lk)

    def is_zero(self, f: Poly) -> bool:
        return not f.d

    def nterms(self, f: Poly) -> int:
        return len(f.d)

    def monic(self, f: Poly) -> Poly:
        if not f.d or f.lc == 1:
            return f
        p = self.p
        if p:
            inv = pow(f.lc, -1, p)
            return Poly({k: c * inv % p for k, c in f.d.items()})
        inv = 1 / f.lc
        return Poly({k: c * inv for k, c in f.d.items()})

    # kernels ------------------------------------------------------------
    def spoly(self, f: Poly, g: Poly) -> Poly:
        """S-polynomial of two monic polynomials."""
        ef, eg = self.unpack(f.lk), self.unpack(g.lk)
        kl = self.pack(tuple(max(a, b) for a, b in zip(ef, eg)))
        df = kl - f.lk
        dg = kl - g.lk
        flk, glk = f.lk, g.lk
        s = {k + df: c for k, c in f.d.items() if k != flk}
        p = self.p
        if p:
            for k, c in g.d.items():
                if k == glk:
                    continue
                kk = k + dg
                v = (s.get(kk, 0) - c) % p
                if v:
                    s[kk] = v
                else:
                    s.pop(kk, None)
        else:
            for k, c in g.d.items():
                if k == glk:
                    continue
                kk = k + dg
                v = s.get(kk, 0) - c
                if v:
                    s[kk] = v
                else:
                    s.pop(kk, None)
        return Poly(s)

    def reduce(self, f: Poly, G, full: bool = True) -> Poly:
        """Normal form of ``f`` modulo the monic polynomials ``G``.

        With ``full=False`` only the leading term is reduced (top reduction).
        """
        if not f.d:
            return f
        emask, guard, p = self.emask, self.guard, self.p
        leads = [(g.lk & emask, g.lk, g.d) for g in G]
        d = dict(f.d)
        rem = {}
        while d:
            lk = max(d)
            e = (lk & emask) | guard
            for ge, gk, gd in leads:
                if (e - ge) & guard == guard:
                    break
            else:
                if not full:
                    rem.update(d)
                    break
                rem[lk] = d.pop(lk)
                continue
            c = d.pop(lk)
            delta = lk - gk
            if p:
                for k, gc in gd.items():
                    if k == gk:
                        continue
                    kk = k + delta
                    v = (d.get(kk, 0) - c * gc) % p
                    if v:
                        d[kk] = v
                    else:
                        d.pop(kk, None)
            else:
                for k, gc in gd.items():
                    if k == gk:
                        continue
                    kk = k + delta
                    v = d.get(kk, 0) - c * gc
                    if v:
                        d[kk] = v
                    else:
                        d.pop(kk, None)
        return Poly(rem)
