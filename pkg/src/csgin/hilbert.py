"""Multigraded Hilbert numerators, multidegrees and G-multidegrees.

Everything is computed from monomial ideals.  For a general ideal the caller
passes an initial ideal, which has the same multigraded Hilbert series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping

from .monomial import MonomialIdeal

Exp = tuple[int, ...]


class LaurentZPoly:
    """Integer polynomial in ``z_1..z_n`` (exponents may be negative)."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        self.coeffs: dict[Exp, int] = {}
        for e, c in (coeffs or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length")
            if c:
                self.coeffs[e] = self.coeffs.get(e, 0) + int(c)
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    @classmethod
    def one(cls, nvars: int) -> "LaurentZPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "LaurentZPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def parse(cls, text: str, nvars: int) -> "LaurentZPoly":
        """Parse sums like ``"z1^3 + 2*z1*z2 - 1"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(nvars)
        out: dict[Exp, int] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            c = -1 if sign == "-" else 1
            e = [0] * nvars
            for factor in body.split("*"):
                m = re.fullmatch(r"z(\d+)(?:\^(-?\d+))?", factor)
                if m:
                    i = int(m.group(1)) - 1
                    if not 0 <= i < nvars:
                        raise ValueError(f"variable z{i + 1} out of range")
                    e[i] += int(m.group(2) or 1)
                elif re.fullmatch(r"\d+", factor):
                    c *= int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r}")
            out[tuple(e)] = out.get(tuple(e), 0) + c
        return cls(nvars, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZPoly(self.nvars, {(0,) * self.nvars: other})
        return isinstance(other, LaurentZPoly) and self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "LaurentZPoly") -> "LaurentZPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentZPoly(self.nvars, out)

    def __neg__(self):
        return LaurentZPoly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentZPoly") -> "LaurentZPoly":
        out: dict[Exp, int] = {}
        for e, c in self.coeffs.items():
            for f, d in other.coeffs.items():
                g = tuple(a + b for a, b in zip(e, f))
                out[g] = out.get(g, 0) + c * d
        return LaurentZPoly(self.nvars, out)

    def shift(self, exp: Exp) -> "LaurentZPoly":
        return LaurentZPoly(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.coeffs.items()})

    def terms(self) -> list[tuple[Exp, int]]:
        """Terms sorted by decreasing total degree, then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def support(self) -> set[Exp]:
        return set(self.coeffs)

    def component(self, degree: int) -> "LaurentZPoly":
        return LaurentZPoly(self.nvars, {e: c for e, c in self.coeffs.items() if sum(e) == degree})

    def min_degree(self) -> int | None:
        return min((sum(e) for e in self.coeffs), default=None)

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self.coeffs for a in e)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mon = "*".join(f"z{i + 1}" if a == 1 else f"z{i + 1}^{a}" for i, a in enumerate(e) if a)
            a = abs(c)
            body = mon if a == 1 and mon else (f"{a}*{mon}" if mon else str(a))
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentZPoly({str(self)!r})"

    def to_json(self) -> str:
        return str(self)


def _one_minus(nvars: int, deg: Exp) -> LaurentZPoly:
    return LaurentZPoly(nvars, {(0,) * nvars: 1, tuple(deg): -1})


def _pairwise_coprime(gens) -> bool:
    seen = 0
    for g in gens:
        mask = 0
        for k, a in enumerate(g):
            if a:
                mask |= 1 << k
        if mask & seen:
            return False
        seen |= mask
    return True


def _pivot(gens, heuristic: str) -> int:
    counts: dict[int, int] = {}
    for g in gens:
        for k, a in enumerate(g):
            if a:
                counts[k] = counts.get(k, 0) + 1
    shared = [k for k, c in counts.items() if c >= 2]
    if heuristic == "most":
        return min(shared, key=lambda k: (-counts[k], k))
    if heuristic == "last":
        return max(shared)
    raise ValueError(f"unknown pivot heuristic {heuristic!r}")


def k_polynomial(I: MonomialIdeal, pivot: str = "most") -> LaurentZPoly:
    """Numerator ``K(S/I)`` of the multigraded Hilbert series of ``S/I``.

    Uses ``K(S/J) = K(S/(J + x)) + z^{deg x} K(S/(J : x))`` on a shared
    variable ``x`` until the generators are pairwise coprime.
    """
    R = I.ring
    n = R.nblocks
    memo: dict[frozenset, LaurentZPoly] = {}

    def rec(J: MonomialIdeal) -> LaurentZPoly:
        key = frozenset(J.gens)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if J.is_unit():
            out = LaurentZPoly(n)
        elif _pairwise_coprime(J.gens):
            out = LaurentZPoly.one(n)
            for g in J.gens:
                out = out * _one_minus(n, R.degree(g))
        else:
            x = _pivot(J.gens, pivot)
            e = [0] * n
            e[R.block_of[x]] = 1
            out = rec(J.add_var(x)) + rec(J.colon_var(x)).shift(tuple(e))
        memo[key] = out
        return out

    return rec(I)


def c_polynomial(K: LaurentZPoly) -> LaurentZPoly:
    """``K(1 - z_1, ..., 1 - z_n)``."""
    if not K.is_polynomial():
        raise ValueError("C-polynomial needs nonnegative exponents; shift the input first")
    n = K.nvars
    out: dict[Exp, int] = {}
    for e, c in K.coeffs.items():
        expansions = [[(k, (-1) ** k * comb(a, k)) for k in range(a + 1)] for a in e]
        acc = {(): c}
        for choices in expansions:
            nxt = {}
            for pre, v in acc.items():
                for k, b in choices:
                    nxt[pre + (k,)] = nxt.get(pre + (k,), 0) + v * b
            acc = nxt
        for f, v in acc.items():
            out[f] = out.get(f, 0) + v
    return LaurentZPoly(n, out)


def min_part(G: LaurentZPoly) -> LaurentZPoly:
    """Terms of ``G`` whose monomials are divisibility-minimal in its support."""
    supp = list(G.coeffs)
    keep = {
        e: c
        for e, c in G.coeffs.items()
        if not any(f != e and all(a <= b for a, b in zip(f, e)) for f in supp)
    }
    return LaurentZPoly(G.nvars, keep)


def _monomial_ideal(I) -> MonomialIdeal:
    if isinstance(I, MonomialIdeal):
        return I
    return I.initial_ideal()


def multidegree(I) -> LaurentZPoly:
    """Lowest-degree component of the C-polynomial (degree = codimension)."""
    J = _monomial_ideal(I)
    C = c_polynomial(k_polynomial(J))
    return C.component(J.codimension())


def g_multidegree(I) -> LaurentZPoly:
    return min_part(c_polynomial(k_polynomial(_monomial_ideal(I))))


def multiplicity_free(D: LaurentZPoly) -> bool:
    return all(c == 1 for c in D.coeffs.values())


@dataclass
class MixedMultiplicities:
    values: dict = field(default_factory=dict)
    flagged: list = field(default_factory=list)


def mdeg_to_mixed_multiplicities(mdeg: LaurentZPoly, block_sizes) -> MixedMultiplicities:
    """Translate ``MDeg`` into mixed multiplicities ``f(a) = e(a')``.

    Here ``a' = (d_i - 1 - a_i)``.  Terms with some ``a_i = d_i`` have no
    counterpart and are returned in ``flagged``.
    """
    d = tuple(block_sizes)
    if len(d) != mdeg.nvars:
        raise ValueError("block sizes do not match the number of variables")
    out = MixedMultiplicities()
    for e, c in mdeg.terms():
        if any(a >= di for a, di in zip(e, d)):
            out.flagged.append((e, c))
        else:
            out.values[tuple(di - 1 - a for a, di in zip(e, d))] = c
    return out
