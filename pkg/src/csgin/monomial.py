"""Monomial ideals and their combinatorics."""

from __future__ import annotations

from typing import Iterable, Sequence

from .ring import BlockRing, MultiPoly, format_monomial, grevlex_key

Exp = tuple[int, ...]


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize_exponents(gens: Iterable[Exp]) -> list[Exp]:
    """Divisibility-minimal elements of ``gens`` (duplicates removed)."""
    cand = sorted(set(tuple(g) for g in gens), key=grevlex_key)
    out: list[Exp] = []
    for g in cand:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def minimal_transversals(edges: Iterable[frozenset]) -> list[frozenset]:
    """Minimal vertex covers of a hypergraph (Berge's incremental algorithm).

    An empty edge admits no cover; no edges gives the single empty cover.
    """
    covers = [frozenset()]
    for E in sorted(set(edges), key=len):
        new = set()
        for C in covers:
            if C & E:
                new.add(C)
            else:
                for v in E:
                    new.add(C | {v})
        ordered = sorted(new, key=len)
        covers = []
        for C in ordered:
            if not any(D <= C for D in covers):
                covers.append(C)
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (exponent tuples)."""

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: BlockRing, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(int(a) for a in g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars or any(a < 0 for a in g):
                raise ValueError(f"bad exponent vector {g}")
        self.ring = ring
        self.gens: tuple[Exp, ...] = tuple(
            sorted(minimalize_exponents(gens), key=grevlex_key, reverse=True)
        )
        self._hash = None

    @classmethod
    def from_polys(cls, ring: BlockRing, polys: Iterable[MultiPoly]) -> "MonomialIdeal":
        out = []
        for f in polys:
            if not f.is_monomial():
                raise ValueError(f"not a monomial: {f}")
            out.append(f.lead_exp)
        return cls(ring, out)

    @classmethod
    def parse(cls, ring: BlockRing, texts: Iterable[str]) -> "MonomialIdeal":
        return cls.from_polys(ring, [ring.parse(t) for t in texts])

    @classmethod
    def from_supports(cls, ring: BlockRing, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        out = []
        for s in supports:
            e = [0] * ring.nvars
            for k in s:
                e[k] = 1
            out.append(e)
        return cls(ring, out)

    # basic protocol -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and set(self.gens) == set(other.gens)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.gens)))
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, e) -> bool:
        if isinstance(e, MultiPoly):
            return all(self.contains_exp(t) for t, _ in e.terms)
        return self.contains_exp(tuple(e))

    def contains_exp(self, e: Exp) -> bool:
        return any(_divides(g, e) for g in self.gens)

    def __repr__(self):
        return f"MonomialIdeal({self.to_strings()})"

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"

    def to_strings(self) -> list[str]:
        return [format_monomial(self.ring, g) for g in self.gens]

    def polys(self) -> list[MultiPoly]:
        return [self.ring.monomial(g) for g in self.gens]

    def _check(self, other: "MonomialIdeal"):
        if self.ring != other.ring:
            raise ValueError("monomial ideals live in different rings")

    # structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def supports(self) -> list[frozenset]:
        return [frozenset(k for k, a in enumerate(g) if a) for g in self.gens]

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, [tuple(min(a, 1) for a in g) for g in self.gens])

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.ring, [tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens]
        )

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.ring, [tuple(max(a, b) for a, b in zip(g, h)) for g in self.gens for h in other.gens]
        )

    def colon_var(self, k: int) -> "MonomialIdeal":
        out = []
        for g in self.gens:
            g = list(g)
            if g[k]:
                g[k] -= 1
            out.append(g)
        return MonomialIdeal(self.ring, out)

    def add_var(self, k: int) -> "MonomialIdeal":
        e = [0] * self.ring.nvars
        e[k] = 1
        return MonomialIdeal(self.ring, [g for g in self.gens if not g[k]] + [tuple(e)])

    def is_subset(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(other.contains_exp(g) for g in self.gens)

    def uses_only(self, variables: Iterable[int]) -> bool:
        allowed = set(variables)
        return all(k in allowed for g in self.gens for k, a in enumerate(g) if a)

    def rename(self, ring: BlockRing, index_map) -> "MonomialIdeal":
        out = []
        for g in self.gens:
            e = [0] * ring.nvars
            for k, a in enumerate(g):
                if a:
                    e[index_map[k]] = a
            out.append(e)
        return MonomialIdeal(ring, out)

    # combinatorics --------------------------------------------------------
    def _require_squarefree(self, what: str):
        if not self.is_squarefree():
            raise ValueError(f"{what} needs a squarefree monomial ideal")

    def minimal_covers(self) -> list[frozenset]:
        """Minimal vertex covers of the supports of the generators."""
        return minimal_transversals(self.supports())

    def alexander_dual(self) -> "MonomialIdeal":
        self._require_squarefree("Alexander duality")
        return MonomialIdeal.from_supports(self.ring, self.minimal_covers())

    def minimal_primes(self) -> list["MonomialIdeal"]:
        """Minimal primes as monomial ideals generated by variables.

        The zero ideal has the single minimal prime ``(0)``.
        """
        self._require_squarefree("minimal primes")
        return [MonomialIdeal.from_supports(self.ring, [[k] for k in sorted(C)]) for C in self.minimal_covers()]

    def codimension(self) -> int:
        covers = minimal_transversals(self.supports())
        if not covers:
            return self.ring.nvars + 1
        return min(len(c) for c in covers)

    def dimension(self) -> int:
        """Krull dimension of ``S/I``; ``-1`` for the unit ideal."""
        return self.ring.nvars - self.codimension()

    def is_borel_fixed(self) -> bool:
        """Strong stability within blocks: ``m x_{i,j-1} / x_{ij}`` stays in the ideal."""
        R = self.ring
        for g in self.gens:
            for k, a in enumerate(g):
                if a and R.position[k] > 0:
                    h = list(g)
                    h[k] -= 1
                    h[k - 1] += 1
                    if not self.contains_exp(tuple(h)):
                        return False
        return True

    def degrees(self) -> list[tuple[int, ...]]:
        return [self.ring.degree(g) for g in self.gens]

    def to_json(self) -> list[str]:
        return self.to_strings()


def borel_prime(ring: BlockRing, a: Sequence[int]) -> MonomialIdeal:
    """``P_a``: the prime generated by the first ``a_i`` variables of block ``i``."""
    if len(a) != ring.nblocks or any(not 0 <= ai <= d for ai, d in zip(a, ring.block_sizes)):
        raise ValueError(f"invalid Borel prime index {tuple(a)} for blocks {ring.block_sizes}")
    return MonomialIdeal.from_supports(
        ring, [[ring.offsets[i] + j] for i, ai in enumerate(a) for j in range(ai)]
    )


def minimalize(ring: BlockRing, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I.intersect(J)


def intersect_all(ring: BlockRing, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    out = None
    for P in ideals:
        out = P if out is None else out.intersect(P)
    return out if out is not None else MonomialIdeal(ring, [(0,) * ring.nvars])


def is_squarefree(I: MonomialIdeal) -> bool:
    return I.is_squarefree()


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    return I.alexander_dual()


def minimal_primes(I: MonomialIdeal) -> list[MonomialIdeal]:
    return I.minimal_primes()


def is_borel_fixed(I: MonomialIdeal) -> bool:
    return I.is_borel_fixed()


def dimension(I: MonomialIdeal) -> int:
    return I.dimension()


def codimension(I: MonomialIdeal) -> int:
    return I.codimension()
