"""Multigraded polynomial rings, term orders and sparse polynomials.

A :class:`BlockRing` has ``n`` blocks of variables; the ``j``-th variable of
block ``i`` is ``x{i}_{j}`` (1-based) unless other names are given, and has
degree ``e_i``.  Variables are indexed globally block by block, and the
ambient order is graded reverse lexicographic with variable 0 largest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Mapping, Sequence

from .field import QQ, Field, GF, PrimeField

Exp = tuple[int, ...]

MAX_EXPONENT = 2**15 - 1


def grevlex_key(e: Exp):
    return (sum(e), tuple(-x for x in reversed(e)))


class BlockRing:
    """``K[x_{ij} : 1 <= i <= n, 1 <= j <= d_i]`` with ``deg x_{ij} = e_i``."""

    def __init__(
        self,
        block_sizes: Sequence[int],
        names: Sequence[str] | None = None,
        field: Field | None = None,
        aliases: Mapping[str, int] | None = None,
    ):
        sizes = tuple(int(d) for d in block_sizes)
        if not sizes or any(d < 1 for d in sizes):
            raise ValueError(f"block sizes must be positive, got {block_sizes!r}")
        self.block_sizes = sizes
        self.field = GF() if field is None else field
        self.nvars = sum(sizes)
        self.nblocks = len(sizes)
        self.offsets = (0,) + tuple(accumulate(sizes))[:-1]
        if names is None:
            names = [f"x{i + 1}_{j + 1}" for i, d in enumerate(sizes) for j in range(d)]
        names = tuple(names)
        if len(names) != self.nvars or len(set(names)) != self.nvars:
            raise ValueError("need one distinct name per variable")
        self.names = names
        self.block_of = tuple(i for i, d in enumerate(sizes) for _ in range(d))
        self.position = tuple(j for d in sizes for j in range(d))
        lookup = {nm: k for k, nm in enumerate(names)}
        for i, d in enumerate(sizes):
            for j in range(d):
                lookup.setdefault(f"x{i + 1}_{j + 1}", self.offsets[i] + j)
        for nm, k in (aliases or {}).items():
            lookup[nm] = k
        self._lookup = lookup

    # identity -----------------------------------------------------------
    def _ident(self):
        return (self.block_sizes, self.names, self.field)

    def __eq__(self, other):
        return isinstance(other, BlockRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"BlockRing({list(self.block_sizes)}, field={self.field!r})"

    # variables ----------------------------------------------------------
    def var_index(self, block: int, j: int) -> int:
        """Global index of the ``j``-th variable (0-based) of ``block`` (0-based)."""
        if not 0 <= j < self.block_sizes[block]:
            raise IndexError(f"block {block} has {self.block_sizes[block]} variables")
        return self.offsets[block] + j

    def block_vars(self, block: int) -> range:
        o = self.offsets[block]
        return range(o, o + self.block_sizes[block])

    def index(self, name: str) -> int:
        try:
            return self._lookup[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def degree(self, exp: Exp) -> tuple[int, ...]:
        deg = [0] * self.nblocks
        for k, a in enumerate(exp):
            if a:
                deg[self.block_of[k]] += a
        return tuple(deg)

    def gen(self, k: int) -> "MultiPoly":
        e = [0] * self.nvars
        e[k] = 1
        return MultiPoly(self, {tuple(e): self.field.one})

    def gens(self) -> list["MultiPoly"]:
        return [self.gen(k) for k in range(self.nvars)]

    def __getitem__(self, name: str) -> "MultiPoly":
        return self.gen(self.index(name))

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c) -> "MultiPoly":
        c = self.field.convert(c)
        return MultiPoly(self, {} if c == 0 else {(0,) * self.nvars: c})

    def monomial(self, exp: Exp, coeff=1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exp): self.field.convert(coeff)})

    def poly(self, terms: Mapping[Exp, object] | Iterable[tuple[Exp, object]]) -> "MultiPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict = {}
        F = self.field
        for e, c in items:
            e = tuple(e)
            d[e] = F.add(d.get(e, F.zero), F.convert(c))
        return MultiPoly(self, d)

    def parse(self, text: str) -> "MultiPoly":
        return _Parser(self, text).parse()

    def with_field(self, field: Field) -> "BlockRing":
        aliases = {k: v for k, v in self._lookup.items() if k not in self.names}
        return BlockRing(self.block_sizes, self.names, field, aliases)

    def subring(self, keep: Iterable[int]) -> tuple["BlockRing", dict[int, int]]:
        """Ring on the variables ``keep``; blocks left empty are dropped.

        Returns the ring and the map old index -> new index.
        """
        keep = sorted(set(keep))
        sizes = []
        for b in range(self.nblocks):
            c = sum(1 for k in keep if self.block_of[k] == b)
            if c:
                sizes.append(c)
        index_map = {k: i for i, k in enumerate(keep)}
        return BlockRing(sizes, [self.names[k] for k in keep], self.field), index_map

    @cached_property
    def homogenization(self) -> "Homogenization":
        return Homogenization(self)


class Homogenization:
    """``S = T[y_1..y_u]`` with ``y_i`` appended to block ``i``.

    Within each block the original variables come first, then ``y_i``.
    """

    def __init__(self, T: BlockRing):
        self.source = T
        names = []
        x_map = {}
        y_vars = []
        k = 0
        for i in range(T.nblocks):
            for v in T.block_vars(i):
                x_map[v] = k
                names.append(T.names[v])
                k += 1
            y_vars.append(k)
            names.append(_fresh_name(f"y{i + 1}", T.names))
            k += 1
        self.target = BlockRing([d + 1 for d in T.block_sizes], names, T.field)
        self.x_map = x_map
        self.y_vars = tuple(y_vars)

    def embed(self, f: "MultiPoly") -> "MultiPoly":
        """Image of ``f`` under the inclusion ``T -> S``."""
        return f.rename(self.target, self.x_map)

    def homogenize(self, f: "MultiPoly", c: Sequence[int] | None = None) -> "MultiPoly":
        T, S = self.source, self.target
        if f.ring != T:
            raise ValueError("polynomial is not in the source ring")
        if f.is_zero():
            raise ValueError("cannot homogenize the zero polynomial")
        degs = {e: T.degree(e) for e, _ in f.terms}
        b = tuple(max(dg[i] for dg in degs.values()) for i in range(T.nblocks))
        if c is None:
            c = b
        else:
            c = tuple(int(x) for x in c)
            if len(c) != T.nblocks:
                raise ValueError("degree vector has the wrong length")
            for i in range(T.nblocks):
                if c[i] < b[i]:
                    raise ValueError(
                        f"target degree too small in block {i + 1}: need {b[i]}, got {c[i]}"
                    )
        out = {}
        for e, coef in f.terms:
            ne = [0] * S.nvars
            for k, a in enumerate(e):
                if a:
                    ne[self.x_map[k]] = a
            dg = degs[e]
            for i, y in enumerate(self.y_vars):
                ne[y] = c[i] - dg[i]
            out[tuple(ne)] = coef
        return MultiPoly(S, out)

    def dehomogenize(self, F: "MultiPoly") -> "MultiPoly":
        """Set every ``y_i`` to 1."""
        T = self.source
        inv = {v: k for k, v in self.x_map.items()}
        d: dict = {}
        Fd = T.field
        for e, c in F.terms:
            ne = [0] * T.nvars
            for k, a in enumerate(e):
                if a and k in inv:
                    ne[inv[k]] = a
            ne = tuple(ne)
            d[ne] = Fd.add(d.get(ne, Fd.zero), c)
        return MultiPoly(T, d)


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def homogenize(f: "MultiPoly", c: Sequence[int] | str | None = None) -> "MultiPoly":
    """Multigraded homogenization of ``f`` in ``f.ring.homogenization.target``.

    ``c=None`` (or ``"minimal"``) homogenizes to the least possible degree.
    """
    if isinstance(c, str):
        if c != "minimal":
            raise ValueError(f"unknown homogenization degree {c!r}")
        c = None
    return f.ring.homogenization.homogenize(f, c)


def dehomogenize(F: "MultiPoly", T: BlockRing) -> "MultiPoly":
    return T.homogenization.dehomogenize(F)


class MultiPoly:
    """Immutable sparse polynomial.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs sorted strictly
    decreasing in the ambient graded reverse lexicographic order, with no zero
    coefficients.
    """

    __slots__ = ("ring", "terms", "_dict", "_hash")

    def __init__(self, ring: BlockRing, d: Mapping[Exp, object]):
        self.ring = ring
        F = ring.field
        items = [(e, c) for e, c in d.items() if not F.is_zero(c)]
        for e, _ in items:
            if len(e) != ring.nvars:
                raise ValueError("exponent length does not match the ring")
            if any(a < 0 or a > MAX_EXPONENT for a in e):
                raise OverflowError(f"exponent out of range in {e}")
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        self.terms = tuple(items)
        self._dict = None
        self._hash = None

    @classmethod
    def _trusted(cls, ring, items):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = tuple(sorted(items, key=lambda t: grevlex_key(t[0]), reverse=True))
        obj._dict = None
        obj._hash = None
        return obj

    # basic protocol -----------------------------------------------------
    def as_dict(self) -> dict:
        if self._dict is None:
            self._dict = dict(self.terms)
        return self._dict

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        d = dict(self.as_dict())
        for e, c in other.terms:
            d[e] = F.add(d[e], c) if e in d else c
        return MultiPoly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return MultiPoly._trusted(self.ring, [(e, F.neg(c)) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "MultiPoly":
        F = self.ring.field
        c = F.convert(c)
        if F.is_zero(c):
            return self.ring.zero()
        return MultiPoly._trusted(self.ring, [(e, F.mul(c, a)) for e, a in self.terms])

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._coerce(other)
        F = self.ring.field
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.mul(c1, c2)
                d[e] = F.add(d[e], v) if e in d else v
        return MultiPoly(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, exp: Exp, coeff=None) -> "MultiPoly":
        F = self.ring.field
        items = [(tuple(a + b for a, b in zip(e, exp)), c) for e, c in self.terms]
        if coeff is not None:
            items = [(e, F.mul(coeff, c)) for e, c in items]
        return MultiPoly._trusted(self.ring, items)

    # structure ----------------------------------------------------------
    @property
    def lead_exp(self) -> Exp:
        """Leading exponent in the ambient order."""
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        return self.terms[0][1]

    def monic(self) -> "MultiPoly":
        return self.scale(self.ring.field.inv(self.lead_coeff))

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {self.ring.degree(e) for e, _ in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    @property
    def multidegree(self) -> tuple[int, ...] | None:
        """Multidegree of a nonzero multigraded-homogeneous polynomial, else ``None``."""
        degs = self.multidegrees()
        return next(iter(degs)) if len(degs) == 1 else None

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def homogeneous_components(self) -> dict[tuple[int, ...], "MultiPoly"]:
        comps: dict = {}
        for e, c in self.terms:
            comps.setdefault(self.ring.degree(e), []).append((e, c))
        return {dg: MultiPoly._trusted(self.ring, items) for dg, items in comps.items()}

    def support_vars(self) -> set[int]:
        return {k for e, _ in self.terms for k, a in enumerate(e) if a}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # transformations ----------------------------------------------------
    def rename(self, ring: BlockRing, index_map: Mapping[int, int]) -> "MultiPoly":
        """Move to ``ring`` sending variable ``k`` to ``index_map[k]``."""
        items = []
        for e, c in self.terms:
            ne = [0] * ring.nvars
            for k, a in enumerate(e):
                if a:
                    if k not in index_map:
                        raise ValueError(f"variable {self.ring.names[k]} has no image")
                    ne[index_map[k]] += a
            items.append((tuple(ne), ring.field.convert(c) if ring.field != self.ring.field else c))
        return ring.poly(items)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Ring map sending variable ``k`` to ``images[k]``."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring if images else self.ring
        cache: dict = {}

        def power(k, a):
            key = (k, a)
            if key not in cache:
                cache[key] = images[k] ** a
            return cache[key]

        F = target.field
        acc: dict = {}
        for e, c in self.terms:
            m = target.constant(c)
            for k, a in enumerate(e):
                if a:
                    m = m * power(k, a)
            for me, mc in m.terms:
                acc[me] = F.add(acc[me], mc) if me in acc else mc
        return MultiPoly(target, acc)

    # printing -----------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def _coeff_str(F: Field, c) -> str:
    if isinstance(F, PrimeField):
        return str(F.signed(c))
    return str(c)


def format_monomial(ring: BlockRing, e: Exp) -> str:
    parts = []
    for k, a in enumerate(e):
        if a == 1:
            parts.append(ring.names[k])
        elif a > 1:
            parts.append(f"{ring.names[k]}^{a}")
    return "*".join(parts) if parts else "1"


def format_poly(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    F = f.ring.field
    out = []
    for idx, (e, c) in enumerate(f.terms):
        s = _coeff_str(F, c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mon = format_monomial(f.ring, e)
        if mon == "1":
            body = s
        elif s == "1":
            body = mon
        else:
            body = f"{s}*{mon}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


class _Parser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``.

    ``term := factor ('*' factor)*``, ``factor := ('-'|'+') factor | atom ('^' int)?``,
    ``atom := number | name | '(' expr ')'``.
    """

    def __init__(self, ring: BlockRing, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(0).strip():
                kind = "num" if m.group(1) else "name" if m.group(2) else "op"
                self.toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def _take(self):
        t = self._peek()
        self.i += 1
        return t

    def _error(self, msg):
        pos = self._peek()[2]
        raise ValueError(f"{msg} at position {pos} in {self.text!r}")

    def parse(self) -> MultiPoly:
        if not self.toks:
            self._error("empty polynomial")
        f = self.expr()
        if self.i != len(self.toks):
            self._error("unexpected token")
        return f

    def expr(self):
        f = self.term()
        while self._peek()[1] in ("+", "-"):
            op = self._take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self._peek()[1] == "*":
            self._take()
            f = f * self.factor()
        return f

    def factor(self):
        kind, val, _ = self._peek()
        if val in ("-", "+"):
            self._take()
            f = self.factor()
            return -f if val == "-" else f
        f = self.atom()
        if self._peek()[1] == "^":
            self._take()
            kind, val, _ = self._take()
            if kind != "num" or "/" in val:
                self._error("expected a nonnegative integer exponent")
            f = f ** int(val)
        return f

    def atom(self):
        kind, val, _ = self._peek()
        if kind == "num":
            self._take()
            return self.ring.constant(val)
        if kind == "name":
            self._take()
            try:
                return self.ring.gen(self.ring.index(val))
            except ValueError:
                self.i -= 1
                self._error(f"unknown variable {val!r}")
        if val == "(":
            self._take()
            f = self.expr()
            if self._take()[1] != ")":
                self.i -= 1
                self._error("expected ')'")
            return f
        self._error("expected a number, variable or '('")


# ---------------------------------------------------------------------------
# term orders

@dataclass(frozen=True)
class TermOrder:
    """A monomial order given by an integer weight matrix.

    ``kind`` is ``"grevlex"``, ``"lex"``, ``"elim"`` (block elimination: the
    variables in ``front`` are larger than any monomial in the others, ties
    broken by grevlex) or ``"weight"`` (positive weight vector, ties broken by
    grevlex).  ``perm`` lists the variables from most to least significant;
    ``None`` means index order.
    """

    kind: str = "grevlex"
    perm: tuple[int, ...] | None = None
    front: frozenset[int] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim", "weight"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "elim" and self.front is None:
            raise ValueError("elimination order needs a front set")
        if self.kind == "weight" and (self.weights is None or any(w <= 0 for w in self.weights)):
            raise ValueError("weight order needs positive weights")

    def _perm(self, n: int) -> tuple[int, ...]:
        if self.perm is None:
            return tuple(range(n))
        if sorted(self.perm) != list(range(n)):
            raise ValueError("variable permutation does not match the ring")
        return self.perm

    def matrix(self, n: int) -> list[list[int]]:
        perm = self._perm(n)

        def unit(k, s=1):
            r = [0] * n
            r[k] = s
            return r

        if self.kind == "lex":
            return [unit(k) for k in perm]
        grev = [[1] * n] + [unit(k, -1) for k in reversed(perm[1:])]
        if self.kind == "grevlex":
            return grev
        if self.kind == "elim":
            return [[1 if k in self.front else 0 for k in range(n)]] + grev
        if len(self.weights) != n:
            raise ValueError("weight vector does not match the ring")
        return [list(self.weights)] + grev

    def key(self, n: int):
        """Sort key function on exponent tuples (larger key = larger monomial)."""
        rows = self.matrix(n)
        return lambda e: tuple(sum(w * a for w, a in zip(r, e)) for r in rows)

    def __str__(self):
        if self.kind == "elim":
            return f"elim{sorted(self.front)}"
        if self.kind == "weight":
            return f"weight{list(self.weights)}"
        return self.kind if self.perm is None else f"{self.kind}{list(self.perm)}"


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def elimination_order(front: Iterable[int]) -> TermOrder:
    return TermOrder("elim", front=frozenset(front))


def weight_order(weights: Sequence[int]) -> TermOrder:
    return TermOrder("weight", weights=tuple(int(w) for w in weights))


def parse_order(name: str) -> TermOrder:
    if name == "grevlex":
        return GREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown term order {name!r}; expected grevlex or lex")


def det(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a square polynomial matrix by Laplace expansion along row 0."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    out = None
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out if out is not None else M[0][0].ring.zero()


def maximal_minors(M: Sequence[Sequence[MultiPoly]]) -> list[MultiPoly]:
    """All ``r x r`` minors of an ``r x c`` matrix (``r <= c``)."""
    from itertools import combinations

    r = len(M)
    c = len(M[0]) if r else 0
    if r > c:
        return []
    return [det([[row[j] for j in cols] for row in M]) for cols in combinations(range(c), r)]


__all__ = [
    "QQ",
    "GF",
    "BlockRing",
    "Homogenization",
    "MultiPoly",
    "TermOrder",
    "GREVLEX",
    "LEX",
    "elimination_order",
    "weight_order",
    "parse_order",
    "homogenize",
    "dehomogenize",
    "det",
    "maximal_minors",
    "format_poly",
    "format_monomial",
    "grevlex_key",
]
