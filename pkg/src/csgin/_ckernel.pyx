# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel for prime fields ``GF(p)``, ``p < 2**31``.

A monomial is a row of ``R + N`` int32 values: the ``R`` weighted degrees
under the order matrix followed by the ``N`` exponents.  Rows compare
lexicographically on the first ``R`` entries, multiplication adds rows and
divisibility compares the exponent tail.  A polynomial keeps its terms in
decreasing order; reduction is a sorted merge.
"""

from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memcpy
from libc.stdint cimport int32_t, int64_t

BACKEND = "cython"


cdef class Poly:
    cdef int n
    cdef int32_t* mons
    cdef int64_t* cf

    def __cinit__(self):
        self.n = 0
        self.mons = NULL
        self.cf = NULL

    def __dealloc__(self):
        free(self.mons)
        free(self.cf)


cdef Poly _alloc(int n, int W):
    cdef Poly f = Poly.__new__(Poly)
    f.n = n
    if n > 0:
        f.mons = <int32_t*> malloc(n * W * sizeof(int32_t))
        f.cf = <int64_t*> malloc(n * sizeof(int64_t))
        if f.mons == NULL or f.cf == NULL:
            raise MemoryError()
    return f


cdef inline int _cmp(const int32_t* a, const int32_t* b, int R) nogil:
    cdef int r
    for r in range(R):
        if a[r] != b[r]:
            return 1 if a[r] > b[r] else -1
    return 0


cdef inline bint _divides(const int32_t* a, const int32_t* b, int R, int W) nogil:
    cdef int k
    for k in range(R, W):
        if a[k] > b[k]:
            return False
    return True


cdef class Context:
    cdef readonly int n, R, W
    cdef readonly int64_t p
    cdef int32_t* rows
    cdef readonly object backend

    def __cinit__(self, int nvars, matrix, p):
        cdef int r, k
        mat = [[int(w) for w in row] for row in matrix]
        self.n = nvars
        self.R = len(mat)
        self.W = self.R + nvars
        self.p = int(p)
        self.backend = BACKEND
        if not 0 < self.p < 2**31:
            raise ValueError("compiled kernel needs 0 < p < 2**31")
        self.rows = <int32_t*> malloc(max(1, self.R * nvars) * sizeof(int32_t))
        for r in range(self.R):
            for k in range(nvars):
                self.rows[r * nvars + k] = mat[r][k]

    def __dealloc__(self):
        free(self.rows)

    cdef void _pack(self, exp, int32_t* out) except *:
        cdef int r, k, a
        cdef int64_t s
        cdef int n = self.n
        for k in range(n):
            a = exp[k]
            if a < 0 or a > 32767:
                raise OverflowError(f"exponent {a} out of range")
            out[self.R + k] = a
        for r in range(self.R):
            s = 0
            for k in range(n):
                s += <int64_t> self.rows[r * n + k] * out[self.R + k]
            if s > 2147483647 or s < -2147483647:
                raise OverflowError("weighted degree out of range")
            out[r] = <int32_t> s

    def make(self, terms):
        cdef int W = self.W
        cdef int64_t p = self.p
        cdef int i, m
        cdef int64_t c
        items = []
        for e, c0 in terms:
            c = int(c0) % p
            if c:
                items.append((tuple(e), c))
        m = len(items)
        cdef Poly tmp = _alloc(m, W)
        for i in range(m):
            self._pack(items[i][0], tmp.mons + i * W)
            tmp.cf[i] = items[i][1]
        # sort by order key, merge duplicate monomials
        keys = [tuple(tmp.mons[i * W + r] for r in range(W)) for i in range(m)]
        order = sorted(range(m), key=lambda t: keys[t], reverse=True)
        cdef Poly f = _alloc(m, W)
        cdef int j = -1
        cdef int src
        for i in range(m):
            src = order[i]
            if j >= 0 and _cmp(f.mons + j * W, tmp.mons + src * W, W) == 0:
                f.cf[j] = (f.cf[j] + tmp.cf[src]) % p
            else:
                if j >= 0 and f.cf[j] == 0:
                    j -= 1
                j += 1
                memcpy(f.mons + j * W, tmp.mons + src * W, W * sizeof(int32_t))
                f.cf[j] = tmp.cf[src]
        if j >= 0 and f.cf[j] == 0:
            j -= 1
        f.n = j + 1
        return f

    def to_terms(self, Poly f):
        cdef int i, k
        out = []
        for i in range(f.n):
            e = tuple(f.mons[i * self.W + self.R + k] for k in range(self.n))
            out.append((e, int(f.cf[i])))
        return out

    def lead_exp(self, Poly f):
        cdef int k
        return tuple(f.mons[self.R + k] for k in range(self.n))

    def is_zero(self, Poly f):
        return f.n == 0

    def nterms(self, Poly f):
        return f.n

    def monic(self, Poly f):
        if f.n == 0 or f.cf[0] == 1:
            return f
        cdef int64_t p = self.p
        cdef int64_t inv = pow(int(f.cf[0]), -1, int(p))
        cdef Poly g = _alloc(f.n, self.W)
        memcpy(g.mons, f.mons, f.n * self.W * sizeof(int32_t))
        cdef int i
        for i in range(f.n):
            g.cf[i] = f.cf[i] * inv % p
        return g

    cdef Poly _axpy(self, const int32_t* am, const int64_t* ac, int an,
                    const int32_t* bm, const int64_t* bc, int bn,
                    const int32_t* shift, int64_t c):
        """``a - c * shift * b`` for term arrays sorted decreasingly."""
        cdef int W = self.W, R = self.R
        cdef int64_t p = self.p
        cdef Poly out = _alloc(an + bn, W)
        cdef int32_t* tmp = <int32_t*> malloc(W * sizeof(int32_t))
        cdef int i = 0, j = 0, o = 0, k, s
        cdef int64_t v
        while j < bn or i < an:
            if j < bn:
                for k in range(W):
                    tmp[k] = bm[j * W + k] + shift[k]
            if j >= bn:
                s = 1
            elif i >= an:
                s = -1
            else:
                s = _cmp(am + i * W, tmp, R)
            if s > 0:
                memcpy(out.mons + o * W, am + i * W, W * sizeof(int32_t))
                out.cf[o] = ac[i]
                o += 1
                i += 1
            elif s < 0:
                memcpy(out.mons + o * W, tmp, W * sizeof(int32_t))
                out.cf[o] = (p - c * bc[j] % p) % p
                if out.cf[o]:
                    o += 1
                j += 1
            else:
                v = (ac[i] - c * bc[j] % p + p) % p
                if v:
                    memcpy(out.mons + o * W, tmp, W * sizeof(int32_t))
                    out.cf[o] = v
                    o += 1
                i += 1
                j += 1
        free(tmp)
        out.n = o
        return out

    def spoly(self, Poly f, Poly g):
        """S-polynomial of two monic polynomials."""
        cdef int W = self.W, R = self.R, n = self.n, k
        cdef int32_t* sf = <int32_t*> malloc(W * sizeof(int32_t))
        cdef int32_t* sg = <int32_t*> malloc(W * sizeof(int32_t))
        cdef int32_t a, b, l
        for k in range(R, W):
            a = f.mons[k]
            b = g.mons[k]
            l = a if a > b else b
            sf[k] = l - a
            sg[k] = l - b
        cdef int r
        cdef int64_t s1, s2
        for r in range(R):
            s1 = 0
            s2 = 0
            for k in range(n):
                s1 += <int64_t> self.rows[r * n + k] * sf[R + k]
                s2 += <int64_t> self.rows[r * n + k] * sg[R + k]
            sf[r] = <int32_t> s1
            sg[r] = <int32_t> s2
        # shifted f tail, then subtract shifted g tail
        cdef Poly ft = _alloc(f.n - 1, W)
        cdef int i
        for i in range(1, f.n):
            for k in range(W):
                ft.mons[(i - 1) * W + k] = f.mons[i * W + k] + sf[k]
            ft.cf[i - 1] = f.cf[i]
        cdef Poly out = self._axpy(ft.mons, ft.cf, ft.n, g.mons + W, g.cf + 1, g.n - 1, sg, 1)
        free(sf)
        free(sg)
        return out

    def reduce(self, Poly f, G, bint full=True):
        """Normal form of ``f`` modulo the monic polynomials ``G``."""
        cdef int W = self.W, R = self.R
        cdef int64_t p = self.p
        cdef list gl = list(G)
        cdef int ng = len(gl), t, k, start = 0
        cdef Poly g, cur = f, res
        cdef int32_t* shift = <int32_t*> malloc(W * sizeof(int32_t))
        cdef int32_t* rm = NULL
        cdef int64_t* rc = NULL
        cdef int rn = 0, rcap = 0
        cdef int64_t c
        cdef const int32_t* lead
        try:
            while start < cur.n:
                lead = cur.mons + start * W
                g = None
                for t in range(ng):
                    if _divides((<Poly> gl[t]).mons, lead, R, W):
                        g = <Poly> gl[t]
                        break
                if g is None:
                    if not full:
                        break
                    if rn == rcap:
                        rcap = 2 * rcap + 16
                        rm = <int32_t*> realloc(rm, rcap * W * sizeof(int32_t))
                        rc = <int64_t*> realloc(rc, rcap * sizeof(int64_t))
                        if rm == NULL or rc == NULL:
                            raise MemoryError()
                    memcpy(rm + rn * W, lead, W * sizeof(int32_t))
                    rc[rn] = cur.cf[start]
                    rn += 1
                    start += 1
                    continue
                c = cur.cf[start]
                for k in range(W):
                    shift[k] = lead[k] - g.mons[k]
                cur = self._axpy(cur.mons + (start + 1) * W, cur.cf + start + 1, cur.n - start - 1,
                                 g.mons + W, g.cf + 1, g.n - 1, shift, c)
                start = 0
            res = _alloc(rn + cur.n - start, W)
            if rn:
                memcpy(res.mons, rm, rn * W * sizeof(int32_t))
                memcpy(res.cf, rc, rn * sizeof(int64_t))
            if cur.n > start:
                memcpy(res.mons + rn * W, cur.mons + start * W, (cur.n - start) * W * sizeof(int32_t))
                memcpy(res.cf + rn, cur.cf + start, (cur.n - start) * sizeof(int64_t))
            return res
        finally:
            free(shift)
            free(rm)
            free(rc)
