# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the sparse term kernels in ``_pykernel``.

``mul_terms`` runs on native 128-bit keys and 128-bit integer accumulators
with an open-addressing hash table.  Any coefficient or key that does not
fit, or any overflow during accumulation, sends the call to the
Python-object path, so results are always exact.
"""

from libc.stdlib cimport malloc, calloc, free
from invcheck._pykernel import TermCapExceeded
from invcheck import _pykernel

cdef extern from *:
    """
    typedef __int128 i128_t;
    typedef unsigned __int128 u128_t;

    static inline u128_t u128_make(unsigned long long hi, unsigned long long lo) {
        return (((u128_t)hi) << 64) | (u128_t)lo;
    }
    static inline unsigned long long u128_hi(u128_t v) { return (unsigned long long)(v >> 64); }
    static inline unsigned long long u128_lo(u128_t v) { return (unsigned long long)v; }
    static inline unsigned long long i128_hi(i128_t v) { return (unsigned long long)(((u128_t)v) >> 64); }
    static inline unsigned long long i128_lo(i128_t v) { return (unsigned long long)((u128_t)v); }
    static inline i128_t i128_from_ll(long long v) { return (i128_t)v; }
    static inline int i128_is_neg(i128_t v) { return v < 0; }
    static inline i128_t i128_neg(i128_t v) { return -v; }
    static inline int i128_nonzero(i128_t v) { return v != 0; }
    static inline u128_t u128_add(u128_t a, u128_t b) { return a + b; }
    static inline int u128_eq(u128_t a, u128_t b) { return a == b; }
    static inline int i128_muladd_ovf(i128_t a, i128_t b, i128_t *acc) {
        i128_t p;
        if (__builtin_mul_overflow(a, b, &p)) return 1;
        return __builtin_add_overflow(*acc, p, acc);
    }
    static inline size_t u128_hash(u128_t k) {
        unsigned long long lo = (unsigned long long)k, hi = (unsigned long long)(k >> 64);
        unsigned long long h = lo * 0x9E3779B97F4A7C15ULL;
        h ^= (hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        h ^= h >> 31;
        return (size_t)h;
    }
    """
    ctypedef struct i128_t:
        pass
    ctypedef struct u128_t:
        pass
    u128_t u128_make(unsigned long long hi, unsigned long long lo)
    unsigned long long u128_hi(u128_t v)
    unsigned long long u128_lo(u128_t v)
    unsigned long long i128_hi(i128_t v)
    unsigned long long i128_lo(i128_t v)
    i128_t i128_from_ll(long long v)
    int i128_is_neg(i128_t v)
    i128_t i128_neg(i128_t v)
    int i128_nonzero(i128_t v)
    u128_t u128_add(u128_t a, u128_t b)
    int u128_eq(u128_t a, u128_t b)
    int i128_muladd_ovf(i128_t a, i128_t b, i128_t *acc)
    size_t u128_hash(u128_t k)


cdef object MASK64 = (1 << 64) - 1
cdef object LL_MIN = -(1 << 63)
cdef object LL_MAX = (1 << 63) - 1
cdef object KEY_LIMIT = 1 << 128


cdef object _i128_to_py(i128_t v):
    cdef bint neg = i128_is_neg(v)
    if neg:
        v = i128_neg(v)
    cdef object r = (<object>i128_hi(v) << 64) | <object>i128_lo(v)
    return -r if neg else r


cdef bint _load(dict d, u128_t *keys, i128_t *vals):
    """Copy a term dict into native arrays; False if anything does not fit."""
    cdef Py_ssize_t i = 0
    cdef object k, v
    for k, v in d.items():
        if k < 0 or k >= KEY_LIMIT or v < LL_MIN or v > LL_MAX:
            return False
        keys[i] = u128_make(<unsigned long long>(k >> 64), <unsigned long long>(k & MASK64))
        vals[i] = i128_from_ll(<long long>v)
        i += 1
    return True


cdef class _Table:
    cdef u128_t *keys
    cdef i128_t *vals
    cdef char *used
    cdef size_t cap
    cdef size_t count

    def __cinit__(self, size_t cap):
        self.cap = cap
        self.count = 0
        self.keys = <u128_t *>malloc(cap * sizeof(u128_t))
        self.vals = <i128_t *>malloc(cap * sizeof(i128_t))
        self.used = <char *>calloc(cap, 1)
        if not self.keys or not self.vals or not self.used:
            raise MemoryError()

    def __dealloc__(self):
        free(self.keys)
        free(self.vals)
        free(self.used)

    cdef inline size_t slot(self, u128_t k):
        cdef size_t mask = self.cap - 1
        cdef size_t h = u128_hash(k) & mask
        while self.used[h] and not u128_eq(self.keys[h], k):
            h = (h + 1) & mask
        return h

    cdef int grow(self) except -1:
        cdef size_t old_cap = self.cap, i, h
        cdef u128_t *old_keys = self.keys
        cdef i128_t *old_vals = self.vals
        cdef char *old_used = self.used
        self.cap = old_cap * 2
        self.keys = <u128_t *>malloc(self.cap * sizeof(u128_t))
        self.vals = <i128_t *>malloc(self.cap * sizeof(i128_t))
        self.used = <char *>calloc(self.cap, 1)
        if not self.keys or not self.vals or not self.used:
            raise MemoryError()
        for i in range(old_cap):
            if old_used[i]:
                h = self.slot(old_keys[i])
                self.used[h] = 1
                self.keys[h] = old_keys[i]
                self.vals[h] = old_vals[i]
        free(old_keys)
        free(old_vals)
        free(old_used)
        return 0


def mul_terms(dict a, dict b, Py_ssize_t cap):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef u128_t *ka = NULL
    cdef u128_t *kb = NULL
    cdef i128_t *ca = NULL
    cdef i128_t *cb = NULL
    cdef _Table table
    cdef size_t h, start
    cdef u128_t k
    cdef i128_t acc
    cdef bint overflow = False
    if na == 0 or nb == 0:
        return {}
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    ka = <u128_t *>malloc(na * sizeof(u128_t))
    ca = <i128_t *>malloc(na * sizeof(i128_t))
    kb = <u128_t *>malloc(nb * sizeof(u128_t))
    cb = <i128_t *>malloc(nb * sizeof(i128_t))
    try:
        if not ka or not ca or not kb or not cb:
            raise MemoryError()
        if not _load(a, ka, ca) or not _load(b, kb, cb):
            return _pykernel.mul_terms(a, b, cap)
        start = 1024
        while start < <size_t>(2 * (na + nb)):
            start <<= 1
        table = _Table(start)
        for i in range(na):
            for j in range(nb):
                k = u128_add(ka[i], kb[j])
                h = table.slot(k)
                if not table.used[h]:
                    table.used[h] = 1
                    table.keys[h] = k
                    table.vals[h] = i128_from_ll(0)
                    table.count += 1
                    if table.count * 2 > table.cap:
                        table.grow()
                        h = table.slot(k)
                if i128_muladd_ovf(ca[i], cb[j], &table.vals[h]):
                    overflow = True
                    break
            if overflow:
                break
            if <Py_ssize_t>table.count > cap:
                raise TermCapExceeded(f"expansion exceeded {cap} terms")
        if overflow:
            return _pykernel.mul_terms(a, b, cap)
        out = {}
        for h in range(table.cap):
            if table.used[h] and i128_nonzero(table.vals[h]):
                k = table.keys[h]
                out[(<object>u128_hi(k) << 64) | <object>u128_lo(k)] = _i128_to_py(table.vals[h])
        return out
    finally:
        free(ka)
        free(kb)
        free(ca)
        free(cb)


def combine(dict a, object sa, dict b, object sb):
    cdef dict out
    cdef object k, v, prev
    if sa == 1:
        out = dict(a)
    else:
        out = {k: v * sa for k, v in a.items()}
    for k, v in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = v * sb
        else:
            out[k] = prev + v * sb
    return {k: v for k, v in out.items() if v}


def reduce_zeta(dict terms, Py_ssize_t phi, object mask, object table):
    cdef dict out = {}
    cdef object k, c, base, kk, prev, t
    cdef Py_ssize_t e, j
    cdef tuple row
    for k, c in terms.items():
        e = k & mask
        if e < phi:
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        else:
            base = k - e
            row = <tuple>table[e]
            for j in range(len(row)):
                t = row[j]
                if t:
                    kk = base + j
                    prev = out.get(kk)
                    out[kk] = c * t if prev is None else prev + c * t
    return {k: v for k, v in out.items() if v}
