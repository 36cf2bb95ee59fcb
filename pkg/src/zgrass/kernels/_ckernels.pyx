# cython: language_level=3
"""Compiled kernels; same contracts as ``_pykernels``."""
from libc.stdlib cimport malloc, free

from . import _pykernels

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef unsigned long long _MAXW = 0xFFFFFFFFFFFFFFFF


cdef inline int _sign64(unsigned long long u, unsigned long long v) nogil:
    cdef int par = 0
    cdef unsigned long long low
    cdef int pos
    if u & v:
        return 0
    while v:
        low = v & (~v + 1)
        pos = __builtin_ctzll(v)
        if pos < 63:
            par ^= __builtin_popcountll(u >> (pos + 1)) & 1
        v ^= low
    return -1 if par else 1


def word_sign(u, v):
    if u <= _MAXW and v <= _MAXW:
        return _sign64(u, v)
    return _pykernels.word_sign(u, v)


def mul_words(u, v):
    cdef int s
    if u <= _MAXW and v <= _MAXW:
        s = _sign64(u, v)
        return (s, u | v) if s else (0, 0)
    return _pykernels.mul_words(u, v)


def mul_dicts(dict a, dict b):
    cdef dict out = {}
    cdef unsigned long long uu, vv
    cdef int s
    if a and b and max(a) <= _MAXW and max(b) <= _MAXW:
        for u, ca in a.items():
            uu = u
            for v, cb in b.items():
                vv = v
                if uu & vv:
                    continue
                s = _sign64(uu, vv)
                w = uu | vv
                c = ca * cb
                if s > 0:
                    out[w] = out.get(w, 0) + c
                else:
                    out[w] = out.get(w, 0) - c
        return out
    return _pykernels.mul_dicts(a, b)


def perm_signs(perms, hmasks):
    cdef list out = []
    cdef list row
    cdef int n, a, b, par, pa, pb
    cdef unsigned long long h
    cdef int buf[64]
    for perm in perms:
        n = len(perm)
        for a in range(n):
            buf[a] = perm[a]
        row = []
        for hh in hmasks:
            h = hh
            par = 0
            for a in range(n):
                pa = buf[a]
                if not (h >> pa) & 1:
                    continue
                for b in range(a + 1, n):
                    pb = buf[b]
                    if pb < pa and (h >> pb) & 1:
                        par ^= 1
            row.append(-1 if par else 1)
        out.append(row)
    return out


def first_nonzero(perms, coefs, word_lists, long long modulus=0):
    cdef int nvar = len(word_lists)
    cdef int nperm = len(perms)
    cdef int i, j, k, var, s, sign
    cdef long long total, c
    cdef unsigned long long acc, w
    if nvar == 0 or nvar > 16:
        return _pykernels.first_nonzero(perms, coefs, word_lists, modulus)
    for c_obj in coefs:
        if abs(c_obj) >= (1 << 40):
            return _pykernels.first_nonzero(perms, coefs, word_lists, modulus)
    for ws in word_lists:
        if not ws:
            return None
        if max(ws) > _MAXW:
            return _pykernels.first_nonzero(perms, coefs, word_lists, modulus)
    cdef int *lens = <int *> malloc(nvar * sizeof(int))
    cdef int *offs = <int *> malloc(nvar * sizeof(int))
    cdef int *idx = <int *> malloc(nvar * sizeof(int))
    cdef int *pv = <int *> malloc(nperm * nvar * sizeof(int))
    cdef long long *cf = <long long *> malloc(nperm * sizeof(long long))
    cdef unsigned long long *cur = <unsigned long long *> malloc(nvar * sizeof(unsigned long long))
    total_words = sum(len(ws) for ws in word_lists)
    cdef unsigned long long *pool = <unsigned long long *> malloc(total_words * sizeof(unsigned long long))
    cdef int off = 0
    result = None
    try:
        for i in range(nvar):
            ws = word_lists[i]
            lens[i] = len(ws)
            offs[i] = off
            for j in range(lens[i]):
                pool[off + j] = ws[j]
            off += lens[i]
            idx[i] = 0
            cur[i] = pool[offs[i]]
        for i in range(nperm):
            cf[i] = coefs[i]
            for j in range(nvar):
                pv[i * nvar + j] = perms[i][j]
        while True:
            total = 0
            for i in range(nperm):
                acc = 0
                sign = 1
                for j in range(nvar):
                    var = pv[i * nvar + j]
                    w = cur[var]
                    s = _sign64(acc, w)
                    if s == 0:
                        sign = 0
                        break
                    sign *= s
                    acc |= w
                if sign > 0:
                    total += cf[i]
                elif sign < 0:
                    total -= cf[i]
            if modulus:
                total %= modulus
            if total != 0:
                result = tuple(idx[k] for k in range(nvar))
                break
            # odometer, last variable fastest (lexicographic order)
            k = nvar - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < lens[k]:
                    cur[k] = pool[offs[k] + idx[k]]
                    break
                idx[k] = 0
                cur[k] = pool[offs[k]]
                k -= 1
            if k < 0:
                break
    finally:
        free(lens); free(offs); free(idx); free(pv); free(cf); free(cur); free(pool)
    return result
