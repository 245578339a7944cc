# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernels over bit-sliced Z2/Z4 words.

Same functions and results as ``_kernel_py``; words are held in 64-bit
machine integers, so anything wider than 64 coordinates is delegated to the
pure-Python implementation.
"""

from libc.stdlib cimport malloc, free

from . import _kernel_py

ctypedef unsigned long long u64

cdef int MAXBITS = 64
_LIMIT = 1 << 64

KIND_X = 0
KIND_UNIT = 1
KIND_TWO = 2

BACKEND = "cython"


cdef inline bint _fits(object v):
    return 0 <= v < _LIMIT


cdef inline int _entry(u64 lo, u64 hi, int c) nogil:
    return <int>(((lo >> c) & 1) | (((hi >> c) & 1) << 1))


cdef inline void _sub_multiple(u64 *lo, u64 *hi, int k, u64 plo, u64 phi,
                               u64 ymask) nogil:
    cdef u64 slo, shi
    k = (-k) & 3
    if k == 0:
        return
    elif k == 1:
        slo = plo
        shi = phi
    elif k == 2:
        slo = 0
        shi = plo & ymask
    else:
        slo = plo
        shi = phi ^ (plo & ymask)
    shi = hi[0] ^ shi ^ (lo[0] & slo & ymask)
    lo[0] = lo[0] ^ slo
    hi[0] = shi


def add(alo, ahi, blo, bhi, ymask):
    return _kernel_py.add(alo, ahi, blo, bhi, ymask)


def scale(lo, hi, k, ymask):
    return _kernel_py.scale(lo, hi, k, ymask)


def entry(lo, hi, col):
    return _kernel_py.entry(lo, hi, col)


def echelon(rows, ymask, cols, unit_only=False):
    rows = list(rows)
    cols = list(cols)
    if not _fits(ymask) or any(not _fits(lo) or not _fits(hi) for lo, hi in rows) \
            or any(c >= MAXBITS for c in cols):
        return _kernel_py.echelon(rows, ymask, cols, unit_only)

    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(cols)
    # every pivot can push at most one doubled row back into the pool
    cdef Py_ssize_t cap = nrows + ncols + 1
    cdef u64 *plo = <u64 *> malloc(cap * sizeof(u64))
    cdef u64 *phi = <u64 *> malloc(cap * sizeof(u64))
    cdef u64 *vlo = <u64 *> malloc((ncols + 1) * sizeof(u64))
    cdef u64 *vhi = <u64 *> malloc((ncols + 1) * sizeof(u64))
    cdef int *vcol = <int *> malloc((ncols + 1) * sizeof(int))
    cdef int *vkind = <int *> malloc((ncols + 1) * sizeof(int))
    if not plo or not phi or not vlo or not vhi or not vcol or not vkind:
        free(plo); free(phi); free(vlo); free(vhi); free(vcol); free(vkind)
        raise MemoryError()

    cdef u64 ym = ymask
    cdef bint uo = unit_only
    cdef Py_ssize_t n = 0, npiv = 0, i, j, idx
    cdef int c, kind, e, k
    cdef u64 bit, lo, hi, qlo, qhi
    try:
        for lo_o, hi_o in rows:
            if lo_o or hi_o:
                plo[n] = lo_o
                phi[n] = hi_o
                n += 1
        for j in range(ncols):
            c = cols[j]
            bit = (<u64> 1) << c
            idx = -1
            kind = 0
            if ym & bit:
                for i in range(n):
                    if plo[i] & bit:
                        idx = i
                        kind = 1
                        break
                if idx < 0 and not uo:
                    for i in range(n):
                        if phi[i] & bit:
                            idx = i
                            kind = 2
                            break
            elif not uo:
                for i in range(n):
                    if plo[i] & bit:
                        idx = i
                        break
            if idx < 0:
                continue

            lo = plo[idx]
            hi = phi[idx]
            # pop preserving pool order
            for i in range(idx, n - 1):
                plo[i] = plo[i + 1]
                phi[i] = phi[i + 1]
            n -= 1
            if kind == 1 and (hi & bit):
                hi = hi ^ (lo & ym)

            i = 0
            while i < n:
                e = _entry(plo[i], phi[i], c)
                if e:
                    k = (e >> 1) if kind == 2 else e
                    _sub_multiple(&plo[i], &phi[i], k, lo, hi, ym)
                i += 1
            # drop rows that became zero, preserving order
            idx = 0
            for i in range(n):
                if plo[i] or phi[i]:
                    plo[idx] = plo[i]
                    phi[idx] = phi[i]
                    idx += 1
            n = idx

            for i in range(npiv):
                e = _entry(vlo[i], vhi[i], c)
                k = (e >> 1) if kind == 2 else e
                if k:
                    _sub_multiple(&vlo[i], &vhi[i], k, lo, hi, ym)

            vcol[npiv] = c
            vkind[npiv] = kind
            vlo[npiv] = lo
            vhi[npiv] = hi
            npiv += 1
            if kind != 1 and not uo:
                if lo & ym:
                    plo[n] = 0
                    phi[n] = lo & ym
                    n += 1

        pivots = [(vcol[i], vkind[i], vlo[i], vhi[i]) for i in range(npiv)]
        rest = [(plo[i], phi[i]) for i in range(n)]
        return pivots, rest
    finally:
        free(plo); free(phi); free(vlo); free(vhi); free(vcol); free(vkind)


def reduce_word(pivots, lo, hi, ymask):
    if not (_fits(lo) and _fits(hi) and _fits(ymask)):
        return _kernel_py.reduce_word(pivots, lo, hi, ymask)
    cdef u64 wlo = lo, whi = hi, ym = ymask, qlo, qhi
    cdef int c, kind, e, k
    for c_o, kind_o, plo_o, phi_o in pivots:
        c = c_o
        if c >= MAXBITS:
            return _kernel_py.reduce_word(pivots, lo, hi, ymask)
        e = _entry(wlo, whi, c)
        if not e:
            continue
        kind = kind_o
        k = (e >> 1) if kind == 2 else e
        if k:
            qlo = plo_o
            qhi = phi_o
            _sub_multiple(&wlo, &whi, k, qlo, qhi, ym)
    return wlo, whi


def binary_echelon(vecs, cols):
    vecs = list(vecs)
    cols = list(cols)
    if any(not _fits(v) for v in vecs) or any(c >= MAXBITS for c in cols):
        return _kernel_py.binary_echelon(vecs, cols)
    cdef Py_ssize_t nv = len(vecs), ncols = len(cols)
    cdef u64 *pool = <u64 *> malloc((nv + 1) * sizeof(u64))
    cdef u64 *piv = <u64 *> malloc((ncols + 1) * sizeof(u64))
    cdef int *pcol = <int *> malloc((ncols + 1) * sizeof(int))
    if not pool or not piv or not pcol:
        free(pool); free(piv); free(pcol)
        raise MemoryError()
    cdef Py_ssize_t n = 0, npiv = 0, i, j, idx
    cdef u64 bit, p
    cdef int c
    try:
        for v in vecs:
            if v:
                pool[n] = v
                n += 1
        for j in range(ncols):
            c = cols[j]
            bit = (<u64> 1) << c
            idx = -1
            for i in range(n):
                if pool[i] & bit:
                    idx = i
                    break
            if idx < 0:
                continue
            p = pool[idx]
            for i in range(idx, n - 1):
                pool[i] = pool[i + 1]
            n -= 1
            idx = 0
            for i in range(n):
                if pool[i] & bit:
                    pool[i] ^= p
                if pool[i]:
                    pool[idx] = pool[i]
                    idx += 1
            n = idx
            for i in range(npiv):
                if piv[i] & bit:
                    piv[i] ^= p
            pcol[npiv] = c
            piv[npiv] = p
            npiv += 1
        return [(pcol[i], piv[i]) for i in range(npiv)]
    finally:
        free(pool); free(piv); free(pcol)


def span_words(basis, ymask):
    basis = list(basis)
    if not _fits(ymask) or any(not _fits(lo) or not _fits(hi) for lo, hi, _ in basis):
        return _kernel_py.span_words(basis, ymask)
    cdef Py_ssize_t total = 1
    for _, _, order in basis:
        total *= order
    cdef u64 *wlo = <u64 *> malloc(total * sizeof(u64))
    cdef u64 *whi = <u64 *> malloc(total * sizeof(u64))
    if not wlo or not whi:
        free(wlo); free(whi)
        raise MemoryError()
    cdef u64 ym = ymask, rlo, rhi, lo, hi
    cdef Py_ssize_t size = 1, base, i, t
    cdef int order_c
    try:
        wlo[0] = 0
        whi[0] = 0
        for rlo_o, rhi_o, order_o in basis:
            rlo = rlo_o
            rhi = rhi_o
            order_c = order_o
            base = 0
            for t in range(1, order_c):
                for i in range(size):
                    lo = wlo[base + i]
                    hi = whi[base + i]
                    wlo[base + size + i] = lo ^ rlo
                    whi[base + size + i] = hi ^ rhi ^ (lo & rlo & ym)
                base += size
            size *= order_c
        return [(wlo[i], whi[i]) for i in range(size)]
    finally:
        free(wlo); free(whi)
