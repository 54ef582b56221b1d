# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernels; bit-identical twin of _kernel_py.

Coefficients stay Python ints (arbitrary precision); the win is the C-level
loop over term pairs and the packed window test.
"""

BIG = 2**62


def convolve(items_a, items_b, lo, hi):
    cdef list la = list(items_a)
    cdef list lb = list(items_b)
    cdef Py_ssize_t na = len(la), nb = len(lb)
    cdef Py_ssize_t nv = len(lo)
    cdef Py_ssize_t i, j, k
    cdef long[16] lov, hiv, eav
    cdef long v
    cdef bint ok
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, cur, prod
    cdef list ebuf

    if nv > 16:
        # fall back to a generic path for very wide exponent vectors
        from qtrace import _kernel_py
        return _kernel_py.convolve(la, lb, lo, hi)

    for k in range(nv):
        lov[k] = <long> lo[k]
        hiv[k] = <long> hi[k]

    for i in range(na):
        ea = <tuple> (<tuple> la[i])[0]
        ca = (<tuple> la[i])[1]
        for k in range(nv):
            eav[k] = <long> ea[k]
        for j in range(nb):
            eb = <tuple> (<tuple> lb[j])[0]
            ok = True
            ebuf = [0] * nv
            for k in range(nv):
                v = eav[k] + <long> eb[k]
                if v < lov[k] or v > hiv[k]:
                    ok = False
                    break
                ebuf[k] = v
            if not ok:
                continue
            cb = (<tuple> lb[j])[1]
            e = tuple(ebuf)
            prod = ca * cb
            cur = out.get(e)
            if cur is None:
                out[e] = prod
            else:
                cur = cur + prod
                if cur:
                    out[e] = cur
                else:
                    del out[e]
    return out


def add_scaled(dict dst, items, scale):
    cdef object cur, v
    cdef tuple e
    for e, c in items:
        cur = dst.get(e)
        if cur is None:
            v = scale * c
            if v:
                dst[e] = v
        else:
            cur = cur + scale * c
            if cur:
                dst[e] = cur
            else:
                del dst[e]
    return dst


def clip_terms(items, lo, hi):
    cdef Py_ssize_t nv = len(lo)
    cdef Py_ssize_t k
    cdef long v
    cdef bint ok
    cdef dict out = {}
    cdef tuple e
    for e, c in items:
        ok = True
        for k in range(nv):
            v = <long> e[k]
            if v < <long> lo[k] or v > <long> hi[k]:
                ok = False
                break
        if ok:
            out[e] = c
    return out
