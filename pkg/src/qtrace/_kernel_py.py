"""Pure-Python term-map kernels.

The compiled twin (_kernel.pyx) implements the same three functions; results
must be bit-identical since all arithmetic is on Python ints.  Exponent
vectors are tuples of int numerators, coefficients are int numerators over a
common denominator kept by the caller.
"""

BIG = 2**62  # stands in for an unbounded window edge


def convolve(items_a, items_b, lo, hi):
    """Multiply-accumulate two sparse term lists, clipped to a box window.

    items_a/items_b: iterables of (exponent tuple, int numerator).
    lo/hi: per-variable int bounds (use +-BIG when unbounded).
    Returns a dict exponent tuple -> int with zero entries dropped.
    """
    out = {}
    nv = len(lo)
    idx = tuple(range(nv))
    for ea, ca in items_a:
        for eb, cb in items_b:
            e = tuple(ea[i] + eb[i] for i in idx)
            ok = True
            for i in idx:
                v = e[i]
                if v < lo[i] or v > hi[i]:
                    ok = False
                    break
            if not ok:
                continue
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c += ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def add_scaled(dst, items, scale):
    """dst[e] += scale*c for (e, c) in items, dropping zeros. Mutates dst."""
    for e, c in items:
        cur = dst.get(e)
        if cur is None:
            v = scale * c
            if v:
                dst[e] = v
        else:
            cur += scale * c
            if cur:
                dst[e] = cur
            else:
                del dst[e]
    return dst


def clip_terms(items, lo, hi):
    """Keep only terms inside the box [lo, hi]."""
    out = {}
    nv = len(lo)
    for e, c in items:
        ok = True
        for i in range(nv):
            v = e[i]
            if v < lo[i] or v > hi[i]:
                ok = False
                break
        if ok:
            out[e] = c
    return out
