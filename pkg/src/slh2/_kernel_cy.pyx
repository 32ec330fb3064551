# cython: language_level=3, binding=True
"""Compiled twin of _kernel_py: the same dict arithmetic, minus the
interpreter overhead on the inner loops.

Coefficients stay arbitrary-precision Python objects (gmpy2.mpq or
Fraction), so the speedup comes from loop, call and tuple handling, not
from numeric truncation; results are bit-identical to the pure kernel.
Keep this file in lockstep with _kernel_py.py.
"""

from math import gcd

from ._rat import Q


def poly_add(dict a, dict b):
    if not a:
        return b
    if not b:
        return a
    cdef dict out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_neg(dict a):
    cdef dict out = {}
    for k, v in a.items():
        out[k] = -v
    return out


def poly_sub(dict a, dict b):
    if not b:
        return a
    return poly_add(a, poly_neg(b))


def poly_scale(dict a, q):
    if not q:
        return {}
    cdef dict out = {}
    for k, v in a.items():
        out[k] = v * q
    return out


def poly_mul(dict a, dict b):
    if not a or not b:
        return {}
    cdef dict out = {}
    cdef long ha, ga, hb, gb
    for ka, va in a.items():
        ha = ka[0]
        ga = ka[1]
        for kb, vb in b.items():
            hb = kb[0]
            gb = kb[1]
            k = (ha + hb, ga + gb)
            s = out.get(k)
            if s is None:
                out[k] = va * vb
            else:
                s = s + va * vb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def rad_add(dict a, dict b):
    if not a:
        return b
    if not b:
        return a
    cdef dict out = dict(a)
    for r, p in b.items():
        q = out.get(r)
        if q is None:
            out[r] = p
        else:
            q = poly_add(q, p)
            if q:
                out[r] = q
            else:
                del out[r]
    return out


def rad_neg(dict a):
    cdef dict out = {}
    for r, p in a.items():
        out[r] = poly_neg(p)
    return out


def rad_sub(dict a, dict b):
    if not b:
        return a
    return rad_add(a, rad_neg(b))


def rad_scale(dict a, q):
    if not q:
        return {}
    cdef dict out = {}
    for r, p in a.items():
        out[r] = poly_scale(p, q)
    return out


def rad_mul(dict a, dict b):
    # sqrt(r)*sqrt(s) = g*sqrt((r//g)*(s//g)) with g = gcd(r, s)
    if not a or not b:
        return {}
    cdef dict out = {}
    for ra, pa in a.items():
        for rb, pb in b.items():
            g = gcd(ra, rb)
            r = (ra // g) * (rb // g)
            p = poly_mul(pa, pb)
            if g != 1:
                p = poly_scale(p, Q(g))
            q = out.get(r)
            if q is None:
                out[r] = p
            else:
                q = poly_add(q, p)
                if q:
                    out[r] = q
                else:
                    del out[r]
    return out


def sqrt_split(n):
    """n = s*s*r with r squarefree; returns (s, r).  Trial division."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n == 0:
        return 0, 1
    s, r = 1, 1
    d = 2
    cdef long e
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


def issquarefree(n):
    if n <= 0:
        return False
    return sqrt_split(n)[0] == 1
