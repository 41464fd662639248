# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the hot kernels.

Mirrors ``_purekernels`` exactly: exponent keys are flat tuples of small
ints, coefficients are canonical {exponent: int} dicts. Coefficient
arithmetic stays on Python ints (arbitrary precision is required); the
speedup comes from running the pair/crossing loops at C speed.
"""

BACKEND_NAME = "native"


def key_product(tuple ka, tuple kb, tuple signs):
    """Entrywise key sum and the q-power picked up by normal reordering.

    Per crossing j, multiplying normal-form words with letter counts
    (s1, r1, d1) and (s2, r2, d2) costs q**delta with
    delta = d1*r2 - 2*r1*s2 at a positive crossing and
    delta = 2*d1*s2 - d1*r2 + 2*r1*s2 at a negative crossing.
    """
    cdef Py_ssize_t k = len(signs)
    cdef Py_ssize_t j, b
    cdef long s1, r1, d1, s2, r2, d2
    cdef long delta = 0
    if len(ka) != 3 * k or len(kb) != 3 * k:
        raise ValueError(f"key length mismatch: {len(ka)}, {len(kb)} for {k} crossings")
    cdef list out = [0] * (3 * k)
    for j in range(k):
        b = 3 * j
        s1 = ka[b]; r1 = ka[b + 1]; d1 = ka[b + 2]
        s2 = kb[b]; r2 = kb[b + 1]; d2 = kb[b + 2]
        if <long> signs[j] > 0:
            delta += d1 * r2 - 2 * r1 * s2
        else:
            delta += 2 * d1 * s2 - d1 * r2 + 2 * r1 * s2
        out[b] = s1 + s2
        out[b + 1] = r1 + r2
        out[b + 2] = d1 + d2
    return tuple(out), delta


def drl_keep(tuple key, long n):
    """True iff every crossing satisfies (#a + max(#b, #c)) < n."""
    cdef Py_ssize_t b, width = len(key)
    cdef long s, r, d
    for b in range(0, width, 3):
        s = key[b]
        r = key[b + 1]
        d = key[b + 2]
        if d + (s if s > r else r) >= n:
            return False
    return True


def poly_mul_shift(dict a, dict b, long shift):
    """q**shift * a * b on canonical coefficient dicts."""
    cdef dict out = {}
    cdef long ea, eb, e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + shift + eb
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def walk_products(list items_a, list items_b, tuple signs, long n_limit):
    """All pairwise products of two walk sums, merged into a canonical map.

    items_*: lists of (key, coeff dict). n_limit > 0 discards any product
    whose key fails drl_keep(key, n_limit) before accumulation; 0 disables
    pruning. Returns {key: coeff dict} with no zero coefficients.
    """
    cdef Py_ssize_t k = len(signs)
    cdef Py_ssize_t width = 3 * k
    cdef Py_ssize_t j, b
    cdef long s1, r1, d1, s2, r2, d2, s, r, d
    cdef long delta, e, ea, eb
    cdef bint keep
    cdef dict out = {}
    cdef dict acc, ca, cb
    cdef tuple ka, kb, tkey
    cdef list key_buf
    cdef bytes sgn = bytes(1 if <long> x > 0 else 0 for x in signs)
    cdef const unsigned char* sp = sgn
    for ka, ca in items_a:
        if len(ka) != width:
            raise ValueError(f"key length mismatch: {len(ka)} for {k} crossings")
        for kb, cb in items_b:
            if len(kb) != width:
                raise ValueError(f"key length mismatch: {len(kb)} for {k} crossings")
            key_buf = [0] * width
            delta = 0
            keep = True
            for j in range(k):
                b = 3 * j
                s1 = ka[b]; r1 = ka[b + 1]; d1 = ka[b + 2]
                s2 = kb[b]; r2 = kb[b + 1]; d2 = kb[b + 2]
                if sp[j]:
                    delta += d1 * r2 - 2 * r1 * s2
                else:
                    delta += 2 * d1 * s2 - d1 * r2 + 2 * r1 * s2
                s = s1 + s2
                r = r1 + r2
                d = d1 + d2
                if n_limit and d + (s if s > r else r) >= n_limit:
                    keep = False
                    break
                key_buf[b] = s
                key_buf[b + 1] = r
                key_buf[b + 2] = d
            if not keep:
                continue
            tkey = tuple(key_buf)
            acc = <dict> out.get(tkey)
            if acc is None:
                acc = {}
                out[tkey] = acc
            for ea, va in ca.items():
                for eb, vb in cb.items():
                    e = ea + delta + eb
                    v = acc.get(e)
                    if v is None:
                        acc[e] = va * vb
                    else:
                        v = v + va * vb
                        if v:
                            acc[e] = v
                        else:
                            del acc[e]
            if not acc:
                del out[tkey]
    return out
