# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels.

Same API and semantics as ``_pykernels``: tuples of Python ints, lowest
degree first, no trailing zeros.
"""

from math import gcd

BACKEND = "cython"


cdef tuple _trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def p_trim(a):
    return _trim(list(a))


cpdef tuple p_add(tuple a, tuple b):
    cdef Py_ssize_t i, nb
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    if len(out) == nb:
        return _trim(out)
    return tuple(out)


cpdef tuple p_sub(tuple a, tuple b):
    cdef Py_ssize_t i, nb = len(b), na = len(a)
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    if nb >= na:
        return _trim(out)
    return tuple(out)


cpdef tuple p_neg(tuple a):
    return tuple([-c for c in a])


cpdef tuple p_scale(tuple a, c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cpdef tuple p_mul(tuple a, tuple b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef list out
    if na == 0 or nb == 0:
        return ()
    if na == 1:
        return p_scale(b, a[0])
    if nb == 1:
        return p_scale(a, b[0])
    out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return tuple(out)


cpdef p_content(tuple a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef tuple p_divint(tuple a, c):
    if c == 1:
        return a
    return tuple([x // c for x in a])


cpdef Py_ssize_t p_val(tuple a):
    cdef Py_ssize_t i
    for i in range(len(a)):
        if a[i]:
            return i
    return 0


cpdef tuple p_shift(tuple a, Py_ssize_t k):
    if k >= 0:
        if not a:
            return ()
        return (0,) * k + a
    return a[-k:]


cpdef tuple p_divexact(tuple a, tuple b):
    cdef Py_ssize_t db, dq, k, j
    cdef list rem, quot, out
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    if db == 0:
        c = b[0]
        out = []
        for x in a:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError("inexact integer division")
            out.append(q)
        return tuple(out)
    rem = list(a)
    lb = b[db]
    dq = len(a) - 1 - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        x = rem[k + db]
        if x:
            q, r = divmod(x, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k] = q
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - q * b[j]
    for k in range(db):
        if rem[k]:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


cpdef tuple p_prem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, dr, shift, j, i, n
    cdef list rem = list(a)
    cdef Py_ssize_t e
    if len(rem) - 1 < db:
        return _trim(rem)
    lb = b[db]
    e = len(rem) - 1 - db + 1
    n = len(rem)
    while n - 1 >= db and n:
        dr = n - 1
        lr = rem[dr]
        shift = dr - db
        for i in range(n):
            rem[i] = rem[i] * lb
        for j in range(db + 1):
            rem[shift + j] = rem[shift + j] - lr * b[j]
        while n and not rem[n - 1]:
            n -= 1
        del rem[n:]
        e -= 1
    if e:
        f = lb ** e
        for i in range(n):
            rem[i] = rem[i] * f
    return tuple(rem)


cpdef tuple p_primitive(tuple a):
    c = p_content(a)
    if a and a[len(a) - 1] < 0:
        c = -c
    if c == 0 or c == 1:
        return a
    return p_divint(a, c)


cdef tuple _sign_norm(tuple a):
    if a and a[len(a) - 1] < 0:
        return p_neg(a)
    return a


cdef tuple _gcd_subresultant(tuple a, tuple b):
    cdef Py_ssize_t delta
    cdef tuple r
    g = 1
    h = 1
    while True:
        delta = len(a) - len(b)
        r = p_prem(a, b)
        if not r:
            return b
        if len(r) == 1:
            return (1,)
        a = b
        b = p_divint(r, g * h ** delta)
        g = a[len(a) - 1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)


cpdef tuple p_gcd(tuple a, tuple b):
    cdef Py_ssize_t k, va, vb
    if not a:
        return _sign_norm(b)
    if not b:
        return _sign_norm(a)
    va = p_val(a)
    vb = p_val(b)
    k = va if va < vb else vb
    a = a[va:]
    b = b[vb:]
    ca = p_content(a)
    cb = p_content(b)
    c = gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return p_shift((c,), k)
    a = p_divint(a, ca)
    b = p_divint(b, cb)
    if len(a) < len(b):
        a, b = b, a
    g = p_primitive(_gcd_subresultant(a, b))
    return p_shift(p_scale(g, c), k)


def p_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


cpdef tuple rf_normalize(tuple num, tuple den):
    cdef Py_ssize_t vn, vd, m
    cdef tuple g
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return (), (1,)
    vn = p_val(num)
    vd = p_val(den)
    m = vn if vn < vd else vd
    if m:
        num = num[m:]
        den = den[m:]
    if len(den) == 1:
        d = den[0]
        gi = gcd(p_content(num), d)
        if d < 0:
            gi = -gi
        if gi != 1:
            num = p_divint(num, gi)
            den = (d // gi,)
        return num, den
    if len(num) == 1:
        gi = gcd(num[0], p_content(den))
    else:
        g = p_gcd(num, den)
        if len(g) > 1:
            num = p_divexact(num, g)
            den = p_divexact(den, g)
            gi = gcd(p_content(num), p_content(den))
        else:
            gi = g[0]
    if den[len(den) - 1] < 0:
        gi = -gi
    if gi != 1:
        num = p_divint(num, gi)
        den = p_divint(den, gi)
    return num, den


cpdef tuple rf_add(tuple an, tuple ad, tuple bn, tuple bd):
    if ad == bd:
        return rf_normalize(p_add(an, bn), ad)
    return rf_normalize(p_add(p_mul(an, bd), p_mul(bn, ad)), p_mul(ad, bd))


cpdef tuple rf_sub(tuple an, tuple ad, tuple bn, tuple bd):
    if ad == bd:
        return rf_normalize(p_sub(an, bn), ad)
    return rf_normalize(p_sub(p_mul(an, bd), p_mul(bn, ad)), p_mul(ad, bd))


cpdef tuple rf_mul(tuple an, tuple ad, tuple bn, tuple bd):
    if not an or not bn:
        return (), (1,)
    return rf_normalize(p_mul(an, bn), p_mul(ad, bd))


cpdef tuple rf_div(tuple an, tuple ad, tuple bn, tuple bd):
    if not bn:
        raise ZeroDivisionError("division by zero rational function")
    if not an:
        return (), (1,)
    return rf_normalize(p_mul(an, bd), p_mul(ad, bn))
