"""Pure-Python integer polynomial kernels.

Polynomials are tuples of Python ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  The compiled module ``_ckernels``
exposes the same functions with the same semantics.
"""

from math import gcd

BACKEND = "python"


def p_trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_sub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] -= c
    return p_trim(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def p_mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return p_scale(b, a[0])
    if len(b) == 1:
        return p_scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def p_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def p_divint(a, c):
    """Divide every coefficient by the integer ``c``; must be exact."""
    if c == 1:
        return a
    return tuple(x // c for x in a)


def p_val(a):
    for i, c in enumerate(a):
        if c:
            return i
    return 0


def p_shift(a, k):
    """Multiply by v**k (k >= 0) or divide by v**(-k) (k < 0, exact)."""
    if k >= 0:
        return (0,) * k + tuple(a) if a else ()
    return tuple(a[-k:])


def p_divexact(a, b):
    """Exact quotient a / b in Z[v]; raises ArithmeticError if inexact."""
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
                rem[k + j] -= q * b[j]
    for x in rem[:db]:
        if x:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


def p_prem(a, b):
    """Pseudo-remainder of a by b: lc(b)**(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    rem = list(a)
    da = len(rem) - 1
    if da < db:
        return p_trim(rem)
    lb = b[db]
    e = da - db + 1
    while len(rem) - 1 >= db and rem:
        dr = len(rem) - 1
        lr = rem[dr]
        shift = dr - db
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[shift + j] -= lr * b[j]
        rem = list(p_trim(rem))
        e -= 1
    if e:
        f = lb ** e
        rem = [x * f for x in rem]
    return p_trim(rem)


def p_primitive(a):
    c = p_content(a)
    if a and a[-1] < 0:
        c = -c
    return p_divint(a, c) if c not in (0, 1) else a


def _gcd_subresultant(a, b):
    # a, b primitive, deg a >= deg b >= 1
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
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)


def p_gcd(a, b):
    """Gcd in Z[v] with positive leading coefficient (subresultant PRS)."""
    if not a:
        return _sign_norm(b)
    if not b:
        return _sign_norm(a)
    k = min(p_val(a), p_val(b))
    a = p_shift(a, -p_val(a))
    b = p_shift(b, -p_val(b))
    ca = p_content(a)
    cb = p_content(b)
    c = gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return p_shift((c,), k)
    a = p_divint(a, ca)
    b = p_divint(b, cb)
    if len(a) < len(b):
        a, b = b, a
    g = _gcd_subresultant(a, b)
    g = p_primitive(g)
    return p_shift(p_scale(g, c), k)


def _sign_norm(a):
    if a and a[-1] < 0:
        return p_neg(a)
    return a


def p_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def rf_normalize(num, den):
    """Canonical (num, den): coprime in Z[v], lc(den) > 0."""
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
        g = gcd(p_content(num), d)
        if d < 0:
            g = -g
        if g != 1:
            num = p_divint(num, g)
            den = (d // g,)
        return num, den
    if len(num) == 1:
        g = gcd(num[0], p_content(den))
    else:
        g = p_gcd(num, den)
        if len(g) > 1:
            num = p_divexact(num, g)
            den = p_divexact(den, g)
            g = gcd(p_content(num), p_content(den))
        else:
            g = g[0]
    if den[-1] < 0:
        g = -g
    if g != 1:
        num = p_divint(num, g)
        den = p_divint(den, g)
    return num, den


def rf_add(an, ad, bn, bd):
    if ad == bd:
        return rf_normalize(p_add(an, bn), ad)
    return rf_normalize(p_add(p_mul(an, bd), p_mul(bn, ad)), p_mul(ad, bd))


def rf_sub(an, ad, bn, bd):
    if ad == bd:
        return rf_normalize(p_sub(an, bn), ad)
    return rf_normalize(p_sub(p_mul(an, bd), p_mul(bn, ad)), p_mul(ad, bd))


def rf_mul(an, ad, bn, bd):
    if not an or not bn:
        return (), (1,)
    return rf_normalize(p_mul(an, bn), p_mul(ad, bd))


def rf_div(an, ad, bn, bd):
    if not bn:
        raise ZeroDivisionError("division by zero rational function")
    if not an:
        return (), (1,)
    return rf_normalize(p_mul(an, bd), p_mul(ad, bn))
