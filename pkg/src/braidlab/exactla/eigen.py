"""Characteristic and minimal polynomials, base-field roots, eigenspaces and
simultaneous diagonalization."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm

from sympy import divisors

from . import kernels as K
from .linalg import ExactMatrix, Subspace, kernel_rows, to_sparse
from .scalars import QQ, QV, Field, RatFunc

# ---------------------------------------------------------------------------
# univariate polynomials over the base field: lists, lowest degree first


def up_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def up_mul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return up_trim(out)


def up_sub(a, b, zero):
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return up_trim([x - y for x, y in zip(a, b)])


def up_divmod(a, b, zero):
    a = up_trim(a)
    b = up_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r:
        f = r[-1] / lb
        s = len(r) - len(b)
        q[s] = f
        for i, y in enumerate(b):
            r[s + i] = r[s + i] - f * y
        r = up_trim(r)
    return up_trim(q), r


def up_monic(a):
    a = up_trim(a)
    if not a:
        return a
    lc = a[-1]
    return [x / lc for x in a]


def up_gcd(a, b, zero):
    a, b = up_trim(a), up_trim(b)
    while b:
        _, r = up_divmod(a, b, zero)
        a, b = b, r
    return up_monic(a)


def up_deriv(a):
    return up_trim([x * i for i, x in enumerate(a)][1:])


def up_eval(a, x, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def is_squarefree(p, zero) -> bool:
    return len(up_gcd(p, up_deriv(p), zero)) <= 1


# ---------------------------------------------------------------------------
# characteristic and minimal polynomials


def charpoly(A: ExactMatrix) -> list:
    """Coefficients of det(x*I - A), lowest degree first (monic).

    Reduces to upper Hessenberg form by similarity, then runs the standard
    three-term recurrence on the Hessenberg entries.
    """
    n = A.nrows
    F = A.field
    zero, one = F.zero, F.one
    H = [list(r) for r in A.rows]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in H:
                r[i], r[m] = r[m], r[i]
        t = H[m][m - 1]
        for i in range(m + 1, n):
            u = H[i][m - 1]
            if not u:
                continue
            u = u / t
            H[i] = [x - u * y for x, y in zip(H[i], H[m])]
            for r in H:
                r[m] = r[m] + u * r[i]
    # p[k] is the char poly of the leading k x k block
    p = [[one]]
    for k in range(1, n + 1):
        cur = up_mul([-H[k - 1][k - 1], one], p[k - 1], zero)
        prod = one
        for i in range(1, k):
            prod = prod * H[k - i][k - i - 1]
            if not prod:
                break
            coeff = prod * H[k - i - 1][k - 1]
            if coeff:
                cur = up_sub(cur, [coeff * c for c in p[k - i - 1]], zero)
        p.append(cur)
    return p[n]


def minimal_polynomial(A: ExactMatrix) -> list:
    """Monic minimal polynomial from the first linear dependency among the
    flattened powers I, A, A², ..."""
    n = A.nrows
    F = A.field
    powers = []
    P = ExactMatrix.identity(n, F)
    while True:
        vec = [x for r in P.rows for x in r]
        cols = [to_sparse(v) for v in powers] + [to_sparse(vec)]
        kern = _column_dependency(cols, n * n, F)
        if kern is not None:
            top = kern[len(powers)]
            return [kern.get(i, F.zero) / top for i in range(len(powers) + 1)]
        powers.append(vec)
        P = P @ A


def _column_dependency(cols, nrows, F):
    rows = [dict() for _ in range(nrows)]
    for j, c in enumerate(cols):
        for i, x in c.items():
            rows[i][j] = x
    kern = kernel_rows(rows, len(cols), F)
    for v in kern:
        if v.get(len(cols) - 1):
            return v
    return None


# ---------------------------------------------------------------------------
# roots in Q


def _integer_coeffs(p):
    """Scale a rational polynomial to a primitive integer one."""
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = K.p_content(tuple(ints))
    return [c // g for c in ints] if g else ints


def rational_roots(p) -> list:
    """Distinct rational roots of a rational polynomial (complete)."""
    p = up_trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    out = []
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    if k:
        out.append(Fraction(0))
        p = p[k:]
    if len(p) <= 1:
        return out
    ints = _integer_coeffs(p)
    a0, an = abs(ints[0]), abs(ints[-1])
    # a root num/den forces (den - num) | p(1) and (den + num) | p(-1)
    p1 = sum(ints)
    pm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(ints))
    cand = set()
    for num in divisors(a0):
        for den in divisors(an):
            if gcd(num, den) != 1:
                continue
            for s in (num, -num):
                if (p1 and den - s and p1 % (den - s)) or (pm1 and den + s and pm1 % (den + s)):
                    continue
                if _int_root(ints, s, den):
                    cand.add(Fraction(s, den))
    out.extend(sorted(cand))
    return out


def _int_root(ints, s, den) -> bool:
    acc = 0
    pw = 1
    d = len(ints) - 1
    # evaluate Σ a_i s^i den^(d-i) from the top coefficient down
    for i in range(d, -1, -1):
        acc = acc * s + ints[i] * pw
        pw *= den
    return acc == 0


# ---------------------------------------------------------------------------
# roots in Q(v)


def _clear_to_zv(p):
    """Scale a Q(v)-polynomial to one with coefficients in Z[v]."""
    den = (1,)
    for c in p:
        if c:
            g = K.p_gcd(den, c.den)
            den = K.p_mul(den, K.p_divexact(c.den, g))
    out = []
    for c in p:
        if not c:
            out.append(())
        else:
            out.append(K.p_divexact(K.p_mul(c.num, den), c.den))
    return out


def _lower_hull(points):
    hull = []
    for pt in sorted(points):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _monomial_candidates(zp):
    """Candidates c*v^k from the Newton polygon of a Z[v]-polynomial in x."""
    pts = [(i, K.p_val(a)) for i, a in enumerate(zp) if a]
    hull = _lower_hull(pts)
    cands = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        num = v2 - v1
        if num % (i2 - i1):
            continue
        k = -(num // (i2 - i1))
        # terms on the edge: val(a_i) + i*k minimal
        base = v1 + i1 * k
        edge = [Fraction(0)] * (i2 - i1 + 1)
        for i in range(i1, i2 + 1):
            a = zp[i]
            if a and K.p_val(a) + i * k == base:
                edge[i - i1] = Fraction(a[K.p_val(a)])
        for mu in rational_roots(edge):
            if mu:
                cands.append(RatFunc.monomial(mu, k))
    return cands


_SPECIALIZE = (2, 3, 5, 7, 11, 13)


def _interpolation_candidates(p, limit=4096):
    """Laurent-polynomial candidates P(v)/v^s with deg P <= 3 obtained by
    specializing v at rational points (a heuristic; every hit is verified)."""
    pts = []
    for x in _SPECIALIZE:
        try:
            special = [c.subs(x) if c else Fraction(0) for c in p]
        except ZeroDivisionError:
            continue
        if not up_trim(special) or len(up_trim(special)) != len(p):
            continue
        roots = rational_roots(special)
        if not roots:
            return []  # no root in Q(v) can specialize into an empty set
        pts.append((x, roots))
        if len(pts) == 4:
            break
    if len(pts) < 4:
        return []
    cands = []
    seen = set()
    count = 0
    for combo in itertools.product(*(r for _, r in pts)):
        count += 1
        if count > limit:
            break
        xs = [Fraction(x) for x, _ in pts]
        for s in range(4):
            ys = [y * x ** s for x, y in zip(xs, combo)]
            poly = _lagrange(xs, ys)
            if poly is None:
                continue
            cand = RatFunc(tuple(poly.numerators), (0,) * s + (poly.den,))
            if cand not in seen:
                seen.add(cand)
                cands.append(cand)
    return cands


class _IntPoly:
    __slots__ = ("numerators", "den")


def _lagrange(xs, ys):
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j != i:
                basis = up_mul(basis, [-xs[j], Fraction(1)], Fraction(0))
                denom *= xs[i] - xs[j]
        f = ys[i] / denom
        for k, b in enumerate(basis):
            coeffs[k] += f * b
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    out = _IntPoly()
    out.numerators = [int(c * den) for c in coeffs]
    out.den = den
    return out


def _roots_qv(p):
    zero = QV.zero
    found = []
    p = up_trim(p)
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    if k:
        found.append(zero)
        p = p[k:]
    while len(p) > 1:
        cands = _monomial_candidates(_clear_to_zv(p))
        hit = next((c for c in cands if not up_eval(p, c, zero)), None)
        if hit is None:
            cands = _interpolation_candidates(p)
            hit = next((c for c in cands if not up_eval(p, c, zero)), None)
        if hit is None:
            break
        found.append(hit)
        while len(p) > 1 and not up_eval(p, hit, zero):
            p, _ = up_divmod(p, [-hit, QV.one], zero)
    return found


def field_roots(p, field: Field) -> list:
    """Distinct roots of ``p`` in the base field.

    Complete over Q.  Over Q(v) this finds every root of the form c*v^k and,
    heuristically, low-degree Laurent polynomial roots; any root that is not
    found makes the caller report a non-split spectrum.
    """
    if field == QQ:
        return rational_roots(p)
    return _roots_qv([QV.coerce(c) for c in p])


def root_multiplicity(p, r, zero) -> int:
    m = 0
    one = r ** 0 if isinstance(r, RatFunc) else Fraction(1)
    while len(p) > 1 and not up_eval(p, r, zero):
        p, _ = up_divmod(p, [-r, one], zero)
        m += 1
    return m


# ---------------------------------------------------------------------------
# eigen reports


@dataclass(frozen=True)
class Eigenpair:
    value: object
    multiplicity: int
    basis: tuple  # dense vectors


@dataclass(frozen=True)
class EigenReport:
    pairs: tuple
    split: bool
    diagonalizable: bool
    charpoly: tuple = dc_field(repr=False)
    minpoly: tuple = dc_field(repr=False)

    @property
    def eigenvalues(self) -> list:
        return [p.value for p in self.pairs]


def eigen(A: ExactMatrix) -> EigenReport:
    if not A.is_square():
        raise ValueError("eigen needs a square matrix")
    F = A.field
    zero = F.zero
    n = A.nrows
    cp = charpoly(A)
    roots = sorted(field_roots(cp, F), key=F.sort_key)
    pairs = []
    total = 0
    for lam in roots:
        mult = root_multiplicity(cp, lam, zero)
        shifted = A - ExactMatrix.identity(n, F).scale(lam)
        pairs.append(Eigenpair(lam, mult, tuple(shifted.kernel())))
        total += mult
    split = total == n
    mp = minimal_polynomial(A)
    diag = split and is_squarefree(mp, zero)
    return EigenReport(tuple(pairs), split, diag, tuple(cp), tuple(mp))


# ---------------------------------------------------------------------------
# simultaneous diagonalization


@dataclass(frozen=True)
class CommonEigenspace:
    space: Subspace
    values: tuple


@dataclass(frozen=True)
class SimulDiagResult:
    ok: bool
    spaces: tuple = ()
    failure: str | None = None  # "non-commuting pair" | "defective matrix" | "non-split spectrum"
    detail: tuple = ()

    def __bool__(self):
        return self.ok


def simuldiag(As, dim: int | None = None, field: Field | None = None) -> SimulDiagResult:
    As = list(As)
    if not As:
        if dim is None:
            raise ValueError("simuldiag of an empty family needs dim")
        return SimulDiagResult(True, (CommonEigenspace(Subspace.whole(dim, field or QQ), ()),))
    n = As[0].nrows
    F = As[0].field
    for A in As:
        if not A.is_square() or A.nrows != n:
            raise ValueError("simuldiag: all matrices must be square of the same dimension")
    for i, j in itertools.combinations(range(len(As)), 2):
        if not As[i].commutes_with(As[j]):
            return SimulDiagResult(False, failure="non-commuting pair", detail=(i, j))
    reports = []
    for i, A in enumerate(As):
        rep = eigen(A)
        if not rep.split:
            return SimulDiagResult(False, failure="non-split spectrum", detail=(i,))
        if not rep.diagonalizable:
            return SimulDiagResult(False, failure="defective matrix", detail=(i,))
        reports.append(rep)
    pieces = [(Subspace.whole(n, F), ())]
    for rep in reports:
        new = []
        for U, vals in pieces:
            for pair in rep.pairs:
                W = U.intersect(Subspace(n, pair.basis, F))
                if W.dim:
                    new.append((W, vals + (pair.value,)))
        pieces = new
    return SimulDiagResult(True, tuple(CommonEigenspace(U, v) for U, v in pieces))
