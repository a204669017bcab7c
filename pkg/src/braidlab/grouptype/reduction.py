"""Support subgroup H, acting kernel N, and the reduced group algebra k(H/N).

For fg-abelian groups H is presented as a quotient of Z^m, one coordinate per
distinct degree h_1..h_m, and N as the lattice L = {a : ρ(Σ a_i h_i) = 1}, so
H/N ≅ Z^m/L is read off a Smith form.  L is found

* by enumeration when H is finite,
* from the exponent/sign lattice of the common eigenvalues when the h_i act
  simultaneously diagonalizably with eigenvalues ±c·v^z (c rational),
* from the order of ρ(h_1) when H is infinite cyclic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import sympy

from ..exactla import QQ, ExactMatrix, RatFunc, integer_kernel, simuldiag, smith_nf
from ..frt import DEFAULT_MAX_WORDS, largest_coideal, reduced_report
from ..frt.radical import annihilator
from .groups import FgAbelianGroup, TableGroup
from .ydmodule import GroupYDData, group_braiding, validate_group_yd, InvalidYDData

ENUMERATION_CAP = 10 ** 5


class UnsupportedGroupAction(RuntimeError):
    pass


@dataclass
class SupportKernel:
    case: str  # "finite" | "exponent-lattice" | "cyclic"
    support: tuple  # distinct degrees, generating H
    relations: tuple = ()  # fg-abelian: Z-basis of relations among the support in G
    lattice: tuple = ()  # fg-abelian: generators of L ⊇ relations
    h_elements: tuple | None = None  # finite case
    n_elements: tuple | None = None  # finite case

    @property
    def h_order(self):
        return len(self.h_elements) if self.h_elements is not None else None

    @property
    def n_order(self):
        return len(self.n_elements) if self.n_elements is not None else None


def _distinct(degrees) -> tuple:
    out = []
    for g in degrees:
        if g not in out:
            out.append(g)
    return tuple(out)


def _project(kernel, m) -> tuple:
    rows = []
    for vec in kernel:
        a = tuple(vec[:m])
        if any(a) and a not in rows:
            rows.append(a)
    return tuple(rows)


def relation_lattice(G: FgAbelianGroup, support) -> tuple:
    """Z-basis (possibly redundant) of {a ∈ Z^m : Σ a_i h_i = 0 in G}."""
    m = len(support)
    mods = [c for c, o in enumerate(G.orders) if o]
    rows = []
    for c in range(G.rank):
        row = [h[c] for h in support] + [0] * len(mods)
        if G.orders[c]:
            row[m + mods.index(c)] = G.orders[c]
        rows.append(row)
    return _project(integer_kernel(rows, m + len(mods)), m)


def _multiplicative(x) -> dict | None:
    """Exponent vector of ±c·v^z: {"sign": 0|1, "v": z, prime: e, ...}."""
    if isinstance(x, RatFunc):
        nz_num = [i for i, c in enumerate(x.num) if c]
        nz_den = [i for i, c in enumerate(x.den) if c]
        if len(nz_num) != 1 or len(nz_den) != 1:
            return None
        z = nz_num[0] - nz_den[0]
        c = Fraction(x.num[nz_num[0]], x.den[nz_den[0]])
    else:
        z = 0
        c = Fraction(x)
    if not c:
        return None
    out = {"sign": 1 if c < 0 else 0}
    if z:
        out["v"] = z
    c = abs(c)
    for p, e in sympy.factorint(c.numerator).items():
        out[p] = out.get(p, 0) + e
    for p, e in sympy.factorint(c.denominator).items():
        out[p] = out.get(p, 0) - e
    return out


def _exponent_lattice(mats):
    sd = simuldiag(mats)
    if not sd.ok:
        return None
    m = len(mats)
    exp_rows: list = []
    sign_rows: list = []
    for sp in sd.spaces:
        facs = [_multiplicative(x) for x in sp.values]
        if any(f is None for f in facs):
            return None
        keys = sorted({k for f in facs for k in f if k != "sign"}, key=str)
        for key in keys:
            exp_rows.append([f.get(key, 0) for f in facs])
        sign_rows.append([f["sign"] for f in facs])
    rows = []
    s = len(sign_rows)
    for r in exp_rows:
        rows.append(r + [0] * s)
    for t, r in enumerate(sign_rows):
        rows.append(r + [2 if u == t else 0 for u in range(s)])
    rows = [r for r in rows if any(r)]
    return _project(integer_kernel(rows, m + s), m)


def _matrix_order(M: ExactMatrix) -> int:
    """Order of M, 0 if infinite.

    In characteristic 0 a finite-order matrix is diagonalizable over the
    closure and each eigenvalue is a primitive k-th root of unity with
    φ(k) ≤ n, so the order divides the lcm of all such k.
    """
    n = M.nrows
    top = 1
    for k in range(1, 2 * n * n + 3):  # φ(k) ≥ sqrt(k/2)
        if sympy.totient(k) <= n:
            top = int(sympy.ilcm(top, k))
    if not M.power(top).is_identity():
        return 0
    return next(k for k in sorted(sympy.divisors(top)) if M.power(k).is_identity())


def support_and_kernel(d: GroupYDData) -> SupportKernel:
    verdict = validate_group_yd(d)
    if not verdict.valid:
        raise InvalidYDData(verdict.violation)
    G = d.group
    S = _distinct(d.degrees)
    if isinstance(G, TableGroup):
        H = G.closure(S)
        N = [h for h in H if d.rho(h).is_identity()]
        return SupportKernel("finite", S, h_elements=tuple(H), n_elements=tuple(N))
    m = len(S)
    rel = relation_lattice(G, S)
    if all(G.element_order(h) for h in S):
        words = {G.identity: (0,) * m}
        queue = [G.identity]
        for x in queue:
            for i, h in enumerate(S):
                y = G.mul(x, h)
                if y not in words:
                    if len(words) >= ENUMERATION_CAP:
                        raise UnsupportedGroupAction(f"support subgroup exceeds {ENUMERATION_CAP} elements")
                    a = list(words[x])
                    a[i] += 1
                    words[y] = tuple(a)
                    queue.append(y)
        H = tuple(queue)
        N = tuple(h for h in H if d.rho(h).is_identity())
        lat = rel + tuple(words[h] for h in N if any(words[h]))
        return SupportKernel("finite", S, rel, lat, H, N)
    mats = [d.rho(h) for h in S]
    lat = _exponent_lattice(mats)
    if lat is not None:
        return SupportKernel("exponent-lattice", S, rel, tuple(dict.fromkeys(rel + lat)))
    if m == 1:
        k = _matrix_order(mats[0])
        lat = ((k,),) if k else ()
        return SupportKernel("cyclic", S, rel, rel + lat)
    raise UnsupportedGroupAction(
        "kernel computation unsupported: support is infinite, not cyclic, and does not act "
        "diagonalizably with monomial eigenvalues"
    )


# ---------------------------------------------------------------------------


@dataclass
class ReducedGroupAlgebra:
    quotient: object  # FgAbelianGroup | TableGroup presenting H/N
    data: GroupYDData  # induced degrees and action over H/N
    invariants: tuple | None  # fg-abelian: orders of the cyclic factors (0 = Z)
    order: int | None  # None if infinite
    h_invariants: tuple | None = None

    def elements(self) -> list:
        Q = self.quotient
        if isinstance(Q, TableGroup):
            return list(range(Q.order))
        if not Q.is_finite():
            raise ValueError("H/N is infinite")
        return [tuple(x) for x in itertools.product(*(range(o) for o in Q.orders))]


def _smith_coordinates(lattice, m):
    """(kept coordinates, their orders, V, V⁻¹) for Z^m / lattice."""
    if lattice:
        sf = smith_nf([list(r) for r in lattice])
        V = [list(r) for r in sf.V]
        diag = [sf.D[t][t] if t < len(sf.D) else 0 for t in range(m)]
    else:
        V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        diag = [0] * m
    Vinv = ExactMatrix(V, QQ).inverse()
    Vinv = [[int(x) for x in r] for r in Vinv.rows]
    kept = [t for t in range(m) if diag[t] != 1]
    return kept, [diag[t] for t in kept], V, Vinv


def _invariants(lattice, m) -> tuple:
    _, orders, _, _ = _smith_coordinates(lattice, m)
    return tuple(orders)


def reduced_group_algebra(d: GroupYDData, sk: SupportKernel | None = None) -> ReducedGroupAlgebra:
    sk = sk or support_and_kernel(d)
    G = d.group
    if isinstance(G, TableGroup):
        H, N = sk.h_elements, set(sk.n_elements)
        coset_of = {}
        reps = []
        for h in sorted(H):
            if h in coset_of:
                continue
            c = len(reps)
            reps.append(h)
            for x in N:
                coset_of[G.mul(h, x)] = c
        names = [G.names[r] for r in reps]
        mul = [[coset_of[G.mul(a, b)] for b in reps] for a in reps]
        Q = TableGroup(names, mul)
        degrees = [coset_of[g] for g in d.degrees]
        action = {c: d.rho(r) for c, r in enumerate(reps)}
        data = GroupYDData(Q, degrees, action, d.field)
        return ReducedGroupAlgebra(Q, data, None, Q.order)
    m = len(sk.support)
    kept, orders, V, Vinv = _smith_coordinates(sk.lattice, m)
    Q = FgAbelianGroup(orders)
    pos = {h: i for i, h in enumerate(sk.support)}

    def image(a):
        x = [sum(a[i] * V[i][t] for i in range(m)) for t in kept]
        return Q.reduce(x)

    degrees = [image(tuple(1 if i == pos[g] else 0 for i in range(m))) for g in d.degrees]
    action = {}
    for j, t in enumerate(kept):
        lift = Vinv[t]
        mat = ExactMatrix.identity(d.n, d.field)
        for i, a in enumerate(lift):
            if a:
                mat = mat @ d.rho(sk.support[i]).power(a)
        action[j] = mat
    data = GroupYDData(Q, degrees, action, d.field)
    order = None
    if all(orders):
        order = 1
        for o in orders:
            order *= o
    return ReducedGroupAlgebra(Q, data, tuple(orders), order, _invariants(sk.relations, m))


# ---------------------------------------------------------------------------


class GroupAlgebraCoalgebra:
    """k[Q] for a finite group Q acting on M: Δg = g⊗g, ε(g) = 1."""

    def __init__(self, rga: ReducedGroupAlgebra):
        self.elems = rga.elements()
        self.data = rga.data
        self.dim = len(self.elems)
        self.field = rga.data.field
        self.n = rga.data.n
        self._act = {}

    def coproduct(self, s) -> dict:
        return {(s, s): self.field.one}

    def counit(self, s):
        return self.field.one

    def action(self, s) -> ExactMatrix:
        hit = self._act.get(s)
        if hit is None:
            hit = self.data.rho(self.elems[s])
            self._act[s] = hit
        return hit


@dataclass
class CrosscheckResult:
    rebuilt_matches: bool
    m_reduced: bool | None  # None when H/N is infinite
    frt: dict | None  # None when the truncation exceeds the word cap
    mismatches: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.rebuilt_matches and self.m_reduced is not False and not self.mismatches


def predicted_grouplike_relations(Q, elements: list, D: int) -> dict:
    """Relations among grouplikes x_a ∈ Q visible in degree ≤ D."""
    e = Q.identity
    powers = {}
    for a, x in enumerate(elements):
        y = e
        for k in range(1, D + 1):
            y = Q.mul(y, x)
            if y == e:
                powers[a] = k
                break
    comm, inv = None, []
    if D >= 2:
        comm = {}
        for a, x in enumerate(elements):
            for c, y in enumerate(elements):
                if a < c:
                    comm[(a, c)] = Q.mul(x, y) == Q.mul(y, x)
                if a <= c and Q.mul(x, y) == e:
                    inv.append((a, c))
    return {"powers": powers, "commutators": comm, "inverse_pairs": inv}


def ball_profile(Q, gens: list, D: int) -> tuple:
    """|B_d| − |B_{d−1}| for the word-length balls of ``gens`` in Q."""
    ball = {Q.identity}
    prof = [1]
    front = {Q.identity}
    for _ in range(D):
        nxt = {Q.mul(x, g) for x in front for g in gens}
        new = nxt - ball
        ball |= new
        prof.append(len(new))
        front = nxt
    return tuple(prof)


def compare_grouplikes(report, Q, diag_images: list, D: int) -> list:
    """Mismatches between the report's grouplike data and x_i := diag_images[i]
    (the predicted image of t̄_ii in Q)."""
    out = []
    n = len(diag_images)
    classes = report.grouplike_classes
    glike = set(report.grouplikes)
    for i in range(n):
        if (i, i) not in glike:
            out.append(f"t{i + 1}{i + 1} is not grouplike")
    pred_classes = {}
    for i, x in enumerate(diag_images):
        pred_classes.setdefault(x, []).append((i, i))
    got = sorted(sorted(p for p in cls if p[0] == p[1]) for cls in classes)
    want = sorted(pred_classes.values())
    if [c for c in got if c] != want:
        out.append(f"grouplike classes {got} differ from predicted {want}")
        return out
    elems = [diag_images[cls[0][0]] for cls in classes]
    pred = predicted_grouplike_relations(Q, elems, D)
    if pred["powers"] != report.power_relations:
        out.append(f"power relations {report.power_relations} differ from predicted {pred['powers']}")
    if D >= 2:
        if pred["commutators"] != report.commutators:
            out.append("grouplike commutators differ from the group")
        if sorted(pred["inverse_pairs"]) != sorted(report.inverse_pairs):
            out.append(f"inverse pairs {report.inverse_pairs} differ from predicted {pred['inverse_pairs']}")
    return out


def crosscheck_group_reduction(d: GroupYDData, D: int = 2, max_words: int = DEFAULT_MAX_WORDS) -> CrosscheckResult:
    sk = support_and_kernel(d)
    rga = reduced_group_algebra(d, sk)
    b = group_braiding(d)
    rebuilt = group_braiding(rga.data).matrix == b.matrix
    m_red = None
    if rga.order is not None and rga.order <= ENUMERATION_CAP:
        coalg = GroupAlgebraCoalgebra(rga)
        J, _ = largest_coideal(coalg, annihilator(coalg))
        m_red = J.dim == 0
    mismatches = []
    frt = None
    if (d.n ** 2) ** D <= max_words:
        rep = reduced_report(b, D, max_words=max_words, triangular_check=False)
        Q = rga.quotient
        images = list(rga.data.degrees)
        off = sorted((i, j) for i in range(d.n) for j in range(d.n) if i != j)
        if sorted(rep.vanishing) != off:
            mismatches.append("off-diagonal generator images do not all vanish")
        if rep.skew_primitives:
            mismatches.append("unexpected skew-primitive generator images")
        mismatches += compare_grouplikes(rep, Q, images, D)
        prof = ball_profile(Q, _distinct(images), D)
        if prof != tuple(rep.red_profile):
            mismatches.append(f"reduced dimension profile {rep.red_profile} differs from word growth {prof} in H/N")
        frt = {
            "degree": D,
            "reduced_profile": list(rep.red_profile),
            "predicted_profile": list(prof),
            "report": rep,
        }
    return CrosscheckResult(rebuilt, m_red, frt, mismatches)


__all__ = [
    "CrosscheckResult", "GroupAlgebraCoalgebra", "ReducedGroupAlgebra", "SupportKernel",
    "UnsupportedGroupAction", "ball_profile", "compare_grouplikes", "crosscheck_group_reduction",
    "predicted_grouplike_relations", "reduced_group_algebra", "relation_lattice", "support_and_kernel",
]
