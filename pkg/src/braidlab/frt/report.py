"""Structure of the reduced truncation A_{≤D}/J_{≤D}."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..braidcore import BraidedVectorSpace
from ..exactla import ExactMatrix, format_scalar, simuldiag
from .radical import Projection, RadicalTruncation, annihilator, is_coideal, largest_coideal, radical_truncation
from .truncation import DEFAULT_MAX_WORDS, FrtTruncation, format_word, gen_index


class QuotientCoalgebra:
    """A_{≤D}/J with basis the non-pivot representatives of J's echelon form."""

    def __init__(self, T: FrtTruncation, J):
        self.T = T
        self.pi = Projection(J)
        self.reps = self.pi.free
        self.dim = len(self.reps)
        self.field = T.field
        self.n = T.n
        self._deltas = {}

    def coproduct(self, p) -> dict:
        hit = self._deltas.get(p)
        if hit is None:
            hit = self.pi.apply_tensor(self.T.coproduct(self.reps[p]))
            self._deltas[p] = hit
        return hit

    def counit(self, p):
        return self.T.counit(self.reps[p])

    def action(self, p) -> ExactMatrix:
        return self.T.action(self.reps[p])

    def project(self, vec: dict) -> dict:
        return self.pi.apply(vec)

    def element_action(self, coords: dict) -> ExactMatrix:
        out = ExactMatrix.zeros(self.n, self.n, self.field)
        for p, x in coords.items():
            out = out + self.action(p).scale(x)
        return out

    def delta_of(self, vec: dict) -> dict:
        """(π⊗π)Δ of an element of A_{≤D} given in A-coordinates."""
        out: dict = {}
        for s, x in vec.items():
            for key, y in self.pi.apply_tensor(self.T.coproduct(s)).items():
                out[key] = out.get(key, self.field.zero) + x * y
        return {k: v for k, v in out.items() if v}


def _outer(u: dict, w: dict) -> dict:
    out = {}
    for a, x in u.items():
        for b, y in w.items():
            out[(a, b)] = x * y
    return out


def _add(*tensors) -> dict:
    out: dict = {}
    for t in tensors:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


@dataclass
class ReducedReport:
    degree: int
    a_profile: tuple
    red_profile: tuple
    radical: RadicalTruncation
    vanishing: list  # generator pairs (i, j) with t̄_ij = 0
    grouplikes: list  # generator pairs with grouplike image
    grouplike_classes: list  # lists of generator pairs sharing one image
    skew_primitives: list  # (x pair, g class index, h class index): Δx = x⊗g + h⊗x
    commutators: dict | None  # (a, b) class pair -> gh − hg ∈ J
    inverse_pairs: list  # class pairs (a, b) with gh − 1 ∈ J
    power_relations: dict  # class -> least k ≤ D with g^k − 1 ∈ J (absent if none)
    actions: list  # ExactMatrix per grouplike class
    diagonal_action: bool
    m_reduced: bool
    reconstruction: bool
    coideal_verified: bool
    triangular: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        T = self.radical.truncation
        n = T.n

        def pair(p):
            return f"t{p[0] + 1}{p[1] + 1}"

        return {
            "degree": self.degree,
            "A_dims": list(self.a_profile),
            "Ared_dims": list(self.red_profile),
            "radical_dims": list(self.radical.profile()),
            "radical_basis": [T.format_element(v) for v in sorted(self.radical.basis_vectors(), key=lambda v: max(v))],
            "vanishing_generators": [pair(p) for p in self.vanishing],
            "grouplikes": [[pair(p) for p in cls] for cls in self.grouplike_classes],
            "skew_primitives": [
                {"x": pair(x), "g": pair(self.grouplike_classes[g][0]) if g is not None else "1",
                 "h": pair(self.grouplike_classes[h][0]) if h is not None else "1"}
                for x, g, h in self.skew_primitives
            ],
            "grouplike_commutators_vanish": None if self.commutators is None else all(self.commutators.values()),
            "inverse_pairs": [[pair(self.grouplike_classes[a][0]), pair(self.grouplike_classes[b][0])] for a, b in self.inverse_pairs],
            "power_relations": {pair(self.grouplike_classes[a][0]): k for a, k in sorted(self.power_relations.items())},
            "grouplike_actions": [m.to_strings() for m in self.actions],
            "diagonal_action": self.diagonal_action,
            "m_reduced": self.m_reduced,
            "reconstruction": self.reconstruction,
            "coideal_verified": self.coideal_verified,
            "right_triangular_indicators": self.triangular or None,
            "n": n,
        }


def _grouplike_structure(T: FrtTruncation, Q: QuotientCoalgebra, R: RadicalTruncation):
    n = T.n
    field = T.field
    one_idx = T.index[(0, 0)]
    unit = Q.project({one_idx: field.one})
    images = {}
    for i in range(n):
        for j in range(n):
            images[(i, j)] = Q.project(T.generator_element(i, j))
    vanishing = [p for p, v in images.items() if not v]
    grouplikes = []
    for p, x in images.items():
        if not x:
            continue
        eps = sum((Q.counit(q) * c for q, c in x.items()), field.zero)
        if eps == 1 and Q.delta_of(T.generator_element(*p)) == _outer(x, x):
            grouplikes.append(p)
    classes: list = []
    for p in grouplikes:
        for cls in classes:
            if images[cls[0]] == images[p]:
                cls.append(p)
                break
        else:
            classes.append([p])
    cands = [(None, unit)] + [(a, images[cls[0]]) for a, cls in enumerate(classes)]
    skew = []
    for p, x in images.items():
        if not x or p in grouplikes:
            continue
        dx = Q.delta_of(T.generator_element(*p))
        hit = None
        for g, gv in cands:
            for h, hv in cands:
                if dx == _add(_outer(x, gv), _outer(hv, x)):
                    hit = (p, g, h)
                    break
            if hit:
                break
        if hit:
            skew.append(hit)
    return images, vanishing, grouplikes, classes, skew


def _in_radical(R: RadicalTruncation, vec: dict) -> bool:
    return R.contains({k: v for k, v in vec.items() if v})


def reduced_report(b: BraidedVectorSpace, D: int, max_words: int = DEFAULT_MAX_WORDS, triangular_check: bool = True,
                   radical: RadicalTruncation | None = None) -> ReducedReport:
    R = radical if radical is not None else radical_truncation(b, D, max_words=max_words)
    T = R.truncation
    n = T.n
    field = T.field
    Q = QuotientCoalgebra(T, R.J)
    images, vanishing, grouplikes, classes, skew = _grouplike_structure(T, Q, R)
    one = {T.index[(0, 0)]: field.one}
    rep = [gen_index(*cls[0], n) for cls in classes]

    commutators = None
    inverse_pairs = []
    powers = {}
    if D >= 2:
        commutators = {}
        for a in range(len(classes)):
            for c in range(len(classes)):
                gh = T.nf((rep[a], rep[c]))
                if a < c:
                    hg = T.nf((rep[c], rep[a]))
                    commutators[(a, c)] = _in_radical(R, _add(gh, {k: -v for k, v in hg.items()}))
                if a <= c and _in_radical(R, _add(gh, {k: -v for k, v in one.items()})):
                    inverse_pairs.append((a, c))
    for a in range(len(classes)):
        for k in range(1, D + 1):
            gk = T.nf((rep[a],) * k)
            if _in_radical(R, _add(gk, {kk: -v for kk, v in one.items()})):
                powers[a] = k
                break
    actions = [T.generator_action(g) for g in rep]
    diag = simuldiag(actions, dim=n, field=field).ok if actions else True

    # M-reducedness of the quotient
    Wq = annihilator(Q)
    Jq, _ = largest_coideal(Q, Wq)
    m_reduced = Jq.dim == 0

    # braiding from the quotient coaction and action
    C = b.matrix.rows
    recon = True
    for k in range(n):
        for l in range(n):
            act = Q.element_action(images[(k, l)])
            for j in range(n):
                for i in range(n):
                    if act.rows[j][i] != C[j * n + l][k * n + i]:
                        recon = False
    rep_obj = ReducedReport(
        degree=D,
        a_profile=T.profile,
        red_profile=R.quotient_profile(),
        radical=R,
        vanishing=vanishing,
        grouplikes=grouplikes,
        grouplike_classes=classes,
        skew_primitives=skew,
        commutators=commutators,
        inverse_pairs=inverse_pairs,
        power_relations=powers,
        actions=actions,
        diagonal_action=diag,
        m_reduced=m_reduced,
        reconstruction=recon,
        coideal_verified=is_coideal(T, R.J),
    )
    if triangular_check:
        rep_obj.triangular = right_triangular_indicators(b, D, R)
    return rep_obj


def right_triangular_indicators(b: BraidedVectorSpace, D: int, radical: RadicalTruncation | None = None,
                                max_words: int = DEFAULT_MAX_WORDS) -> dict:
    """In a detected right triangular basis: lower coefficients t̄'_ij (j < i)
    vanish, every t̄'_ii is grouplike, and (D ≥ 2) the t̄'_ii commute.

    For the basis m'_j = Σ_b P_bj m_b the coefficients are
    t'_ji = Σ_{b,l} P_bj t_bl (P⁻¹)_il, evaluated inside the truncation of c;
    the radical does not depend on the basis.
    """
    from ..triangular import detect_triangular

    det = detect_triangular(b, "right")
    if not det.holds:
        return {"detected": False, "status": det.status, "reason": det.reason}
    R = radical if radical is not None else radical_truncation(b, D, max_words=max_words)
    T = R.truncation
    n = T.n
    field = T.field
    P = ExactMatrix.from_columns(det.certificate.basis, field)
    Pinv = P.inverse()
    Q = QuotientCoalgebra(T, R.J)

    def coeff(j, i) -> dict:
        out: dict = {}
        for bb in range(n):
            for l in range(n):
                x = P.rows[bb][j] * Pinv.rows[i][l]
                if x:
                    g = gen_index(bb, l, n)
                    out[g] = out.get(g, field.zero) + x
        return {g: x for g, x in out.items() if x}

    def element(gens: dict) -> dict:
        return _add(*({s: x * y for s, y in T.nf((g,)).items()} for g, x in gens.items()))

    def product(u: dict, w: dict) -> dict:
        return _add(*({s: x * y * z for s, z in T.nf((g, h)).items()} for g, x in u.items() for h, y in w.items()))

    lower = all(not Q.project(element(coeff(i, j))) for i in range(n) for j in range(n) if j < i)
    diag_gl = True
    for i in range(n):
        vec = element(coeff(i, i))
        img = Q.project(vec)
        eps = sum((T.counit(s) * x for s, x in vec.items()), field.zero)
        diag_gl = diag_gl and eps == 1 and Q.delta_of(vec) == _outer(img, img)
    comm = None
    if D >= 2:
        comm = True
        for i in range(n):
            for j in range(i + 1, n):
                a, c = coeff(i, i), coeff(j, j)
                diff = _add(product(a, c), {s: -x for s, x in product(c, a).items()})
                comm = comm and _in_radical(R, diff)
    return {
        "detected": True,
        "lower_coefficients_vanish": lower,
        "diagonal_grouplike": diag_gl,
        "diagonal_commute": comm,
        "basis": [[format_scalar(x) for x in v] for v in det.certificate.basis],
    }


def describe_element(T: FrtTruncation, vec: dict) -> str:
    parts = []
    for s, x in sorted(vec.items()):
        parts.append(f"{format_scalar(x)}*{format_word(T.basis[s].word, T.n)}")
    return " + ".join(parts) if parts else "0"
