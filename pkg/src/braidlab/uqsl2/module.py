"""Simple modules of quantum sl2 over Q(v), q = v², and their braidings c^f.

Module formulas on the basis v_0..v_n (weight of v_i is n − 2i)::

    F v_i = [i+1] v_{i+1},   E v_i = [n−i+1] v_{i−1},   K v_i = q^{n−2i} v_i

with [m] = (q^m − q^{−m})/(q − q^{−1}).  The braiding is

    c^f(x⊗y) = Θ(f(wt x, wt y) y⊗x),   Θ = Σ_k q^{k(k−1)/2}(q − q⁻¹)^k/[k]! F^k⊗E^k,

and f(λ, μ) = v^{λμ}.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..braidcore import BraidedVectorSpace, check_braid_equation, flip_matrix
from ..exactla import QV, V, ExactMatrix

Q_PARAM = V ** 2


def qint(m: int):
    q = Q_PARAM
    return (q ** m - q ** (-m)) / (q - q ** (-1))


def qfactorial(m: int):
    out = QV.one
    for k in range(1, m + 1):
        out = out * qint(k)
    return out


@dataclass(frozen=True)
class UqModule:
    n: int  # highest weight; dim n + 1
    E: ExactMatrix
    F: ExactMatrix
    K: ExactMatrix

    @property
    def dim(self) -> int:
        return self.E.nrows

    @property
    def weights(self) -> tuple:
        return tuple(self.n - 2 * i for i in range(self.dim))


def build_simple_module(n: int) -> UqModule:
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    d = n + 1
    z = QV.zero
    E = [[z] * d for _ in range(d)]
    F = [[z] * d for _ in range(d)]
    for i in range(d):
        if i + 1 < d:
            F[i + 1][i] = qint(i + 1)
        if i >= 1:
            E[i - 1][i] = qint(n - i + 1)
    K = ExactMatrix.diag([Q_PARAM ** (n - 2 * i) for i in range(d)], QV)
    return UqModule(n, ExactMatrix(E, QV), ExactMatrix(F, QV), K)


@dataclass(frozen=True)
class UqVerdict:
    valid: bool
    failed: str | None = None

    def __bool__(self):
        return self.valid


def validate_uq_module(m: UqModule) -> UqVerdict:
    q = Q_PARAM
    if not m.K.is_invertible():
        return UqVerdict(False, "K invertible")
    Ki = m.K.inverse()
    if m.E @ m.F - m.F @ m.E != (m.K - Ki).scale(1 / (q - q ** (-1))):
        return UqVerdict(False, "EF - FE = (K - K^-1)/(q - q^-1)")
    if m.K @ m.E @ Ki != m.E.scale(q ** 2):
        return UqVerdict(False, "K E K^-1 = q^2 E")
    if m.K @ m.F @ Ki != m.F.scale(q ** (-2)):
        return UqVerdict(False, "K F K^-1 = q^-2 F")
    d = m.dim
    if not m.E.power(d).is_zero() or not m.F.power(d).is_zero():
        return UqVerdict(False, "E, F nilpotent")
    return UqVerdict(True)


class CommutationFactor:
    """f(λ, μ) = v^{λμ} on integer weights."""

    def __call__(self, lam: int, mu: int):
        return V ** (lam * mu)

    def is_bimultiplicative(self, weights) -> bool:
        ws = list(weights)
        return all(
            self(a + b, c) == self(a, c) * self(b, c) and self(c, a + b) == self(c, a) * self(c, b)
            for a in ws for b in ws for c in ws
        )


def theta_matrix(m: UqModule) -> ExactMatrix:
    q = Q_PARAM
    d = m.dim
    out = ExactMatrix.identity(d * d, QV)
    Fk, Ek = ExactMatrix.identity(d, QV), ExactMatrix.identity(d, QV)
    for k in range(1, d):
        Fk, Ek = Fk @ m.F, Ek @ m.E
        if Fk.is_zero() or Ek.is_zero():
            break
        ck = q ** (k * (k - 1) // 2) * (q - q ** (-1)) ** k / qfactorial(k)
        out = out + Fk.kron(Ek).scale(ck)
    return out


class ConventionError(AssertionError):
    pass


def build_cf_braiding(m: UqModule, f: CommutationFactor | None = None) -> BraidedVectorSpace:
    f = f or CommutationFactor()
    verdict = validate_uq_module(m)
    if not verdict.valid:
        raise ValueError(f"not a U_q(sl2)-module: {verdict.failed} fails")
    d = m.dim
    w = m.weights
    twist = ExactMatrix.diag([f(w[i], w[j]) for i in range(d) for j in range(d)], QV)
    C = theta_matrix(m) @ flip_matrix(d, QV) @ twist
    b = BraidedVectorSpace(C, tuple(f"v{i}" for i in range(d)))
    if not check_braid_equation(b).holds:
        raise ConventionError("c^f fails the braid equation")
    return b


def weight_support_holds(m: UqModule, b: BraidedVectorSpace) -> bool:
    """c^f(M_λ⊗M_μ) ⊆ Σ_{k≥0} M_{μ−2k}⊗M_{λ+2k}."""
    d = m.dim
    w = m.weights
    for i in range(d):
        for j in range(d):
            col = b.image(i, j)
            for k in range(d):
                for l in range(d):
                    if col[k * d + l]:
                        shift = w[j] - w[k]
                        if shift < 0 or shift % 2 or w[l] != w[i] + shift:
                            return False
    return True
