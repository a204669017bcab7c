"""The universal r-form of A(c) on monomials of the free algebra.

On generators r(t_ij⊗t_kl) = C[(j,l),(k,i)], the coefficient of m_j⊗m_l in
c(m_k⊗m_i).  It extends through

    r(ab⊗c) = Σ r(a⊗c₍₁₎) r(b⊗c₍₂₎),     r(a⊗bc) = Σ r(a₍₂₎⊗b) r(a₍₁₎⊗c),

with r(x⊗1) = ε(x) = r(1⊗x).
"""

from __future__ import annotations

import itertools

from ..braidcore import BraidedVectorSpace
from ..exactla import ExactMatrix


class RForm:
    def __init__(self, b: BraidedVectorSpace):
        self.b = b
        self.n = b.n
        self.field = b.field
        self._memo = {}

    def generator(self, g, h):
        """r(t_ij⊗t_kl) for g = i*n+j, h = k*n+l."""
        n = self.n
        i, j = divmod(g, n)
        k, l = divmod(h, n)
        return self.b.matrix.rows[j * n + l][k * n + i]

    def table(self) -> dict:
        N = self.n ** 2
        return {(g, h): self.generator(g, h) for g in range(N) for h in range(N)}

    def _counit(self, word):
        n = self.n
        for g in word:
            i, j = divmod(g, n)
            if i != j:
                return self.field.zero
        return self.field.one

    def _splits(self, word):
        """Δ of a monomial: pairs (left word, right word)."""
        n = self.n
        pairs = [divmod(g, n) for g in word]
        for mids in itertools.product(range(n), repeat=len(word)):
            yield (
                tuple(i * n + m for (i, _), m in zip(pairs, mids)),
                tuple(m * n + j for (_, j), m in zip(pairs, mids)),
            )

    def words(self, u: tuple, w: tuple):
        """r(u⊗w) for monomials u, w."""
        key = (u, w)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        F = self.field
        if not w:
            val = self._counit(u)
        elif not u:
            val = self._counit(w)
        elif len(u) == 1 and len(w) == 1:
            val = self.generator(u[0], w[0])
        elif len(w) == 1:
            # r(a u'⊗t_kl) = Σ_m r(a⊗t_km) r(u'⊗t_ml)
            n = self.n
            k, l = divmod(w[0], n)
            val = F.zero
            for m in range(n):
                x = self.words(u[:1], (k * n + m,))
                if x:
                    val = val + x * self.words(u[1:], (m * n + l,))
        else:
            # r(u⊗bc) = Σ r(u₍₂₎⊗b) r(u₍₁₎⊗c)
            val = F.zero
            head, tail = w[:1], w[1:]
            for u1, u2 in self._splits(u):
                x = self.words(u2, head)
                if x:
                    val = val + x * self.words(u1, tail)
        self._memo[key] = val
        return val

    def convolution_matrix(self) -> ExactMatrix:
        """T[(i,k),(j,l)] = r(t_ij⊗t_kl)."""
        n = self.n
        rows = []
        for i in range(n):
            for k in range(n):
                rows.append(tuple(self.generator(i * n + j, k * n + l) for j in range(n) for l in range(n)))
        return ExactMatrix(tuple(rows), self.field, _trusted=True)


def rform_generators(b: BraidedVectorSpace) -> RForm:
    return RForm(b)


def extend_rform(rf: RForm, x, h, slot: str = "first"):
    """r(x⊗h) (slot="first") or r(h⊗x) (slot="second") for a monomial x
    (tuple of generator numbers) and h a monomial or a {monomial: coeff} map."""
    x = tuple(x)
    if isinstance(h, dict):
        items = h.items()
    else:
        items = [(tuple(h), rf.field.one)]
    acc = rf.field.zero
    for w, c in items:
        if not c:
            continue
        val = rf.words(x, tuple(w)) if slot == "first" else rf.words(tuple(w), x)
        acc = acc + rf.field.coerce(c) * val
    return acc


def convolution_inverse_holds(rf: RForm) -> bool:
    """Both r⋆r̄ and r̄⋆r equal ε⊗ε on generator pairs, with r̄ = T⁻¹."""
    T = rf.convolution_matrix()
    if not T.is_invertible():
        return False
    Tinv = T.inverse()
    n = rf.n
    one, zero = rf.field.one, rf.field.zero
    for i, k, j, l in itertools.product(range(n), repeat=4):
        want = one if (i == j and k == l) else zero
        left = zero
        right = zero
        for a in range(n):
            for b in range(n):
                # r(t_ia⊗t_kb) r̄(t_aj⊗t_bl)  and  r̄(t_ia⊗t_kb) r(t_aj⊗t_bl)
                left = left + rf.generator(i * n + a, k * n + b) * Tinv.rows[a * n + b][j * n + l]
                right = right + Tinv.rows[i * n + k][a * n + b] * rf.generator(a * n + j, b * n + l)
        if left != want or right != want:
            return False
    return True
