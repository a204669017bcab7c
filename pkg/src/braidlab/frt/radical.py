"""Largest coideal inside an annihilator, and the right radical truncation.

The radical of A(c) meets the subcoalgebra A_{≤D} in the largest coideal of
A_{≤D} contained in W = {h : ε(h) = 0, h·M = 0}.  It is reached from W by
the fixpoint J ← J ∩ ker((π⊗π)∘Δ), π the projection onto A_{≤D}/J.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactla import Subspace
from ..exactla.linalg import kernel_rows, to_dense
from .truncation import FrtTruncation, _Reversed


class FiniteCoalgebra:
    """Protocol: ``dim``, ``field``, ``n`` (module dimension), ``coproduct(s)``
    as {(a, b): coeff}, ``counit(s)`` and ``action(s)`` (matrix on M)."""


def reversed_subspace(dim, vectors, field) -> Subspace:
    """Subspace whose echelon pivots are the largest indices, so that the
    quotient is represented by the smallest (lowest-degree) basis elements."""
    return Subspace(dim, vectors, field, priority=_Reversed(dim))


def annihilator(coalg) -> list:
    """Basis of {h : ε(h) = 0 and h acts as zero on M} (sparse vectors)."""
    n = coalg.n
    rows = [dict() for _ in range(n * n + 1)]
    for s in range(coalg.dim):
        e = coalg.counit(s)
        if e:
            rows[0][s] = e
        A = coalg.action(s)
        for j in range(n):
            for i in range(n):
                x = A.rows[j][i]
                if x:
                    rows[1 + j * n + i][s] = x
    return kernel_rows(rows, coalg.dim, coalg.field)


class Projection:
    """π : k^dim → k^dim / J in the coordinates of the non-pivot columns."""

    def __init__(self, J: Subspace):
        self.J = J
        self.free = sorted(c for c in range(J.n) if c not in J.ech.rows)
        self.pos = {c: p for p, c in enumerate(self.free)}
        self._units = {}

    @property
    def dim(self) -> int:
        return len(self.free)

    def unit(self, s) -> dict:
        hit = self._units.get(s)
        if hit is None:
            row = self.J.ech.rows.get(s)
            if row is None:
                hit = {self.pos[s]: self.J.field.one}
            else:
                hit = {self.pos[c]: -x for c, x in row.items() if c != s}
            self._units[s] = hit
        return hit

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for s, x in vec.items():
            for p, y in self.unit(s).items():
                v = out.get(p)
                v = x * y if v is None else v + x * y
                if v:
                    out[p] = v
                else:
                    out.pop(p, None)
        return out

    def apply_tensor(self, tens: dict) -> dict:
        out: dict = {}
        for (a, b), x in tens.items():
            ua, ub = self.unit(a), self.unit(b)
            for p, y in ua.items():
                xy = x * y
                for q, z in ub.items():
                    key = (p, q)
                    v = out.get(key)
                    v = xy * z if v is None else v + xy * z
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return out


def largest_coideal(coalg, W) -> tuple:
    """Largest coideal of ``coalg`` inside span(W); returns (J, iterations)."""
    field = coalg.field
    J = reversed_subspace(coalg.dim, W, field)
    its = 0
    deltas = [coalg.coproduct(s) for s in range(coalg.dim)]
    while J.dim:
        its += 1
        pi = Projection(J)
        proj = {}
        basis = J.sparse_basis()
        rows: dict = {}
        for col, h in enumerate(basis):
            img: dict = {}
            for s, x in h.items():
                if s not in proj:
                    proj[s] = pi.apply_tensor(deltas[s])
                for key, y in proj[s].items():
                    v = img.get(key)
                    v = x * y if v is None else v + x * y
                    if v:
                        img[key] = v
                    else:
                        img.pop(key, None)
            for key, y in img.items():
                rows.setdefault(key, {})[col] = y
        kern = kernel_rows(rows.values(), len(basis), field)
        if len(kern) == len(basis):
            break
        new = []
        for coeffs in kern:
            vec: dict = {}
            for col, c in coeffs.items():
                for s, x in basis[col].items():
                    v = vec.get(s)
                    v = c * x if v is None else v + c * x
                    if v:
                        vec[s] = v
                    else:
                        vec.pop(s, None)
            new.append(vec)
        J = reversed_subspace(coalg.dim, new, field)
    return J, its


def is_coideal(coalg, J: Subspace) -> bool:
    """Independent check: ε(J) = 0 and Δ(J) ⊆ J⊗A + A⊗J.

    Changes coordinates to a basis adapted to J (J's echelon rows followed by
    unit vectors of the free columns) and verifies that the coproduct of each
    element of J has no component in complement⊗complement.
    """
    field = coalg.field
    jb = J.sparse_basis()
    # in the adapted basis u = Σ α_r j_r + Σ β_c e_c, the free-column part β
    # is the reduction of u modulo J
    for h in jb:
        eps = field.zero
        for s, x in h.items():
            eps = eps + x * coalg.counit(s)
        if eps:
            return False
    red = {s: J.ech.reduce({s: field.one}) for s in range(coalg.dim)}
    for h in jb:
        tens: dict = {}
        for s, x in h.items():
            for (a, b), y in coalg.coproduct(s).items():
                tens[(a, b)] = tens.get((a, b), field.zero) + x * y
        block: dict = {}
        for (a, b), x in tens.items():
            if not x:
                continue
            for p, y in red[a].items():
                for q, z in red[b].items():
                    block[(p, q)] = block.get((p, q), field.zero) + x * y * z
        if any(block.values()):
            return False
    return True


@dataclass
class RadicalTruncation:
    truncation: FrtTruncation
    J: Subspace
    iterations: int
    annihilator_dim: int

    @property
    def dim(self) -> int:
        return self.J.dim

    def profile(self) -> tuple:
        """dim (J ∩ A_{≤d}) − dim (J ∩ A_{≤d−1}) for each d."""
        T = self.truncation
        deg = [e.degree for e in T.basis]
        counts = [0] * (T.D + 1)
        for p in self.J.ech.rows:
            counts[deg[p]] += 1
        return tuple(counts)

    def quotient_profile(self) -> tuple:
        a = self.truncation.profile
        j = self.profile()
        return tuple(x - y for x, y in zip(a, j))

    def basis_vectors(self) -> list:
        return self.J.sparse_basis()

    def contains(self, vec: dict) -> bool:
        return self.J.contains(vec)

    def projection(self) -> Projection:
        return Projection(self.J)


def radical_truncation(b, D: int, trunc: FrtTruncation | None = None, max_words=None) -> RadicalTruncation:
    from .truncation import DEFAULT_MAX_WORDS, graded_truncation

    T = trunc if trunc is not None else graded_truncation(b, D, max_words or DEFAULT_MAX_WORDS)
    W = annihilator(T)
    J, its = largest_coideal(T, W)
    return RadicalTruncation(T, J, its, len(W))


def dense_basis(J: Subspace) -> list:
    return [to_dense(r, J.n, J.field.zero) for r in J.sparse_basis()]


__all__ = [
    "FiniteCoalgebra", "Projection", "RadicalTruncation", "annihilator",
    "dense_basis", "is_coideal", "largest_coideal", "radical_truncation", "reversed_subspace",
]
