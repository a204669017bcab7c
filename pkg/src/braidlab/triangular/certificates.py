"""Triangularity with respect to a given ordered basis.

For the right side c(x⊗y) = β_{x,y} y⊗x + Σ_{z>x} w_{x,y,z}⊗z; for the
left side c(x⊗y) = γ_{x,y} y⊗x + Σ_{z>y} z⊗v_{x,y,z}.  Positions in the
basis list are the order: position 0 is the smallest element.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..braidcore import BraidedVectorSpace, tensor
from ..exactla import ExactMatrix, format_scalar


class DegenerateBasis(ValueError):
    pass


@dataclass(frozen=True)
class TriangularityCertificate:
    side: str  # "left" | "right"
    basis: tuple  # vectors in input coordinates, position 0 smallest
    coeffs: dict  # (x, y) -> γ_{x,y} or β_{x,y}; positions
    residuals: dict  # (x, y, z) -> vector in input coordinates (nonzero only)

    @property
    def n(self) -> int:
        return len(self.basis)

    def rebuild(self, field) -> ExactMatrix:
        """The operator defined by the certificate, in input coordinates."""
        n = self.n
        P = ExactMatrix.from_columns(self.basis, field)
        cols = [None] * (n * n)
        images = {}
        for (x, y), k in self.coeffs.items():
            vx, vy = self.basis[x], self.basis[y]
            img = [k * t for t in tensor(vy, vx)]
            for (a, b, z), w in self.residuals.items():
                if (a, b) != (x, y):
                    continue
                vz = self.basis[z]
                extra = tensor(w, vz) if self.side == "right" else tensor(vz, w)
                img = [p + q for p, q in zip(img, extra)]
            images[(x, y)] = tuple(img)
        # images are given on the basis x⊗y; convert to the coordinate basis
        Pi = P.inverse()
        for (x, y), img in images.items():
            cols[x * n + y] = img
        img_mat = ExactMatrix.from_columns(cols, field)
        return img_mat @ Pi.kron(Pi)

    def to_json(self) -> dict:
        n = self.n
        return {
            "side": self.side,
            "basis": [[format_scalar(self.basis[j][i]) for j in range(n)] for i in range(n)],
            "coefficients": [
                {"x": x + 1, "y": y + 1, "value": format_scalar(v)} for (x, y), v in sorted(self.coeffs.items())
            ],
            "residuals": [
                {"x": x + 1, "y": y + 1, "z": z + 1, "vector": [format_scalar(t) for t in w]}
                for (x, y, z), w in sorted(self.residuals.items())
            ],
        }


@dataclass(frozen=True)
class TriangularityViolation:
    side: str
    x: int
    y: int
    z: int
    reason: str  # "lower component" | "off-diagonal component" | "zero leading coefficient"

    def __bool__(self):
        return False


def _basis_matrix(b: BraidedVectorSpace, basis) -> ExactMatrix:
    F = b.field
    vecs = [tuple(F.coerce(t) for t in v) for v in basis]
    if len(vecs) != b.n or any(len(v) != b.n for v in vecs):
        raise DegenerateBasis("basis must consist of n vectors of length n")
    P = ExactMatrix.from_columns(vecs, F)
    if not P.is_invertible():
        raise DegenerateBasis("basis vectors are linearly dependent")
    return P


def table_in_basis(b: BraidedVectorSpace, P: ExactMatrix) -> ExactMatrix:
    Pi = P.inverse()
    return Pi.kron(Pi) @ b.matrix @ P.kron(P)


def check_triangular(b: BraidedVectorSpace, basis, side: str):
    """Certificate, or the first violated (x, y, z) in the given order."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    P = _basis_matrix(b, basis)
    n = b.n
    Cp = table_in_basis(b, P).rows
    vecs = P.columns()
    F = b.field
    coeffs, residuals = {}, {}
    for x in range(n):
        for y in range(n):
            col = [Cp[r][x * n + y] for r in range(n * n)]
            lead = col[y * n + x]
            # (k, l): first-leg index k, second-leg index l
            if side == "right":
                for z in range(x + 1):
                    for k in range(n):
                        if col[k * n + z] and not (z == x and k == y):
                            reason = "lower component" if z < x else "off-diagonal component"
                            return TriangularityViolation(side, x, y, z, reason)
                if not lead:
                    return TriangularityViolation(side, x, y, x, "zero leading coefficient")
                for z in range(x + 1, n):
                    w = [F.zero] * n
                    for k in range(n):
                        c = col[k * n + z]
                        if c:
                            w = [a + c * t for a, t in zip(w, vecs[k])]
                    if any(w):
                        residuals[(x, y, z)] = tuple(w)
            else:
                for z in range(y + 1):
                    for l in range(n):
                        if col[z * n + l] and not (z == y and l == x):
                            reason = "lower component" if z < y else "off-diagonal component"
                            return TriangularityViolation(side, x, y, z, reason)
                if not lead:
                    return TriangularityViolation(side, x, y, y, "zero leading coefficient")
                for z in range(y + 1, n):
                    w = [F.zero] * n
                    for l in range(n):
                        c = col[z * n + l]
                        if c:
                            w = [a + c * t for a, t in zip(w, vecs[l])]
                    if any(w):
                        residuals[(x, y, z)] = tuple(w)
            coeffs[(x, y)] = lead
    return TriangularityCertificate(side, tuple(vecs), coeffs, residuals)


def verify_certificate(b: BraidedVectorSpace, cert: TriangularityCertificate) -> bool:
    """Independent soundness check: rebuild c from the certificate."""
    if any(not v for v in cert.coeffs.values()) or len(cert.coeffs) != b.n ** 2:
        return False
    for (x, y, z), w in cert.residuals.items():
        bound = x if cert.side == "right" else y
        if z <= bound:
            return False
    return cert.rebuild(b.field) == b.matrix


def flat_tau_matrix(b: BraidedVectorSpace, cert: TriangularityCertificate) -> ExactMatrix:
    """Matrix of c♭∘τ : M⊗M* → M⊗M* in the product basis adapted to the
    certificate ordering, in which it is upper triangular.

    Left certificates use x_a⊗φ_b ordered φ-major ascending, right
    certificates use x-major descending order.
    """
    from ..braidcore import compute_c_flat

    n = b.n
    F = b.field
    P = ExactMatrix.from_columns(cert.basis, F)
    Pinv_T = P.inverse().T()  # dual basis vectors as columns
    flat = compute_c_flat(b).matrix  # M*⊗M -> M⊗M*
    # basis of M⊗M*: x_a⊗φ_b; of M*⊗M: φ_b⊗x_a
    Wd = [None] * (n * n)
    Wc = [None] * (n * n)
    for a in range(n):
        for bb in range(n):
            Wd[a * n + bb] = tensor(Pinv_T.col(bb), P.col(a))  # τ(x_a⊗φ_b) = φ_b⊗x_a
            Wc[a * n + bb] = tensor(P.col(a), Pinv_T.col(bb))
    D = ExactMatrix.from_columns(Wd, F)
    Cb = ExactMatrix.from_columns(Wc, F)
    M = Cb.inverse() @ flat @ D
    if cert.side == "left":
        order = sorted(range(n * n), key=lambda p: (p % n, p // n))
    else:
        order = sorted(range(n * n), key=lambda p: (n - 1 - p // n, p % n))
    return M.submatrix(order, order), order


def predicted_flat_diagonal(cert: TriangularityCertificate, order) -> list:
    """Expected diagonal of the c♭∘τ matrix: coefficient of x_a against φ_b."""
    n = cert.n
    return [cert.coeffs[(p // n, p % n)] for p in order]
