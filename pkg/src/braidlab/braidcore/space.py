"""Braided vector spaces and the checks that only need the coefficient table.

Indexing is 0-based throughout the library: the basis tensor e_i⊗e_j has
composite index ``i*n + j``, and the braiding matrix has the image of
e_i⊗e_j as its column ``i*n + j``.  Files are 1-based (see ``fileio``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactla import QQ, ExactMatrix, Field, Subspace
from ..exactla.linalg import to_dense


class SingularBraiding(ValueError):
    pass


def flip_matrix(n: int, field: Field = QQ) -> ExactMatrix:
    one = field.one
    return ExactMatrix.from_sparse(n * n, n * n, {(j * n + i, i * n + j): one for i in range(n) for j in range(n)}, field)


class BraidedVectorSpace:
    """An invertible operator c on M⊗M, dim M = n.

    ``matrix[k*n + l, i*n + j]`` is the coefficient of e_k⊗e_l in c(e_i⊗e_j).
    """

    __slots__ = ("n", "matrix", "field", "labels")

    def __init__(self, matrix: ExactMatrix, labels: Sequence[str] | None = None, *, check: bool = True):
        N = matrix.nrows
        n = int(round(N ** 0.5))
        if n * n != N or not matrix.is_square() or n < 1:
            raise ValueError(f"braiding matrix must be n²×n², got {matrix.shape}")
        self.n = n
        self.matrix = matrix
        self.field = matrix.field
        self.labels = tuple(labels) if labels is not None else tuple(f"m{i + 1}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("one label per basis vector expected")
        if check and not matrix.is_invertible():
            raise SingularBraiding("coefficient matrix is singular")

    @classmethod
    def from_coefficients(cls, n: int, coeffs: dict, field: Field = QQ, labels=None, check=True):
        """``coeffs[(k, l, i, j)]`` = coefficient of e_k⊗e_l in c(e_i⊗e_j)."""
        entries = {(k * n + l, i * n + j): x for (k, l, i, j), x in coeffs.items()}
        return cls(ExactMatrix.from_sparse(n * n, n * n, entries, field), labels, check=check)

    def coeff(self, k, l, i, j):
        n = self.n
        return self.matrix.rows[k * n + l][i * n + j]

    def image(self, i: int, j: int) -> tuple:
        """c(e_i⊗e_j) as a vector of length n²."""
        return self.matrix.col(i * self.n + j)

    def apply(self, vec) -> tuple:
        return self.matrix.apply(vec)

    def __eq__(self, other):
        return isinstance(other, BraidedVectorSpace) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"BraidedVectorSpace(n={self.n}, field={self.field.name})"


def tensor(u, w) -> tuple:
    return tuple(a * b for a in u for b in w)


# ---------------------------------------------------------------------------
# braid equation and Yang-Baxter conversion


@dataclass(frozen=True)
class BraidVerdict:
    holds: bool
    first_failure: tuple | None = None  # ((a,b,c) output triple, (i,j,k) input triple)

    def __bool__(self):
        return self.holds


def _triple(idx, n):
    return (idx // (n * n), (idx // n) % n, idx % n)


def braid_sides(C: ExactMatrix, n: int):
    I = ExactMatrix.identity(n, C.field)
    c12 = C.kron(I)
    c23 = I.kron(C)
    return c23 @ c12 @ c23, c12 @ c23 @ c12


def check_braid_equation(b: BraidedVectorSpace) -> BraidVerdict:
    lhs, rhs = braid_sides(b.matrix, b.n)
    pos = lhs.first_difference(rhs)
    if pos is None:
        return BraidVerdict(True)
    return BraidVerdict(False, (_triple(pos[0], b.n), _triple(pos[1], b.n)))


def qybe_sides(R: ExactMatrix, n: int):
    I = ExactMatrix.identity(n, R.field)
    T = flip_matrix(n, R.field)
    r12 = R.kron(I)
    r23 = I.kron(R)
    p23 = I.kron(T)
    r13 = p23 @ r12 @ p23
    return r12 @ r13 @ r23, r23 @ r13 @ r12


@dataclass(frozen=True)
class ConversionResult:
    matrix: ExactMatrix
    target: str  # "braid" or "qybe"
    holds: bool
    first_failure: tuple | None = None


def ybe_convert(op: ExactMatrix, direction: str) -> ConversionResult:
    """R-to-c returns c = R∘τ; c-to-R returns R = c∘τ; both with a verdict."""
    N = op.nrows
    n = int(round(N ** 0.5))
    if n * n != N or not op.is_square():
        raise ValueError("operator must be n²×n²")
    if not op.is_invertible():
        raise SingularBraiding("operator is singular")
    T = flip_matrix(n, op.field)
    out = op @ T
    if direction == "R-to-c":
        lhs, rhs = braid_sides(out, n)
        target = "braid"
    elif direction == "c-to-R":
        lhs, rhs = qybe_sides(out, n)
        target = "qybe"
    else:
        raise ValueError(f"unknown direction {direction!r}")
    pos = lhs.first_difference(rhs)
    fail = None if pos is None else (_triple(pos[0], n), _triple(pos[1], n))
    return ConversionResult(out, target, pos is None, fail)


def transform_braiding(b: BraidedVectorSpace, which: str) -> BraidedVectorSpace:
    if which == "inverse":
        return BraidedVectorSpace(b.matrix.inverse(), b.labels, check=False)
    if which == "flip_conjugate":
        T = flip_matrix(b.n, b.field)
        return BraidedVectorSpace(T @ b.matrix @ T, b.labels, check=False)
    raise ValueError(f"unknown transform {which!r}")


def change_basis(b: BraidedVectorSpace, P: ExactMatrix) -> BraidedVectorSpace:
    """Braiding table in the basis given by the columns of P."""
    Pi = P.inverse()
    return BraidedVectorSpace(Pi.kron(Pi) @ b.matrix @ P.kron(P), check=False)


# ---------------------------------------------------------------------------
# rigidity


@dataclass(frozen=True)
class FlatMap:
    """Matrix of c♭ : M*⊗M → M⊗M*.

    Column ``a*n + b`` is the image of φ^a⊗m_b, row ``l*n + i`` the
    coefficient of m_l⊗φ^i.
    """

    n: int
    matrix: ExactMatrix

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()


def compute_c_flat(b: BraidedVectorSpace) -> FlatMap:
    # contraction (ev⊗id)(id⊗c⊗id)(id⊗db): entry [(l,i),(a,b)] = C[(a,l),(b,i)]
    n = b.n
    R = b.matrix.rows
    rows = tuple(
        tuple(R[a * n + l][bb * n + i] for a in range(n) for bb in range(n))
        for l in range(n) for i in range(n)
    )
    return FlatMap(n, ExactMatrix(rows, b.field, _trusted=True))


def check_rigidity(b: BraidedVectorSpace) -> bool:
    return compute_c_flat(b).is_invertible()


# ---------------------------------------------------------------------------
# subspace compatibility


def _rows_in(space: Subspace, vec, n) -> bool:
    """Is the n²-vector ``vec`` (read as n×n, index k*n+l) in M⊗space, i.e.
    does every row lie in the space?"""
    for k in range(n):
        if not space.contains(vec[k * n:(k + 1) * n]):
            return False
    return True


def _cols_in(space: Subspace, vec, n) -> bool:
    """Is ``vec`` (index l*n+i) in space⊗M*, i.e. does every column lie in it?"""
    for i in range(n):
        if not space.contains(vec[i::n]):
            return False
    return True


def invariance_premise(b: BraidedVectorSpace, N: Subspace) -> bool:
    """c(N⊗M) ⊆ M⊗N."""
    n = b.n
    z = b.field.zero
    for u in N.basis():
        for j in range(n):
            e = [z] * n
            e[j] = b.field.one
            if not _rows_in(N, b.apply(tensor(u, e)), n):
                return False
    return True


def check_flag_compat(b: BraidedVectorSpace, basis) -> tuple:
    """(c(N⊗M) ⊆ M⊗N, c♭(M*⊗N) ⊆ N⊗M*) for N spanned by ``basis``."""
    n = b.n
    N = Subspace(n, [tuple(b.field.coerce(x) for x in v) for v in basis], b.field)
    premise = invariance_premise(b, N)
    flat = compute_c_flat(b).matrix
    z, one = b.field.zero, b.field.one
    conclusion = True
    for u in N.basis():
        for a in range(n):
            e = [z] * n
            e[a] = one
            if not _cols_in(N, flat.apply(tensor(e, u)), n):
                conclusion = False
                break
        if not conclusion:
            break
    return premise, conclusion


def r_operators(b: BraidedVectorSpace) -> dict:
    """R_{j,k}(m) = (φ^k⊗id) c(m⊗e_j); returns {(j, k): matrix}."""
    n = b.n
    R = b.matrix.rows
    out = {}
    for j in range(n):
        for k in range(n):
            rows = tuple(tuple(R[k * n + l][i * n + j] for i in range(n)) for l in range(n))
            out[(j, k)] = ExactMatrix(rows, b.field, _trusted=True)
    return out


def unit(n, i, field) -> tuple:
    return to_dense({i: field.one}, n, field.zero)
