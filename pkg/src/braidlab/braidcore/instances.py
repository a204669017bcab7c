"""Catalogue of standard braidings and random instance generators."""

from __future__ import annotations

import random
from fractions import Fraction

from ..exactla import QQ, ExactMatrix, Field
from .space import BraidedVectorSpace, flip_matrix


def flip(n: int = 2, field: Field = QQ) -> BraidedVectorSpace:
    return BraidedVectorSpace(flip_matrix(n, field))


def scalar_flip(q, n: int = 2, field: Field = QQ) -> BraidedVectorSpace:
    return BraidedVectorSpace(flip_matrix(n, field).scale(q))


def from_operators(ops, field: Field = QQ) -> BraidedVectorSpace:
    """c(e_i⊗w) = ops[i](w)⊗e_i, the shape of every group-type braiding."""
    n = len(ops)
    mats = [m if isinstance(m, ExactMatrix) else ExactMatrix(m, field) for m in ops]
    field = mats[0].field
    coeffs = {}
    for i, g in enumerate(mats):
        for k in range(n):
            for j in range(n):
                x = g.rows[k][j]
                if x:
                    coeffs[(k, i, i, j)] = x
    return BraidedVectorSpace.from_coefficients(n, coeffs, field)


def diagonal(q, field: Field = QQ) -> BraidedVectorSpace:
    """c(e_i⊗e_j) = q[i][j] e_j⊗e_i."""
    n = len(q)
    return from_operators([ExactMatrix.diag(q[i], field) for i in range(n)], field)


def jordan(lam=1, field: Field = QQ) -> BraidedVectorSpace:
    """c(m⊗w) = (g w)⊗m for the 2×2 Jordan block g with eigenvalue lam."""
    g = ExactMatrix([[lam, 1], [0, lam]], field)
    return from_operators([g, g], field)


def jordan_matrix(lam=1, field: Field = QQ) -> ExactMatrix:
    return ExactMatrix([[lam, 1], [0, lam]], field)


def mutate(b: BraidedVectorSpace, k, l, i, j, delta=1) -> BraidedVectorSpace:
    """Add ``delta`` to one coefficient (no invertibility requirement)."""
    n = b.n
    rows = [list(r) for r in b.matrix.rows]
    rows[k * n + l][i * n + j] = rows[k * n + l][i * n + j] + b.field.coerce(delta)
    return BraidedVectorSpace(ExactMatrix(rows, b.field), b.labels, check=False)


def _nonzero(rng: random.Random, lo=-5, hi=5) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, 3))
        if x:
            return x


def random_diagonal(rng: random.Random, n: int) -> BraidedVectorSpace:
    return diagonal([[_nonzero(rng) for _ in range(n)] for _ in range(n)])


def random_invertible(rng: random.Random, n: int, field: Field = QQ) -> ExactMatrix:
    """Random unimodular-ish integer matrix: unit lower times unit upper."""
    L = [[(1 if i == j else (rng.randint(-2, 2) if j < i else 0)) for j in range(n)] for i in range(n)]
    U = [[(1 if i == j else (rng.randint(-2, 2) if j > i else 0)) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
    return ExactMatrix(P, field) @ ExactMatrix(L, field) @ ExactMatrix(U, field)


def random_right_triangular(rng: random.Random, n: int, density: float = 0.5):
    """A right triangular operator with respect to the coordinate order,
    conjugated into a random basis.

    Returns ``(braiding, basis)`` where ``basis`` (a tuple of vectors in the
    returned coordinates) witnesses right triangularity in list order.  The
    braid equation is not imposed; the operator is invertible by
    construction.
    """
    coeffs = {}
    for a in range(n):
        for bb in range(n):
            coeffs[(bb, a, a, bb)] = _nonzero(rng)
            for l in range(a + 1, n):
                for k in range(n):
                    if rng.random() < density:
                        x = Fraction(rng.randint(-3, 3))
                        if x:
                            coeffs[(k, l, a, bb)] = x
    core = BraidedVectorSpace.from_coefficients(n, coeffs, QQ, check=False)
    P = random_invertible(rng, n)
    Pi = P.inverse()
    hidden = BraidedVectorSpace(P.kron(P) @ core.matrix @ Pi.kron(Pi), check=True)
    basis = tuple(P.col(j) for j in range(n))
    return hidden, basis


def random_commuting_lower(rng: random.Random, size: int, count: int):
    """``count`` commuting invertible lower triangular matrices, all
    polynomials in one random lower triangular matrix."""
    T = ExactMatrix(
        [[(Fraction(rng.randint(1, 3)) if i == j else (Fraction(rng.randint(-2, 2)) if j < i else 0)) for j in range(size)] for i in range(size)]
    )
    I = ExactMatrix.identity(size)
    out = []
    for _ in range(count):
        while True:
            a, b = rng.randint(-2, 2), rng.randint(-2, 2)
            M = I.scale(a) + T.scale(b)
            if M.is_invertible():
                out.append(M)
                break
    return out
