"""Standard group-type data and random abelian instances."""

from __future__ import annotations

import random

from ..exactla import QQ, ExactMatrix, Field
from .groups import FgAbelianGroup, TableGroup
from .ydmodule import GroupYDData


def jordan_over_z(lam=1, field: Field = QQ) -> GroupYDData:
    """Z acting on k² by a Jordan block, both basis vectors of degree 1."""
    return GroupYDData(FgAbelianGroup([0]), [[1], [1]], {0: [[lam, 1], [0, lam]]}, field)


def scalar_over_z(q, n: int = 2, field: Field = QQ) -> GroupYDData:
    """Z acting by q·id with every degree the generator: c = q·τ."""
    ident = ExactMatrix.identity(n, field).scale(field.coerce(q))
    return GroupYDData(FgAbelianGroup([0]), [[1]] * n, {0: ident}, field)


def cyclic_action(order: int, diag, degrees=None, field: Field = QQ) -> GroupYDData:
    """Z/order acting diagonally by ``diag``; every degree the generator by default."""
    n = len(diag)
    degrees = degrees if degrees is not None else [[1]] * n
    return GroupYDData(FgAbelianGroup([order]), degrees, {0: ExactMatrix.diag(diag, field)}, field)


def trivial_action(n: int = 2, field: Field = QQ) -> GroupYDData:
    return GroupYDData(FgAbelianGroup([0]), [[1]] * n, {0: ExactMatrix.identity(n, field)}, field)


def z2_table(diag, field: Field = QQ) -> GroupYDData:
    """{e, s} as a multiplication table, s of degree s on every basis vector."""
    G = TableGroup(["e", "s"], [["e", "s"], ["s", "e"]])
    n = len(diag)
    return GroupYDData(G, [1] * n, {1: ExactMatrix.diag(diag, field)}, field)


def random_abelian_triangular(rng: random.Random, n: int, rank: int = 2, field: Field = QQ) -> GroupYDData:
    """Z^rank acting by commuting upper triangular matrices, all degrees equal.

    Each generator acts by a polynomial in one random upper triangular base
    matrix, which keeps the family commuting and the spectrum rational.
    """
    def nz():
        return rng.choice([-3, -2, -1, 1, 2, 3])

    base = [[(nz() if i == j else rng.randint(-2, 2)) if i <= j else 0 for j in range(n)] for i in range(n)]
    B = ExactMatrix(base, field)
    acts = {}
    for g in range(rank):
        while True:
            a, c = rng.randint(-2, 2), nz()
            M = ExactMatrix.identity(n, field).scale(a) + B.scale(c) if g else B
            if M.is_invertible():
                break
        acts[g] = M
    deg = [rng.randint(-2, 2) for _ in range(rank)]
    if not any(deg):
        deg[0] = 1
    return GroupYDData(FgAbelianGroup([0] * rank), [deg] * n, acts, field)
