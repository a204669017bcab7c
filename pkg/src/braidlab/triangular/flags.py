"""Invariant complete flags and their line operators.

A subspace F ⊆ M satisfies c(F⊗M) ⊆ M⊗F exactly when it is invariant under
every operator R_{v,φ}(m) = (φ⊗id)c(m⊗v).  Flags are searched depth first:
a common eigenvector of the induced operators on M/F extends F by one
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..braidcore import BraidedVectorSpace, invariance_premise, r_operators
from ..exactla import ExactMatrix, Subspace, eigen
from ..exactla.linalg import to_dense


class FlagNotInvariant(ValueError):
    pass


@dataclass(frozen=True)
class Flag:
    """F_i = span(vectors[:i]); ``provenance[i]`` is "forced" when the i-th
    line was the only candidate, "choice" otherwise."""

    vectors: tuple
    provenance: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def piece(self, i, field) -> Subspace:
        return Subspace(len(self.vectors[0]) if self.vectors else 0, self.vectors[:i], field)

    def ordered_basis(self) -> tuple:
        """Basis whose upper sets are the flag pieces (position 0 smallest)."""
        return tuple(reversed(self.vectors))


@dataclass(frozen=True)
class FlagSearch:
    flags: tuple
    truncated: bool
    nonsplit: bool
    nodes: int


def distinct_operators(ops) -> list:
    seen = set()
    out = []
    for A in ops:
        if A.rows not in seen:
            seen.add(A.rows)
            out.append(A)
    return out


def quotient_frame(F: Subspace, vectors):
    """Basis matrix [vectors | e_c for non-pivot c] and the complement columns."""
    n = F.n
    field = F.field
    free = [c for c in range(n) if c not in F.ech.rows]
    cols = list(vectors) + [to_dense({c: field.one}, n, field.zero) for c in free]
    B = ExactMatrix.from_columns(cols, field)
    return B, free


def induced_operators(ops, F: Subspace, vectors):
    """Matrices of the operators on M/F in the complement coordinates."""
    B, free = quotient_frame(F, vectors)
    Binv = B.inverse()
    t = len(vectors)
    n = F.n
    idx = list(range(t, n))
    return [(Binv @ A @ B).submatrix(idx, idx) for A in ops], free


def common_eigenspaces(ops, start: Subspace):
    """Split the subspace ``start`` by the eigenvalues of every operator.

    Returns (spaces, nonsplit).  Each space is a nonzero common eigenspace of
    all operators inside ``start`` (the space need not be invariant, only the
    eigenvectors matter).  ``nonsplit`` signals that some eigenvalue was not
    found in the base field, so eigenvectors may be missing.
    """
    field = start.field
    n = start.n
    pieces = [start]
    nonsplit = False
    for A in ops:
        if A.is_scalar():
            continue
        if all(U.dim == 1 for U in pieces):
            # a rational line is an eigenline or not; no spectrum needed
            pieces = [U for U in pieces if _is_eigenline(A, U.basis()[0])]
            if not pieces:
                break
            continue
        rep = eigen(A)
        if not rep.split:
            nonsplit = True
        new = []
        for U in pieces:
            for pair in rep.pairs:
                W = U.intersect(Subspace(n, pair.basis, field))
                if W.dim:
                    new.append(W)
        pieces = new
        if not pieces:
            break
    return pieces, nonsplit


def _is_eigenline(A: ExactMatrix, v) -> bool:
    w = A.apply(v)
    p = _pivot(v)
    lam = w[p] / v[p]
    return all(y == lam * x for x, y in zip(v, w))


def _pivot(vec) -> int:
    return next(i for i, x in enumerate(vec) if x)


def candidate_lines(spaces, free, n, field) -> list:
    """Echelon basis vectors of each space lifted to M (complement coords are
    coordinate vectors), largest pivot first."""
    out = []
    for S in spaces:
        for row in S.basis():
            vec = [field.zero] * n
            for c, x in zip(free, row):
                vec[c] = x
            out.append(tuple(vec))
    out.sort(key=_pivot, reverse=True)
    return out


def find_invariant_flags(b: BraidedVectorSpace, branch_limit: int = 1024, max_flags: int | None = None) -> FlagSearch:
    n = b.n
    field = b.field
    ops = distinct_operators(r_operators(b).values())
    flags = []
    cache = {}
    state = {"nodes": 0, "truncated": False, "nonsplit": False}

    def candidates(vectors):
        F = Subspace(n, vectors, field)
        key = F.signature()
        hit = cache.get(key)
        if hit is None:
            bars, free = induced_operators(ops, F, vectors)
            spaces, nonsplit = common_eigenspaces(distinct_operators(bars), Subspace.whole(n - len(vectors), field))
            hit = (candidate_lines(spaces, free, n, field), nonsplit)
            cache[key] = hit
        if hit[1]:
            state["nonsplit"] = True
        return hit[0]

    def dfs(vectors, prov) -> bool:
        if len(vectors) == n:
            flags.append(Flag(tuple(vectors), tuple(prov)))
            return max_flags is not None and len(flags) >= max_flags
        state["nodes"] += 1
        if state["nodes"] > branch_limit:
            state["truncated"] = True
            return True
        lines = candidates(vectors)
        tag = "forced" if len(lines) == 1 else "choice"
        for u in lines:
            if dfs(vectors + [u], prov + [tag]):
                return True
        return False

    dfs([], [])
    return FlagSearch(tuple(flags), state["truncated"], state["nonsplit"], state["nodes"])


def flag_is_invariant(b: BraidedVectorSpace, flag: Flag) -> bool:
    """Independent check of c(F_i⊗M) ⊆ M⊗F_i for every piece."""
    field = b.field
    if Subspace(b.n, flag.vectors, field).dim != b.n:
        return False
    return all(invariance_premise(b, flag.piece(i, field)) for i in range(1, b.n + 1))


def line_operators(b: BraidedVectorSpace, flag: Flag) -> list:
    """L_1..L_n, one per basis position: with x spanning the i-th graded
    piece from the top, c(x⊗y) ≡ L_i(y)⊗x modulo M⊗(smaller piece)."""
    n = b.n
    field = b.field
    if not flag_is_invariant(b, flag):
        raise FlagNotInvariant("flag is not c-invariant")
    B = ExactMatrix.from_columns(flag.vectors, field)
    Binv = B.inverse()
    one, zero = field.one, field.zero
    out = []
    for pos in range(n):
        t = n - 1 - pos
        x = flag.vectors[t]
        rows = [[zero] * n for _ in range(n)]
        for j in range(n):
            e = [zero] * n
            e[j] = one
            img = b.apply(tuple(a * c for a in x for c in e))
            for k in range(n):
                coords = Binv.apply(img[k * n:(k + 1) * n])
                if any(coords[s] for s in range(t + 1, n)):
                    raise FlagNotInvariant("image leaves M⊗F")
                rows[k][j] = coords[t]
        out.append(ExactMatrix(rows, field))
    return out
