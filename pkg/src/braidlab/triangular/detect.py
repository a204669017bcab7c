"""Search for triangular and diagonal bases.

Right detection: an invariant flag exists iff every composition factor of M
under the R-operators is a line; the line operator attached to a factor only
depends on its character, so the set of line operators does not depend on
the flag.  c is right triangular iff these operators are simultaneously
diagonalizable and some invariant flag is spanned by common eigenvectors.
Such a flag is built greedily in the lattice of invariant subspaces that are
sums of their intersections with the common eigenspaces; that lattice is
modular, so all its maximal chains have the same length and the greedy
choice never misses a complete flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..braidcore import BraidedVectorSpace, r_operators, tensor, transform_braiding
from ..exactla import ExactMatrix, Subspace, simuldiag
from .certificates import TriangularityCertificate, check_triangular, verify_certificate
from .flags import (
    Flag,
    candidate_lines,
    common_eigenspaces,
    distinct_operators,
    find_invariant_flags,
    induced_operators,
    line_operators,
    quotient_frame,
)

HOLDS, REFUTED, INDETERMINATE = "holds", "refuted", "indeterminate"


@dataclass(frozen=True)
class DetectionResult:
    status: str
    reason: str | None = None
    certificate: TriangularityCertificate | None = None
    flag: Flag | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


_SIMULDIAG_REASON = {
    "defective matrix": (REFUTED, "defective line operator"),
    "non-commuting pair": (REFUTED, "non-commuting line operators"),
    "non-split spectrum": (INDETERMINATE, "non-split spectrum"),
}


def _graded_flag(flag: Flag, spaces, field):
    """Adapted common eigenvectors for ``flag`` if every piece is the sum of
    its intersections with the common eigenspaces, else None."""
    n = flag.dim
    chosen = []
    prev = [0] * len(spaces)
    for t in range(1, n + 1):
        F = flag.piece(t, field)
        inters = [F.intersect(W) for W in spaces]
        if sum(S.dim for S in inters) != t:
            return None
        grown = [a for a, S in enumerate(inters) if S.dim > prev[a]]
        a = grown[0]
        cur = Subspace(n, chosen, field)
        vec = next(v for v in inters[a].basis() if not cur.contains(v))
        chosen.append(vec)
        prev = [S.dim for S in inters]
    return chosen


def _greedy_graded_flag(b: BraidedVectorSpace, spaces):
    """Grow an R-invariant flag one common eigenvector at a time.

    Returns (vectors, None) or (None, (status, reason)).
    """
    n = b.n
    field = b.field
    ops = distinct_operators(r_operators(b).values())
    vectors = []
    while len(vectors) < n:
        F = Subspace(n, vectors, field)
        bars, free = induced_operators(ops, F, vectors)
        bars = distinct_operators(bars)
        t = len(vectors)
        found = []
        nonsplit = False
        for W in spaces:
            # image of W in the quotient coordinates
            B, _ = quotient_frame(F, vectors)
            Binv = B.inverse()
            lifts = W.basis()
            images = [Binv.apply(w)[t:] for w in lifts]
            Wbar = Subspace(n - t, images, field)
            if not Wbar.dim:
                continue
            pieces, ns = common_eigenspaces(bars, Wbar)
            nonsplit = nonsplit or ns
            for line in candidate_lines(pieces, free, n, field):
                # lift: pick u in W with the same quotient image
                target = Binv.apply(line)[t:]
                M = ExactMatrix.from_columns(images, field)
                coeffs = M.solve(target)
                u = [field.zero] * n
                for c, w in zip(coeffs, lifts):
                    if c:
                        u = [p + c * q for p, q in zip(u, w)]
                found.append(tuple(u))
        if not found:
            if nonsplit:
                return None, (INDETERMINATE, "non-split spectrum")
            return None, (REFUTED, "flag-incompatible eigenspaces")
        found.sort(key=lambda v: next(i for i, x in enumerate(v) if x), reverse=True)
        vectors.append(found[0])
    return vectors, None


def detect_right(b: BraidedVectorSpace, branch_limit: int = 1024) -> DetectionResult:
    search = find_invariant_flags(b, branch_limit=branch_limit, max_flags=1)
    if not search.flags:
        if search.truncated:
            return DetectionResult(INDETERMINATE, "search truncated")
        if search.nonsplit:
            return DetectionResult(INDETERMINATE, "non-split spectrum")
        return DetectionResult(REFUTED, "no invariant flag")
    flag = search.flags[0]
    Ls = line_operators(b, flag)
    family = distinct_operators(Ls)
    sd = simuldiag(family)
    if not sd.ok:
        status, reason = _SIMULDIAG_REASON[sd.failure]
        return DetectionResult(status, reason, flag=flag)
    if any(not x for sp in sd.spaces for x in sp.values):
        return DetectionResult(REFUTED, "zero eigenvalue", flag=flag)
    spaces = [sp.space for sp in sd.spaces]
    vectors = _graded_flag(flag, spaces, b.field)
    rebuilt = False
    if vectors is None:
        vectors, fail = _greedy_graded_flag(b, spaces)
        if vectors is None:
            return DetectionResult(fail[0], fail[1], flag=flag)
        rebuilt = True
    basis = tuple(reversed(vectors))
    cert = check_triangular(b, basis, "right")
    if not isinstance(cert, TriangularityCertificate) or not verify_certificate(b, cert):
        raise AssertionError("assembled basis failed the triangularity check")
    return DetectionResult(HOLDS, None, cert, Flag(tuple(vectors)), {"flag_rebuilt": rebuilt})


def detect_triangular(b: BraidedVectorSpace, side: str = "right", branch_limit: int = 1024) -> DetectionResult:
    if side == "right":
        return detect_right(b, branch_limit)
    if side != "left":
        raise ValueError("side must be 'left' or 'right'")
    res = detect_right(transform_braiding(b, "flip_conjugate"), branch_limit)
    if not res.holds:
        return res
    cert = check_triangular(b, res.certificate.basis, "left")
    if not isinstance(cert, TriangularityCertificate) or not verify_certificate(b, cert):
        raise AssertionError("transported certificate failed the triangularity check")
    return DetectionResult(HOLDS, None, cert, res.flag, res.details)


# ---------------------------------------------------------------------------
# diagonal type


@dataclass(frozen=True)
class DiagonalResult:
    status: str
    reason: str | None = None
    basis: tuple = ()
    q: dict = dc_field(default_factory=dict)  # (x, y) -> q_{xy}, positions in basis

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def detect_diagonal(b: BraidedVectorSpace) -> DiagonalResult:
    n = b.n
    field = b.field
    R = r_operators(b)
    keys = sorted(R)
    sd = simuldiag(distinct_operators(R[k] for k in keys), dim=n, field=field)
    if not sd.ok:
        status, _ = _SIMULDIAG_REASON[sd.failure]
        return DiagonalResult(status, sd.failure)
    # character of each common eigenspace on every R_{j,k}
    blocks = []
    for sp in sd.spaces:
        u = sp.space.basis()[0]
        chi = {}
        for key in keys:
            img = R[key].apply(u)
            p = next(i for i, x in enumerate(u) if x)
            chi[key] = img[p] / u[p]
        # Y[k][j] = χ(R_{j,k})
        Y = ExactMatrix([[chi[(j, k)] for j in range(n)] for k in range(n)], field)
        blocks.append((sp.space, Y))
    ysd = simuldiag(distinct_operators(Y for _, Y in blocks), dim=n, field=field)
    if not ysd.ok:
        status, _ = _SIMULDIAG_REASON[ysd.failure]
        return DiagonalResult(status, ysd.failure)
    basis = []
    owner = []
    for a, (U, _) in enumerate(blocks):
        for W in ysd.spaces:
            for v in U.intersect(W.space).basis():
                basis.append(v)
                owner.append(a)
    if Subspace(n, basis, field).dim != n:
        return DiagonalResult(REFUTED, "eigenspaces do not refine")
    q = {}
    for x, a in enumerate(owner):
        Y = blocks[a][1]
        for y, w in enumerate(basis):
            img = Y.apply(w)
            p = next(i for i, t in enumerate(w) if t)
            q[(x, y)] = img[p] / w[p]
    # exact reconstruction of c from the q-table
    for x, vx in enumerate(basis):
        for y, vy in enumerate(basis):
            lhs = b.apply(tensor(vx, vy))
            rhs = tuple(q[(x, y)] * t for t in tensor(vy, vx))
            if lhs != rhs:
                raise AssertionError("diagonal reconstruction failed")
    return DiagonalResult(HOLDS, None, tuple(basis), q)
