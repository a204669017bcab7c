"""Cross-check of c^f against the reduced FRT truncation.

The grouplikes L_λ (λ a weight) act on M by L_λ·y = f(λ, wt y) y.  Their
group modulo the acting kernel is predicted with the exponent-lattice method
of the group-type module; t̄_ii should be the grouplike L_{wt v_i}, and each
skew-primitive image t̄_ij should have weight difference wt v_i − wt v_j a
negative root.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..exactla import QV, ExactMatrix, eigen, format_scalar
from ..frt import DEFAULT_MAX_WORDS, ReducedReport, reduced_report
from ..grouptype import FgAbelianGroup, GroupYDData, reduced_group_algebra, support_and_kernel
from ..grouptype.reduction import compare_grouplikes
from ..triangular import detect_triangular
from .module import CommutationFactor, UqModule, build_cf_braiding

ALPHA = 2  # the simple root as an integer sl2 weight


def cartan_data(m: UqModule, f: CommutationFactor) -> GroupYDData:
    """Weight lattice Z with L_1 acting by f(1, ·); v_i has degree its weight."""
    w = m.weights
    act = ExactMatrix.diag([f(1, mu) for mu in w], QV)
    return GroupYDData(FgAbelianGroup([0]), [[mu] for mu in w], {0: act}, QV)


@dataclass
class UqReport:
    n: int
    W: tuple
    P: tuple
    quotient_invariants: tuple  # predicted G̃/N as orders of cyclic factors (0 = Z)
    eigenvalues: tuple
    frt: ReducedReport
    skew_root_classes: tuple
    right_triangular: bool
    checks: dict = dc_field(default_factory=dict)
    mismatches: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(v is not False for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "W": list(self.W),
            "P": ["alpha"] * len(self.P),
            "predicted_quotient_group": list(self.quotient_invariants),
            "braiding_eigenvalues": [format_scalar(x) for x in self.eigenvalues],
            "skew_primitive_root_classes": list(self.skew_root_classes),
            "right_triangular": self.right_triangular,
            "checks": dict(sorted(self.checks.items())),
            "mismatches": list(self.mismatches),
            "frt": self.frt.to_json(),
        }


def uq_report(m: UqModule, f: CommutationFactor | None = None, D: int = 2, max_words: int = DEFAULT_MAX_WORDS) -> UqReport:
    f = f or CommutationFactor()
    b = build_cf_braiding(m, f)
    n = m.dim
    w = m.weights
    W = tuple(sorted(set(w), reverse=True))
    P = (ALPHA,) if not m.E.is_zero() else ()

    data = cartan_data(m, f)
    sk = support_and_kernel(data)
    rga = reduced_group_algebra(data, sk)
    rep = reduced_report(b, D, max_words=max_words)

    mismatches = compare_grouplikes(rep, rga.quotient, list(rga.data.degrees), D)
    roots = []
    for (i, j), g, h in rep.skew_primitives:
        diff = w[i] - w[j]
        if diff > 0 or diff % ALPHA or diff == 0:
            mismatches.append(f"skew-primitive t{i + 1}{j + 1} has weight difference {diff}")
        if -diff not in roots:
            roots.append(-diff)
    roots = tuple(sorted(roots))
    if roots != P:
        mismatches.append(f"skew-primitive root classes {list(roots)} differ from P = {list(P)}")
    upper = [(i, j) for i in range(n) for j in range(n) if i < j]
    tri = detect_triangular(b, "right")
    ev = tuple(eigen(b.matrix).eigenvalues)
    checks = {
        "diagonal_action": rep.diagonal_action,
        "upper_coefficients_vanish": all(p in rep.vanishing for p in upper),
        "right_triangular": tri.holds,
        "m_reduced": rep.m_reduced,
        "reconstruction": rep.reconstruction,
        "coideal_verified": rep.coideal_verified,
    }
    return UqReport(
        m.n, W, P, rga.invariants, ev, rep, roots, tri.holds, checks, mismatches,
    )
