"""Yetter–Drinfeld data over a group and the induced braiding.

The coaction is homogeneous, δ(m_i) = g_i⊗m_i, and the braiding is
c(m_i⊗w) = ρ(g_i)(w)⊗m_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..braidcore import BraidedVectorSpace, check_braid_equation
from ..braidcore.instances import from_operators
from ..exactla import QQ, ExactMatrix, Field
from .groups import FgAbelianGroup, GroupError, TableGroup


class InvalidYDData(ValueError):
    pass


@dataclass(frozen=True)
class YDVerdict:
    valid: bool
    violation: str | None = None

    def __bool__(self):
        return self.valid


class GroupYDData:
    """A group, a homogeneous degree per basis vector, and an action.

    ``action`` maps generators to matrices: generator indices 0..rank-1 for
    an fg-abelian group, element indices for a table group (those elements
    must generate the whole group).
    """

    def __init__(self, group, degrees, action: dict, field: Field = QQ):
        self.group = group
        self.field = field
        self.degrees = tuple(group.reduce(g) for g in degrees)
        if not self.degrees:
            raise InvalidYDData("at least one basis vector is needed")
        self.n = len(self.degrees)
        self.action = {}
        for key, mat in action.items():
            if not isinstance(mat, ExactMatrix):
                mat = ExactMatrix(mat, field)
            if mat.shape != (self.n, self.n):
                raise InvalidYDData(f"action matrix for generator {key!r} is not {self.n}x{self.n}")
            self.action[key] = mat
        self._rho = None

    # ------------------------------------------------------------------
    def generator_keys(self) -> list:
        if isinstance(self.group, FgAbelianGroup):
            return list(range(self.group.rank))
        return sorted(self.action)

    def generator_element(self, key):
        if isinstance(self.group, FgAbelianGroup):
            return tuple(1 if i == key else 0 for i in range(self.group.rank))
        return key

    def rho(self, g) -> ExactMatrix:
        """Action of an arbitrary group element."""
        G = self.group
        g = G.reduce(g)
        if isinstance(G, FgAbelianGroup):
            out = ExactMatrix.identity(self.n, self.field)
            for i, a in enumerate(g):
                if a:
                    out = out @ self.action[i].power(a)
            return out
        if self._rho is None:
            verdict, table = _extend_table_action(self)
            if not verdict.valid:
                raise InvalidYDData(verdict.violation)
            self._rho = table
        return self._rho[g]

    def components(self) -> dict:
        """Degree -> basis positions with that degree."""
        out: dict = {}
        for i, g in enumerate(self.degrees):
            out.setdefault(g, []).append(i)
        return out

    def format_element(self, g):
        return self.group.format(g)


def _extend_table_action(d: GroupYDData):
    G: TableGroup = d.group
    ident = ExactMatrix.identity(d.n, d.field)
    table = {G.identity: ident}
    queue = [G.identity]
    gens = sorted(d.action)
    for x in queue:
        for s in gens:
            y = G.mul(x, s)
            m = table[x] @ d.action[s]
            if y in table:
                if table[y] != m:
                    return YDVerdict(False, f"action is not a homomorphism: ρ({G.names[x]})ρ({G.names[s]}) ≠ ρ({G.names[y]})"), None
            else:
                table[y] = m
                queue.append(y)
    if len(table) != G.order:
        return YDVerdict(False, "action generators do not generate the group"), None
    return YDVerdict(True), table


def validate_group_yd(d: GroupYDData) -> YDVerdict:
    """Homomorphism and YD compatibility, first violation reported."""
    G = d.group
    for key, m in d.action.items():
        if not m.is_invertible():
            return YDVerdict(False, f"action of generator {_fmt_key(d, key)} is not invertible")
    if isinstance(G, FgAbelianGroup):
        missing = [i for i in range(G.rank) if i not in d.action]
        if missing or len(d.action) != G.rank:
            return YDVerdict(False, "action must give one matrix per group generator")
        for i, o in enumerate(G.orders):
            if o and not d.action[i].power(o).is_identity():
                return YDVerdict(False, f"relation g{i + 1}^{o} = 1 violated")
        for i in range(G.rank):
            for j in range(i + 1, G.rank):
                if not d.action[i].commutes_with(d.action[j]):
                    return YDVerdict(False, f"relation g{i + 1}g{j + 1} = g{j + 1}g{i + 1} violated")
    else:
        for key in d.action:
            if not isinstance(key, int) or not 0 <= key < G.order:
                return YDVerdict(False, f"unknown generator {key!r}")
        verdict, table = _extend_table_action(d)
        if not verdict.valid:
            return verdict
        d._rho = table
    # ρ(s)(M_h) ⊆ M_{s h s⁻¹}
    for key in d.generator_keys():
        s = d.generator_element(key)
        rows = d.action[key].rows
        for j, h in enumerate(d.degrees):
            target = G.conj(s, h)
            for k in range(d.n):
                if rows[k][j] and d.degrees[k] != target:
                    return YDVerdict(
                        False,
                        f"generator {_fmt_key(d, key)} maps m{j + 1} (degree {G.format(h)}) outside the component "
                        f"of degree {G.format(target)}",
                    )
    return YDVerdict(True)


def _fmt_key(d: GroupYDData, key) -> str:
    if isinstance(d.group, FgAbelianGroup):
        return f"g{key + 1}"
    return d.group.format(key)


def group_braiding(d: GroupYDData) -> BraidedVectorSpace:
    verdict = validate_group_yd(d)
    if not verdict.valid:
        raise InvalidYDData(verdict.violation)
    b = from_operators([d.rho(g) for g in d.degrees], d.field)
    if not check_braid_equation(b).holds:
        raise AssertionError("group-type braiding failed the braid equation")
    return b


__all__ = ["GroupError", "GroupYDData", "InvalidYDData", "YDVerdict", "group_braiding", "validate_group_yd"]
