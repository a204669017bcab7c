"""Group presentations: finitely generated abelian groups and finite tables."""

from __future__ import annotations

import math


class GroupError(ValueError):
    pass


class FgAbelianGroup:
    """Z^a × Z/o_1 × ... with elements as integer vectors; order 0 = infinite."""

    kind = "fg_abelian"
    is_abelian = True

    def __init__(self, orders):
        orders = tuple(int(o) for o in orders)
        if any(o < 0 for o in orders):
            raise GroupError("orders must be non-negative")
        self.orders = orders
        self.rank = len(orders)

    def __repr__(self):
        return f"FgAbelianGroup({list(self.orders)})"

    def __eq__(self, other):
        return isinstance(other, FgAbelianGroup) and other.orders == self.orders

    def reduce(self, vec) -> tuple:
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.rank:
            raise GroupError(f"element {list(vec)} does not have {self.rank} coordinates")
        return tuple(x % o if o else x for x, o in zip(vec, self.orders))

    @property
    def identity(self) -> tuple:
        return (0,) * self.rank

    def mul(self, a, b) -> tuple:
        return self.reduce(x + y for x, y in zip(a, b))

    def inverse(self, a) -> tuple:
        return self.reduce(-x for x in a)

    def power(self, a, k: int) -> tuple:
        return self.reduce(k * x for x in a)

    def conj(self, s, h) -> tuple:
        return h

    def generators(self) -> list:
        return [tuple(1 if i == j else 0 for i in range(self.rank)) for j in range(self.rank)]

    def element_order(self, a) -> int:
        """Order of ``a``; 0 if infinite."""
        out = 1
        for x, o in zip(a, self.orders):
            if not o:
                if x:
                    return 0
                continue
            out = math.lcm(out, o // math.gcd(x, o))
        return out

    def is_finite(self) -> bool:
        return all(self.orders)

    def format(self, a) -> list:
        return list(a)

    def describe(self) -> dict:
        return {"kind": self.kind, "orders": list(self.orders)}


class TableGroup:
    """Finite group given by named elements and a multiplication table."""

    kind = "table"

    def __init__(self, elements, mul):
        names = [str(x) for x in elements]
        if not names or len(set(names)) != len(names):
            raise GroupError("group elements must be distinct and non-empty")
        size = len(names)
        idx = {x: p for p, x in enumerate(names)}
        table = []
        if len(mul) != size:
            raise GroupError("multiplication table has the wrong number of rows")
        for r in mul:
            if len(r) != size:
                raise GroupError("multiplication table has a row of the wrong length")
            row = []
            for x in r:
                if isinstance(x, int) and not isinstance(x, bool):
                    if not 0 <= x < size:
                        raise GroupError(f"table entry {x} out of range")
                    row.append(x)
                elif str(x) in idx:
                    row.append(idx[str(x)])
                else:
                    raise GroupError(f"table entry {x!r} is not a group element")
            table.append(tuple(row))
        self.names = tuple(names)
        self.index = idx
        self.table = tuple(table)
        self._validate()
        self.identity = next(e for e in range(size) if all(self.table[e][x] == x == self.table[x][e] for x in range(size)))
        self._inv = tuple(next(y for y in range(size) if self.table[x][y] == self.identity) for x in range(size))
        self.is_abelian = all(self.table[a][b] == self.table[b][a] for a in range(size) for b in range(size))

    def _validate(self):
        T = self.table
        size = len(T)
        for a in range(size):
            for b in range(size):
                for c in range(size):
                    if T[T[a][b]][c] != T[a][T[b][c]]:
                        raise GroupError(
                            f"associativity fails for ({self.names[a]}, {self.names[b]}, {self.names[c]})"
                        )
        units = [e for e in range(size) if all(T[e][x] == x == T[x][e] for x in range(size))]
        if not units:
            raise GroupError("no identity element")
        e = units[0]
        for x in range(size):
            if not any(T[x][y] == e for y in range(size)):
                raise GroupError(f"element {self.names[x]} has no inverse")

    def __repr__(self):
        return f"TableGroup({list(self.names)})"

    @property
    def order(self) -> int:
        return len(self.names)

    def element(self, ref) -> int:
        if isinstance(ref, int) and not isinstance(ref, bool) and 0 <= ref < self.order:
            return ref
        try:
            return self.index[str(ref)]
        except KeyError:
            raise GroupError(f"unknown group element {ref!r}") from None

    def reduce(self, a) -> int:
        return self.element(a)

    def mul(self, a, b) -> int:
        return self.table[a][b]

    def inverse(self, a) -> int:
        return self._inv[a]

    def power(self, a, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def conj(self, s, h) -> int:
        return self.table[self.table[s][h]][self._inv[s]]

    def element_order(self, a) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_finite(self) -> bool:
        return True

    def closure(self, gens) -> list:
        """Elements of the subgroup generated by ``gens`` (BFS order)."""
        seen = [self.identity]
        mark = {self.identity}
        for x in seen:
            for g in gens:
                y = self.table[x][g]
                if y not in mark:
                    mark.add(y)
                    seen.append(y)
        return seen

    def format(self, a) -> str:
        return self.names[a]

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "elements": list(self.names),
            "mul": [[self.names[x] for x in r] for r in self.table],
        }
