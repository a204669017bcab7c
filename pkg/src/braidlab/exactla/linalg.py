"""Dense exact matrices and sparse-row Gauss-Jordan elimination.

Every routine here is field-agnostic: entries are ``Fraction`` or
``RatFunc`` and only ``+ - * /`` and truthiness are used.  Elimination works
on rows stored as ``{column: value}`` dicts because most matrices built by
the FRT code are very sparse.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .scalars import QQ, Field, format_scalar


class InconsistentSystem(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse rows


def to_sparse(vec) -> dict:
    if isinstance(vec, dict):
        return {k: x for k, x in vec.items() if x}
    return {i: x for i, x in enumerate(vec) if x}


def to_dense(row: dict, n: int, zero) -> tuple:
    out = [zero] * n
    for k, x in row.items():
        out[k] = x
    return tuple(out)


def axpy(row: dict, f, other: dict) -> None:
    """row -= f * other, in place."""
    for k, x in other.items():
        y = row.get(k)
        if y is None:
            row[k] = -(f * x)
        else:
            y = y - f * x
            if y:
                row[k] = y
            else:
                del row[k]


class Echelon:
    """Incremental reduced row echelon form.

    ``priority`` maps a column to its rank in the pivot search (smaller is
    chosen first); by default the column index itself.  Every stored row has
    a pivot entry equal to one and zeros in all other pivot columns.
    """

    def __init__(self, ncols: int, priority=None):
        self.ncols = ncols
        self.priority = priority
        self.rows: dict = {}  # pivot column -> row dict

    def _key(self, c):
        return c if self.priority is None else self.priority[c]

    def reduce(self, row) -> dict:
        r = to_sparse(row) if not isinstance(row, dict) else dict(row)
        rows = self.rows
        hits = [c for c in r if c in rows]
        for p in hits:
            f = r.get(p)
            if f:
                axpy(r, f, rows[p])
        return r

    def add(self, row) -> bool:
        """Insert ``row``; returns True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r, key=self._key)
        inv = 1 / r[p]
        if inv != 1:
            r = {k: x * inv for k, x in r.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                axpy(other, f, r)
        self.rows[p] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self._key)

    def basis(self) -> list:
        return [self.rows[p] for p in self.pivots()]

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def free_columns(self) -> list:
        return [c for c in sorted(range(self.ncols), key=self._key) if c not in self.rows]


def echelon_of(rows: Iterable, ncols: int, priority=None) -> Echelon:
    ech = Echelon(ncols, priority)
    for r in rows:
        ech.add(r)
    return ech


# ---------------------------------------------------------------------------
# subspaces of k^n


class Subspace:
    """A subspace of ``field**n`` kept in reduced echelon form."""

    def __init__(self, n: int, vectors: Iterable = (), field: Field = QQ, priority=None):
        self.n = n
        self.field = field
        self.ech = echelon_of(vectors, n, priority)

    @classmethod
    def whole(cls, n, field=QQ):
        one = field.one
        return cls(n, ({i: one} for i in range(n)), field)

    @property
    def dim(self) -> int:
        return self.ech.rank

    def basis(self) -> list:
        z = self.field.zero
        return [to_dense(r, self.n, z) for r in self.ech.basis()]

    def sparse_basis(self) -> list:
        return self.ech.basis()

    def contains(self, vec) -> bool:
        return self.ech.contains(vec)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.sparse_basis())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.dim == other.dim and self.contains_space(other)

    def __hash__(self):
        return hash(self.signature())

    def signature(self) -> tuple:
        """Canonical key: the reduced echelon rows in natural column order."""
        canon = Subspace(self.n, self.ech.basis(), self.field)
        return tuple(
            tuple(sorted((k, format_scalar(x)) for k, x in r.items()))
            for r in canon.ech.basis()
        )

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.n, list(self.sparse_basis()) + list(other.sparse_basis()), self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        a = self.sparse_basis()
        b = other.sparse_basis()
        if not a or not b:
            return Subspace(self.n, (), self.field)
        # solve sum_i x_i a_i - sum_j y_j b_j = 0
        cols = [dict(r) for r in a] + [{k: -x for k, x in r.items()} for r in b]
        kern = kernel_of_columns(cols, self.n, self.field)
        out = []
        for coeffs in kern:
            vec: dict = {}
            for i, c in coeffs.items():
                if i < len(a) and c:
                    axpy(vec, -c, a[i])
            out.append(vec)
        return Subspace(self.n, out, self.field)


def kernel_of_columns(columns: Sequence[dict], nrows: int, field: Field) -> list:
    """Kernel of the matrix whose j-th column is ``columns[j]`` (sparse)."""
    ncols = len(columns)
    rows: list = [dict() for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x:
                rows[i][j] = x
    return kernel_rows(rows, ncols, field)


def kernel_rows(rows: Iterable[dict], ncols: int, field: Field) -> list:
    """Basis (sparse dicts) of {x : row . x = 0 for every row}."""
    ech = echelon_of(rows, ncols)
    one = field.one
    out = []
    for f in ech.free_columns():
        vec = {f: one}
        for p, r in ech.rows.items():
            x = r.get(f)
            if x:
                vec[p] = -x
        out.append(vec)
    return out


# ---------------------------------------------------------------------------
# dense matrices


class ExactMatrix:
    """Immutable dense matrix over Q or Q(v)."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field: Field = QQ, *, _trusted=False):
        if _trusted:
            self.rows = rows
        else:
            self.rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self.field = field
        if not _trusted and any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    # constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, m, n, field=QQ):
        z = field.zero
        return cls(tuple((z,) * n for _ in range(m)), field, _trusted=True)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, _trusted=True)

    @classmethod
    def diag(cls, values, field=QQ):
        vals = [field.coerce(x) for x in values]
        n = len(vals)
        z = field.zero
        return cls(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), field, _trusted=True)

    @classmethod
    def from_columns(cls, cols, field=QQ):
        cols = [tuple(field.coerce(x) for x in c) for c in cols]
        m = len(cols[0]) if cols else 0
        return cls(tuple(tuple(c[i] for c in cols) for i in range(m)), field, _trusted=True)

    @classmethod
    def from_sparse(cls, m, n, entries: dict, field=QQ):
        rows = [[field.zero] * n for _ in range(m)]
        for (i, j), x in entries.items():
            rows[i][j] = field.coerce(x)
        return cls(tuple(tuple(r) for r in rows), field, _trusted=True)

    # basic access -------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def col(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.ncols)]

    def nonzero_entries(self):
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x:
                    yield i, j, x

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"ExactMatrix[{self.field.name}]({body})"

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_identity(self) -> bool:
        return self.is_square() and all(
            (x == 1) if i == j else (not x)
            for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def is_diagonal(self) -> bool:
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def is_scalar(self) -> bool:
        return self.is_square() and self.is_diagonal() and len({r[i] for i, r in enumerate(self.rows)}) <= 1

    def first_difference(self, other: "ExactMatrix"):
        """Lexicographically first (row, col) where the matrices differ."""
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            if r != s:
                for j, (x, y) in enumerate(zip(r, s)):
                    if x != y:
                        return (i, j)
        return None

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return ExactMatrix(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.field, _trusted=True)

    def __sub__(self, other):
        self._check_same(other)
        return ExactMatrix(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.field, _trusted=True)

    def __neg__(self):
        return ExactMatrix(tuple(tuple(-x for x in r) for r in self.rows), self.field, _trusted=True)

    def scale(self, c):
        c = self.field.coerce(c)
        return ExactMatrix(tuple(tuple(c * x for x in r) for r in self.rows), self.field, _trusted=True)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            if self.field is QQ:
                return self._matmul_q(other)
            z = self.field.zero
            n = other.ncols
            brows = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
            out = []
            for r in self.rows:
                acc = [z] * n
                for k, a in enumerate(r):
                    if a:
                        for j, b in brows[k]:
                            acc[j] = acc[j] + a * b
                out.append(tuple(acc))
            return ExactMatrix(tuple(out), self.field, _trusted=True)
        return self.apply(other)

    def _matmul_q(self, other):
        # clear denominators so the inner products run on Python ints
        db = lcm(*(x.denominator for r in other.rows for x in r)) if other.rows else 1
        brows = [[(j, x.numerator * (db // x.denominator)) for j, x in enumerate(r) if x] for r in other.rows]
        n = other.ncols
        out = []
        for r in self.rows:
            da = lcm(*(x.denominator for x in r)) if r else 1
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    ai = a.numerator * (da // a.denominator)
                    for j, b in brows[k]:
                        acc[j] += ai * b
            d = da * db
            out.append(tuple(Fraction(x, d) for x in acc))
        return ExactMatrix(tuple(out), self.field, _trusted=True)

    def apply(self, vec) -> tuple:
        z = self.field.zero
        out = []
        for r in self.rows:
            acc = z
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def T(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)) if self.rows else (), self.field, _trusted=True)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        z = self.field.zero
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append(tuple((a * b if a and b else z) for a in r for b in s))
        return ExactMatrix(tuple(out), self.field, _trusted=True)

    def submatrix(self, rows, cols) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows), self.field, _trusted=True)

    def power(self, k: int) -> "ExactMatrix":
        if k < 0:
            return self.inverse().power(-k)
        result = ExactMatrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return self @ other == other @ self

    # elimination-based --------------------------------------------------
    def echelon(self) -> Echelon:
        return echelon_of(self.rows, self.ncols)

    def rank(self) -> int:
        return self.echelon().rank

    def kernel(self) -> list:
        z = self.field.zero
        return [to_dense(v, self.ncols, z) for v in kernel_rows((to_sparse(r) for r in self.rows), self.ncols, self.field)]

    def row_space(self) -> Subspace:
        return Subspace(self.ncols, self.rows, self.field)

    def column_space(self) -> Subspace:
        return Subspace(self.nrows, self.columns(), self.field)

    def solve(self, rhs) -> tuple:
        """One solution of self @ x = rhs; raises InconsistentSystem."""
        rhs = [self.field.coerce(x) for x in rhs]
        n = self.ncols
        rows = []
        for r, b in zip(self.rows, rhs):
            d = to_sparse(r)
            if b:
                d[n] = b
            rows.append(d)
        ech = echelon_of(rows, n + 1)
        if n in ech.rows:
            raise InconsistentSystem("linear system has no solution")
        x = [self.field.zero] * n
        for p, r in ech.rows.items():
            x[p] = r.get(n, self.field.zero)
        return tuple(x)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        one = self.field.one
        rows = []
        for i, r in enumerate(self.rows):
            d = to_sparse(r)
            d[n + i] = one
            rows.append(d)
        ech = echelon_of(rows, 2 * n)
        if any(p not in ech.rows for p in range(n)):
            raise ZeroDivisionError("matrix is singular")
        z = self.field.zero
        out = []
        for p in range(n):
            r = ech.rows[p]
            out.append(tuple(r.get(n + j, z) for j in range(n)))
        return ExactMatrix(tuple(out), self.field, _trusted=True)

    def det(self):
        n = self.nrows
        if not self.is_square():
            raise ValueError("determinant of non-square matrix")
        a = [list(r) for r in self.rows]
        d = self.field.one
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return self.field.zero
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            piv = a[c][c]
            d = d * piv
            for i in range(c + 1, n):
                f = a[i][c]
                if f:
                    f = f / piv
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
        return d

    def to_strings(self) -> list:
        return [[format_scalar(x) for x in r] for r in self.rows]


def solve_linear(A: ExactMatrix, mode: str = "kernel", rhs=None):
    """Front door for exact linear solving.

    ``mode`` is ``"kernel"`` (basis of the null space), ``"solve"`` (one
    solution of ``A x = rhs``) or ``"rank"``.
    """
    if mode == "kernel":
        return A.kernel()
    if mode == "rank":
        return A.rank()
    if mode == "solve":
        if rhs is None or len(rhs) != A.nrows:
            raise ValueError("solve mode needs a right-hand side of matching length")
        return A.solve(rhs)
    raise ValueError(f"unknown mode {mode!r}")
