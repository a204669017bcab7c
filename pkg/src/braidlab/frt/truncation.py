"""Degree-truncated FRT bialgebra A(c)_{≤D}.

Generators t_ij (0-based) are numbered g = i*n + j.  A degree-d monomial is
a tuple of generator numbers, identified with its base-N index (N = n²) so
that index order is lexicographic order.  Relations are the quadratic RTT
relations; A_d is presented by the normal monomials of the degree-d relation
space, obtained by eliminating lexicographically largest monomials first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ..braidcore import BraidedVectorSpace
from ..exactla import ExactMatrix
from ..exactla.linalg import Echelon, axpy

DEFAULT_MAX_WORDS = 4096  # n^{2D} cap: n ≤ 4 with D ≤ 3


class ResourceLimit(RuntimeError):
    pass


def gen_index(i, j, n):
    return i * n + j


def gen_pair(g, n):
    return divmod(g, n)


def word_index(word, N) -> int:
    idx = 0
    for g in word:
        idx = idx * N + g
    return idx


def index_word(idx, d, N) -> tuple:
    out = []
    for _ in range(d):
        idx, g = divmod(idx, N)
        out.append(g)
    return tuple(reversed(out))


def format_word(word, n) -> str:
    if not word:
        return "1"
    return "*".join(f"t{i + 1}{j + 1}" if n < 10 else f"t{i + 1}_{j + 1}" for i, j in (gen_pair(g, n) for g in word))


def rtt_spanning_set(b: BraidedVectorSpace) -> list:
    """Σ_{k,l} C[(k,l),(i,j)] t_kp t_lq − Σ_{k,l} C[(p,q),(k,l)] t_ik t_jl
    for all (i, j, p, q), as sparse vectors over degree-2 word indices."""
    n = b.n
    N = n * n
    C = b.matrix.rows
    out = []
    for i, j, p, q in itertools.product(range(n), repeat=4):
        vec: dict = {}
        for k in range(n):
            for l in range(n):
                x = C[k * n + l][i * n + j]
                if x:
                    w = (k * n + p) * N + (l * n + q)
                    vec[w] = vec.get(w, 0) + x
                y = C[p * n + q][k * n + l]
                if y:
                    w = (i * n + k) * N + (j * n + l)
                    vec[w] = vec.get(w, 0) - y
        vec = {w: x for w, x in vec.items() if x}
        if vec:
            out.append(vec)
    return out


def rtt_relations(b: BraidedVectorSpace) -> list:
    """Basis (reduced echelon, sparse) of the quadratic relation space R."""
    N = b.n ** 2
    ech = Echelon(N * N)
    for v in rtt_spanning_set(b):
        ech.add({w: b.field.coerce(x) for w, x in v.items()})
    return ech.basis()


@dataclass(frozen=True)
class BasisElement:
    degree: int
    word: tuple


class FrtTruncation:
    """Normal-form presentation of A(c)_{≤D} with structure maps."""

    def __init__(self, b: BraidedVectorSpace, D: int, max_words: int = DEFAULT_MAX_WORDS):
        if D < 1:
            raise ValueError("degree bound must be at least 1")
        n = b.n
        N = n * n
        if N ** D > max_words:
            raise ResourceLimit(f"n^(2D) = {N ** D} exceeds the cap {max_words}")
        self.b = b
        self.D = D
        self.n = n
        self.N = N
        self.field = b.field
        self.relations = rtt_relations(b)
        self.echelons = {}
        self.normal = {}
        for d in range(D + 1):
            ech = self._relation_echelon(d)
            self.echelons[d] = ech
            self.normal[d] = [w for w in range(N ** d) if w not in ech.rows]
        self.basis = [BasisElement(d, index_word(w, d, N)) for d in range(D + 1) for w in self.normal[d]]
        self.index = {(e.degree, word_index(e.word, N)): s for s, e in enumerate(self.basis)}
        self._nf_cache = {}
        self._rho_cache = {(): ExactMatrix.identity(n, self.field)}

    def _relation_echelon(self, d) -> Echelon:
        N = self.N
        size = N ** d
        ech = Echelon(size, priority=_Reversed(size))
        if d < 2:
            return ech
        for i in range(d - 1):
            left = N ** i
            right = N ** (d - 2 - i)
            for pre in range(left):
                for rel in self.relations:
                    for suf in range(right):
                        vec = {(pre * N * N + w) * right + suf: x for w, x in rel.items()}
                        ech.add(vec)
        return ech

    # ------------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def profile(self) -> tuple:
        return tuple(len(self.normal[d]) for d in range(self.D + 1))

    def degree_slice(self, d) -> list:
        """Global indices of basis elements of degree exactly d."""
        return [s for s, e in enumerate(self.basis) if e.degree == d]

    def filtered_indices(self, d) -> list:
        return [s for s, e in enumerate(self.basis) if e.degree <= d]

    def nf(self, word) -> dict:
        """Normal form of a monomial of degree ≤ D: {global index: coeff}."""
        word = tuple(word)
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        d = len(word)
        if d > self.D:
            raise ValueError("monomial degree exceeds the truncation")
        w = word_index(word, self.N)
        ech = self.echelons[d]
        row = ech.rows.get(w)
        if row is None:
            out = {self.index[(d, w)]: self.field.one}
        else:
            out = {self.index[(d, c)]: -x for c, x in row.items() if c != w}
        self._nf_cache[word] = out
        return out

    def nf_element(self, element: dict) -> dict:
        """Normal form of a linear combination {word: coeff}."""
        out: dict = {}
        for word, x in element.items():
            if x:
                axpy(out, -self.field.coerce(x), self.nf(word))
        return out

    def multiply(self, s, t) -> dict:
        a, c = self.basis[s], self.basis[t]
        return self.nf(a.word + c.word)

    def counit(self, s):
        F = self.field
        for g in self.basis[s].word:
            i, j = gen_pair(g, self.n)
            if i != j:
                return F.zero
        return F.one

    def coproduct_word(self, word) -> dict:
        """Δ of a monomial as {(a, b): coeff} over global indices."""
        n = self.n
        out: dict = {}
        pairs = [gen_pair(g, n) for g in word]
        for mids in itertools.product(range(n), repeat=len(word)):
            left = tuple(i * n + m for (i, _), m in zip(pairs, mids))
            right = tuple(m * n + j for (_, j), m in zip(pairs, mids))
            L = self.nf(left)
            R = self.nf(right)
            for a, x in L.items():
                for c, y in R.items():
                    key = (a, c)
                    val = out.get(key)
                    val = x * y if val is None else val + x * y
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        return out

    @cached_property
    def _coproducts(self) -> list:
        return [self.coproduct_word(e.word) for e in self.basis]

    def coproduct(self, s) -> dict:
        return self._coproducts[s]

    def generator_action(self, g) -> ExactMatrix:
        """ρ(t_kl)[j][i] = C[(j,l),(k,i)] = r(t_ij⊗t_kl)."""
        n = self.n
        k, l = gen_pair(g, n)
        C = self.b.matrix.rows
        return ExactMatrix(tuple(tuple(C[j * n + l][k * n + i] for i in range(n)) for j in range(n)), self.field, _trusted=True)

    def word_action(self, word) -> ExactMatrix:
        word = tuple(word)
        hit = self._rho_cache.get(word)
        if hit is None:
            hit = self.word_action(word[:-1]) @ self.generator_action(word[-1])
            self._rho_cache[word] = hit
        return hit

    def action(self, s) -> ExactMatrix:
        return self.word_action(self.basis[s].word)

    def element_action(self, vec: dict) -> ExactMatrix:
        out = ExactMatrix.zeros(self.n, self.n, self.field)
        for s, x in vec.items():
            if x:
                out = out + self.action(s).scale(x)
        return out

    def generator_element(self, i, j) -> dict:
        return self.nf((gen_index(i, j, self.n),))

    def format_element(self, vec: dict) -> list:
        from ..exactla import format_scalar

        return [
            {"monomial": format_word(self.basis[s].word, self.n), "coeff": format_scalar(x)}
            for s, x in sorted(vec.items())
        ]


class _Reversed:
    """Priority map making the largest column index the preferred pivot."""

    __slots__ = ("size",)

    def __init__(self, size):
        self.size = size

    def __getitem__(self, c):
        return self.size - 1 - c


def graded_truncation(b: BraidedVectorSpace, D: int, max_words: int = DEFAULT_MAX_WORDS) -> FrtTruncation:
    return FrtTruncation(b, D, max_words)
