import os
import subprocess
import sys
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from braidlab.exactla import (
    QQ,
    QV,
    V,
    ExactMatrix,
    InconsistentSystem,
    RatFunc,
    ScalarSyntaxError,
    Subspace,
    charpoly,
    eigen,
    field_roots,
    format_scalar,
    integer_kernel,
    minimal_polynomial,
    parse_scalar,
    simuldiag,
    smith_nf,
    solve_linear,
)


# -- scalars ----------------------------------------------------------------


def test_parse_rational_reduces():
    assert parse_scalar("3/6", QQ) == Fraction(1, 2)


def test_parse_cancels_polynomial_factor():
    assert parse_scalar("(v^2-1)/(v-1)", QV) == V + 1


def test_negative_exponent_normalizes():
    x = parse_scalar("v^-3", QV)
    assert x == 1 / V ** 3
    assert x.num == (1,) and x.den == (0, 0, 0, 1)
    assert format_scalar(x) == format_scalar(V ** (-3))


@pytest.mark.parametrize("text", ["", "1/", "v^", "(1+2", "2**3", "x"])
def test_parse_rejects_malformed(text):
    with pytest.raises((ScalarSyntaxError, ValueError)):
        parse_scalar(text, QV)


def test_parse_rejects_v_over_q():
    with pytest.raises((ScalarSyntaxError, ValueError)):
        parse_scalar("v", QQ)


def test_division_by_zero_is_error():
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/(v-v)", QV)


def test_ratfunc_canonical_sign_and_content():
    a = (2 * V + 2) / (4 * V)
    b = (V + 1) / (2 * V)
    assert a == b and hash(a) == hash(b)
    assert (-(V - 1)) / (1 - V) == 1


laurent = st.tuples(st.integers(-4, 4), st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def ratfuncs(draw):
    num = sum((c * V ** k for c, k, _ in [draw(laurent) for _ in range(3)]), RatFunc.const(0))
    den = sum((c * V ** k for c, k, _ in [draw(laurent) for _ in range(2)]), RatFunc.const(0))
    if not den:
        den = RatFunc.const(1)
    return num / den


@given(ratfuncs())
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x), QV) == x


@given(st.fractions(max_denominator=50))
def test_rational_round_trip(x):
    assert parse_scalar(format_scalar(x), QQ) == x


@given(ratfuncs(), ratfuncs())
def test_field_axioms_against_sympy(x, y):
    v = sympy.Symbol("v")
    sx = sympy.sympify(format_scalar(x).replace("^", "**"), locals={"v": v})
    sy = sympy.sympify(format_scalar(y).replace("^", "**"), locals={"v": v})
    got = sympy.sympify(format_scalar(x * y + x).replace("^", "**"), locals={"v": v})
    assert sympy.simplify(got - (sx * sy + sx)) == 0


# -- linear algebra -----------------------------------------------------------


def test_kernel_example():
    K = ExactMatrix([[1, 2], [2, 4]]).kernel()
    assert len(K) == 1
    assert Subspace(2, K, QQ).contains((-2, 1))


def test_rank_identity():
    assert ExactMatrix.identity(3).rank() == 3


def test_solve_scalar():
    assert ExactMatrix([[2]]).solve([1]) == (Fraction(1, 2),)


def test_solve_inconsistent_raises_with_certificate():
    with pytest.raises(InconsistentSystem):
        ExactMatrix([[1, 1], [1, 1]]).solve([0, 1])


def test_solve_linear_modes():
    A = ExactMatrix([[1, 2], [2, 4]])
    assert solve_linear(A, "rank") == 1
    assert len(solve_linear(A, "kernel")) == 1


def test_inverse_over_qv():
    A = ExactMatrix([[V, 1], [0, 1 / V]], QV)
    assert A @ A.inverse() == ExactMatrix.identity(2, QV)


@st.composite
def int_matrices(draw, n=None):
    n = n or draw(st.integers(1, 4))
    return [[draw(st.integers(-4, 4)) for _ in range(n)] for _ in range(n)]


@given(int_matrices())
def test_rank_nullity(rows):
    A = ExactMatrix(rows)
    K = A.kernel()
    assert A.rank() + len(K) == A.ncols
    for v in K:
        assert not any(A.apply(v))


@given(int_matrices())
def test_det_matches_sympy(rows):
    assert ExactMatrix(rows).det() == sympy.Matrix(rows).det()


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_rational_product_matches_sympy(m, k, n, data):
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    A = [[data.draw(frac) for _ in range(k)] for _ in range(m)]
    B = [[data.draw(frac) for _ in range(n)] for _ in range(k)]
    want = sympy.Matrix(A) * sympy.Matrix(B)
    got = ExactMatrix(A) @ ExactMatrix(B)
    assert [[sympy.Rational(x.numerator, x.denominator) for x in r] for r in got.rows] == want.tolist()
    # and the field-agnostic path over Q(v) agrees on constant entries
    assert ExactMatrix(A, QV) @ ExactMatrix(B, QV) == ExactMatrix([[RatFunc.const(x) for x in r] for r in got.rows], QV)


# -- eigen ------------------------------------------------------------------


def test_eigen_diagonal():
    rep = eigen(ExactMatrix([[2, 0], [0, 3]]))
    assert rep.eigenvalues == [2, 3] and rep.diagonalizable


def test_eigen_jordan_is_defective():
    rep = eigen(ExactMatrix([[1, 1], [0, 1]]))
    assert rep.eigenvalues == [1]
    assert rep.pairs[0].multiplicity == 2 and len(rep.pairs[0].basis) == 1
    assert not rep.diagonalizable


def test_eigen_over_qv():
    A = ExactMatrix([[0, 1 / V], [1 / V, V - V ** (-3)]], QV)
    rep = eigen(A)
    assert set(rep.eigenvalues) == {V, -V ** (-3)}
    assert rep.split and rep.diagonalizable


def test_non_split_spectrum():
    rep = eigen(ExactMatrix([[0, -1], [1, 0]]))
    assert not rep.split and rep.eigenvalues == []


def test_charpoly_and_minpoly():
    A = ExactMatrix([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    # (x-2)^2 (x-3) and (x-2)^2 (x-3)
    assert charpoly(A) == [-12, 16, -7, 1]
    assert minimal_polynomial(A) == [-12, 16, -7, 1]
    assert minimal_polynomial(ExactMatrix.identity(3).scale(5)) == [-5, 1]


def test_field_roots_qv_binomial():
    # x^2 - v^2 over Q(v)
    roots = field_roots([-(V ** 2), 0, 1], QV)
    assert set(roots) == {V, -V}


@given(int_matrices())
def test_eigenpairs_satisfy_definition(rows):
    A = ExactMatrix(rows)
    rep = eigen(A)
    lams = set(sympy.Matrix(rows).eigenvals())
    assert {sympy.Rational(x.numerator, x.denominator) for x in rep.eigenvalues} == {x for x in lams if x.is_rational}
    for p in rep.pairs:
        for v in p.basis:
            assert A.apply(v) == tuple(p.value * x for x in v)


# -- simultaneous diagonalization ----------------------------------------------


def test_simuldiag_example():
    res = simuldiag([ExactMatrix.diag([1, 2]), ExactMatrix.diag([3, 3])])
    assert res.ok
    assert sorted(sp.values for sp in res.spaces) == [(1, 3), (2, 3)]


def test_simuldiag_defective():
    res = simuldiag([ExactMatrix([[1, 1], [0, 1]])])
    assert not res.ok and res.failure == "defective matrix"


def test_simuldiag_non_commuting():
    res = simuldiag([ExactMatrix([[0, 1], [1, 0]]), ExactMatrix.diag([1, -1])])
    assert not res.ok and res.failure == "non-commuting pair"


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.integers(0, 5))
def test_simuldiag_conjugated_diagonals(d1, d2, seed):
    import random
    from braidlab.braidcore.instances import random_invertible

    P = random_invertible(random.Random(seed), 3)
    Pi = P.inverse()
    A = P @ ExactMatrix.diag(d1) @ Pi
    B = P @ ExactMatrix.diag(d2) @ Pi
    res = simuldiag([A, B])
    assert res.ok
    assert sum(sp.space.dim for sp in res.spaces) == 3
    for sp in res.spaces:
        for v in sp.space.basis():
            assert A.apply(v) == tuple(sp.values[0] * x for x in v)
            assert B.apply(v) == tuple(sp.values[1] * x for x in v)


# -- Smith normal form --------------------------------------------------------


@pytest.mark.parametrize(
    "A, expected",
    [([[4, 0], [0, 6]], (2, 12)), ([[2, 4], [6, 8]], (2, 4)), ([[1, 0], [0, 1]], (1, 1))],
)
def test_snf_examples(A, expected):
    assert smith_nf(A).invariant_factors == expected


def _mul(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_snf_properties(m, n, data):
    A = [[data.draw(st.integers(-6, 6)) for _ in range(n)] for _ in range(m)]
    sf = smith_nf(A)
    assert _mul(_mul([list(r) for r in sf.U], A), [list(r) for r in sf.V]) == [list(r) for r in sf.D]
    d = sf.invariant_factors
    for a, b in zip(d, d[1:]):
        assert (a == 0 and b == 0) or (a and b % a == 0)
    assert all(x >= 0 for x in d)
    assert abs(sympy.Matrix(sf.U).det()) == 1 and abs(sympy.Matrix(sf.V).det()) == 1


def test_integer_kernel():
    K = integer_kernel([[1, 2, 3]])
    assert len(K) == 2
    for v in K:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


# -- backends -----------------------------------------------------------------


def test_pure_python_backend_agrees():
    code = (
        "from braidlab.exactla import BACKEND, parse_scalar, QV, eigen, ExactMatrix, V, format_scalar;"
        "A = ExactMatrix([[0, 1 / V], [1 / V, V - V ** (-3)]], QV);"
        "x = parse_scalar('(v^4-1)/(v^2-1) + v^-3', QV);"
        "print(BACKEND, format_scalar(x), sorted(format_scalar(e) for e in eigen(A).eigenvalues))"
    )
    out = {}
    for flag in ("0", "1"):
        env = dict(os.environ, BRAIDLAB_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, rest = res.stdout.split(" ", 1)
        out[flag] = rest
        if flag == "1":
            assert backend == "python"
    assert out["0"] == out["1"]
