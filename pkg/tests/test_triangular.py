import random

import pytest
from hypothesis import given, strategies as st

from braidlab.braidcore import change_basis, check_rigidity, transform_braiding
from braidlab.braidcore.instances import (
    diagonal,
    flip,
    jordan,
    jordan_matrix,
    random_diagonal,
    random_invertible,
    random_right_triangular,
    scalar_flip,
)
from braidlab.exactla import QQ, QV, V, ExactMatrix, Subspace
from braidlab.grouptype import group_braiding, random_abelian_triangular
from braidlab.triangular import (
    DegenerateBasis,
    Flag,
    FlagNotInvariant,
    TriangularityCertificate,
    TriangularityViolation,
    check_triangular,
    detect_diagonal,
    detect_triangular,
    find_invariant_flags,
    flag_is_invariant,
    flat_tau_matrix,
    predicted_flat_diagonal,
    line_operators,
    verify_certificate,
)
from braidlab.uqsl2 import build_cf_braiding, build_simple_module

E2 = ((1, 0), (0, 1))
Q = [[2, 3], [5, 7]]


# -- certificates for a given basis -------------------------------------------


@pytest.mark.parametrize("order", [E2, tuple(reversed(E2))])
def test_diagonal_right_certificate_any_order(order):
    cert = check_triangular(diagonal(Q), order, "right")
    assert isinstance(cert, TriangularityCertificate)
    assert not cert.residuals
    perm = [order.index(e) for e in E2]
    for i in range(2):
        for j in range(2):
            assert cert.coeffs[(perm[i], perm[j])] == Q[i][j]
    assert verify_certificate(diagonal(Q), cert)


def test_jordan_left_certificate():
    b = jordan(3)
    cert = check_triangular(b, ((0, 1), (1, 0)), "left")
    assert isinstance(cert, TriangularityCertificate)
    assert set(cert.coeffs.values()) == {3}
    assert set(cert.residuals) == {(0, 0, 1), (1, 0, 1)}
    assert verify_certificate(b, cert)


@pytest.mark.parametrize("order", [E2, tuple(reversed(E2))])
def test_jordan_right_certificate_fails(order):
    res = check_triangular(jordan(1), order, "right")
    assert isinstance(res, TriangularityViolation) and not res


def test_degenerate_basis():
    with pytest.raises(DegenerateBasis):
        check_triangular(flip(2), ((1, 1), (2, 2)), "right")


def test_certificate_json_is_one_based():
    cert = check_triangular(jordan(1), ((0, 1), (1, 0)), "left")
    doc = cert.to_json()
    assert doc["side"] == "left"
    assert {r["z"] for r in doc["residuals"]} == {2}


def test_tampered_certificate_rejected():
    b = jordan(1)
    cert = check_triangular(b, ((0, 1), (1, 0)), "left")
    bad = TriangularityCertificate(cert.side, cert.basis, {**cert.coeffs, (0, 0): 2}, cert.residuals)
    assert not verify_certificate(b, bad)


# -- flags ----------------------------------------------------------------------


def test_flip_standard_flag():
    search = find_invariant_flags(flip(2), max_flags=None)
    assert search.flags
    assert all(flag_is_invariant(flip(2), f) for f in search.flags)
    firsts = {tuple(f.vectors[0]) for f in search.flags}
    assert firsts == {(1, 0), (0, 1)}


def test_jordan_every_flag_invariant():
    b = jordan(1)
    for v in [(1, 0), (0, 1), (1, 1), (3, -2)]:
        w = (0, 1) if v[0] else (1, 0)
        assert flag_is_invariant(b, Flag((v, w)))
    search = find_invariant_flags(b, branch_limit=8)
    assert search.flags


def test_diagonal_distinct_rows_coordinate_flags_only():
    b = diagonal([[1, 2], [3, 5]])
    search = find_invariant_flags(b)
    assert search.flags
    for f in search.flags:
        first = f.vectors[0]
        assert sum(1 for x in first if x) == 1
    assert not flag_is_invariant(b, Flag(((1, 1), (1, 0))))


def test_line_operators_diagonal():
    b = diagonal(Q)
    flag = Flag(((0, 1), (1, 0)))  # position 0 = e1 as smallest
    Ls = line_operators(b, flag)
    assert Ls[0] == ExactMatrix.diag(Q[0]) and Ls[1] == ExactMatrix.diag(Q[1])


@pytest.mark.parametrize("vecs", [((1, 0), (0, 1)), ((1, 1), (0, 1)), ((2, -1), (1, 0))])
def test_line_operators_jordan(vecs):
    for L in line_operators(jordan(1), Flag(vecs)):
        assert L == jordan_matrix(1)


def test_line_operators_flip():
    for L in line_operators(flip(3), Flag(((1, 0, 0), (0, 1, 0), (0, 0, 1)))):
        assert L.is_identity()


def test_line_operators_rejects_non_invariant_flag():
    with pytest.raises(FlagNotInvariant):
        line_operators(diagonal([[1, 2], [3, 5]]), Flag(((1, 1), (1, 0))))


# -- detection ------------------------------------------------------------------


def test_detect_diagonal_is_right_triangular():
    res = detect_triangular(diagonal(Q), "right")
    assert res.holds and not res.certificate.residuals


def test_detect_jordan():
    assert detect_triangular(jordan(1), "left").holds
    res = detect_triangular(jordan(1), "right")
    assert res.status == "refuted" and res.reason == "defective line operator"


def test_detect_uq_L1_weight_order():
    b = build_cf_braiding(build_simple_module(1))
    res = detect_triangular(b, "right")
    assert res.holds
    basis = res.certificate.basis
    # v1 (weight -1) is the smallest element, v0 the largest
    assert Subspace(2, [basis[0]], QV).contains((0, 1))
    assert Subspace(2, [basis[1]], QV).contains((1, 0))
    assert set(res.certificate.coeffs.values()) <= {V, 1 / V}


def test_non_split_spectrum_is_indeterminate():
    # rotation by 90° acting on every degree: the line operator has no rational eigenvalue
    from braidlab.braidcore.instances import from_operators

    R = ExactMatrix([[0, -1], [1, 0]])
    res = detect_triangular(from_operators([R, R]), "right")
    assert res.status == "indeterminate"


def test_right_detect_refutes_non_commuting_lines():
    # c(e_i⊗w) = g_i w⊗e_i with non-commuting g_1, g_2
    from braidlab.braidcore.instances import from_operators

    A = ExactMatrix([[1, 0], [0, 2]])
    B = ExactMatrix([[1, 1], [1, 2]])
    res = detect_triangular(from_operators([A, B]), "right")
    assert res.status == "refuted" and res.reason == "non-commuting line operators"


def test_branch_limit_truncation_is_indeterminate():
    res = detect_triangular(flip(3), "right", branch_limit=0)
    assert res.status == "indeterminate" and res.reason == "search truncated"


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_detect_right_on_hidden_triangular(seed, n):
    b, _ = random_right_triangular(random.Random(seed), n)
    res = detect_triangular(b, "right")
    assert res.holds and verify_certificate(b, res.certificate)


@given(st.integers(0, 10 ** 6))
def test_conjugated_diagonal_detected(seed):
    rng = random.Random(seed)
    b = change_basis(random_diagonal(rng, 2), random_invertible(rng, 2))
    assert detect_triangular(b, "right").holds
    assert detect_diagonal(b).holds


@given(st.integers(0, 10 ** 6), st.integers(2, 3))
def test_group_type_upper_actions_left_triangular(seed, n):
    d = random_abelian_triangular(random.Random(seed), n)
    b = group_braiding(d)
    res = detect_triangular(b, "left")
    assert res.holds
    # the reversed coordinate order certifies it as well
    rev = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in reversed(range(n)))
    assert isinstance(check_triangular(b, rev, "left"), TriangularityCertificate)


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_side_exchange_properties(seed, n):
    b, basis = random_right_triangular(random.Random(seed), n)
    cert = check_triangular(b, basis, "right")
    for which in ("flip_conjugate", "inverse"):
        other = transform_braiding(b, which)
        moved = check_triangular(other, basis, "left")
        assert isinstance(moved, TriangularityCertificate) and verify_certificate(other, moved)
        for (x, y), beta in cert.coeffs.items():
            want = beta if which == "flip_conjugate" else 1 / beta
            assert moved.coeffs[(y, x)] == want


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_certificate_implies_rigidity(seed, n):
    b, basis = random_right_triangular(random.Random(seed), n)
    cert = check_triangular(b, basis, "right")
    assert check_rigidity(b)
    M, order = flat_tau_matrix(b, cert)
    assert all(not M.rows[i][j] for i in range(M.nrows) for j in range(i))
    assert [M.rows[i][i] for i in range(M.nrows)] == predicted_flat_diagonal(cert, order)


def test_flat_tau_left_certificate():
    b = jordan(2)
    cert = detect_triangular(b, "left").certificate
    M, order = flat_tau_matrix(b, cert)
    assert all(not M.rows[i][j] for i in range(4) for j in range(i))
    assert [M.rows[i][i] for i in range(4)] == predicted_flat_diagonal(cert, order)


# -- diagonal type ------------------------------------------------------------


def test_detect_diagonal_recovers_table():
    res = detect_diagonal(diagonal(Q))
    assert res.holds
    got = sorted(res.q.values())
    assert got == sorted(x for row in Q for x in row)


def test_detect_diagonal_jordan_fails():
    res = detect_diagonal(jordan(1))
    assert res.status == "refuted"


def test_detect_diagonal_flip():
    res = detect_diagonal(flip(2))
    assert res.holds and set(res.q.values()) == {1}


def test_detect_diagonal_scalar_flip():
    res = detect_diagonal(scalar_flip(3))
    assert res.holds and set(res.q.values()) == {3}
