import pytest

from braidlab.braidcore import check_braid_equation, check_rigidity
from braidlab.exactla import QV, V, ExactMatrix, eigen
from braidlab.uqsl2 import (
    CommutationFactor,
    UqModule,
    build_cf_braiding,
    build_simple_module,
    qint,
    theta_matrix,
    uq_report,
    validate_uq_module,
    weight_support_holds,
)


def test_qint_values():
    assert qint(1) == 1
    assert qint(2) == V ** 2 + V ** (-2)
    assert qint(0) == 0


def test_module_n1():
    m = build_simple_module(1)
    assert m.weights == (1, -1)
    assert m.E == ExactMatrix([[0, 1], [0, 0]], QV)
    assert m.F == ExactMatrix([[0, 0], [1, 0]], QV)
    assert m.K == ExactMatrix.diag([V ** 2, V ** (-2)], QV)


def test_module_n2_entries():
    m = build_simple_module(2)
    assert m.F.rows[1][0] == 1 and m.F.rows[2][1] == V ** 2 + V ** (-2)
    assert m.E.rows[0][1] == V ** 2 + V ** (-2) and m.E.rows[1][2] == 1


def test_module_n0_and_negative():
    m = build_simple_module(0)
    assert m.dim == 1 and m.E.is_zero() and m.F.is_zero()
    with pytest.raises(ValueError):
        build_simple_module(-1)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_simple_modules_validate(n):
    assert validate_uq_module(build_simple_module(n))


def test_swapped_generators_fail():
    m = build_simple_module(1)
    bad = UqModule(1, m.F, m.E, m.K)
    v = validate_uq_module(bad)
    assert not v and v.failed.startswith("EF - FE")
    with pytest.raises(ValueError):
        build_cf_braiding(bad)


def test_theta_trivial_and_first_order():
    assert theta_matrix(build_simple_module(0)) == ExactMatrix.identity(1, QV)
    m = build_simple_module(1)
    q = V ** 2
    want = ExactMatrix.identity(4, QV) + m.F.kron(m.E).scale(q - 1 / q)
    assert theta_matrix(m) == want


def test_n1_braiding_table():
    b = build_cf_braiding(build_simple_module(1))
    # columns are c(v_i⊗v_j), rows index v_k⊗v_l at k*2+l
    assert b.image(0, 0) == (V, 0, 0, 0)
    assert b.image(0, 1) == (0, 0, 1 / V, 0)
    assert b.image(1, 0) == (0, 1 / V, V - V ** (-3), 0)
    assert b.image(1, 1) == (0, 0, 0, V)


def test_n1_eigenvalues():
    rep = eigen(build_cf_braiding(build_simple_module(1)).matrix)
    mult = {p.value: p.multiplicity for p in rep.pairs}
    assert mult == {V: 3, -V ** (-3): 1}


def test_n0_braiding_is_one():
    b = build_cf_braiding(build_simple_module(0))
    assert b.matrix == ExactMatrix.identity(1, QV)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cf_is_rigid_braiding(n):
    m = build_simple_module(n)
    b = build_cf_braiding(m)
    assert check_braid_equation(b).holds
    assert check_rigidity(b)
    assert weight_support_holds(m, b)


def test_commutation_factor_bimultiplicative():
    f = CommutationFactor()
    assert f(1, -1) == 1 / V and f(2, 3) == V ** 6
    assert f.is_bimultiplicative(range(-3, 4))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_uq_report_consistent(n):
    r = uq_report(build_simple_module(n), D=2)
    assert r.ok, r.mismatches
    assert r.W == tuple(range(n, -n - 1, -2))
    assert r.P == (() if n == 0 else (2,))
    # weight 0 alone acts trivially; otherwise L_1 has infinite order
    assert r.quotient_invariants == (() if n == 0 else (0,))
    assert r.right_triangular
    assert r.checks["diagonal_action"] is True


def test_uq_report_json():
    doc = uq_report(build_simple_module(1), D=1).to_json()
    assert doc["P"] == ["alpha"]
    assert doc["braiding_eigenvalues"] == ["-1/v^3", "v"]
    assert doc["skew_primitive_root_classes"] == [2]
