import itertools
import random

import pytest
from hypothesis import given, strategies as st

from braidlab.braidcore.instances import diagonal, flip, jordan, random_diagonal, scalar_flip
from braidlab.exactla import QQ, ExactMatrix, Subspace
from braidlab.frt import (
    ResourceLimit,
    convolution_inverse_holds,
    extend_rform,
    format_word,
    gen_index,
    graded_truncation,
    is_coideal,
    radical_truncation,
    reduced_report,
    rform_generators,
    rtt_relations,
)
from braidlab.frt.truncation import index_word, word_index
from braidlab.uqsl2 import build_cf_braiding, build_simple_module


def delta(a, b):
    return 1 if a == b else 0


def gens_span(T, combos):
    vecs = []
    for combo in combos:
        vec: dict = {}
        for key, c in combo.items():
            part = T.nf(()) if key == 1 else T.generator_element(*key)
            for s, x in part.items():
                vec[s] = vec.get(s, 0) + c * x
        vecs.append({s: QQ.coerce(x) for s, x in vec.items() if x})
    return Subspace(T.dim, vecs, T.field)


# -- r-form -------------------------------------------------------------------


@pytest.mark.parametrize("q", [1, 2, -3])
def test_rform_scalar_flip_generators(q):
    rf = rform_generators(scalar_flip(q))
    n = 2
    for i, j, k, l in itertools.product(range(n), repeat=4):
        assert rf.generator(gen_index(i, j, n), gen_index(k, l, n)) == q * delta(i, j) * delta(k, l)


def test_rform_flip_second_slot_product():
    rf = rform_generators(flip(2))
    n = 2
    for p, q, a, b, c, d in itertools.product(range(n), repeat=6):
        got = extend_rform(rf, (gen_index(p, q, n),), (gen_index(a, b, n), gen_index(c, d, n)))
        assert got == delta(p, q) * delta(a, b) * delta(c, d)


def test_rform_counit_law():
    rf = rform_generators(jordan(2))
    for g in range(4):
        i, j = divmod(g, 2)
        assert rf.words((g,), ()) == delta(i, j)
        assert rf.words((), (g,)) == delta(i, j)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (3, 2), (0, 2)])
def test_rform_one_dimensional_powers(a, b):
    q = 3
    rf = rform_generators(diagonal([[q]]))
    assert rf.words((0,) * a, (0,) * b) == q ** (a * b)


def test_convolution_inverse():
    for b in (flip(2), jordan(1), diagonal([[1, 2], [3, 4]])):
        assert convolution_inverse_holds(rform_generators(b))


@given(st.integers(0, 10 ** 6))
def test_rform_kills_relations_on_random_diagonal(seed):
    b = random_diagonal(random.Random(seed), 2)
    rf = rform_generators(b)
    N = 4
    rels = [{index_word(w, 2, N): x for w, x in r.items()} for r in rtt_relations(b)]
    for r in rels:
        for g in range(N):
            assert extend_rform(rf, (g,), r, "first") == 0
            assert extend_rform(rf, (g,), r, "second") == 0


@given(st.integers(0, 10 ** 6))
def test_rform_multiplicative_in_first_slot(seed):
    """r(ab⊗t_kl) = Σ_m r(a⊗t_km) r(b⊗t_ml) for generators a, b."""
    rng = random.Random(seed)
    b = random_diagonal(rng, 2) if rng.random() < 0.5 else jordan(rng.choice([1, 2]))
    rf = rform_generators(b)
    n = 2
    a, c = rng.randrange(4), rng.randrange(4)
    k, l = rng.randrange(2), rng.randrange(2)
    lhs = rf.words((a, c), (gen_index(k, l, n),))
    rhs = sum(rf.words((a,), (gen_index(k, m, n),)) * rf.words((c,), (gen_index(m, l, n),)) for m in range(n))
    assert lhs == rhs


# -- relations and truncation dims ------------------------------------------


@pytest.mark.parametrize("b", [flip(2), scalar_flip(2)])
def test_commutation_relations(b):
    assert len(rtt_relations(b)) == 6
    assert graded_truncation(b, 2).profile == (1, 4, 10)


@pytest.mark.parametrize("q", [1, 2, 5])
def test_one_generator_is_free(q):
    b = diagonal([[q]])
    assert rtt_relations(b) == []
    assert graded_truncation(b, 3).profile == (1, 1, 1, 1)


def test_jordan_truncation_profile():
    T = graded_truncation(jordan(1), 2)
    assert len(rtt_relations(jordan(1))) == 12
    assert T.profile == (1, 4, 4)


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        graded_truncation(flip(3), 4)  # 9^4 words exceed the default cap
    with pytest.raises(ValueError):
        graded_truncation(flip(2), 0)


def test_truncation_products_and_coproduct():
    T = graded_truncation(flip(2), 2)
    n = 2
    a, b = gen_index(0, 1, n), gen_index(1, 0, n)
    # the flip gives a commutative algebra
    assert T.nf((a, b)) == T.nf((b, a))
    # Δ t_01 = Σ_m t_0m ⊗ t_m1
    s = next(iter(T.generator_element(0, 1)))
    terms = T.coproduct(s)
    want = {}
    for m in range(n):
        (x,) = T.generator_element(0, m)
        (y,) = T.generator_element(m, 1)
        want[(x, y)] = 1
    assert terms == want


def test_generator_action_convention():
    # t_kl acts by ρ(t_kl)[j][i] = C[(j,l),(k,i)]; for the flip this is δ_kl·id
    T = graded_truncation(flip(2), 1)
    for k in range(2):
        for l in range(2):
            A = T.generator_action(gen_index(k, l, 2))
            assert A == (ExactMatrix.identity(2) if k == l else ExactMatrix.zeros(2, 2))


def test_format_word():
    assert format_word((), 2) == "1"
    assert format_word((gen_index(0, 1, 2), gen_index(1, 1, 2)), 2) == "t12*t22"


# -- radical ------------------------------------------------------------------


def test_radical_unit_braiding():
    R = radical_truncation(diagonal([[1]]), 1)
    assert R.dim == 1
    assert R.J.signature() == gens_span(R.truncation, [{(0, 0): 1, 1: -1}]).signature()
    assert R.quotient_profile() == (1, 0)


def test_radical_two_is_zero():
    assert radical_truncation(diagonal([[2]]), 1).dim == 0


def test_radical_scalar_flip():
    R = radical_truncation(scalar_flip(2), 1)
    want = gens_span(R.truncation, [{(0, 1): 1}, {(1, 0): 1}, {(0, 0): 1, (1, 1): -1}])
    assert R.J.dim == 3 and R.J.contains_space(want)
    assert R.quotient_profile() == (1, 1)


def test_radical_is_coideal():
    for b in (jordan(1), scalar_flip(2), diagonal([[1, 2], [3, -1]])):
        R = radical_truncation(b, 2)
        assert is_coideal(R.truncation, R.J)


def test_radical_kills_module():
    R = radical_truncation(jordan(1), 2)
    T = R.truncation
    for v in R.basis_vectors():
        assert T.element_action(v).is_zero()


@given(st.integers(0, 10 ** 6))
def test_radical_restricts_along_degrees(seed):
    b = random_diagonal(random.Random(seed), 2)
    small = radical_truncation(b, 1)
    big = radical_truncation(b, 2)
    N = 4
    emb = [big.truncation.index[(e.degree, word_index(e.word, N))] for e in small.truncation.basis]
    T = big.truncation
    low = Subspace(T.dim, [{s: QQ.one} for s in T.filtered_indices(1)], QQ)
    inter = big.J.intersect(low)
    mapped = Subspace(T.dim, [{emb[s]: x for s, x in v.items()} for v in small.basis_vectors()], QQ)
    assert inter.dim == mapped.dim and inter.contains_space(mapped)


# -- reduced report -----------------------------------------------------------------


def test_scalar_flip_report():
    rep = reduced_report(scalar_flip(2), 2)
    assert rep.red_profile == (1, 1, 1)
    assert len(rep.grouplike_classes) == 1
    assert rep.actions[0] == ExactMatrix.identity(2).scale(2)
    assert rep.power_relations == {}
    assert rep.diagonal_action and rep.m_reduced and rep.reconstruction and rep.coideal_verified


def test_flip_report_collapses():
    rep = reduced_report(flip(2), 2)
    # t_ij ↦ δ_ij: every generator image is the unit or zero
    assert rep.red_profile == (1, 0, 0)
    assert sorted(rep.vanishing) == [(0, 1), (1, 0)]


def test_jordan_report():
    rep = reduced_report(jordan(1), 1)
    assert rep.radical.profile() == (0, 3)
    assert rep.grouplike_classes == [[(0, 0), (1, 1)]]
    assert rep.actions[0] == ExactMatrix([[1, 1], [0, 1]])
    assert rep.diagonal_action is False
    assert rep.reconstruction and rep.m_reduced


def test_uq_L1_degree_one():
    b = build_cf_braiding(build_simple_module(1))
    rep = reduced_report(b, 1)
    assert rep.vanishing == [(0, 1)]
    assert rep.red_profile == (1, 3)
    assert rep.grouplike_classes == [[(0, 0)], [(1, 1)]]
    assert [p for p, _, _ in rep.skew_primitives] == [(1, 0)]
    (x, g, h), = rep.skew_primitives
    # Δ t21 = t21⊗t11 + t22⊗t21
    assert rep.grouplike_classes[g] == [(0, 0)] and rep.grouplike_classes[h] == [(1, 1)]
    assert rep.diagonal_action


def test_uq_L1_degree_two_inverse_pair():
    b = build_cf_braiding(build_simple_module(1))
    rep = reduced_report(b, 2)
    assert rep.inverse_pairs == [(0, 1)]
    assert all(rep.commutators.values())
    tri = rep.triangular
    assert tri["detected"] and tri["lower_coefficients_vanish"] and tri["diagonal_grouplike"]


def test_report_json_keys():
    doc = reduced_report(jordan(1), 1).to_json()
    assert doc["A_dims"] == [1, 4]
    assert doc["Ared_dims"] == [1, 1]
    assert doc["grouplikes"] == [["t11", "t22"]]
    assert doc["diagonal_action"] is False
