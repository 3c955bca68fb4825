import random
from fractions import Fraction
from itertools import combinations, product

import pytest
import sympy as sp
from sympy.polys.matrices import DomainMatrix

from fanocalc import multilinear as ml
from fanocalc.multilinear import AlternatingForm, QuiverVector, mat, wedge
from fanocalc.polyalg.verify import symbolic_quiver

e = AlternatingForm.basis
PAIRS = list(combinations(range(1, 7), 2))


def one_form(vec):
    return AlternatingForm(1, {(i + 1,): c for i, c in enumerate(vec)})


def sympy_skew(omega):
    rows = [[sp.ZZ(int(c)) for c in r] for r in ml.skew_matrix(omega)]
    return DomainMatrix(rows, (6, 6), sp.ZZ)


def test_basis_sign_and_antisymmetry():
    assert e(2, 1) == -e(1, 2)
    assert e(1, 1).is_zero()
    assert wedge(e(1), e(2)) == e(1, 2)
    assert wedge(e(2), e(1)) == -e(1, 2)


def test_wedge_is_graded_commutative():
    a, b = e(1, 3), e(2)
    assert wedge(a, b) == wedge(b, a)
    assert wedge(e(1), e(3, 4)) == e(1, 3, 4)
    assert wedge(e(2, 5), e(1, 3)) == -e(1, 2, 3, 5)


def test_wedge_associative_on_basis():
    for i, j, k in [(1, 2, 3), (4, 1, 6), (5, 3, 2)]:
        assert wedge(wedge(e(i), e(j)), e(k)) == wedge(e(i), wedge(e(j), e(k)))


def test_wedge_degree_overflow():
    with pytest.raises(ValueError):
        wedge(e(1, 2, 3, 4), e(5, 6, 1))


def test_phi_examples():
    assert ml.phi(e(1, 2) + e(3, 4)) == 2 * e(1, 2, 3, 4)
    assert ml.phi(e(1, 2)).is_zero()
    assert ml.phi(e(1, 2) + e(3, 4) + e(5, 6)) == 2 * (e(1, 2, 3, 4) + e(1, 2, 5, 6) + e(3, 4, 5, 6))


def test_phi_requires_two_form():
    with pytest.raises(ValueError):
        ml.phi(e(1))


def test_rank_examples():
    assert ml.two_form_rank(AlternatingForm(2)) == 0
    assert ml.two_form_rank(e(1, 2)) == 2
    assert ml.two_form_rank(e(1, 2) + e(3, 4)) == 4
    assert ml.two_form_rank(e(1, 2) + e(3, 4) + e(5, 6)) == 6


def test_pfaffian_standard_form():
    assert ml.pfaffian_eval(e(1, 2) + e(3, 4) + e(5, 6)) == 6
    assert ml.pfaffian_eval(e(1, 2) + e(3, 4)) == 0


def test_pfaffian_and_rank_against_matrix_oracle():
    rng = random.Random(2024)
    for _ in range(10_000):
        w = AlternatingForm(2, {p: rng.choice((-1, 0, 1)) for p in PAIRS})
        m = sympy_skew(w)
        assert ml.two_form_rank(w) == m.rank()
        # Pf^2 = det and omega^3 = 3! Pf e123456
        assert ml.pfaffian_eval(w) ** 2 == 36 * m.det()


def test_decomposable_forms_have_rank_two_and_vanishing_square():
    for v, w in product(product((-1, 0, 1), repeat=3), repeat=2):
        a, b = one_form(v + (0, 1, 0)), one_form(w + (1, 0, 0))
        form = wedge(a, b)
        assert ml.phi(form).is_zero()
        assert ml.two_form_rank(form) == sympy_skew(form).rank() == 2


def test_sum_of_two_disjoint_decomposables():
    for (i, j), (k, l) in combinations(PAIRS, 2):
        if {i, j} & {k, l}:
            continue
        assert ml.phi(e(i, j) + e(k, l)) == 2 * e(i, j, k, l)
        assert ml.two_form_rank(e(i, j) + e(k, l)) == 4


def test_form_coefficients_are_exact():
    w = Fraction(1, 3) * e(1, 2) + Fraction(1, 2) * e(3, 4) + e(5, 6)
    assert ml.pfaffian_eval(w) == 1


def test_matrix_helpers():
    a = mat(1, 2, 3, 4)
    assert ml.det2(a) == -2
    assert ml.mat_mul(a, ml.inverse2(a)) == ml.IDENTITY2
    assert ml.transpose(ml.PI) == ml.mat_neg(ml.PI)
    with pytest.raises(ValueError):
        ml.inverse2(mat(1, 2, 2, 4))


def basis_quiver(k):
    return QuiverVector.from_flat([1 if i == k else 0 for i in range(16)])


def test_tau_squares_to_minus_identity():
    for k in range(16):
        u = basis_quiver(k)
        assert ml.tau_l1(ml.tau_l1(u)) == -u
    u = symbolic_quiver()
    assert ml.tau_l1(ml.tau_l1(u)) == -u


def test_tau_has_order_four():
    u = QuiverVector.from_flat(range(1, 17))
    t = u
    for _ in range(4):
        t = ml.tau_l1(t)
    assert t == u and ml.tau_l1(u) != u


def test_gl_action_is_a_group_action():
    rng = random.Random(5)
    u = QuiverVector.from_flat([rng.randint(-4, 4) for _ in range(16)])
    a, b = mat(1, 1, 0, 1), mat(2, 0, 1, 1)
    assert ml.glw_act(ml.mat_mul(a, b), u) == ml.glw_act(a, ml.glw_act(b, u))
    assert ml.glw_act(ml.IDENTITY2, u) == u


def test_tau_intertwines_gl_action_with_its_dual():
    rng = random.Random(11)
    for _ in range(100):
        m = mat(*(rng.randint(-5, 5) for _ in range(4)))
        if ml.det2(m) == 0:
            continue
        u = QuiverVector.from_flat([rng.randint(-5, 5) for _ in range(16)])
        dual = ml.transpose(ml.inverse2(m))
        assert ml.tau_l1(ml.glw_act(m, u)) == ml.glw_act(dual, ml.tau_l1(u))


def test_tau_acts_on_f_as_pi():
    rng = random.Random(13)
    for _ in range(20):
        X = mat(*(rng.randint(-5, 5) for _ in range(4)))
        Y = mat(*(rng.randint(-5, 5) for _ in range(4)))
        u = ml.f_point(X, Y)
        assert ml.tau_l1(u) == ml.glw_act(ml.PI, u)


def test_momentum_map_on_f_is_q():
    rng = random.Random(17)
    for _ in range(50):
        X = mat(*(rng.randint(-6, 6) for _ in range(4)))
        Y = mat(*(rng.randint(-6, 6) for _ in range(4)))
        q = ml.q_form(X, Y)
        value = ml.momentum_map(ml.f_point(X, Y))
        assert value.scalar == 2 * q
        assert value.matrix == ml.mat_scale(q, ml.IDENTITY2)


def test_q_form_explicit():
    X, Y = mat(1, 2, 3, 4), mat(5, 6, 7, 8)
    # x11 y21 - x21 y11 + x12 y22 - x22 y12
    assert ml.q_form(X, Y) == 1 * 7 - 3 * 5 + 2 * 8 - 4 * 6


def test_plucker_coordinates():
    X, Y = mat(1, 0, 0, 1), mat(0, 0, 0, 0)
    assert ml.plucker_2x4(X, Y) == (1, 0, 0, 0, 0, 0)
    rng = random.Random(23)
    for _ in range(50):
        X = mat(*(rng.randint(-6, 6) for _ in range(4)))
        Y = mat(*(rng.randint(-6, 6) for _ in range(4)))
        p = ml.plucker_2x4(X, Y)
        assert ml.plucker_relation(p) == 0
        assert p[1] + p[4] == ml.q_form(X, Y)
        m = mat(*(rng.randint(-3, 3) for _ in range(4)))
        scaled = ml.plucker_2x4(ml.mat_mul(m, X), ml.mat_mul(m, Y))
        assert scaled == tuple(ml.det2(m) * c for c in p)


def test_qbar_rank_test_on_q():
    X, Y = mat(1, 2, -1, 3), mat(0, 1, 4, -2)
    _, ok = ml.qbar_rank_test(ml.f_point(X, Y, 3))
    assert ok


def test_qbar_rank_test_with_zero_dual_part():
    u = QuiverVector(mat(1, 2, 3, 4), mat(5, 6, 7, 8), ml.ZERO2, ml.ZERO2)
    matrix, ok = ml.qbar_rank_test(u)
    assert ok and all(c == 0 for c in matrix[1])


def test_qbar_rank_test_generic_point_fails():
    u = QuiverVector.from_flat(range(1, 17))
    _, ok = ml.qbar_rank_test(u)
    assert not ok
    assert len(ml.qbar_minors(u)) == 28
