"""Acceptance criteria, one check per criterion.

Run ``python3 tests/test_acceptance.py`` for a plain PASS/FAIL listing, or
``pytest tests/test_acceptance.py -v``; both print one line per criterion.
"""

import random
import time

import pytest

from fanocalc import degeneration as dg
from fanocalc import hodge_ring as hr
from fanocalc import multilinear as ml
from fanocalc.cli import diamond_report, parse_variety
from fanocalc.polyalg import IdealBasis, Membership, MultiPoly, buchberger, parse_poly, spolys_reduce_to_zero
from fanocalc.polyalg import verify as pv
from fanocalc.suites import oracle_agreement, random_hodge, random_small_instance

L = hr.L


def rows_of(tag):
    report = diamond_report(*parse_variety(tag), full=False)
    return {r["degree"]: r["entries"] for r in report["rows"]}, report["odd_cohomology_zero"]


def criterion_1():
    rows, odd_zero = rows_of("fano")
    return odd_zero and rows == {
        8: [0, 0, 1, 22, 253, 22, 1, 0, 0],
        6: [0, 0, 1, 22, 1, 0, 0],
        4: [0, 1, 22, 1, 0],
        2: [0, 1, 0],
        0: [1],
    }


def criterion_2():
    sigma, s_odd = rows_of("sigma")
    q4, q4_odd = rows_of("q4y")
    q3, q3_odd = rows_of("q3y")
    ok = s_odd and q4_odd and q3_odd
    ok &= (sigma[8][4], sigma[6][3], sigma[4][2], sigma[2][1]) == (255, 44, 23, 2)
    ok &= (q4[8][4], q4[6][3], q4[4][2], q4[2][1]) == (46, 25, 24, 2)
    ok &= (q3[6][3], q3[4][2], q3[2][1]) == (24, 23, 2)
    ok &= sigma == {0: [1], 2: [0, 2, 0], 4: [0, 1, 23, 1, 0], 6: [0, 0, 2, 44, 2, 0, 0],
                    8: [0, 0, 1, 22, 255, 22, 1, 0, 0]}
    ok &= q4 == {0: [1], 2: [0, 2, 0], 4: [0, 1, 24, 1, 0], 6: [0, 0, 1, 25, 1, 0, 0],
                 8: [0, 0, 0, 2, 46, 2, 0, 0, 0]}
    ok &= q3 == {0: [1], 2: [0, 2, 0], 4: [0, 1, 23, 1, 0], 6: [0, 0, 1, 24, 1, 0, 0]}
    return ok


def criterion_3():
    s, hilb = hr.hd_k3(), hr.hd_hilb2_k3()
    closed = sum((L ** i for i in range(9)), hr.ZERO)
    closed += sum((L ** i for i in range(1, 6)), hr.ZERO) * s + L ** 2 * hilb
    composite = hr.hd_flop_exchange(hr.hd_blowup(hr.hd_projective_space(8), s, 6), hilb, 1, 2)
    ok = composite == closed and hr.hd_sigma() == closed
    y = hr.hd_cubic_fourfold()
    ok &= hr.hd_q4_over_y() == (1 + L + 2 * L ** 2 + L ** 3 + L ** 4) * y
    ok &= hr.hd_q3_over_y() == (1 + L + L ** 2 + L ** 3) * y
    return ok


def criterion_4():
    ok = all(hr.hd_quadric(n) == hr.hd_hypersurface(n + 1, 2) for n in range(1, 7))
    ok &= hr.hd_k3() == hr.hd_hypersurface(3, 4)
    c = hr.hd_hypersurface(5, 3)
    ok &= (c[(3, 1)], c[(2, 2)], c[(1, 1)]) == (1, 21, 1)
    h = hr.hd_hilb2_k3()
    ok &= (h[(1, 1)], h[(2, 0)], h[(2, 2)]) == (21, 1, 232)
    return ok


def criterion_5():
    report = dg.clemens_schmid(dg.sigma_q4y_fibre())
    ok = report.weight_filtration_trivial and report.monodromy_zero
    ok &= report.central_cohomology[8] == 325
    rng = random.Random(5)
    for _ in range(100):
        a, b, c = (random_hodge(rng) for _ in range(3))
        chi = a.euler_characteristic() + b.euler_characteristic() - 2 * c.euler_characteristic()
        ok &= dg.motivic_nearby_cycle(a, b, c).euler_characteristic() == chi
    return ok


def criterion_6():
    basis = [ml.QuiverVector.from_flat([int(i == j) for j in range(16)]) for i in range(16)]
    ok = all(ml.tau_l1(ml.tau_l1(e)) == -e for e in basis)
    u = pv.symbolic_quiver()
    ok &= ml.tau_l1(ml.tau_l1(u)) == -u

    rng = random.Random(6)
    done = 0
    while done < 100:
        m = ml.mat(*(rng.randint(-5, 5) for _ in range(4)))
        if ml.det2(m) == 0:
            continue
        v = ml.QuiverVector.from_flat([rng.randint(-5, 5) for _ in range(16)])
        dual = ml.transpose(ml.inverse2(m))
        ok &= ml.tau_l1(ml.glw_act(m, v)) == ml.glw_act(dual, ml.tau_l1(v))
        done += 1

    xs = MultiPoly.gens(pv.QUIVER_VARS[:8])
    X, Y = ml.mat(*xs[:4]), ml.mat(*xs[4:])
    q = ml.q_form(X, Y)
    value = ml.momentum_map(ml.f_point(X, Y))
    ok &= value.scalar == 2 * q and value.matrix == ((q, q.zero()), (q.zero(), q))
    p = ml.plucker_2x4(X, Y)
    ok &= p[1] + p[4] == q
    ok &= ml.plucker_relation(p).is_zero()

    e = ml.AlternatingForm.basis
    ok &= ml.phi(e(1, 2) + e(3, 4)) == 2 * e(1, 2, 3, 4)
    ok &= ml.phi(e(1, 4) + e(2, 6)) == 2 * ml.wedge(e(1, 4), e(2, 6))
    return ok


def criterion_7():
    ok = all(f.vanishes for f in pv.verify_i3_on_Q()) and len(pv.i3_generators()) == 31
    minors = pv.verify_qbar_minors_on_Q()
    ok &= len(minors) == 28 and all(f.vanishes for f in minors)
    ok &= all(pv.verify_a1_slice().values())
    return ok


def criterion_8():
    v = ("x", "y")
    g = buchberger(IdealBasis([parse_poly("x^2 - 1", v), parse_poly("x*y - 1", v)], "lex"))
    ok = g.complete and list(g.generators) == [parse_poly("x - y", v), parse_poly("y^2 - 1", v)]
    rng = random.Random(8)
    complete = 0
    for _ in range(30):
        _, gens = random_small_instance(rng)
        b = buchberger(IdealBasis(gens))
        if b.complete:
            complete += 1
            ok &= spolys_reduce_to_zero(b)
    ok &= complete > 0
    agree, disagree, _ = oracle_agreement(8, instances=50)
    ok &= disagree == 0 and agree >= 50
    return ok


CRITERIA = [
    (1, "Fano eightfold diamond", criterion_1, 1.0),
    (2, "Sigma, Q4/Y, Q3/Y diamonds", criterion_2, 1.0),
    (3, "blowup-then-flop closed formula and quadric bundles", criterion_3, None),
    (4, "Jacobian-ring and Hilbert-square oracle cross-checks", criterion_4, None),
    (5, "Clemens-Schmid suite", criterion_5, None),
    (6, "multilinear suite", criterion_6, 5.0),
    (7, "ideal suite on Q and the A1 slice", criterion_7, 10.0),
    (8, "Groebner engine and membership oracle", criterion_8, None),
]


def evaluate(number, fn, budget):
    start = time.perf_counter()
    ok = bool(fn())
    elapsed = time.perf_counter() - start
    in_time = budget is None or elapsed < budget
    return ok and in_time, elapsed


@pytest.mark.parametrize("number,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget, capsys):
    ok, elapsed = evaluate(number, fn, budget)
    limit = f" (limit {budget:g} s)" if budget else ""
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{elapsed:.2f} s{limit}]")
    assert ok


if __name__ == "__main__":
    failures = 0
    for number, title, fn, budget in CRITERIA:
        ok, elapsed = evaluate(number, fn, budget)
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{elapsed:.2f} s]")
    raise SystemExit(1 if failures else 0)
