"""Verification suites run by ``fanocalc verify``.

Each suite returns a list of :class:`Check` records; randomized checks draw
from ``random.Random(seed)`` so failures are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import degeneration as dg
from . import hodge_ring as hr
from . import multilinear as ml
from .polyalg import (
    IdealBasis,
    Membership,
    MultiPoly,
    buchberger,
    cofactor_search,
    ideal_member,
    spolys_reduce_to_zero,
)
from .polyalg import verify as pv

DEFAULT_SEED = 8
PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

# Hodge numbers of S^[2] as usually tabulated; used only as a cross-check.
HILB2_K3_TABLE = {
    (0, 0): 1, (2, 0): 1, (1, 1): 21, (0, 2): 1, (4, 0): 1, (3, 1): 21, (2, 2): 232,
    (1, 3): 21, (0, 4): 1, (4, 2): 1, (3, 3): 21, (2, 4): 1, (4, 4): 1,
}

# Even-degree rows of the diamonds, from H^0 upward, as displayed for each variety.
EXPECTED_ROWS = {
    "sigma": [[1], [0, 2, 0], [0, 1, 23, 1, 0], [0, 0, 2, 44, 2, 0, 0], [0, 0, 1, 22, 255, 22, 1, 0, 0]],
    "q4y": [[1], [0, 2, 0], [0, 1, 24, 1, 0], [0, 0, 1, 25, 1, 0, 0], [0, 0, 0, 2, 46, 2, 0, 0, 0]],
    "q3y": [[1], [0, 2, 0], [0, 1, 23, 1, 0], [0, 0, 1, 24, 1, 0, 0]],
    "fano": [[1], [0, 1, 0], [0, 1, 22, 1, 0], [0, 0, 1, 22, 1, 0, 0], [0, 0, 1, 22, 253, 22, 1, 0, 0]],
}


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, PASS if ok else FAIL, detail)


def even_rows(d: hr.HodgeDiamond) -> list[list[int]]:
    return [d.row(k) for k in range(0, d.dimension + 1, 2)]


def random_hodge(rng: random.Random, max_exp: int = 4, terms: int = 5) -> hr.HodgePolynomial:
    return hr.HodgePolynomial(
        {(rng.randint(0, max_exp), rng.randint(0, max_exp)): rng.randint(-5, 5) for _ in range(rng.randint(0, terms))}
    )


# ---------------------------------------------------------------------------

def ring_suite(seed: int = DEFAULT_SEED) -> list[Check]:
    rng = random.Random(seed)
    out = []
    bad = [n for n in range(1, 9) if hr.hd_quadric(n) != hr.hd_hypersurface(n + 1, 2)]
    out.append(check("hd_quadric(n) = hd_hypersurface(n+1, 2) for n = 1..8", not bad, f"mismatch at {bad}" if bad else ""))
    out.append(check("hd_k3 = hd_hypersurface(3, 4)", hr.hd_k3() == hr.hd_hypersurface(3, 4)))
    y = hr.hd_cubic_fourfold()
    nums = (y[(3, 1)], y[(2, 2)], y[(1, 1)])
    out.append(check("cubic fourfold (h31, h22, h11) = (1, 21, 1)", nums == (1, 21, 1), str(nums)))
    s2 = hr.hd_hilb2_k3()
    nums = (s2[(1, 1)], s2[(2, 0)], s2[(2, 2)])
    out.append(check("Hilb^2 K3 (h11, h20, h22) = (21, 1, 232)", nums == (21, 1, 232), str(nums)))
    out.append(check("Hilb^2 K3 agrees with the tabulated diamond", s2 == hr.HodgePolynomial(HILB2_K3_TABLE)))
    out.append(check("Sym^2 P^1 = P^2", hr.hd_sym2(hr.hd_projective_space(1)) == hr.hd_projective_space(2)))
    out.append(check("blowup then flop equals the closed formula for Sigma", hr.hd_sigma() == hr.hd_sigma_closed_formula()))
    L = hr.L
    out.append(check("[Q4/Y] = (1+L+2L^2+L^3+L^4)[Y]", hr.hd_q4_over_y() == (1 + L + 2 * L**2 + L**3 + L**4) * y))
    out.append(check("[Q3/Y] = (1+L+L^2+L^3)[Y]", hr.hd_q3_over_y() == (1 + L + L**2 + L**3) * y))
    for tag, cls, dim in (("sigma", hr.hd_sigma(), 8), ("q4y", hr.hd_q4_over_y(), 8), ("q3y", hr.hd_q3_over_y(), 7)):
        d = hr.to_diamond(cls, dim)
        out.append(check(f"diamond {tag} matches the displayed rows", even_rows(d) == EXPECTED_ROWS[tag]))
        out.append(check(f"diamond {tag} has zero odd cohomology", d.odd_cohomology_vanishes()))

    failures = 0
    for _ in range(100):
        a, b, c = (random_hodge(rng) for _ in range(3))
        ok = (
            a + b == b + a and a * b == b * a
            and (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
        )
        failures += not ok
    out.append(check("ring axioms on 100 random triples", failures == 0, f"{failures} failures"))
    return out


def degeneration_suite(seed: int = DEFAULT_SEED) -> list[Check]:
    rng = random.Random(seed)
    out = []
    fibre = dg.sigma_q4y_fibre()
    report = dg.clemens_schmid(fibre)
    out.append(check(f"weight_filtration_trivial: {str(report.weight_filtration_trivial).lower()}",
                     report.weight_filtration_trivial))
    out.append(check(f"monodromy_zero: {str(report.monodromy_zero).lower()}", report.monodromy_zero))
    h8 = report.central_cohomology[8]
    out.append(check("dim H^8(X0) = 301 + 50 - 26 = 325", h8 == 325, f"got {h8}"))
    x1, x2, x12 = hr.hd_sigma(), hr.hd_q4_over_y(), hr.hd_q3_over_y()
    incl_excl = x1 + x2 - x12
    ok = all(report.central_cohomology[k] == incl_excl.degree_sum(k) for k in range(17))
    out.append(check("E2 page equals inclusion-exclusion of Betti numbers", ok))
    fano = dg.limit_diamond(report, 8)
    out.append(check("Fano eightfold diamond matches the displayed rows", even_rows(fano) == EXPECTED_ROWS["fano"]))
    out.append(check("odd cohomology of the Fano eightfold is zero", fano.odd_cohomology_vanishes()))
    out.append(check("h^{1,1} of the Fano eightfold is 1", fano.h(1, 1) == 1))

    p1, pt = hr.to_diamond(hr.hd_projective_space(1), 1), hr.to_diamond(hr.ONE, 0)
    conic = dg.clemens_schmid(dg.NormalCrossingFibre(p1, p1, pt, restriction_surjective=True))
    ok = conic.central_cohomology[0] == 1 and conic.central_cohomology[2] == 2 and conic.monodromy_zero
    ok = ok and dg.limit_diamond(conic) == p1
    out.append(check("conic degenerating to two lines", ok))

    failures = 0
    for _ in range(100):
        a, b, c = (random_hodge(rng) for _ in range(3))
        psi = dg.motivic_nearby_cycle(a, b, c)
        failures += psi.euler_characteristic() != (
            a.euler_characteristic() + b.euler_characteristic() - 2 * c.euler_characteristic()
        )
    out.append(check("chi(psi) = chi(X1) + chi(X2) - 2 chi(X12) on 100 random triples", failures == 0, f"{failures} failures"))
    return out


def random_matrix(rng: random.Random, lo: int = -5, hi: int = 5) -> ml.Matrix2:
    return ml.mat(*(rng.randint(lo, hi) for _ in range(4)))


def random_invertible(rng: random.Random) -> ml.Matrix2:
    while True:
        m = random_matrix(rng)
        if ml.det2(m):
            return m


def random_quiver(rng: random.Random) -> ml.QuiverVector:
    return ml.QuiverVector.from_flat([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(16)])


def multilinear_suite(seed: int = DEFAULT_SEED, samples: int = 100) -> list[Check]:
    rng = random.Random(seed)
    out = []
    basis = [ml.QuiverVector.from_flat([int(i == j) for j in range(16)]) for i in range(16)]
    ok = all(ml.tau_l1(ml.tau_l1(e)) == -e for e in basis)
    u = pv.symbolic_quiver()
    ok_sym = ml.tau_l1(ml.tau_l1(u)) == -u
    out.append(check("tau_l1 o tau_l1 = -id (16 basis vectors and symbolically)", ok and ok_sym))
    out.append(check("tau_l1 has order four", ml.tau_l1(ml.tau_l1(ml.tau_l1(ml.tau_l1(u)))) == u and ml.tau_l1(u) != u))

    equivariant = invariant = 0
    for _ in range(samples):
        m, v = random_invertible(rng), random_quiver(rng)
        lhs = ml.tau_l1(ml.glw_act(m, v))
        rhs = ml.glw_act(ml.transpose(ml.inverse2(m)), ml.tau_l1(v))
        equivariant += lhs == rhs
        invariant += ml.momentum_map(ml.glw_act(m, v)).scalar == ml.momentum_map(v).scalar
    out.append(check(f"GL(W)-equivariance of tau_l1 on {samples} seeded matrices", equivariant == samples,
                     f"{equivariant}/{samples}"))
    out.append(check(f"scalar moment is GL(W)-invariant on {samples} seeded samples", invariant == samples,
                     f"{invariant}/{samples}"))

    xs = MultiPoly.gens(pv.QUIVER_VARS[:8])
    X, Y = ml.mat(*xs[:4]), ml.mat(*xs[4:])
    q = ml.q_form(X, Y)
    value = ml.momentum_map(ml.f_point(X, Y))
    ok = value.scalar == 2 * q and value.matrix == ((q, q.zero()), (q.zero(), q))
    out.append(check("mu_1 on F equals (2q, q Id) symbolically", ok))
    p = ml.plucker_2x4(X, Y)
    out.append(check("p2 + p5 = q as a polynomial identity", p[1] + p[4] == q))
    out.append(check("p1 p6 - p2 p5 + p3 p4 = 0 as a polynomial identity", ml.plucker_relation(p).is_zero()))

    ok = True
    for _ in range(samples):
        m = random_matrix(rng)
        Xr, Yr = random_matrix(rng), random_matrix(rng)
        lhs = ml.plucker_2x4(ml.mat_mul(m, Xr), ml.mat_mul(m, Yr))
        ok &= lhs == tuple(ml.det2(m) * c for c in ml.plucker_2x4(Xr, Yr))
    out.append(check("Plucker coordinates scale by det under GL(W)", ok))

    e = ml.AlternatingForm.basis
    out.append(check("phi(e12 + e34) = 2 e1234", ml.phi(e(1, 2) + e(3, 4)) == 2 * e(1, 2, 3, 4)))
    out.append(check("phi(e12) = 0", ml.phi(e(1, 2)).is_zero()))
    out.append(check("pfaffian_eval(e12 + e34 + e56) = 6", ml.pfaffian_eval(e(1, 2) + e(3, 4) + e(5, 6)) == 6))
    return out


def random_small_instance(rng: random.Random):
    nvars = rng.randint(1, 3)
    names = ("x", "y", "z")[:nvars]
    gens = MultiPoly.gens(names)

    def rand_poly(max_deg: int, nterms: int) -> MultiPoly:
        total = MultiPoly(names)
        for _ in range(nterms):
            deg = rng.randint(0, max_deg)
            mono = MultiPoly.const(names, rng.choice([-3, -2, -1, 1, 2, 3]))
            for _ in range(deg):
                mono = mono * rng.choice(gens)
            total = total + mono
        return total

    g = [p for p in (rand_poly(3, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))) if p]
    if not g:
        g = [gens[0]]
    if rng.random() < 0.5:
        f = MultiPoly(names)
        for gi in g:
            f = f + rand_poly(max(0, 3 - gi.total_degree()), rng.randint(0, 2)) * gi
    else:
        f = rand_poly(3, rng.randint(1, 4))
    return f, g


def oracle_agreement(seed: int, instances: int = 50, degree_cap: int = 8, pair_cap: int = 10000,
                     oracle_bound: int = 8) -> tuple[int, int, int]:
    """(agreements, disagreements, skipped) of ideal_member against cofactor search."""
    rng = random.Random(seed)
    agree = disagree = skipped = 0
    for _ in range(instances):
        f, g = random_small_instance(rng)
        order = rng.choice(["lex", "degrevlex"])
        verdict = ideal_member(f, IdealBasis(g, order), degree_cap, pair_cap)
        if verdict is Membership.INCONCLUSIVE:
            skipped += 1
            continue
        found = cofactor_search(f, g, oracle_bound) is not None
        if found == (verdict is Membership.MEMBER):
            agree += 1
        else:
            disagree += 1
    return agree, disagree, skipped


def ideal_suite(seed: int = DEFAULT_SEED, degree_cap: int = 8, pair_cap: int = 10000) -> list[Check]:
    rng = random.Random(seed)
    out = []
    findings = pv.verify_i3_on_Q()
    good = sum(f.vanishes for f in findings)
    detail = "; ".join(f"{f.label} -> {f.remainder}" for f in findings if not f.vanishes)
    out.append(check(f"{good}/{len(findings)} generators of I3 vanish on Q modulo q", good == len(findings) == 31, detail))
    minors = pv.verify_qbar_minors_on_Q()
    good = sum(f.vanishes for f in minors)
    out.append(check(f"{good}/{len(minors)} minors of the rank matrix vanish on Q", good == len(minors) == 28))
    for name, ok in pv.verify_a1_slice().items():
        out.append(check(f"A1 slice: {name}", ok))
    verdict = pv.q_in_momentum_ideal_on_F(degree_cap, pair_cap)
    out.append(Check("q lies in the momentum ideal restricted to F",
                     {Membership.MEMBER: PASS, Membership.NON_MEMBER: FAIL}.get(verdict, INCONCLUSIVE),
                     verdict.value))

    x, y = MultiPoly.gens(["x", "y"])
    gb = buchberger(IdealBasis([x * x - 1, x * y - 1], "lex"), degree_cap, pair_cap)
    ok = gb.complete and list(gb.generators) == [x - y, y * y - 1]
    out.append(check("{x^2 - 1, xy - 1} under lex gives {x - y, y^2 - 1}", ok, ", ".join(map(str, gb.generators))))

    complete = failures = 0
    for _ in range(30):
        _, g = random_small_instance(rng)
        basis = buchberger(IdealBasis(g, rng.choice(["lex", "degrevlex"])), degree_cap, pair_cap)
        if basis.complete:
            complete += 1
            failures += not spolys_reduce_to_zero(basis)
    out.append(check("every complete basis passes the S-polynomial post-check", failures == 0,
                     f"{complete - failures}/{complete} complete bases"))

    agree, disagree, skipped = oracle_agreement(seed, 50, degree_cap, pair_cap)
    out.append(check("ideal_member agrees with cofactor search on 50 random instances",
                     disagree == 0 and agree >= 50 - skipped,
                     f"{agree} agree, {disagree} disagree, {skipped} inconclusive"))
    return out


SUITES = {
    "ring": ring_suite,
    "degeneration": degeneration_suite,
    "multilinear": multilinear_suite,
    "ideal": ideal_suite,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, degree_cap: int = 8, pair_cap: int = 10000) -> list[Check]:
    if name == "ideal":
        return ideal_suite(seed, degree_cap, pair_cap)
    return SUITES[name](seed)
