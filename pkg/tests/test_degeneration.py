import random

import pytest

from fanocalc import degeneration as dg
from fanocalc import hodge_ring as hr
from fanocalc.hodge_ring import L, ONE, HodgePolynomial


def diamond(cls, dim):
    return hr.to_diamond(cls, dim)


def normal_cone_fibre(n):
    """P^n degenerating to Bl_pt P^n u P^n glued along a hyperplane."""
    pn = hr.hd_projective_space(n)
    bl = hr.hd_blowup(pn, ONE, n)
    return dg.NormalCrossingFibre(diamond(bl, n), diamond(pn, n),
                                  diamond(hr.hd_projective_space(n - 1), n - 1),
                                  restriction_surjective=True)


def test_nearby_cycle_formula():
    x1, x2, x12 = hr.hd_k3(), hr.hd_quadric(2), ONE
    assert dg.motivic_nearby_cycle(x1, x2, x12) == x1 + x2 - (1 + L) * x12


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_deformation_to_normal_cone_recovers_projective_space(n):
    report = dg.clemens_schmid(normal_cone_fibre(n))
    assert report.monodromy_zero
    assert report.limit_class == hr.hd_projective_space(n)
    assert dg.limit_diamond(report).to_polynomial() == hr.hd_projective_space(n)


def test_sigma_q4y_fibre_clemens_schmid():
    report = dg.clemens_schmid(dg.sigma_q4y_fibre())
    assert report.weight_filtration_trivial
    assert report.monodromy_zero
    assert report.central_cohomology[8] == 325
    assert all(report.e2_page[(1, q)] == 0 for q in range(0, 17, 2))
    assert all(report.central_cohomology[k] == 0 for k in range(1, 17, 2))


def test_central_cohomology_is_kernel_of_restriction():
    fibre = dg.sigma_q4y_fibre()
    report = dg.clemens_schmid(fibre)
    for q in range(0, 17, 2):
        assert report.central_cohomology[q] == fibre.h0(q) - fibre.h1(q)
    assert (fibre.h0(8), fibre.h1(8)) == (301 + 50, 26)


def test_fano_eightfold_diamond():
    d = dg.limit_diamond(dg.clemens_schmid(dg.sigma_q4y_fibre()), 8)
    assert d.row(8) == [0, 0, 1, 22, 253, 22, 1, 0, 0]
    assert d.row(6) == [0, 0, 1, 22, 1, 0, 0]
    assert d.row(4) == [0, 1, 22, 1, 0]
    assert d.row(2) == [0, 1, 0]
    assert d.row(0) == [1]
    assert d.odd_cohomology_vanishes()
    assert d.to_polynomial() == dg.hd_fano_eightfold()


def test_euler_characteristic_of_nearby_cycle():
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (HodgePolynomial({(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-9, 9)
                                    for _ in range(4)}) for _ in range(3))
        psi = dg.motivic_nearby_cycle(a, b, c)
        chi = a.euler_characteristic() + b.euler_characteristic() - 2 * c.euler_characteristic()
        assert psi.euler_characteristic() == chi


def test_dimension_mismatch_rejected():
    p2 = diamond(hr.hd_projective_space(2), 2)
    p3 = diamond(hr.hd_projective_space(3), 3)
    with pytest.raises(dg.DegenerationError):
        dg.NormalCrossingFibre(p2, p3, diamond(ONE, 0))
    with pytest.raises(dg.DegenerationError):
        dg.NormalCrossingFibre(p2, p2, diamond(ONE, 0))


def test_impossible_surjectivity_rejected():
    p1 = diamond(hr.hd_projective_space(1), 1)
    # two points cannot surject onto four points in degree 0
    four_points = diamond(HodgePolynomial.constant(4), 0)
    with pytest.raises(dg.DegenerationError):
        dg.NormalCrossingFibre(p1, p1, four_points, restriction_surjective=True)


def test_surjectivity_must_be_asserted():
    fibre = dg.sigma_q4y_fibre()
    unasserted = dg.NormalCrossingFibre(fibre.component1, fibre.component2, fibre.intersection)
    with pytest.raises(dg.DegenerationError):
        dg.clemens_schmid(unasserted)


def test_odd_cohomology_rejected():
    # two quadric surfaces meeting in an elliptic curve
    q = diamond(hr.hd_quadric(2), 2)
    curve = diamond(1 - HodgePolynomial({(1, 0): 1, (0, 1): 1}) + L, 1)
    with pytest.raises(dg.DegenerationError):
        dg.clemens_schmid(dg.NormalCrossingFibre(q, q, curve, restriction_surjective=True))


def test_report_consistency_checks():
    with pytest.raises(dg.DegenerationError):
        dg.ClemensSchmidReport(1, {(0, 0): 1, (1, 0): 1}, {0: 2}, False, True)
    with pytest.raises(dg.DegenerationError):
        dg.ClemensSchmidReport(1, {(0, 0): 1}, {0: 2}, True, True)


def test_limit_requires_vanishing_monodromy():
    report = dg.ClemensSchmidReport(1, {(0, 0): 1, (1, 0): 1}, {0: 1, 1: 1}, False, False)
    with pytest.raises(dg.DegenerationError):
        dg.limit_diamond(report)
