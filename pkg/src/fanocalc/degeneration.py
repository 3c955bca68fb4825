"""Two-component semistable degenerations: nearby cycle and Clemens-Schmid.

Only the situation of a central fibre ``X = X1 u X2`` with smooth transverse
intersection ``X1 n X2`` and vanishing odd cohomology is handled.  In that
case the Mayer-Vietoris type spectral sequence

    E1^{p,q} = H^q(X^[p]),   X^[0] = X1 ⊔ X2,   X^[1] = X1 n X2

has two columns, and when the restriction maps are surjective the whole
E2 page sits in column 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hodge_ring import (
    HodgeDiamond,
    HodgePolynomial,
    L,
    ONE,
    hd_q3_over_y,
    hd_q4_over_y,
    hd_sigma,
    to_diamond,
)


class DegenerationError(ValueError):
    pass


def motivic_nearby_cycle(x1: HodgePolynomial, x2: HodgePolynomial, x12: HodgePolynomial) -> HodgePolynomial:
    """[X1] + [X2] - (1 + L)[X1 n X2]."""
    return x1 + x2 - (ONE + L) * x12


@dataclass(frozen=True)
class NormalCrossingFibre:
    component1: HodgeDiamond
    component2: HodgeDiamond
    intersection: HodgeDiamond
    restriction_surjective: bool = False

    def __post_init__(self):
        d = self.component1.dimension
        if self.component2.dimension != d:
            raise DegenerationError(
                f"components have different dimensions {d} and {self.component2.dimension}"
            )
        if self.intersection.dimension != d - 1:
            raise DegenerationError(
                f"intersection has dimension {self.intersection.dimension}, expected {d - 1}"
            )
        if self.restriction_surjective:
            for k in range(2 * d + 1):
                if self.h0(k) < self.h1(k):
                    raise DegenerationError(
                        f"restriction H^{k}(X[0]) -> H^{k}(X[1]) cannot be surjective: "
                        f"{self.h0(k)} < {self.h1(k)}"
                    )

    @property
    def dimension(self) -> int:
        return self.component1.dimension

    def h0(self, k: int) -> int:
        """Betti number of the disjoint union X^[0]."""
        return self.component1.betti(k) + self.component2.betti(k)

    def h1(self, k: int) -> int:
        """Betti number of the double locus X^[1]."""
        return self.intersection.betti(k)


@dataclass(frozen=True)
class ClemensSchmidReport:
    dimension: int
    e2_page: dict[tuple[int, int], int]
    central_cohomology: dict[int, int]
    weight_filtration_trivial: bool
    monodromy_zero: bool
    limit_class: HodgePolynomial | None = field(default=None)

    def __post_init__(self):
        if self.monodromy_zero and not self.weight_filtration_trivial:
            raise DegenerationError("monodromy_zero requires a trivial weight filtration")
        for k, dim in self.central_cohomology.items():
            if dim != sum(v for (p, q), v in self.e2_page.items() if p + q == k):
                raise DegenerationError(f"H^{k}(X) does not match the E2 page")


def clemens_schmid(fibre: NormalCrossingFibre) -> ClemensSchmidReport:
    if not fibre.restriction_surjective:
        raise DegenerationError("restriction maps must be assumed surjective")
    parts = (fibre.component1, fibre.component2, fibre.intersection)
    if not all(part.odd_cohomology_vanishes() for part in parts):
        raise DegenerationError("odd cohomology is nonzero; the two-row argument does not apply")

    d = fibre.dimension
    e2: dict[tuple[int, int], int] = {}
    for q in range(0, 2 * d + 1, 2):
        kernel = fibre.h0(q) - fibre.h1(q)
        if kernel < 0:
            raise DegenerationError(f"h^{q}(X[0]) < h^{q}(X[1]) under the surjectivity assumption")
        e2[(0, q)] = kernel
        # d1 is onto, so nothing survives in column 1
        e2[(1, q)] = 0

    central = {
        k: sum(v for (p, q), v in e2.items() if p + q == k) for k in range(2 * d + 1)
    }
    # graded pieces of the weight filtration on H^k(X) are E2^{k-j, j}
    weight_trivial = all(v == 0 for (p, _), v in e2.items() if p != 0)
    monodromy_zero = weight_trivial
    limit = None
    if monodromy_zero:
        limit = motivic_nearby_cycle(*(part.to_polynomial() for part in parts))
    return ClemensSchmidReport(d, e2, central, weight_trivial, monodromy_zero, limit)


def limit_diamond(report: ClemensSchmidReport, dim: int | None = None) -> HodgeDiamond:
    if not report.monodromy_zero or report.limit_class is None:
        raise DegenerationError("monodromy is not known to vanish; the nearby cycle does not give the limit")
    return to_diamond(report.limit_class, report.dimension if dim is None else dim)


def sigma_q4y_fibre() -> NormalCrossingFibre:
    """Central fibre Sigma u Q4/Y with double locus Q3/Y."""
    return NormalCrossingFibre(
        to_diamond(hd_sigma(), 8),
        to_diamond(hd_q4_over_y(), 8),
        to_diamond(hd_q3_over_y(), 7),
        restriction_surjective=True,
    )


def hd_fano_eightfold() -> HodgePolynomial:
    return motivic_nearby_cycle(hd_sigma(), hd_q4_over_y(), hd_q3_over_y())
