"""Multivariate division and a capped Buchberger algorithm."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .poly import MultiPoly, divides, mono_div, mono_lcm, order_key

DEFAULT_DEGREE_CAP = 8
DEFAULT_PAIR_CAP = 10000


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal together with the monomial order used on them.

    ``groebner`` is set only by :func:`buchberger` when it ran to completion;
    ``truncated`` marks a run that hit one of its caps.
    """

    generators: tuple[MultiPoly, ...]
    order: str = "degrevlex"
    groebner: bool = False
    truncated: bool = False

    def __init__(self, generators: Sequence[MultiPoly], order: str = "degrevlex",
                 groebner: bool = False, truncated: bool = False):
        order_key(order)
        gens = tuple(g for g in generators if not g.is_zero())
        if len({g.variables for g in gens}) > 1:
            raise ValueError("generators live over different variable lists")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "groebner", groebner)
        object.__setattr__(self, "truncated", truncated)

    @property
    def complete(self) -> bool:
        return self.groebner and not self.truncated

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def normal_form(f: MultiPoly, g: IdealBasis | Sequence[MultiPoly], order: str | None = None) -> MultiPoly:
    """Remainder of f under full multivariate division by the generators of g."""
    if isinstance(g, IdealBasis):
        gens, order = g.generators, order or g.order
    else:
        gens, order = tuple(p for p in g if not p.is_zero()), order or "degrevlex"
    for p in gens:
        if p.variables != f.variables:
            raise ValueError("divisor and dividend have different variable lists")
    key = order_key(order)
    leads = [(p.leading_monomial(order), p.leading_coefficient(order), p) for p in gens]

    work = dict(f.terms)
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, p in leads:
            if divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lc
                for pm, pc in p.terms.items():
                    t = tuple(a + b for a, b in zip(pm, shift))
                    v = work.get(t, 0) - factor * pc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = work.pop(m)
    return MultiPoly(f.variables, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: str) -> MultiPoly:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    a = f.scale_monomial(1 / f.terms[lf], mono_div(lcm, lf))
    b = g.scale_monomial(1 / g.terms[lg], mono_div(lcm, lg))
    return a - b


def _interreduce(polys: list[MultiPoly], order: str) -> list[MultiPoly]:
    """Reduced Groebner basis from a Groebner basis: drop redundant leads, tail-reduce, make monic."""
    polys = [p.monic(order) for p in polys if not p.is_zero()]
    leads = [p.leading_monomial(order) for p in polys]
    keep = []
    for i, p in enumerate(polys):
        redundant = any(
            j != i and divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(polys))
        )
        if not redundant:
            keep.append(p)
    reduced = []
    for i, p in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        reduced.append(normal_form(p, others, order).monic(order))
    key = order_key(order)
    reduced.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return reduced


def buchberger(g: IdealBasis, degree_cap: int = DEFAULT_DEGREE_CAP,
               pair_cap: int = DEFAULT_PAIR_CAP) -> IdealBasis:
    """Reduced Groebner basis of the ideal spanned by ``g``.

    S-pairs whose lcm has total degree above ``degree_cap`` are skipped and
    at most ``pair_cap`` pairs are reduced.  Hitting either cap returns the
    partial basis with ``truncated=True``; such a basis certifies nothing
    about non-membership.
    """
    if degree_cap <= 0 or pair_cap <= 0:
        raise ValueError("caps must be positive")
    order = g.order
    key = order_key(order)
    basis: list[MultiPoly] = [p.monic(order) for p in g.generators]
    if not basis:
        return IdealBasis([], order, groebner=True)
    leads = [p.leading_monomial(order) for p in basis]
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    truncated = False
    processed = 0

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(mono_lcm(leads[ij[0]], leads[ij[1]])),
                                          key(mono_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        lcm = mono_lcm(leads[i], leads[j])
        # coprime leading monomials: the S-polynomial reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            continue
        # chain criterion: some k whose lead divides the lcm with both sub-pairs already handled
        if any(
            k not in (i, j)
            and divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        if sum(lcm) > degree_cap:
            truncated = True
            continue
        if processed >= pair_cap:
            truncated = True
            break
        processed += 1
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero():
            continue
        r = r.monic(order)
        basis.append(r)
        leads.append(r.leading_monomial(order))
        n = len(basis) - 1
        pairs.update((k, n) for k in range(n))

    return IdealBasis(_interreduce(basis, order), order, groebner=True, truncated=truncated)


def spolys_reduce_to_zero(g: IdealBasis) -> bool:
    """Buchberger's criterion, checked on every pair without shortcuts."""
    gens = list(g.generators)
    for j in range(len(gens)):
        for i in range(j):
            if not normal_form(s_polynomial(gens[i], gens[j], g.order), gens, g.order).is_zero():
                return False
    return True


class Membership(enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non_member"
    INCONCLUSIVE = "inconclusive"


def ideal_member(f: MultiPoly, g: IdealBasis, degree_cap: int = DEFAULT_DEGREE_CAP,
                 pair_cap: int = DEFAULT_PAIR_CAP) -> Membership:
    gb = buchberger(g, degree_cap, pair_cap)
    if not gb.generators:
        return Membership.MEMBER if f.is_zero() else Membership.NON_MEMBER
    if normal_form(f, gb).is_zero():
        # division by ideal elements is a membership certificate even for a partial basis
        return Membership.MEMBER
    return Membership.NON_MEMBER if gb.complete else Membership.INCONCLUSIVE
