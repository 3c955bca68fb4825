"""Brute-force ideal membership by bounded cofactor search."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly


def cofactor_search(f: MultiPoly, gens: Sequence[MultiPoly], degree_bound: int) -> list[MultiPoly] | None:
    """Search for ``f = sum h_i g_i`` with every ``h_i g_i`` of degree <= bound.

    This is pure linear algebra over Q on the coefficients of the unknown
    cofactors and shares nothing with the division/Buchberger code;
    it serves as the brute-force membership oracle.
    """
    gens = [p for p in gens if not p.is_zero()]
    if f.is_zero():
        return [f.zero() for _ in gens]
    if not gens or f.total_degree() > degree_bound:
        return None
    nvars = len(f.variables)
    columns = []  # (generator index, multiplier monomial)
    for gi, p in enumerate(gens):
        for m in _monomials_upto(nvars, degree_bound - p.total_degree()):
            columns.append((gi, m))
    # rows indexed by monomials; build the sparse matrix column by column
    col_vectors = []
    for gi, m in columns:
        col_vectors.append(gens[gi].scale_monomial(Fraction(1), m).terms)
    solution = _solve_sparse(col_vectors, f.terms)
    if solution is None:
        return None
    cof = [dict() for _ in gens]
    for (gi, m), val in zip(columns, solution):
        if val:
            cof[gi][m] = val
    return [MultiPoly(f.variables, c) for c in cof]


def _monomials_upto(nvars: int, degree: int):
    if degree < 0:
        return
    def rec(prefix, remaining, k):
        if k == nvars - 1:
            for e in range(remaining + 1):
                yield prefix + (e,)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + (e,), remaining - e, k + 1)
    if nvars == 0:
        yield ()
        return
    yield from rec((), degree, 0)


def _solve_sparse(columns: list[dict], rhs: dict) -> list[Fraction] | None:
    """Solve ``sum x_j columns[j] = rhs`` exactly; None when inconsistent."""
    # Gaussian elimination on the augmented system, rows keyed by monomial
    rows: dict = {}
    for j, col in enumerate(columns):
        for m, v in col.items():
            rows.setdefault(m, {})[j] = v
    for m in rhs:
        rows.setdefault(m, {})
    system = [(dict(r), Fraction(rhs.get(m, 0))) for m, r in rows.items()]
    pivots: list[tuple[int, dict, Fraction]] = []
    for row, b in system:
        for pj, prow, pb in pivots:
            if pj in row:
                factor = row[pj] / prow[pj]
                for j, v in prow.items():
                    nv = row.get(j, 0) - factor * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
                b -= factor * pb
        if row:
            pj = min(row)
            pivots.append((pj, row, b))
        elif b:
            return None
    x = [Fraction(0)] * len(columns)
    for pj, prow, pb in reversed(pivots):
        s = pb - sum(v * x[j] for j, v in prow.items() if j != pj)
        x[pj] = s / prow[pj]
    return x
