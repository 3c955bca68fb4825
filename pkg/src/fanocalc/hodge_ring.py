"""Hodge-Deligne polynomials of smooth proper varieties.

A class is stored as a sparse map ``(p, q) -> h`` standing for
``sum h * u**p * v**q``.  The Lefschetz class is ``uv``.  Everything here is
exact integer arithmetic; the constructors below build the classes of the
varieties that show up in the degeneration of the Fano eightfold (projective
spaces, quadrics, the K3 surface, its Hilbert square, the cubic fourfold,
blowups, flops and quadric bundles).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping


class HodgePolynomial:
    """Immutable bivariate integer polynomial in ``u`` and ``v``."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (p, q), c in (coeffs or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent ({p}, {q})")
            if int(c) != c:
                raise ValueError(f"non-integral coefficient {c!r} at ({p}, {q})")
            if c:
                clean[(int(p), int(q))] = int(c)
        self._coeffs = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "HodgePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def lefschetz(cls, power: int = 1) -> "HodgePolynomial":
        return cls({(power, power): 1})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self._coeffs.get(pq, 0)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = HodgePolynomial.constant(other)
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def _coerce(self, other) -> "HodgePolynomial":
        if isinstance(other, HodgePolynomial):
            return other
        if isinstance(other, int):
            return HodgePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "HodgePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return HodgePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "HodgePolynomial":
        return HodgePolynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other) -> "HodgePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "HodgePolynomial":
        return (-self) + other

    def __mul__(self, other) -> "HodgePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self._coeffs.items():
            for (p2, q2), c2 in other._coeffs.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, 0) + c1 * c2
        return HodgePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HodgePolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = HodgePolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, u: int, v: int) -> int:
        return sum(c * u**p * v**q for (p, q), c in self._coeffs.items())

    def euler_characteristic(self) -> int:
        """Topological Euler number: the value at ``u = v = -1``."""
        return self.evaluate(-1, -1)

    def degree_sum(self, k: int) -> int:
        """Sum of coefficients with ``p + q = k`` (the k-th Betti number)."""
        return sum(c for (p, q), c in self._coeffs.items() if p + q == k)

    def max_degree(self) -> int:
        return max((p + q for p, q in self._coeffs), default=0)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "HodgePolynomial(0)"
        return f"HodgePolynomial({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for (p, q), c in sorted(self._coeffs.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = "".join(
                name if e == 1 else f"{name}^{e}" for name, e in (("u", p), ("v", q)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = HodgePolynomial()
ONE = HodgePolynomial.constant(1)
L = HodgePolynomial.lefschetz()


@dataclass(frozen=True)
class HodgeDiamond:
    dimension: int
    entries: tuple[tuple[int, ...], ...]

    def h(self, p: int, q: int) -> int:
        if 0 <= p <= self.dimension and 0 <= q <= self.dimension:
            return self.entries[p][q]
        return 0

    def betti(self, k: int) -> int:
        return sum(self.h(p, k - p) for p in range(k + 1))

    def row(self, k: int) -> list[int]:
        """Entries ``h^{p, k-p}`` of the k-th cohomology, p decreasing."""
        lo, hi = max(0, k - self.dimension), min(k, self.dimension)
        return [self.h(p, k - p) for p in range(hi, lo - 1, -1)]

    def odd_cohomology_vanishes(self) -> bool:
        return all(self.betti(k) == 0 for k in range(1, 2 * self.dimension + 1, 2))

    def to_polynomial(self) -> HodgePolynomial:
        return HodgePolynomial(
            {(p, q): (-1) ** (p + q) * self.entries[p][q] for p in range(self.dimension + 1) for q in range(self.dimension + 1)}
        )


# Constructors -------------------------------------------------------------

def hd_add(a: HodgePolynomial, b: HodgePolynomial) -> HodgePolynomial:
    return a + b


def hd_mul(a: HodgePolynomial, b: HodgePolynomial) -> HodgePolynomial:
    return a * b


def hd_projective_space(n: int) -> HodgePolynomial:
    if n < 0:
        raise ValueError("projective space of negative dimension")
    return HodgePolynomial({(i, i): 1 for i in range(n + 1)})


@lru_cache(maxsize=None)
def hd_quadric(n: int) -> HodgePolynomial:
    """Smooth quadric of dimension n, via [Q_n] = 1 + L[Q_{n-2}] + L^n.

    Projecting from a point of the quadric identifies the complement of the
    tangent cone with an affine space minus a smaller quadric.
    """
    if n < 0:
        raise ValueError("quadric of negative dimension")
    if n == 0:
        return HodgePolynomial.constant(2)
    if n == 1:
        return hd_projective_space(1)
    return ONE + L * hd_quadric(n - 2) + L**n


def count_bounded_monomials(nvars: int, degree: int, max_exp: int) -> int:
    """Number of monomials in ``nvars`` variables of the given total degree
    with every exponent at most ``max_exp``."""
    if degree < 0 or max_exp < 0:
        return 0
    ways = [1] + [0] * degree
    for _ in range(nvars):
        new = [0] * (degree + 1)
        for total, w in enumerate(ways):
            if w:
                for e in range(min(max_exp, degree - total) + 1):
                    new[total + e] += w
        ways = new
    return ways[degree]


def hd_hypersurface(ambient_dim: int, degree: int) -> HodgePolynomial:
    """Smooth degree-d hypersurface in P^n from the Griffiths residue count.

    The primitive part of the middle cohomology is read off the Jacobian
    ring of the Fermat hypersurface: ``h^{n-1-p, p}_prim`` is the number of
    monomials in n+1 variables with exponents ``<= d-2`` and total degree
    ``(p+1)d - n - 1``.  The remaining classes are the powers of the
    hyperplane section.
    """
    n, d = ambient_dim, degree
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got {n}")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    dim = n - 1
    coeffs = {(i, i): 1 for i in range(dim + 1)}
    for p in range(dim + 1):
        count = count_bounded_monomials(n + 1, (p + 1) * d - n - 1, d - 2)
        if count:
            key = (dim - p, p)
            coeffs[key] = coeffs.get(key, 0) + count
    return HodgePolynomial(coeffs)


def hd_k3() -> HodgePolynomial:
    return HodgePolynomial({(0, 0): 1, (2, 0): 1, (1, 1): 20, (0, 2): 1, (2, 2): 1})


def hd_cubic_fourfold() -> HodgePolynomial:
    return hd_hypersurface(5, 3)


def hd_sym2(s: HodgePolynomial) -> HodgePolynomial:
    """Class of the symmetric square.

    Uses ``(s(u,v)^2 + s(u^2,v^2)) / 2``.  Odd cohomology needs no extra sign
    because E-polynomial coefficients already carry (-1)^(p+q); Sym^2 of an
    elliptic curve comes out as a P^1-bundle over the curve.
    """
    sq = s * s
    adams = HodgePolynomial({(2 * p, 2 * q): c for (p, q), c in s})
    total = (sq + adams).coeffs
    out = {}
    for k, c in total.items():
        if c % 2:
            raise ValueError(f"Sym^2 coefficient at {k} is {c}/2, not an integer; input is not a valid class")
        out[k] = c // 2
    return HodgePolynomial(out)


def hd_hilb2_k3() -> HodgePolynomial:
    """Hilbert square of a K3: Sym^2 plus the exceptional divisor over the diagonal."""
    s = hd_k3()
    return hd_sym2(s) + L * s


def hd_blowup(x: HodgePolynomial, z: HodgePolynomial, codim: int) -> HodgePolynomial:
    if codim < 2:
        raise ValueError(f"blowup center must have codimension >= 2, got {codim}")
    return x + z * (hd_projective_space(codim - 1) - ONE)


def hd_flop_exchange(
    x: HodgePolynomial, z: HodgePolynomial, old_fiber_dim: int, new_fiber_dim: int
) -> HodgePolynomial:
    """Replace a P^old-bundle over z by a P^new-bundle over z."""
    return x + z * (hd_projective_space(new_fiber_dim) - hd_projective_space(old_fiber_dim))


def hd_fibration(base: HodgePolynomial, fiber: HodgePolynomial) -> HodgePolynomial:
    return base * fiber


def to_diamond(x: HodgePolynomial, dim: int) -> HodgeDiamond:
    """Read off h^{p,q} = (-1)^(p+q) * coefficient and check the diamond symmetries."""
    if dim < 0:
        raise ValueError("negative dimension")
    for (p, q), c in x:
        if p > dim or q > dim:
            raise ValueError(f"exponent ({p}, {q}) exceeds dimension {dim}")
        if c * (-1) ** (p + q) < 0:
            raise ValueError(f"coefficient {c} at ({p}, {q}) has the wrong sign for a Hodge number")
    entries = tuple(tuple(x[(p, q)] * (-1) ** (p + q) for q in range(dim + 1)) for p in range(dim + 1))
    for p in range(dim + 1):
        for q in range(dim + 1):
            if entries[p][q] != entries[q][p]:
                raise ValueError(f"Hodge symmetry fails: h^{p},{q} != h^{q},{p}")
            if entries[p][q] != entries[dim - p][dim - q]:
                raise ValueError(f"Serre duality fails at ({p}, {q}) in dimension {dim}")
    return HodgeDiamond(dim, entries)


# Classes of the varieties in the degeneration -----------------------------

def hd_blowup_p8_k3() -> HodgePolynomial:
    """Blowup of P^8 along the genus 8 K3 surface (codimension 6)."""
    return hd_blowup(hd_projective_space(8), hd_k3(), 6)


def hd_sigma() -> HodgePolynomial:
    """Flop of Bl_S P^8 trading a P^1-bundle over S^[2] for a P^2-bundle."""
    return hd_flop_exchange(hd_blowup_p8_k3(), hd_hilb2_k3(), 1, 2)


def hd_sigma_closed_formula() -> HodgePolynomial:
    s = hd_k3()
    return (
        sum((L**i for i in range(9)), ZERO)
        + sum((L**i * s for i in range(1, 6)), ZERO)
        + L**2 * hd_hilb2_k3()
    )


def hd_q4_over_y() -> HodgePolynomial:
    return hd_fibration(hd_cubic_fourfold(), hd_quadric(4))


def hd_q3_over_y() -> HodgePolynomial:
    return hd_fibration(hd_cubic_fourfold(), hd_quadric(3))
