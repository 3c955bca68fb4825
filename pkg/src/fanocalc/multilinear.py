"""Exterior algebra on a 6-dimensional space and the 2x2 block quiver calculus.

Coefficients and matrix entries are exact rationals.  The functions only
use ring operations on their entries, so they also accept
:class:`~fanocalc.polyalg.poly.MultiPoly` entries; that is how the
polynomial identities are checked symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational

DIM = 6

Matrix2 = tuple[tuple[object, object], tuple[object, object]]


def _coerce(c):
    return Fraction(c) if isinstance(c, (int, Rational)) else c


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    inversions = sum(1 for i in a for j in b if i > j)
    return -1 if inversions % 2 else 1


class AlternatingForm:
    """Element of the degree-k part of the exterior algebra of Q^6.

    Basis vectors are indexed 1..6; coefficients live on strictly
    increasing index tuples.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if not 0 <= degree <= DIM:
            raise ValueError(f"degree must be in 0..{DIM}, got {degree}")
        self.degree = degree
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index set {idx} has wrong size for degree {degree}")
            if any(not 1 <= i <= DIM for i in idx) or list(idx) != sorted(set(idx)):
                raise ValueError(f"index set {idx} must be strictly increasing in 1..{DIM}")
            c = _coerce(c)
            if c:
                clean[idx] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, *indices: int) -> "AlternatingForm":
        """``e_{i1} ^ ... ^ e_{ik}`` in any index order (sign included)."""
        if len(set(indices)) < len(indices):
            return cls(len(indices))
        order = sorted(indices)
        inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
        return cls(len(indices), {tuple(order): -1 if inversions % 2 else 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, idx) -> object:
        return self.coeffs.get(tuple(idx), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: "AlternatingForm") -> "AlternatingForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return AlternatingForm(self.degree, out)

    def __neg__(self) -> "AlternatingForm":
        return AlternatingForm(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "AlternatingForm") -> "AlternatingForm":
        return self + (-other)

    def __rmul__(self, c) -> "AlternatingForm":
        c = _coerce(c)
        return AlternatingForm(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"AlternatingForm({self.degree}, 0)"
        terms = " + ".join(f"{c}*e{''.join(map(str, k))}" for k, c in sorted(self.coeffs.items()))
        return f"AlternatingForm({self.degree}, {terms})"


def wedge(a: AlternatingForm, b: AlternatingForm) -> AlternatingForm:
    if a.degree + b.degree > DIM:
        raise ValueError(f"degree {a.degree} + {b.degree} exceeds {DIM}")
    out: dict[tuple[int, ...], object] = {}
    for ia, ca in a.coeffs.items():
        for ib, cb in b.coeffs.items():
            if set(ia) & set(ib):
                continue
            key = tuple(sorted(ia + ib))
            term = ca * cb if _merge_sign(ia, ib) > 0 else -(ca * cb)
            out[key] = out[key] + term if key in out else term
    return AlternatingForm(a.degree + b.degree, out)


def _require_two_form(omega: AlternatingForm) -> None:
    if omega.degree != 2:
        raise ValueError(f"expected a 2-form, got degree {omega.degree}")


def phi(omega: AlternatingForm) -> AlternatingForm:
    """The quadratic map omega -> omega ^ omega."""
    _require_two_form(omega)
    return wedge(omega, omega)


def two_form_rank(omega: AlternatingForm) -> int:
    """Twice the largest k with omega^k nonzero."""
    _require_two_form(omega)
    power, k = AlternatingForm(0, {(): 1}), 0
    while True:
        if 2 * (k + 1) > DIM:
            return 2 * k
        power = wedge(power, omega)
        if power.is_zero():
            return 2 * k
        k += 1


def pfaffian_eval(omega: AlternatingForm):
    """Coefficient of e1^...^e6 in omega^3, which is 3! times the Pfaffian."""
    _require_two_form(omega)
    return wedge(wedge(omega, omega), omega)[tuple(range(1, DIM + 1))]


def skew_matrix(omega: AlternatingForm) -> list[list[object]]:
    _require_two_form(omega)
    m = [[Fraction(0)] * DIM for _ in range(DIM)]
    for (i, j), c in omega.coeffs.items():
        m[i - 1][j - 1] = c
        m[j - 1][i - 1] = -c
    return m


# 2x2 matrices ---------------------------------------------------------------

def mat(a, b, c, d) -> Matrix2:
    return ((_coerce(a), _coerce(b)), (_coerce(c), _coerce(d)))


ZERO2 = mat(0, 0, 0, 0)
IDENTITY2 = mat(1, 0, 0, 1)
PI = mat(0, 1, -1, 0)


def mat_mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


def mat_add(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(tuple(a[i][j] + b[i][j] for j in range(2)) for i in range(2))


def mat_neg(a: Matrix2) -> Matrix2:
    return tuple(tuple(-a[i][j] for j in range(2)) for i in range(2))


def mat_scale(c, a: Matrix2) -> Matrix2:
    c = _coerce(c)
    return tuple(tuple(c * a[i][j] for j in range(2)) for i in range(2))


def transpose(a: Matrix2) -> Matrix2:
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


def det2(a: Matrix2):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def inverse2(a: Matrix2) -> Matrix2:
    d = det2(a)
    if not d:
        raise ValueError("matrix is singular")
    d = Fraction(d)
    return ((a[1][1] / d, -a[0][1] / d), (-a[1][0] / d, a[0][0] / d))


def flatten(a: Matrix2) -> tuple:
    """Row-major entries (a11, a12, a21, a22)."""
    return (a[0][0], a[0][1], a[1][0], a[1][1])


# 4x4 symplectic form on the flattened 2x2 matrices: [[0, I], [-I, 0]]
OMEGA = tuple(
    tuple(Fraction(v) for v in row)
    for row in ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))
)


@dataclass(frozen=True)
class QuiverVector:
    """A point (X, Y; S, T) of (V (x) W) + (V^ (x) W^) for dim W = 2."""

    X: Matrix2
    Y: Matrix2
    S: Matrix2
    T: Matrix2

    FIELDS = ("x", "y", "s", "t")

    @classmethod
    def from_flat(cls, values) -> "QuiverVector":
        values = [_coerce(v) for v in values]
        if len(values) != 16:
            raise ValueError("need 16 coordinates")
        blocks = [mat(*values[4 * k: 4 * k + 4]) for k in range(4)]
        return cls(*blocks)

    @classmethod
    def zero(cls) -> "QuiverVector":
        return cls(ZERO2, ZERO2, ZERO2, ZERO2)

    @staticmethod
    def coordinate_names() -> list[str]:
        return [f"{b}{i}{j}" for b in QuiverVector.FIELDS for i in (1, 2) for j in (1, 2)]

    def flat(self) -> tuple:
        return flatten(self.X) + flatten(self.Y) + flatten(self.S) + flatten(self.T)

    def __neg__(self) -> "QuiverVector":
        return QuiverVector(*(mat_neg(m) for m in (self.X, self.Y, self.S, self.T)))

    def __add__(self, other: "QuiverVector") -> "QuiverVector":
        return QuiverVector(
            mat_add(self.X, other.X), mat_add(self.Y, other.Y),
            mat_add(self.S, other.S), mat_add(self.T, other.T),
        )


@dataclass(frozen=True)
class MomentValue:
    scalar: object
    matrix: Matrix2


def f_point(X: Matrix2, Y: Matrix2, lam=1) -> QuiverVector:
    """The point (X, Y; lam*Pi*Y, -lam*Pi*X); lam = 1 gives the linear space F."""
    return QuiverVector(X, Y, mat_scale(lam, mat_mul(PI, Y)), mat_neg(mat_scale(lam, mat_mul(PI, X))))


def q_form(X: Matrix2, Y: Matrix2):
    """The skew pairing x^t Omega y of the flattened matrices."""
    x, y = flatten(X), flatten(Y)
    total = Fraction(0)
    for i in range(4):
        for j in range(4):
            if OMEGA[i][j]:
                total = total + OMEGA[i][j] * x[i] * y[j]
    return total


def momentum_map(u: QuiverVector) -> MomentValue:
    scalar = Fraction(0)
    for a, b in zip(flatten(u.X) + flatten(u.Y), flatten(u.S) + flatten(u.T)):
        scalar = scalar + a * b
    matrix = mat_add(mat_mul(u.X, transpose(u.S)), mat_mul(u.Y, transpose(u.T)))
    return MomentValue(scalar, matrix)


def tau_l1(u: QuiverVector) -> QuiverVector:
    """(X, Y; S, T) -> (-T, S; -Y, X); squares to -1."""
    return QuiverVector(mat_neg(u.T), u.S, mat_neg(u.Y), u.X)


def glw_act(M: Matrix2, u: QuiverVector) -> QuiverVector:
    """Action of N in GL(W): (NX, NY; N^{-t} S, N^{-t} T)."""
    dual = transpose(inverse2(M))
    return QuiverVector(mat_mul(M, u.X), mat_mul(M, u.Y), mat_mul(dual, u.S), mat_mul(dual, u.T))


def plucker_2x4(X: Matrix2, Y: Matrix2) -> tuple:
    """2x2 minors of the 2x4 matrix [X | Y] on column pairs
    (x1,x2), (x1,y1), (x1,y2), (x2,y1), (x2,y2), (y1,y2)."""
    (x11, x12), (x21, x22) = X
    (y11, y12), (y21, y22) = Y
    return (
        x11 * x22 - x12 * x21,
        x11 * y21 - y11 * x21,
        x11 * y22 - y12 * x21,
        x12 * y21 - y11 * x22,
        x12 * y22 - y12 * x22,
        y11 * y22 - y12 * y21,
    )


def plucker_relation(p: tuple):
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


def qbar_matrix(u: QuiverVector) -> tuple[tuple, tuple]:
    (x11, x12), (x21, x22) = u.X
    (y11, y12), (y21, y22) = u.Y
    (s11, s12), (s21, s22) = u.S
    (t11, t12), (t21, t22) = u.T
    top = (x11, x12, x21, x22, y11, y12, y21, y22)
    bottom = (t21, t22, -t11, -t12, -s21, -s22, s11, s12)
    return top, bottom


def qbar_minors(u: QuiverVector) -> list:
    top, bottom = qbar_matrix(u)
    return [top[i] * bottom[j] - top[j] * bottom[i] for i, j in combinations(range(8), 2)]


def qbar_rank_test(u: QuiverVector) -> tuple[tuple[tuple, tuple], bool]:
    """The 2x8 matrix whose rank <= 1 locus is the closure of Q, and the verdict."""
    return qbar_matrix(u), all(not m for m in qbar_minors(u))
