"""Exact re-verification of the ideal-theoretic claims about Q and the A1 slice."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..multilinear import QuiverVector, f_point, mat, momentum_map, q_form, qbar_minors
from .groebner import IdealBasis, Membership, ideal_member, normal_form
from .poly import MultiPoly, parse_poly, substitute

QUIVER_VARS = tuple(QuiverVector.coordinate_names())
PARAM_VARS = QUIVER_VARS[:8] + ("lam",)


def read_ideal(text: str, variables=QUIVER_VARS, order: str = "degrevlex") -> IdealBasis:
    """One generator per line; blank lines and ``#`` comments are ignored."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    return IdealBasis([parse_poly(ln, variables) for ln in lines if ln], order)


def read_ideal_file(path, variables=QUIVER_VARS, order: str = "degrevlex") -> IdealBasis:
    return read_ideal(Path(path).read_text(), variables, order)


def format_ideal(g: IdealBasis) -> str:
    return "".join(p.to_string(g.order) + "\n" for p in g.generators)


def i3_generators_text() -> str:
    return resources.files("fanocalc.data").joinpath("i3_generators.txt").read_text()


def i3_generators() -> list[tuple[str, MultiPoly]]:
    out = []
    for line in i3_generators_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((line, parse_poly(line, QUIVER_VARS)))
    return out


def symbolic_quiver(variables=QUIVER_VARS) -> QuiverVector:
    gens = dict(zip(variables, MultiPoly.gens(variables)))
    return QuiverVector.from_flat([gens[v] for v in QUIVER_VARS])


def q_parametrization() -> dict[str, MultiPoly]:
    """S = lam*Pi*Y, T = -lam*Pi*X written in the variables x.., y.., lam."""
    g = dict(zip(PARAM_VARS, MultiPoly.gens(PARAM_VARS)))
    X = mat(g["x11"], g["x12"], g["x21"], g["x22"])
    Y = mat(g["y11"], g["y12"], g["y21"], g["y22"])
    u = f_point(X, Y, g["lam"])
    return dict(zip(QUIVER_VARS, u.flat()))


def q_polynomial(variables=PARAM_VARS) -> MultiPoly:
    g = dict(zip(variables, MultiPoly.gens(variables)))
    return q_form(mat(g["x11"], g["x12"], g["x21"], g["x22"]),
                  mat(g["y11"], g["y12"], g["y21"], g["y22"]))


@dataclass(frozen=True)
class Finding:
    label: str
    remainder: MultiPoly

    @property
    def vanishes(self) -> bool:
        return self.remainder.is_zero()


def verify_i3_on_Q() -> list[Finding]:
    """Each generator, pulled back along the parametrization of Q and reduced mod q.

    The ideal (q) in Q[x, y, lam] is principal, so {q} is already a Groebner
    basis and a zero remainder is exact.
    """
    sub = q_parametrization()
    q = IdealBasis([q_polynomial()])
    return [Finding(label, normal_form(substitute(f, sub), q)) for label, f in i3_generators()]


def verify_qbar_minors_on_Q() -> list[Finding]:
    u = symbolic_quiver()
    sub = q_parametrization()
    labels = [f"minor({i},{j})" for i in range(1, 9) for j in range(i + 1, 9)]
    return [Finding(lab, substitute(m, sub)) for lab, m in zip(labels, qbar_minors(u))]


SLICE_VARS = ("x", "y", "s", "t")
ABCD_VARS = ("a", "b", "c", "d")


def slice_map() -> dict[str, MultiPoly]:
    """Invariants of the C* action: a = xs, b = xt, c = ys, d = yt."""
    x, y, s, t = MultiPoly.gens(SLICE_VARS)
    return {"a": x * s, "b": x * t, "c": y * s, "d": y * t}


def verify_a1_slice() -> dict[str, bool]:
    a, b, c, d = MultiPoly.gens(ABCD_VARS)
    x, y, s, t = MultiPoly.gens(SLICE_VARS)
    sub = slice_map()
    moment = x * s + y * t
    return {
        "ad - bc maps to 0": substitute(a * d - b * c, sub).is_zero(),
        "a + d maps to xs + yt": substitute(a + d, sub) == moment,
        "a^2 + bc lies in (xs + yt)": normal_form(substitute(a * a + b * c, sub), IdealBasis([moment])).is_zero(),
    }


def momentum_ideal_on_F(variables=QUIVER_VARS[:8]) -> IdealBasis:
    """Components of mu_1 restricted to F, as polynomials in X and Y."""
    g = dict(zip(variables, MultiPoly.gens(variables)))
    X = mat(g["x11"], g["x12"], g["x21"], g["x22"])
    Y = mat(g["y11"], g["y12"], g["y21"], g["y22"])
    value = momentum_map(f_point(X, Y))
    entries = [value.scalar] + [e for row in value.matrix for e in row]
    return IdealBasis([e for e in entries if e])


def q_in_momentum_ideal_on_F(degree_cap: int = 8, pair_cap: int = 10000) -> Membership:
    variables = QUIVER_VARS[:8]
    return ideal_member(q_polynomial(variables), momentum_ideal_on_F(variables), degree_cap, pair_cap)
