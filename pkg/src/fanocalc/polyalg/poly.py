"""Sparse multivariate polynomials over Q."""

from __future__ import annotations

import ast
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def lex_key(m: Monomial):
    return m


def degrevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


ORDERS: dict[str, Callable[[Monomial], object]] = {
    "lex": lex_key,
    "degrevlex": degrevlex_key,
}


def order_key(order: str) -> Callable[[Monomial], object]:
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; expected one of {sorted(ORDERS)}") from None


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class MultiPoly:
    """Polynomial with rational coefficients on a fixed, ordered variable list.

    Terms are kept as ``{exponent tuple: Fraction}`` with no zero entries.
    Two polynomials only combine when their variable lists agree.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"exponent {m} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["MultiPoly"]:
        variables = tuple(variables)
        n = len(variables)
        return [cls(variables, {tuple(int(i == j) for j in range(n)): 1}) for i in range(n)]

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    def zero(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Rational)):
            return MultiPoly.const(self.variables, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            if not c.terms:
                raise ZeroDivisionError("division by zero")
            if c.total_degree() != 0:
                raise ValueError("only division by constants is supported")
            c = next(iter(c.terms.values()))
        c = Fraction(c)
        if not c:
            raise ZeroDivisionError("division by zero")
        return MultiPoly._raw(self.variables, {m: v / c for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_monomial(self, c: Fraction, m: Monomial) -> "MultiPoly":
        """``c * x^m * self``."""
        return MultiPoly._raw(
            self.variables,
            {tuple(a + b for a, b in zip(k, m)): c * v for k, v in self.terms.items()},
        )

    # inspection
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self, order: str = "degrevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order_key(order))

    def leading_coefficient(self, order: str = "degrevlex") -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "degrevlex") -> "MultiPoly":
        if not self.terms:
            return self
        return self / self.leading_coefficient(order)

    def support_variables(self) -> set[str]:
        return {self.variables[i] for m in self.terms for i, e in enumerate(m) if e}

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        values = [Fraction(point[v]) if v in point else None for v in self.variables]
        for m, c in self.terms.items():
            term = c
            for val, e in zip(values, m):
                if e:
                    if val is None:
                        raise KeyError("missing value for a variable in the support")
                    term *= val**e
            total += term
        return total

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string()!r})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, order: str = "degrevlex") -> str:
        if not self.terms:
            return "0"
        key = order_key(order)
        out = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e
            ]
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def substitute(f: MultiPoly, assignment: Mapping[str, MultiPoly]) -> MultiPoly:
    """Compose ``f`` with ``assignment``; all images share one variable list."""
    needed = f.support_variables()
    missing = needed - set(assignment)
    if missing:
        raise ValueError(f"assignment does not cover variables {sorted(missing)}")
    images = [assignment.get(v) for v in f.variables]
    target = next((p.variables for p in images if p is not None), None)
    if target is None:
        target = f.variables
    if any(p is not None and p.variables != target for p in images):
        raise ValueError("assignment images live in different rings")
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, e: int) -> MultiPoly:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = MultiPoly(target)
    for m, c in f.terms.items():
        term = MultiPoly.const(target, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


# Parsing ---------------------------------------------------------------------

def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse ``+ - * ^ /`` arithmetic in the given variables.

    Division is allowed by rational constants only.
    """
    variables = tuple(variables)
    gens = dict(zip(variables, MultiPoly.gens(variables)))
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def walk(node) -> MultiPoly:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(variables, node.value)
        if isinstance(node, ast.Name):
            if node.id not in gens:
                raise ValueError(f"unknown variable {node.id!r} in {text!r}")
            return gens[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
            if isinstance(node.op, ast.Pow):
                if right.total_degree() > 0 or len(right.terms) > 1:
                    raise ValueError(f"exponent must be a constant in {text!r}")
                e = next(iter(right.terms.values()), Fraction(0))
                if e.denominator != 1 or e < 0:
                    raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
                return left ** int(e)
        raise ValueError(f"unsupported syntax in {text!r}")

    return walk(tree)


def infer_variables(lines: Iterable[str]) -> tuple[str, ...]:
    names: list[str] = []
    for line in lines:
        tree = ast.parse(line.replace("^", "**"), mode="eval")
        for node in ast.walk(tree):
            if isinstance(node, ast.Name) and node.id not in names:
                names.append(node.id)
    return tuple(sorted(names))
