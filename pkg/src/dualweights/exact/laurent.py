"""Laurent polynomials and rational functions in y, ybar with fractional exponents.

A term key ``(u, v)`` stands for ``y**(u/D) * ybar**(v/D)`` where ``D`` is the
exponent unit shared by every operand. Coefficients are cyclotomic numbers of
a common order.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Mapping

from .cyclo import CycloNumber


class UnitMismatchError(ValueError):
    """Operands carry different exponent units or coefficient fields."""


class BiLaurent:
    __slots__ = ("unit", "order", "terms")

    def __init__(self, unit: int, order: int, terms: Mapping[tuple[int, int], CycloNumber] | None = None):
        if unit <= 0:
            raise ValueError("exponent unit must be positive")
        self.unit = unit
        self.order = order
        clean = {}
        for k, c in (terms or {}).items():
            if isinstance(c, (int, Fraction)):
                c = CycloNumber.from_rational(order, c)
            elif c.order != order:
                raise UnitMismatchError(f"coefficient order {c.order} != {order}")
            if not c.is_zero():
                clean[(int(k[0]), int(k[1]))] = c
        self.terms = clean

    @classmethod
    def constant(cls, unit: int, order: int, c=1) -> "BiLaurent":
        return cls(unit, order, {(0, 0): c})

    @classmethod
    def monomial(cls, unit: int, order: int, u: int, v: int, c=1) -> "BiLaurent":
        return cls(unit, order, {(u, v): c})

    def _check(self, other: "BiLaurent") -> None:
        if self.unit != other.unit or self.order != other.order:
            raise UnitMismatchError(
                f"incompatible operands: unit {self.unit}/{other.unit}, order {self.order}/{other.order}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, int], CycloNumber]]:
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurent):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.unit, self.order, tuple(self.sorted_terms())))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {c}" for k, c in self.sorted_terms()[:6])
        more = "" if len(self.terms) <= 6 else f", ... ({len(self.terms)} terms)"
        return f"BiLaurent(unit={self.unit}, {{{body}{more}}})"

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return BiLaurent(self.unit, self.order, out)

    def __neg__(self) -> "BiLaurent":
        return BiLaurent(self.unit, self.order, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def __mul__(self, other) -> "BiLaurent":
        if isinstance(other, (int, Fraction, CycloNumber)):
            return BiLaurent(self.unit, self.order, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, int], CycloNumber] = {}
        for (u1, v1), c1 in self.terms.items():
            for (u2, v2), c2 in other.terms.items():
                k = (u1 + u2, v1 + v2)
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return BiLaurent(self.unit, self.order, out)

    __rmul__ = __mul__

    def shift(self, du: int, dv: int) -> "BiLaurent":
        """Multiply by the monomial y^(du/D) ybar^(dv/D)."""
        return BiLaurent(self.unit, self.order, {(u + du, v + dv): c for (u, v), c in self.terms.items()})

    def substitute_ybar_inverse(self) -> "BiLaurent":
        return BiLaurent(self.unit, self.order, {(u, -v): c for (u, v), c in self.terms.items()})

    def evaluate(self, y: complex, ybar: complex) -> complex:
        """Numerical value using principal-branch fractional powers."""
        ly, lb = cmath.log(y), cmath.log(ybar)
        acc = 0j
        for (u, v), c in self.terms.items():
            acc += complex(c) * cmath.exp((u * ly + v * lb) / self.unit)
        return acc


class BiRational:
    """Quotient num/den of BiLaurents; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiLaurent, den: BiLaurent | None = None):
        if den is None:
            den = BiLaurent.constant(num.unit, num.order)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def unit(self) -> int:
        return self.num.unit

    @property
    def order(self) -> int:
        return self.num.order

    def __add__(self, other: "BiRational") -> "BiRational":
        if self.den == other.den:
            return BiRational(self.num + other.num, self.den)
        return BiRational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "BiRational":
        return BiRational(-self.num, self.den)

    def __sub__(self, other: "BiRational") -> "BiRational":
        return self + (-other)

    def __mul__(self, other) -> "BiRational":
        if isinstance(other, BiRational):
            return BiRational(self.num * other.num, self.den * other.den)
        return BiRational(self.num * other, self.den)

    __rmul__ = __mul__

    def shift(self, du: int, dv: int) -> "BiRational":
        return BiRational(self.num.shift(du, dv), self.den)

    def substitute_ybar_inverse(self) -> "BiRational":
        return BiRational(self.num.substitute_ybar_inverse(), self.den.substitute_ybar_inverse())

    def evaluate(self, y: complex, ybar: complex) -> complex:
        return self.num.evaluate(y, ybar) / self.den.evaluate(y, ybar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiRational):
            return NotImplemented
        return birational_eq(self, other)

    __hash__ = None  # equality is not a normal form

    def __repr__(self) -> str:
        return f"BiRational(num={self.num!r}, den={self.den!r})"


def birational_eq(a: BiRational, b: BiRational) -> bool:
    if a.unit != b.unit or a.order != b.order:
        raise UnitMismatchError(f"cannot compare unit {a.unit} with unit {b.unit}")
    return (a.num * b.den - b.num * a.den).is_zero()


def substitute_ybar_inverse(f: BiRational) -> BiRational:
    return f.substitute_ybar_inverse()
