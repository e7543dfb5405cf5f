"""Exact arithmetic in the cyclotomic field Q(zeta_n).

An element is a residue modulo Phi_n, stored in the power basis
1, zeta, ..., zeta^(phi(n)-1) as integer numerators over one positive
common denominator.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .intpoly import cyclotomic_polynomial, euler_phi


def _reduce_mod_phi(coeffs: list[int], n: int) -> list[int]:
    phi = cyclotomic_polynomial(n).coeffs
    dim = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, dim - 1, -1):
        t = c[k]
        if t:
            base = k - dim
            for j in range(dim):
                c[base + j] -= t * phi[j]
            c[k] = 0
    c = c[:dim]
    c.extend([0] * (dim - len(c)))
    return c


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^j reduced to the power basis, for j = 0..n-1."""
    dim = euler_phi(n)
    rows = []
    for j in range(n):
        if j < dim:
            v = [0] * dim
            v[j] = 1
            rows.append(tuple(v))
        else:
            rows.append(tuple(_reduce_mod_phi([0] * j + [1], n)))
    return tuple(rows)


class CycloNumber:
    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num: Sequence[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        dim = euler_phi(order)
        if len(num) != dim:
            raise ValueError(f"expected {dim} coordinates for order {order}, got {len(num)}")
        if den < 0:
            num, den = [-x for x in num], -den
        g = den
        for x in num:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self.order = order
        self.num = tuple(num)
        self.den = den

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rational(cls, order: int, q) -> "CycloNumber":
        q = Fraction(q)
        dim = euler_phi(order)
        return cls(order, [q.numerator] + [0] * (dim - 1), q.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloNumber":
        return cls(order, [0] * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> "CycloNumber":
        return cls.from_rational(order, 1)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycloNumber":
        """zeta_n^k with zeta_n = exp(2 pi i / n)."""
        return cls(order, _power_table(order)[k % order])

    @classmethod
    def from_group_ring(cls, order: int, vec: Sequence[int], den: int = 1) -> "CycloNumber":
        """Image of sum_j vec[j] * zeta^j (j taken mod order)."""
        table = _power_table(order)
        acc = [0] * euler_phi(order)
        for j, c in enumerate(vec):
            if c:
                for i, t in enumerate(table[j % order]):
                    if t:
                        acc[i] += c * t
        return cls(order, acc, den)

    # -- queries ------------------------------------------------------------
    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for x in reversed(self.num):
            acc = acc * z + x
        return acc / self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(self.order, other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.order == other.order and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.order, self.num, self.den))

    def __repr__(self) -> str:
        return f"CycloNumber({self.order}, {list(self.num)}, {self.den})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z^{k}")
        return " + ".join(terms) if terms else "0"

    # -- arithmetic --------------------------------------------------------------
    def _check(self, other: "CycloNumber") -> None:
        if self.order != other.order:
            raise ValueError(f"cyclotomic order mismatch: {self.order} vs {other.order}")

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.order, other)
        self._check(other)
        return other

    def __add__(self, other) -> "CycloNumber":
        other = self._coerce(other)
        if self.den == other.den:
            return CycloNumber(self.order, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return CycloNumber(self.order, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.order, [-a for a in self.num], self.den)

    def __sub__(self, other) -> "CycloNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycloNumber":
        return (-self) + other

    def __mul__(self, other) -> "CycloNumber":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNumber(self.order, [a * q.numerator for a in self.num], self.den * q.denominator)
        self._check(other)
        if other.is_rational():
            c = other.num[0]
            return CycloNumber(self.order, [a * c for a in self.num], self.den * other.den)
        if self.is_rational():
            return other * self
        a, b = self.num, other.num
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloNumber(self.order, _reduce_mod_phi(prod, self.order), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNumber.from_rational(self.order, 1 / self.rational_value())
        # extended Euclid over Q between self and Phi_n
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order).coeffs]
        r0, r1 = phi, [Fraction(x, self.den) for x in self.num]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant since Phi_n is irreducible
        r0 = _strip(r0)
        assert len(r0) == 1
        inv = [c / r0[0] for c in s0]
        return CycloNumber.from_fractions(self.order, inv)

    @classmethod
    def from_fractions(cls, order: int, coeffs: Sequence[Fraction]) -> "CycloNumber":
        den = 1
        for c in coeffs:
            den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in coeffs]
        return cls(order, _reduce_mod_phi(ints, order), den)

    def __truediv__(self, other) -> "CycloNumber":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def conjugate(self) -> "CycloNumber":
        """Complex conjugation, zeta -> zeta^-1."""
        vec = [0] * self.order
        for k, c in enumerate(self.num):
            vec[(-k) % self.order] += c
        return CycloNumber.from_group_ring(self.order, vec, self.den)


def _strip(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_divmod(a, b):
    a, b = _strip(a), _strip(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and any(r):
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] -= c * y
        r = _strip(r)
    return q, r
