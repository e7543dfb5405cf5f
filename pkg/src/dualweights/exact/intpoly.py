"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Polynomial in T stored as a coefficient tuple indexed by degree.

    Instances are immutable and hashable. The zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_power(cls, k: int) -> "IntPolynomial":
        """1 - T^k."""
        if k == 0:
            return cls()
        c = [0] * (k + 1)
        c[0] = 1
        c[k] = -1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "+") + mono)
            else:
                parts.append(f"{c:+d}{mono}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod_exact(self, q: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"] | None:
        """Long division over the integers.

        Returns ``(quotient, remainder)`` or None when some quotient
        coefficient is not integral.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = q.degree
        lead = q.coeffs[-1]
        if len(rem) <= dq:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            s, r = divmod(c, lead)
            if r:
                return None
            quot[k - dq] = s
            for j, qc in enumerate(q.coeffs):
                rem[k - dq + j] -= s * qc
        return IntPolynomial(quot), IntPolynomial(rem)


def poly_exact_div(p: IntPolynomial, q: IntPolynomial) -> Optional[IntPolynomial]:
    """Return r with r*q == p when q divides p over the integers, else None."""
    res = p.divmod_exact(q)
    if res is None:
        return None
    quot, rem = res
    return quot if rem.is_zero() else None


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial([1])
    for p in polys:
        acc = acc * p
    return acc


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """Phi_n, by dividing T^n - 1 by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    p = -IntPolynomial.one_minus_power(n)
    for d in divisors(n)[:-1]:
        r = poly_exact_div(p, cyclotomic_polynomial(d))
        assert r is not None
        p = r
    return p


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(n)
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def power_series(num: IntPolynomial, dens: Sequence[int], n_terms: int) -> list[int]:
    """First ``n_terms`` coefficients of num / prod(1 - T^k for k in dens)."""
    coeffs = [num[k] for k in range(n_terms)]
    for k in dens:
        # multiply by 1/(1-T^k): running sum with stride k
        for i in range(k, n_terms):
            coeffs[i] += coeffs[i - k]
    return coeffs
