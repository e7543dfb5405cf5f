"""Weight systems (a1, a2, a3; h) and their basic invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .errors import InvalidWeightsError, NotRegularError, VerificationError
from .exact import IntPolynomial, divisors, poly_exact_div
from .exact.intpoly import product


@dataclass(frozen=True)
class WeightSystem:
    """A tuple (a1, a2, a3; h).

    ``weights`` keeps the order it was built with; Appendix family formulas are
    order-sensitive, so sorting is explicit via :meth:`canonical`.
    """

    weights: tuple[int, int, int]
    h: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        validate(*self.weights, self.h)

    @classmethod
    def of(cls, a1: int, a2: int, a3: int, h: int) -> "WeightSystem":
        return cls((a1, a2, a3), h)

    @property
    def a1(self) -> int:
        return self.weights[0]

    @property
    def a2(self) -> int:
        return self.weights[1]

    @property
    def a3(self) -> int:
        return self.weights[2]

    @property
    def is_canonical(self) -> bool:
        return list(self.weights) == sorted(self.weights)

    def canonical(self) -> "WeightSystem":
        return WeightSystem(tuple(sorted(self.weights)), self.h)

    @property
    def key(self) -> str:
        a, b, c = sorted(self.weights)
        return f"{a},{b},{c};{self.h}"

    @property
    def epsilon(self) -> int:
        return sum(self.weights) - self.h

    def same_system(self, other: "WeightSystem") -> bool:
        return self.h == other.h and sorted(self.weights) == sorted(other.weights)

    def __str__(self) -> str:
        a, b, c = self.weights
        return f"({a},{b},{c};{self.h})"


@dataclass(frozen=True)
class ExponentData:
    chi: IntPolynomial
    mu: int
    epsilon: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class SignatureData:
    genus: int
    alphas: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return f"({self.genus};{','.join(map(str, self.alphas))})"


def validate(a1: int, a2: int, a3: int, h: int) -> None:
    vals = (a1, a2, a3, h)
    if any(not isinstance(v, int) or isinstance(v, bool) for v in vals):
        raise InvalidWeightsError(f"weights must be integers, got {vals}")
    if min(vals) <= 0:
        raise InvalidWeightsError(f"weights must be positive, got {vals}")
    if max(a1, a2, a3) >= h:
        raise InvalidWeightsError(f"weights must be smaller than h={h}, got {(a1, a2, a3)}")
    if gcd(gcd(a1, a2), gcd(a3, h)) != 1:
        raise InvalidWeightsError(f"gcd(a1,a2,a3,h) must be 1 for {vals}")


def _as_tuple(w) -> tuple[int, int, int, int]:
    if isinstance(w, WeightSystem):
        return (*w.weights, w.h)
    return tuple(w)


@lru_cache(maxsize=65536)
def _exponent_data(a: tuple[int, int, int], h: int) -> Optional[ExponentData]:
    num = product([IntPolynomial.one_minus_power(h - ai) for ai in a])
    den = product([IntPolynomial.one_minus_power(ai) for ai in a])
    chi = poly_exact_div(num, den)
    if chi is None:
        return None
    if any(c < 0 for c in chi.coeffs):
        raise VerificationError(f"chi of ({a};{h}) is a polynomial with a negative coefficient: {chi}")
    eps = sum(a) - h
    exps = tuple(eps + k for k, c in enumerate(chi.coeffs) for _ in range(c))
    mu = chi(1)
    return ExponentData(chi=chi, mu=mu, epsilon=eps, exponents=exps)


def is_regular(a1: int, a2: int, a3: int, h: int) -> Optional[ExponentData]:
    """Exponent data when prod (1-T^(h-a_i)) / (1-T^(a_i)) is a polynomial, else None.

    Raises InvalidWeightsError for malformed tuples.
    """
    validate(a1, a2, a3, h)
    return _exponent_data(tuple(sorted((a1, a2, a3))), h)


def exponent_data(w) -> ExponentData:
    data = is_regular(*_as_tuple(w))
    if data is None:
        raise NotRegularError(f"{w} is not a regular system of weights")
    return data


def regular_by_root_count(a: tuple[int, int, int], h: int) -> bool:
    """Regularity test by counting cyclotomic factors.

    1 - T^k contains Phi_n exactly once when n | k, so the quotient is a
    polynomial iff every n divides at least as many of the h - a_i as of the a_i.
    """
    for ai in a:
        for n in divisors(ai):
            if n == 1:
                continue
            top = sum(1 for b in a if (h - b) % n == 0)
            bottom = sum(1 for b in a if b % n == 0)
            if top < bottom:
                return False
    return True


def genus(w) -> int:
    return exponent_data(w).exponents.count(0)


def pair_count(ai: int, aj: int, h: int) -> int:
    """#{(u, v) >= 0 : ai*u + aj*v = h}."""
    return sum(1 for u in range(h // ai + 1) if (h - ai * u) % aj == 0)


def signature(w) -> SignatureData:
    a1, a2, a3, h = _as_tuple(w)
    g = genus((a1, a2, a3, h))
    a = (a1, a2, a3)
    multiset = [ai for ai in a if h % ai]
    for i in range(3):
        for j in range(i + 1, 3):
            m = pair_count(a[i], a[j], h)
            multiset.extend([gcd(a[i], a[j])] * max(m - 1, 0))
    return SignatureData(genus=g, alphas=tuple(sorted(x for x in multiset if x > 1)))


def milnor_number_formula(w) -> Fraction:
    a1, a2, a3, h = _as_tuple(w)
    out = Fraction(1)
    for ai in (a1, a2, a3):
        out *= Fraction(h - ai, ai)
    return out


@lru_cache(maxsize=None)
def _enumerate(h: int) -> tuple[WeightSystem, ...]:
    out = []
    for a1 in range(1, h):
        for a2 in range(a1, h):
            g12 = gcd(a1, a2)
            for a3 in range(a2, h):
                if gcd(g12, gcd(a3, h)) != 1:
                    continue
                if not regular_by_root_count((a1, a2, a3), h):
                    continue
                if _exponent_data((a1, a2, a3), h) is not None:
                    out.append(WeightSystem((a1, a2, a3), h))
    return tuple(out)


def enumerate_regular(h: int) -> list[WeightSystem]:
    """All regular systems with coxeter number h, ascending weights, lexicographic."""
    if h < 2:
        return []
    return list(_enumerate(h))
