"""Characteristic polynomial as a root multiset and its (lambda^d - 1) decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Mapping

from .errors import VerificationError
from .exact import IntPolynomial, cyclotomic_polynomial, divisors, mobius
from .exact.intpoly import product
from .weights import exponent_data


@dataclass(frozen=True)
class RootMultiset:
    """c(j) = number of exponents congruent to j mod h."""

    h: int
    mult: tuple[int, ...]

    @property
    def mass(self) -> int:
        return sum(self.mult)

    def is_galois_closed(self) -> bool:
        by_gcd: dict[int, int] = {}
        for j, c in enumerate(self.mult):
            g = gcd(j, self.h)
            if by_gcd.setdefault(g, c) != c:
                return False
        return True

    def by_order(self) -> dict[int, int]:
        """C(o): the common multiplicity of the roots of exact order o."""
        if not self.is_galois_closed():
            raise VerificationError(f"root multiset mod {self.h} is not Galois-closed: {self.mult}")
        return {self.h // gcd(j, self.h): c for j, c in enumerate(self.mult)}


@dataclass(frozen=True)
class CyclotomicDecomposition:
    """phi(lambda) = prod_d (lambda^d - 1)^e(d); only nonzero e(d) are stored."""

    h: int
    e: Mapping[int, int]

    def __post_init__(self):
        clean = {int(d): int(v) for d, v in sorted(self.e.items()) if v}
        for d in clean:
            if self.h % d:
                raise ValueError(f"{d} does not divide h={self.h}")
        object.__setattr__(self, "e", clean)

    @property
    def poset(self) -> list[int]:
        """The classifying poset M(W) as a sorted divisor list."""
        return sorted(self.e)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicDecomposition) and self.h == other.h and dict(self.e) == dict(other.e)

    def __hash__(self) -> int:
        return hash((self.h, tuple(sorted(self.e.items()))))

    def degree(self) -> int:
        return sum(d * v for d, v in self.e.items())

    def root_multiset(self) -> RootMultiset:
        """Expand back to root multiplicities: c(j) = sum over ord(j) | d of e(d)."""
        mult = []
        for j in range(self.h):
            o = self.h // gcd(j, self.h)
            mult.append(sum(v for d, v in self.e.items() if d % o == 0))
        return RootMultiset(self.h, tuple(mult))

    def cyclotomic_exponents(self) -> dict[int, int]:
        """Multiplicity of Phi_o in phi for each o | h."""
        return {o: sum(v for d, v in self.e.items() if d % o == 0) for o in divisors(self.h)}

    def as_polynomial(self) -> IntPolynomial:
        return product([cyclotomic_polynomial(o) for o, c in self.cyclotomic_exponents().items() for _ in range(c)])

    def __str__(self) -> str:
        return " ".join(f"(l^{d}-1)^{v}" for d, v in sorted(self.e.items()))


def root_multiset(w) -> RootMultiset:
    data = exponent_data(w)
    h = w.h if hasattr(w, "h") else w[3]
    mult = [0] * h
    for m in data.exponents:
        mult[m % h] += 1
    return RootMultiset(h, tuple(mult))


def decompose(roots: RootMultiset) -> CyclotomicDecomposition:
    """Moebius inversion over the divisor lattice of h."""
    h = roots.h
    c = roots.by_order()
    e = {}
    for d in divisors(h):
        e[d] = sum(mobius(dp // d) * c[dp] for dp in divisors(h) if dp % d == 0)
    out = CyclotomicDecomposition(h, e)
    if out.root_multiset() != roots:
        raise VerificationError(f"decomposition does not reconstruct the root multiset mod {h}")
    return out


def cyclo_decomposition(w) -> CyclotomicDecomposition:
    if hasattr(w, "weights"):
        w = (*w.weights, w.h)
    a1, a2, a3, h = w
    return _cached_decomposition(tuple(sorted((a1, a2, a3))), h)


@lru_cache(maxsize=65536)
def _cached_decomposition(a: tuple[int, int, int], h: int) -> CyclotomicDecomposition:
    return decompose(root_multiset((*a, h)))


def dual_decomposition(dec: CyclotomicDecomposition) -> CyclotomicDecomposition:
    """e*(i) = -e(h/i)."""
    return CyclotomicDecomposition(dec.h, {dec.h // d: -v for d, v in dec.e.items()})
