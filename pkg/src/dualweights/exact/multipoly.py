"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class MultiPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "MultiPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPolynomial({self.nvars}, {dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = "xyz" if self.nvars == 3 else [f"X{i + 1}" for i in range(self.nvars)]
        out = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPolynomial(self.nvars, out)

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "MultiPolynomial":
        if not isinstance(other, MultiPolynomial):
            return MultiPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPolynomial":
        acc = MultiPolynomial.monomial([0] * self.nvars)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * k for w, k in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        return len(self.degrees(weights)) <= 1

    def derivative(self, i: int) -> "MultiPolynomial":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MultiPolynomial(self.nvars, out)

    def substitute_monomials(self, images: Sequence[Sequence[int]]) -> "MultiPolynomial":
        """Replace variable i by the monomial with exponent vector images[i]."""
        target = len(images[0])
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            img = [0] * target
            for k, vec in zip(e, images):
                for j, x in enumerate(vec):
                    img[j] += k * x
            t = tuple(img)
            out[t] = out.get(t, 0) + c
        return MultiPolynomial(target, out)

    def divide_exact(self, other: "MultiPolynomial") -> "MultiPolynomial | None":
        """Quotient when other divides self exactly (lex leading terms), else None."""
        if other.is_zero():
            raise ZeroDivisionError
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        rem = MultiPolynomial(self.nvars, self.terms)
        quot: dict[Exponent, Fraction] = {}
        while not rem.is_zero():
            e = max(rem.terms)
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0:
                return None
            c = rem.terms[e] / lead_c
            quot[shift] = c
            rem = rem - other * MultiPolynomial(self.nvars, {shift: c})
        return MultiPolynomial(self.nvars, quot)


def fermat_relation(alphas: Sequence[int]) -> MultiPolynomial:
    """X_1^a_1 + X_2^a_2 + ... + X_r^a_r."""
    r = len(alphas)
    terms = {}
    for i, a in enumerate(alphas):
        e = [0] * r
        e[i] = a
        terms[tuple(e)] = 1
    return MultiPolynomial(r, terms)


def reduce_fermat(p: MultiPolynomial, alphas: Sequence[int], pivot: int = 0) -> MultiPolynomial:
    """Normal form modulo X1^a1 + X2^a2 + X3^a3 with X_pivot-degree below a_pivot.

    For pivot 0, X1^(q*a1 + s) is rewritten as X1^s * (-(X2^a2 + X3^a3))^q,
    expanded by the binomial theorem, so one pass is a complete reduction.
    """
    if len(alphas) != 3 or p.nvars != 3:
        raise ValueError("only the three-variable relation is supported")
    out: dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        for f, k in reduce_monomial(e, alphas, pivot):
            out[f] = out.get(f, 0) + c * k
    return MultiPolynomial(3, out)


def reduce_monomial(e: Sequence[int], alphas: Sequence[int], pivot: int = 0) -> Iterable[tuple[Exponent, int]]:
    i, j, k = pivot, (pivot + 1) % 3, (pivot + 2) % 3
    q, s = divmod(e[i], alphas[i])
    sign = -1 if q % 2 else 1
    for t in range(q + 1):
        out = [0, 0, 0]
        out[i], out[j], out[k] = s, e[j] + t * alphas[j], e[k] + (q - t) * alphas[k]
        yield tuple(out), sign * comb(q, t)
