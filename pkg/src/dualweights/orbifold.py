"""Orbifoldized Poincare polynomial chi(W, G) for diagonal symmetry groups.

Exponents use the unit D = 2h: a key (u, v) means y^(u/2h) ybar^(v/2h), so
Q = (y ybar)^(1/h) is the key (2, 2). Coefficients live in Q(zeta_h).

A group element is stored by its numerators n_i = a_i * alpha_i mod h, so
that e[omega_i alpha_i] = zeta_h^(n_i).
"""

from __future__ import annotations

import cmath
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exact import BiLaurent, BiRational, CycloNumber, UnitMismatchError
from .weights import WeightSystem, exponent_data

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class DiagonalGroup:
    """Finite diagonal group, closed under addition of numerator triples mod h."""

    h: int
    elements: tuple[Triple, ...]
    generators: tuple[Triple, ...] = ()

    def __post_init__(self):
        elems = tuple(tuple(int(x) % self.h for x in t) for t in self.elements)
        object.__setattr__(self, "elements", elems)
        s = set(elems)
        if len(s) != len(elems):
            raise ValueError("duplicate group elements")
        if (0, 0, 0) not in s:
            raise ValueError("group must contain the identity")
        for a in elems:
            for b in elems:
                if tuple((x + y) % self.h for x, y in zip(a, b)) not in s:
                    raise ValueError(f"not closed: {a} + {b}")
        if self.h**3 % len(elems):
            raise ValueError("group order must divide h^3")
        if not self.generators:
            object.__setattr__(self, "generators", tuple(e for e in elems if any(e)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def check_weights(self, w: WeightSystem) -> None:
        """Numerators must come from integer exponents: n_i in gcd(a_i, h) Z."""
        if w.h != self.h:
            raise UnitMismatchError(f"group is defined mod {self.h}, weights have h={w.h}")
        for t in self.elements:
            for a, n in zip(w.weights, t):
                if n % gcd(a, self.h):
                    raise ValueError(f"{t} is not of the form a_i*alpha_i mod h for {w}")

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagonalGroup) and self.h == other.h and set(self.elements) == set(other.elements)

    def __hash__(self) -> int:
        return hash((self.h, frozenset(self.elements)))


def generated_group(h: int, gens: Iterable[Sequence[int]]) -> DiagonalGroup:
    gens = [tuple(int(x) % h for x in g) for g in gens]
    seen = [(0, 0, 0)]
    known = {(0, 0, 0)}
    i = 0
    while i < len(seen):
        cur = seen[i]
        i += 1
        for g in gens:
            nxt = tuple((x + y) % h for x, y in zip(cur, g))
            if nxt not in known:
                known.add(nxt)
                seen.append(nxt)
    return DiagonalGroup(h, tuple(seen), tuple(g for g in gens if any(g)))


def trivial_group(w: WeightSystem) -> DiagonalGroup:
    return DiagonalGroup(w.h, ((0, 0, 0),))


def principal_group(w: WeightSystem) -> DiagonalGroup:
    """The cyclic group G0 generated by diag(e[a_1/h], e[a_2/h], e[a_3/h])."""
    return generated_group(w.h, [w.weights])


def _twisted_monomial(w: WeightSystem, alpha: Triple) -> tuple[int, int]:
    """Combined exponent of the non-fixed factors for alpha, in unit 2h.

    (y ybar)^((1-2w_i)/2) (y/ybar)^(1/2 - {w_i alpha_i}) with {w_i alpha_i} = n_i/h.
    """
    h = w.h
    u = v = 0
    for a, n in zip(w.weights, alpha):
        if n:
            u += 2 * h - 2 * a - 2 * n
            v += 2 * n - 2 * a
    return u, v


def _fixed_sum(w: WeightSystem, group: DiagonalGroup, fixed: tuple[int, ...]) -> dict[int, Fraction]:
    """(1/|G|) sum_beta prod_{i fixed} F_i(beta), times prod_{i fixed} (1 - Q^(a_i e_i)).

    With e_i = h/gcd(a_i, h) and m = n_i(beta),
      F_i = -zeta^m (1 - zeta^-m Q^(h-a_i)) / (1 - zeta^m Q^(a_i))
    and (1 - zeta^m Q^a) * sum_{k<e_i} zeta^(mk) Q^(ak) = 1 - Q^(a e_i) because
    m e_i = 0 mod h. The expanded numerator is a sum of c * zeta^(j m) Q^q, and
    summing a character over G gives |G| exactly when it is trivial on every
    generator, else 0. Returns {q: coefficient} in powers of Q.
    """
    h = w.h
    gens = group.generators
    # state: (Q exponent, character values on generators) -> coefficient
    states: dict[tuple[int, tuple[int, ...]], int] = {(0, tuple(0 for _ in gens)): 1}
    for i in fixed:
        a = w.weights[i]
        e = h // gcd(a, h)
        terms = []
        for k in range(e):
            terms.append((a * k, k + 1, -1))
            terms.append((a * k + h - a, k, 1))
        nxt: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
        for (q0, ch0), c0 in states.items():
            for q, j, c in terms:
                ch = tuple((x + j * g[i]) % h for x, g in zip(ch0, gens))
                nxt[(q0 + q, ch)] += c0 * c
        states = {k: v for k, v in nxt.items() if v}
    out: dict[int, Fraction] = defaultdict(Fraction)
    for (q, ch), c in states.items():
        if not any(ch):
            out[q] += c
    return {q: c for q, c in out.items() if c}


def _denominator(w: WeightSystem, idx: Iterable[int]) -> dict[int, int]:
    """prod_{i in idx} (1 - Q^(a_i e_i)) as {Q exponent: coefficient}."""
    poly = {0: 1}
    for i in idx:
        a = w.weights[i]
        step = a * (w.h // gcd(a, w.h))
        nxt: dict[int, int] = defaultdict(int)
        for q, c in poly.items():
            nxt[q] += c
            nxt[q + step] -= c
        poly = {q: c for q, c in nxt.items() if c}
    return poly


def _q_laurent(h: int, poly: dict, shift: tuple[int, int] = (0, 0)) -> dict[tuple[int, int], Fraction]:
    return {(2 * q + shift[0], 2 * q + shift[1]): Fraction(c) for q, c in poly.items()}


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {k: v for k, v in out.items() if v}


def orbifold_poincare(w: WeightSystem, group: DiagonalGroup) -> BiRational:
    """chi(W, G) as num / prod_i (1 - Q^(a_i e_i)), all coefficients rational."""
    group.check_weights(w)
    h = w.h
    full = (0, 1, 2)
    den = _denominator(w, full)
    by_fixed: dict[tuple[int, ...], dict[int, Fraction]] = {}
    num: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for alpha in group.elements:
        fixed = tuple(i for i in full if alpha[i] == 0)
        if fixed not in by_fixed:
            part = _fixed_sum(w, group, fixed)
            rest = _denominator(w, [i for i in full if i not in fixed])
            by_fixed[fixed] = _poly_mul(part, rest)
        mono = _twisted_monomial(w, alpha)
        # chi = (-1)^3 / |G| * sum_alpha chi_alpha, and chi_alpha = |G| * mono * part
        for key, c in _q_laurent(h, by_fixed[fixed], mono).items():
            num[key] -= c
    num_l = BiLaurent(2 * h, h, {k: c for k, c in num.items() if c})
    den_l = BiLaurent(2 * h, h, _q_laurent(h, den))
    return BiRational(num_l, den_l)


def orbifold_poincare_direct(w: WeightSystem, group: DiagonalGroup) -> BiRational:
    """Term-by-term evaluation of the defining double sum over (alpha, beta).

    Independent of the orthogonality shortcut above; cost grows like |G|^2, so
    it is meant for small h.
    """
    group.check_weights(w)
    h, unit = w.h, 2 * w.h

    def zeta(k: int) -> CycloNumber:
        return CycloNumber.zeta(h, k % h)

    def mono(u: int, v: int, c) -> BiLaurent:
        return BiLaurent.monomial(unit, h, u, v, c)

    one = BiLaurent.constant(unit, h)
    total = BiRational(BiLaurent(unit, h, {}))
    for alpha in group.elements:
        u, v = _twisted_monomial(w, alpha)
        chi_alpha = BiRational(BiLaurent(unit, h, {}))
        for beta in group.elements:
            term = BiRational(one)
            for i, a in enumerate(w.weights):
                if alpha[i]:
                    continue
                m = beta[i]
                # e[w_i b_i + 1/2] = -zeta^m ; e[1 - w_i b_i] = zeta^-m
                num = (one - mono(2 * (h - a), 2 * (h - a), zeta(-m))) * (-zeta(m))
                den = one - mono(2 * a, 2 * a, zeta(m))
                term = term * BiRational(num, den)
            chi_alpha = chi_alpha + term
        total = total + chi_alpha.shift(u, v)
    return total * Fraction(-1, group.order)


def _chi_w_birational(w: WeightSystem) -> BiRational:
    chi = exponent_data(w).chi
    terms = {(2 * k, 2 * k): Fraction(c) for k, c in enumerate(chi.coeffs) if c}
    return BiRational(BiLaurent(2 * w.h, w.h, terms))


def restriction_identity(w: WeightSystem) -> bool:
    """chi(W, {1}) equals chi_W(T) under T^h = y ybar."""
    return orbifold_poincare(w, trivial_group(w)) == _chi_w_birational(w)


def c_hat_units(w: WeightSystem) -> int:
    """c_hat = 1 - 2 eps/h in units of 1/(2h)."""
    return 2 * w.h - 4 * w.epsilon


def mirror_image(w: WeightSystem, chi: BiRational) -> BiRational:
    """(-1)^3 ybar^(c_hat) chi(y, ybar^-1)."""
    return -(chi.substitute_ybar_inverse().shift(0, c_hat_units(w)))


def is_tms_dual(w: WeightSystem, g: DiagonalGroup, w2: WeightSystem, g2: DiagonalGroup) -> bool:
    """chi(W', G') == (-1)^3 ybar^(c_hat_W) chi(W, G)(y, ybar^-1)."""
    if w.h != w2.h:
        raise UnitMismatchError(f"h mismatch: {w.h} vs {w2.h}")
    return orbifold_poincare(w2, g2) == mirror_image(w, orbifold_poincare(w, g))


def is_dual_pair(w: WeightSystem, w_star: WeightSystem) -> bool:
    exponent_data(w)
    exponent_data(w_star)
    return is_tms_dual(w, principal_group(w), w_star, trivial_group(w_star))


def realness_defect(chi: BiRational, r: float = 0.7, thetas: Sequence[float] = (0.3, 1.1, 2.0)) -> float:
    """Largest relative imaginary part of chi at (r e^{it}, r e^{-it})."""
    worst = 0.0
    for t in thetas:
        val = chi.evaluate(r * cmath.exp(1j * t), r * cmath.exp(-1j * t))
        worst = max(worst, abs(val.imag) / max(1.0, abs(val)))
    return worst
