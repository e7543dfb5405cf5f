"""The grading group L(A) = Z^r / <a_i X_i - a_j X_j> and the element omega_W."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from .duality import DualTypeData
from .errors import InvalidWeightsError, VerificationError
from .exact.snf import inverse_unimodular, matmul, smith_normal_form
from .report import VerificationReport
from .weights import WeightSystem


@dataclass(frozen=True, eq=False)
class GradingLattice:
    """L(A) for A = (alpha_1, ..., alpha_r) with its Smith normal form data.

    In the basis y = x V the relations become d_i y_i = 0 for i < r; the last
    coordinate is free and oriented so that it equals the degree.
    """

    alphas: tuple[int, ...]
    relations: tuple[tuple[int, ...], ...] = field(repr=False)
    u: tuple[tuple[int, ...], ...] = field(repr=False)
    v: tuple[tuple[int, ...], ...] = field(repr=False)
    invariant_factors: tuple[int, ...] = ()

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def alpha(self) -> int:
        return lcm(*self.alphas)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def free_rank(self) -> int:
        return self.r - sum(1 for d in self.invariant_factors if d)

    def degree_vector(self) -> tuple[int, ...]:
        return tuple(self.alpha // a for a in self.alphas)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradingLattice) and self.alphas == other.alphas

    def __hash__(self) -> int:
        return hash(self.alphas)

    def element(self, coords: Sequence[int]) -> "LatticeElement":
        if len(coords) != self.r:
            raise ValueError(f"expected {self.r} coordinates, got {len(coords)}")
        return LatticeElement(self, tuple(int(c) for c in coords))

    def zero(self) -> "LatticeElement":
        return self.element([0] * self.r)

    def x(self, i: int) -> "LatticeElement":
        """The generator X_(i+1)."""
        return self.element([int(j == i) for j in range(self.r)])

    def c(self) -> "LatticeElement":
        return self.x(0) * self.alphas[0]

    def canonical(self, coords: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        y = [sum(c * self.v[i][j] for i, c in enumerate(coords)) for j in range(self.r)]
        res = tuple(y[i] % d for i, d in enumerate(self.invariant_factors) if d > 1)
        return y[-1], res


def build_lattice(alphas: Sequence[int]) -> GradingLattice:
    return _build(tuple(int(a) for a in alphas))


@lru_cache(maxsize=4096)
def _build(alphas: tuple[int, ...]) -> GradingLattice:
    if not alphas or min(alphas) < 1:
        raise ValueError(f"isotropy orders must be positive, got {alphas}")
    r = len(alphas)
    rel = []
    for i in range(r - 1):
        row = [0] * r
        row[i], row[i + 1] = alphas[i], -alphas[i + 1]
        rel.append(row)
    if rel:
        u, d, v = smith_normal_form(rel)
        factors = [d[i][i] for i in range(r - 1)]
        if matmul(matmul(u, rel), v) != d:
            raise VerificationError("Smith normal form transform check failed")
    else:
        u, v, factors = [], [[1]], []
    if any(f == 0 for f in factors):
        raise VerificationError(f"relations of {alphas} are not independent")
    m = lcm(*alphas)
    g = [[m // a] for a in alphas]
    gy = matmul(inverse_unimodular(v), g)
    if any(row[0] for row in gy[:-1]) or abs(gy[-1][0]) != 1:
        raise VerificationError(f"degree map is not the free coordinate for {alphas}: {gy}")
    if gy[-1][0] < 0:
        for row in v:
            row[-1] = -row[-1]
    return GradingLattice(
        alphas,
        tuple(map(tuple, rel)),
        tuple(map(tuple, u)),
        tuple(map(tuple, v)),
        tuple(factors),
    )


@dataclass(frozen=True, eq=False)
class LatticeElement:
    lattice: GradingLattice
    coords: tuple[int, ...]

    @property
    def canonical(self) -> tuple[int, tuple[int, ...]]:
        return self.lattice.canonical(self.coords)

    @property
    def degree(self) -> int:
        return sum(c * g for c, g in zip(self.coords, self.lattice.degree_vector()))

    def _same(self, other: "LatticeElement") -> None:
        if self.lattice != other.lattice:
            raise ValueError("elements of different lattices")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeElement):
            return NotImplemented
        return self.lattice == other.lattice and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.lattice.alphas, self.canonical))

    def __add__(self, other: "LatticeElement") -> "LatticeElement":
        self._same(other)
        return LatticeElement(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeElement":
        return LatticeElement(self.lattice, tuple(-a for a in self.coords))

    def __sub__(self, other: "LatticeElement") -> "LatticeElement":
        return self + (-other)

    def __mul__(self, k: int) -> "LatticeElement":
        return LatticeElement(self.lattice, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LatticeElement({self.coords} ~ {self.canonical})"


def degree(lattice: GradingLattice, v: LatticeElement) -> int:
    return v.degree


def dualizing_element(lattice: GradingLattice) -> LatticeElement:
    """omega_A = (r-2) c - sum X_i."""
    out = lattice.c() * (lattice.r - 2)
    for i in range(lattice.r):
        out = out - lattice.x(i)
    return out


def principal_generators(t: DualTypeData) -> tuple[LatticeElement, LatticeElement, LatticeElement]:
    """l1, l2, l3 in family coordinate order (the exponent vectors of x, y, z)."""
    lat = build_lattice(t.family.alphas)
    if len(t.family.gens) != 3:
        raise ValueError(f"invalid type data {t}")
    return tuple(lat.element(g) for g in t.family.gens)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def bezout(a: Sequence[int]) -> tuple[int, int, int]:
    """(k1, k2, k3) with sum k_i a_i = gcd(a)."""
    g12, x, y = extended_gcd(a[0], a[1])
    g, s, t = extended_gcd(g12, a[2])
    return (s * x, s * y, t)


@dataclass(frozen=True)
class PrincipalData:
    lattice: GradingLattice
    l: tuple[LatticeElement, LatticeElement, LatticeElement]
    omega: LatticeElement
    bezout: tuple[int, int, int]
    letter_weights: tuple[int, int, int]
    epsilon: int
    h: int
    report: VerificationReport

    @property
    def l1(self) -> LatticeElement:
        return self.l[0]

    @property
    def l2(self) -> LatticeElement:
        return self.l[1]

    @property
    def l3(self) -> LatticeElement:
        return self.l[2]

    @property
    def omega_a(self) -> LatticeElement:
        return dualizing_element(self.lattice)


def letter_weights(t: DualTypeData) -> tuple[int, int, int]:
    """Weight carried by each of x, y, z: deg(l_i) / deg(omega).

    deg(omega) = -deg(omega_A) / eps, so the weights follow from the lattice
    alone without trusting the printed order of the family weights.
    """
    lat = build_lattice(t.family.alphas)
    eps = sum(t.family.weights) - t.h
    dw = dualizing_element(lat).degree
    out = []
    for g in principal_generators(t):
        q = Fraction(-eps * g.degree, dw)
        if q.denominator != 1 or q <= 0:
            raise VerificationError(f"generator {g.coords} has non-integral weight {q} in {t}")
        out.append(int(q))
    return tuple(out)


def omega(w: WeightSystem, t: DualTypeData, k: Optional[Sequence[int]] = None) -> PrincipalData:
    """The unique omega_W with a_i omega_W = l_i and -eps omega_W = omega_A.

    ``k`` overrides the Bezout triple (any triple with sum k_i a_i = 1 must
    give the same element).
    """
    if not w.same_system(WeightSystem(t.family_weights, t.h)):
        raise ValueError(f"{w} does not match {t}")
    a = letter_weights(t)
    if sorted(a) != sorted(w.weights):
        raise VerificationError(f"letter weights {a} are not a permutation of {w.weights}")
    if gcd(*a) != 1:
        raise InvalidWeightsError(f"gcd{tuple(a)} != 1")
    k = tuple(k) if k is not None else bezout(a)
    if sum(ki * ai for ki, ai in zip(k, a)) != 1:
        raise ValueError(f"{k} is not a Bezout triple for {a}")
    lat = build_lattice(t.family.alphas)
    l = principal_generators(t)
    eps = w.epsilon
    wa = dualizing_element(lat)
    om = lat.zero()
    for ki, li in zip(k, l):
        om = om + li * ki
    rep = VerificationReport(f"omega for {w.key} ({t.type_tag} {t.params})")
    for i in range(3):
        rep.add(f"a{i + 1}*omega = l{i + 1}", om * a[i] == l[i], f"{(om * a[i]).canonical} vs {l[i].canonical}")
    rep.add("-eps*omega = omega_A", om * (-eps) == wa, f"{(om * -eps).canonical} vs {wa.canonical}")
    for i in range(3):
        rep.add(f"a{i + 1}*omega_A = -eps*l{i + 1}", wa * a[i] == l[i] * (-eps))
    for i in range(3):
        for j in range(i + 1, 3):
            rep.add(f"a{i + 1}*l{j + 1} = a{j + 1}*l{i + 1}", l[j] * a[i] == l[i] * a[j])
    if not rep.passed:
        raise VerificationError(rep.summary())
    return PrincipalData(lat, l, om, k, a, eps, w.h, rep)


def degree_of_omega_check(w: WeightSystem, p: PrincipalData) -> bool:
    """deg omega = -deg(omega_A)/eps = h * alpha / (a1 a2 a3)."""
    d = Fraction(p.omega.degree)
    a1, a2, a3 = w.weights
    return d == Fraction(-p.omega_a.degree, p.epsilon) == Fraction(w.h * p.lattice.alpha, a1 * a2 * a3)
