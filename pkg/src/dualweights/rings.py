"""Graded pieces of R_A = k[X1, X2, X3]/(X1^a1 + X2^a2 + X3^a3) and of R_W inside it."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .duality import DualTypeData, classify, dual_of, primary_classification
from .errors import NotDualTypeError, VerificationError
from .exact import IntPolynomial, MultiPolynomial, fermat_relation, power_series, rank, reduce_fermat
from .exact.multipoly import reduce_monomial
from .lattice import GradingLattice, LatticeElement, letter_weights, omega
from .weights import WeightSystem, exponent_data, signature


def graded_dim(lattice: GradingLattice, v: LatticeElement) -> int:
    """Number of normal-form monomials X^b (b1 < alpha_1) of class v."""
    return len(normal_monomials(lattice, v))


def normal_monomials(lattice: GradingLattice, v: LatticeElement) -> list[tuple[int, int, int]]:
    if lattice.r != 3:
        raise ValueError("graded pieces are only supported for three isotropy orders")
    d = v.degree
    if d < 0:
        return []
    g1, g2, g3 = lattice.degree_vector()
    target = v.canonical
    out = []
    for b1 in range(min(lattice.alphas[0] - 1, d // g1) + 1):
        rest1 = d - b1 * g1
        for b2 in range(rest1 // g2 + 1):
            rest2 = rest1 - b2 * g2
            if rest2 % g3:
                continue
            b = (b1, b2, rest2 // g3)
            if lattice.canonical(b) == target:
                out.append(b)
    return out


def hilbert_target(w: WeightSystem, n: int) -> list[int]:
    """Coefficients 0..n of (1 - T^h) / prod (1 - T^a_i)."""
    return power_series(IntPolynomial.one_minus_power(w.h), w.weights, n + 1)


@dataclass(frozen=True)
class RingPresentation:
    alphas: tuple[int, int, int]
    relation: MultiPolynomial
    gens: tuple[tuple[int, int, int], ...]
    fw: MultiPolynomial
    letter_degrees: tuple[int, int, int]
    h: int


def presentation(t: DualTypeData) -> RingPresentation:
    fam = t.family
    return RingPresentation(
        tuple(fam.alphas), fermat_relation(fam.alphas), fam.gens, fam.fw, letter_weights(t), fam.h
    )


def relation_factor(p: RingPresentation) -> Optional[tuple[int, ...]]:
    """Exponent of the monomial m with f_W(x, y, z) = m * relation, if any."""
    image = p.fw.substitute_monomials(p.gens)
    q = image.divide_exact(p.relation)
    if q is None or len(q.terms) != 1:
        return None
    (e, c), = q.terms.items()
    return e if c == 1 else None


def relation_check(p: RingPresentation) -> bool:
    """f_W at the generator images reduces to 0 modulo the relation and is a monomial multiple of it."""
    image = p.fw.substitute_monomials(p.gens)
    if not reduce_fermat(image, p.alphas).is_zero():
        return False
    if not p.fw.is_homogeneous(p.letter_degrees) or p.fw.degrees(p.letter_degrees) != {p.h}:
        return False
    return relation_factor(p) is not None


def letter_monomials(degrees: Sequence[int], d: int) -> list[tuple[int, int, int]]:
    a, b, c = degrees
    out = []
    if d < 0:
        return out
    for i in range(d // a + 1):
        for j in range((d - i * a) // b + 1):
            rest = d - i * a - j * b
            if rest % c == 0:
                out.append((i, j, rest // c))
    return out


def _reduced_image(p: RingPresentation, mono: tuple[int, int, int], pivot: int) -> dict:
    e = [sum(k * g[v] for k, g in zip(mono, p.gens)) for v in range(3)]
    row: dict = defaultdict(int)
    for exp, c in reduce_monomial(e, p.alphas, pivot):
        row[exp] += c
    return {k: v for k, v in row.items() if v}


@dataclass
class TheoremReport:
    max_degree: int
    dim_matches: list[bool] = field(default_factory=list)
    relation_ok: bool = False
    surjective_ok: list[bool] = field(default_factory=list)
    kernel_ok: list[bool] = field(default_factory=list)
    negative_ok: bool = False
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.relation_ok
            and self.negative_ok
            and all(self.dim_matches)
            and all(self.surjective_ok)
            and all(self.kernel_ok)
            and len(self.dim_matches) == self.max_degree + 1
        )

    def to_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "passed": self.passed,
            "relation_ok": self.relation_ok,
            "negative_ok": self.negative_ok,
            "dim_matches": self.dim_matches,
            "surjective_ok": self.surjective_ok,
            "kernel_ok": self.kernel_ok,
            "witnesses": self.witnesses,
        }


def verify_theorem_i(w: WeightSystem, t: Optional[DualTypeData] = None, n: Optional[int] = None) -> TheoremReport:
    """Check R_W = k[x, y, z]/(f_W) degree by degree up to n (default 2h).

    For each d: the graded piece of R_A at d*omega_W has the Hilbert-series
    dimension, the letter monomials of degree d span it, and the kernel is
    exactly f_W times the letter monomials of degree d - h.
    """
    if t is None:
        matches = classify(w)
        if not matches:
            raise NotDualTypeError(f"{w} is not of dual type")
        t = matches[0]
    n = 2 * w.h if n is None else n
    pd = omega(w, t)
    p = presentation(t)
    rep = TheoremReport(max_degree=n)
    rep.relation_ok = relation_check(p)
    if not rep.relation_ok:
        rep.witnesses.append("f_W does not vanish on the generator images")
    target = hilbert_target(w, n)
    # any variable may carry the normal form; the largest alpha keeps rows short
    pivot = max(range(3), key=lambda i: p.alphas[i])
    rep.negative_ok = pd.omega.degree > 0 and all(
        graded_dim(pd.lattice, pd.omega * d) == 0 for d in range(-w.h, 0)
    )
    for d in range(n + 1):
        v = pd.omega * d
        dim = graded_dim(pd.lattice, v)
        rep.dim_matches.append(dim == target[d])
        monos = letter_monomials(p.letter_degrees, d)
        rk = rank(_reduced_image(p, m, pivot) for m in monos) if monos else 0
        rep.surjective_ok.append(rk == target[d])
        rep.kernel_ok.append(len(monos) - rk == len(letter_monomials(p.letter_degrees, d - w.h)))
        if not (rep.dim_matches[-1] and rep.surjective_ok[-1] and rep.kernel_ok[-1]):
            rep.witnesses.append(f"d={d}: dim={dim} target={target[d]} rank={rk} monomials={len(monos)}")
    return rep


def jacobian_dims(fw: MultiPolynomial, degrees: Sequence[int], h: int, top: int) -> list[int]:
    """dim of k[x, y, z]/(df/dx, df/dy, df/dz) in degrees 0..top."""
    partials = [fw.derivative(i) for i in range(3)]
    out = []
    for d in range(top + 1):
        monos = letter_monomials(degrees, d)
        rows = []
        for i, g in enumerate(partials):
            if g.is_zero():
                continue
            for m in letter_monomials(degrees, d - (h - degrees[i])):
                prod = g * MultiPolynomial.monomial(m)
                rows.append(dict(prod.terms))
        out.append(len(monos) - (rank(rows) if rows else 0))
    return out


@dataclass
class MilnorReport:
    dims: list[int]
    expected: list[int]
    total: int
    passed: bool


def milnor_report(p: RingPresentation, w: WeightSystem) -> MilnorReport:
    """Graded Milnor algebra dims vs chi_W, plus a vanishing window of length max(a_i)."""
    ed = exponent_data(w)
    top = w.h - 2 * ed.epsilon
    window = top + max(w.weights)
    dims = jacobian_dims(p.fw, p.letter_degrees, w.h, window)
    expected = [ed.chi[d] for d in range(window + 1)]
    return MilnorReport(dims, expected, sum(dims), dims == expected and sum(dims) == ed.mu)


def milnor_check(p: RingPresentation, w: WeightSystem) -> bool:
    return milnor_report(p, w).passed


def exceptional_length(w: WeightSystem) -> int:
    """Length of the exceptional collection counted through the semi-orthogonal decomposition."""
    primary_classification(w)
    mu_star = exponent_data(dual_of(w)).mu
    eps = w.epsilon
    if eps < 0:
        n = -eps + 2 + sum(a - 1 for a in signature(w).alphas)
    else:
        n = mu_star
    if n != mu_star:
        raise VerificationError(f"exceptional length {n} != mu of the dual {mu_star} for {w}")
    return n
