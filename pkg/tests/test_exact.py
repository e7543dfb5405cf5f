import cmath
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dualweights.exact import (
    BiLaurent,
    BiRational,
    CycloNumber,
    IntPolynomial,
    MultiPolynomial,
    UnitMismatchError,
    birational_eq,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    poly_exact_div,
    rank,
    rank_exact,
    rank_mod_p,
    substitute_ybar_inverse,
)
from dualweights.exact.intpoly import product
from dualweights.exact.snf import inverse_unimodular, matmul, smith_normal_form

T = sympy.symbols("T")


def omp(k):
    return IntPolynomial.one_minus_power(k)


def test_exact_div_examples():
    assert poly_exact_div(omp(2), omp(1)) == IntPolynomial([1, 1])
    num = omp(8) * omp(9)
    step = poly_exact_div(num, omp(4))
    got = poly_exact_div(step, omp(3))
    assert got == IntPolynomial([1, 0, 0, 0, 1]) * IntPolynomial([1, 0, 0, 1, 0, 0, 1])
    assert got * omp(4) * omp(3) == num
    assert poly_exact_div(omp(5), omp(2)) is None


int_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(IntPolynomial)


@given(int_polys, int_polys)
def test_exact_div_roundtrip(p, q):
    if q.is_zero():
        return
    assert poly_exact_div(p * q, q) == p


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(1) == IntPolynomial([-1, 1])
    assert cyclotomic_polynomial(2) == IntPolynomial([1, 1])
    assert cyclotomic_polynomial(6) == IntPolynomial([1, -1, 1])


@pytest.mark.parametrize("n", range(1, 121))
def test_cyclotomic_against_sympy(n):
    expected = sympy.Poly(sympy.cyclotomic_poly(n, T), T).all_coeffs()[::-1]
    assert cyclotomic_polynomial(n).coeffs == tuple(int(c) for c in expected)
    assert len(cyclotomic_polynomial(n).coeffs) - 1 == euler_phi(n)
    assert product([cyclotomic_polynomial(d) for d in divisors(n)]) == IntPolynomial.monomial(n) - IntPolynomial([1])


@pytest.mark.parametrize("n", range(1, 121))
def test_zeta_is_a_root_with_exact_order(n):
    z = CycloNumber.zeta(n)
    phi = cyclotomic_polynomial(n)
    acc = CycloNumber.zero(n)
    power = CycloNumber.one(n)
    for c in phi.coeffs:
        acc = acc + power * c
        power = power * z
    assert acc.is_zero()
    assert len(z.coords) == euler_phi(n)
    p = CycloNumber.one(n)
    for k in range(1, n + 1):
        p = p * z
        assert (p == CycloNumber.one(n)) == (k == n)


def cyclo(order):
    width = euler_phi(order)
    return st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=width, max_size=width).map(
        lambda cs: CycloNumber.from_fractions(order, cs)
    )


@given(st.sampled_from([3, 5, 7, 8, 12, 15]).flatmap(lambda n: st.tuples(cyclo(n), cyclo(n), cyclo(n))))
def test_cyclo_field_axioms(t):
    a, b, c = t
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CycloNumber.zero(a.order)
    if not a.is_zero():
        assert a * a.inverse() == CycloNumber.one(a.order)
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9


def q(k, unit=4, order=2, c=1):
    return BiLaurent.monomial(unit, order, k, k, c)


def one(unit=4, order=2):
    return BiLaurent.constant(unit, order)


def test_birational_eq_examples():
    x = BiRational(q(1))
    assert birational_eq(x, x)
    lhs = BiRational(one() - q(4), one() - q(2))
    assert birational_eq(lhs, BiRational(one() + q(2)))
    assert not birational_eq(BiRational(one() + q(1)), BiRational(one() - q(1)))
    with pytest.raises(UnitMismatchError):
        birational_eq(BiRational(one(4)), BiRational(one(6)))


def test_substitute_ybar_inverse_examples():
    f = BiRational(BiLaurent.monomial(4, 2, 2, 2))
    assert substitute_ybar_inverse(f) == BiRational(BiLaurent.monomial(4, 2, 2, -2))
    assert substitute_ybar_inverse(BiRational(one())) == BiRational(one())


laurents = st.dictionaries(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)), st.integers(-4, 4), max_size=5
).map(lambda d: BiLaurent(6, 3, d))


@given(laurents, laurents)
def test_bilaurent_ops_match_evaluation(a, b):
    rng = random.Random(0)
    for _ in range(3):
        y = cmath.rect(rng.uniform(0.5, 1.5), rng.uniform(-3, 3))
        yb = cmath.rect(rng.uniform(0.5, 1.5), rng.uniform(-3, 3))
        assert abs((a + b).evaluate(y, yb) - (a.evaluate(y, yb) + b.evaluate(y, yb))) < 1e-9
        assert abs((a * b).evaluate(y, yb) - a.evaluate(y, yb) * b.evaluate(y, yb)) < 1e-7 * (
            1 + abs(a.evaluate(y, yb) * b.evaluate(y, yb))
        )
    assert all(not c.is_zero() for c in (a * b).terms.values())
    f = BiRational(a)
    assert substitute_ybar_inverse(substitute_ybar_inverse(f)) == f


nonzero_laurents = laurents.filter(lambda x: not x.is_zero())


@given(laurents, nonzero_laurents, nonzero_laurents)
def test_birational_equality_is_an_equivalence(a, b, c):
    x = BiRational(a * c, b * c)
    y = BiRational(a, b)
    z = BiRational(a * b, b * b)
    assert x == x
    assert x == y and y == x
    assert y == z and x == z


def test_multipolynomial_basics():
    x = MultiPolynomial.variable(3, 0)
    y = MultiPolynomial.variable(3, 1)
    f = x**2 + y**3
    assert f.is_homogeneous((3, 2, 1))
    assert f.derivative(0) == x * 2
    assert (f * y).divide_exact(y) == f
    assert f.divide_exact(x) is None


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    sparse = [{j: v for j, v in enumerate(r) if v} for r in rows]
    expected = sympy.Matrix(rows).rank()
    assert rank(sparse) == expected
    assert rank_exact(sparse) == expected
    assert rank_mod_p(sparse) <= expected


def test_rank_falls_back_when_mod_p_is_not_conclusive():
    p = (1 << 61) - 1
    rows = [{0: 1, 1: 1}, {0: 1, 1: 1 + p}]
    assert rank_mod_p(rows) == 1
    assert rank(rows) == 2


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(matrices)
def test_smith_normal_form_against_sympy(a):
    u, d, v = smith_normal_form(a)
    assert matmul(matmul(u, a), v) == d
    inverse_unimodular(u)
    inverse_unimodular(v)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    s = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    expected = sorted(abs(int(s[i, i])) for i in range(min(s.shape)))
    assert sorted(diag) == expected
