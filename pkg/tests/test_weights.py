from fractions import Fraction
from itertools import permutations
from math import gcd, prod

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dualweights.errors import InvalidWeightsError, NotRegularError
from dualweights.weights import (
    WeightSystem,
    enumerate_regular,
    exponent_data,
    genus,
    is_regular,
    milnor_number_formula,
    pair_count,
    regular_by_root_count,
    signature,
)

T = sympy.symbols("T")


def sympy_chi(a, h):
    """Independent route: sympy rational-function cancellation."""
    expr = sympy.cancel(prod((1 - T ** (h - x)) / (1 - T**x) for x in a))
    num, den = sympy.fraction(expr)
    if sympy.Poly(den, T).degree() != 0:
        return None
    return [int(c) for c in sympy.Poly(sympy.expand(num / den), T).all_coeffs()[::-1]]


def test_is_regular_examples():
    a1 = is_regular(1, 1, 1, 2)
    assert a1.chi.coeffs == (1,) and a1.mu == 1 and a1.epsilon == 1 and a1.exponents == (1,)
    e12 = is_regular(6, 14, 21, 42)
    assert e12.mu == 12 and e12.epsilon == -1
    assert e12.exponents == (-1, 5, 11, 13, 17, 19, 23, 25, 29, 31, 37, 43)
    assert is_regular(2, 2, 3, 7) is None


@pytest.mark.parametrize("bad", [(0, 1, 1, 2), (2, 2, 2, 4), (1, 1, 3, 3), (-1, 1, 1, 2)])
def test_malformed_tuples_are_errors(bad):
    with pytest.raises(InvalidWeightsError):
        is_regular(*bad)


def test_not_regular_is_a_distinct_error():
    with pytest.raises(NotRegularError):
        exponent_data((2, 2, 3, 7))


def test_genus_examples():
    assert genus((6, 14, 21, 42)) == 0
    assert genus((1, 1, 1, 3)) == 1
    assert exponent_data((1, 1, 1, 3)).exponents == (0, 1, 1, 1, 2, 2, 2, 3)
    assert genus((1, 1, 1, 2)) == 0


def test_pair_count_examples():
    assert pair_count(6, 14, 42) == 2
    assert pair_count(1, 1, 3) == 4
    assert pair_count(2, 3, 1) == 0


def test_signature_examples():
    assert (signature((6, 14, 21, 42)).genus, signature((6, 14, 21, 42)).alphas) == (0, (2, 3, 7))
    assert signature((15, 10, 6, 30)).alphas == (2, 3, 5)
    s = signature((1, 1, 1, 3))
    assert (s.genus, s.alphas) == (1, ())
    assert str(signature((6, 14, 21, 42))) == "(0;2,3,7)"


def test_enumerate_examples():
    assert enumerate_regular(2) == [WeightSystem.of(1, 1, 1, 2)]
    h3 = enumerate_regular(3)
    assert WeightSystem.of(1, 1, 1, 3) in h3 and WeightSystem.of(1, 1, 2, 3) in h3
    assert WeightSystem.of(1, 2, 2, 3) not in h3
    assert WeightSystem.of(1, 2, 2, 4) in enumerate_regular(4)
    assert exponent_data((1, 2, 2, 4)).chi.coeffs == (1, 1, 1)


@pytest.mark.parametrize("h", range(2, 16))
def test_regularity_against_sympy_oracle(h):
    found = set()
    for a1 in range(1, h):
        for a2 in range(a1, h):
            for a3 in range(a2, h):
                if gcd(gcd(a1, a2), gcd(a3, h)) != 1:
                    continue
                oracle = sympy_chi((a1, a2, a3), h)
                data = is_regular(a1, a2, a3, h)
                assert (oracle is None) == (data is None), (a1, a2, a3, h)
                assert regular_by_root_count((a1, a2, a3), h) == (oracle is not None)
                if oracle is not None:
                    assert list(data.chi.coeffs) == oracle
                    found.add((a1, a2, a3))
    assert found == {w.weights for w in enumerate_regular(h)}


@pytest.mark.parametrize("h", range(2, 41))
def test_exponent_invariants_sweep(h):
    for w in enumerate_regular(h):
        d = exponent_data(w)
        m = d.exponents
        assert all(m[i] + m[-1 - i] == h for i in range(len(m)))
        assert d.mu == d.chi(1) == milnor_number_formula(w) == len(m)
        assert m[0] == d.epsilon and m[-1] == h - d.epsilon
        if genus(w) >= 1:
            assert d.epsilon <= 0, w


regular_systems = st.integers(2, 40).flatmap(lambda h: st.sampled_from(enumerate_regular(h)))


@given(regular_systems)
def test_signature_is_permutation_invariant(w):
    s = signature(w)
    assert all(x >= 2 for x in s.alphas)
    assert s.genus == exponent_data(w).exponents.count(0)
    for p in permutations(w.weights):
        assert signature(WeightSystem(p, w.h)) == s
        assert exponent_data(WeightSystem(p, w.h)) == exponent_data(w)


def test_weight_system_order_and_key():
    w = WeightSystem.of(21, 14, 6, 42)
    assert not w.is_canonical and w.canonical().weights == (6, 14, 21)
    assert w.key == "6,14,21;42" and w.epsilon == -1
    assert milnor_number_formula(w) == Fraction(12)
