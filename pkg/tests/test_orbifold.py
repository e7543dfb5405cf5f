import random
from fractions import Fraction

import pytest

from dualweights.duality import classify, dual_of
from dualweights.exact import BiLaurent, BiRational, UnitMismatchError
from dualweights.orbifold import (
    DiagonalGroup,
    c_hat_units,
    generated_group,
    is_dual_pair,
    is_tms_dual,
    mirror_image,
    orbifold_poincare,
    orbifold_poincare_direct,
    principal_group,
    realness_defect,
    restriction_identity,
    trivial_group,
)
from dualweights.weights import WeightSystem, enumerate_regular

A1 = WeightSystem.of(1, 1, 1, 2)
E8 = WeightSystem.of(15, 10, 6, 30)
E12 = WeightSystem.of(6, 14, 21, 42)


def const(w, c):
    return BiRational(BiLaurent.constant(2 * w.h, w.h, Fraction(c)))


def test_principal_group_examples():
    g = principal_group(A1)
    assert set(g.elements) == {(0, 0, 0), (1, 1, 1)} and g.order == 2
    g = principal_group(E12)
    assert g.order == 42 and (6, 14, 21) in g.elements
    assert principal_group(E8).order == 30


def test_group_invariants():
    g = generated_group(12, [(3, 4, 6), (6, 0, 0)])
    assert (0, 0, 0) in g.elements
    assert 12**3 % g.order == 0
    s = set(g.elements)
    assert all(tuple((x + y) % 12 for x, y in zip(a, b)) in s for a in s for b in s)
    with pytest.raises(ValueError):
        DiagonalGroup(4, ((0, 0, 0), (1, 0, 0)))


def test_group_rejects_unliftable_numerators():
    w = WeightSystem.of(3, 4, 6, 12)
    with pytest.raises(ValueError):
        orbifold_poincare(w, generated_group(12, [(1, 0, 0)]))


def test_hand_values():
    assert orbifold_poincare(A1, trivial_group(A1)) == const(A1, 1)
    assert orbifold_poincare(A1, principal_group(A1)) == const(A1, -1)
    assert orbifold_poincare_direct(A1, principal_group(A1)) == const(A1, -1)
    assert c_hat_units(A1) == 0


def test_trivial_group_gives_chi_w():
    chi = orbifold_poincare(E8, trivial_group(E8))
    # chi_E8(T) with T = (y ybar)^(1/30), i.e. key (2k, 2k) in unit 60
    coeffs = [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]
    from dualweights.weights import exponent_data

    assert list(exponent_data(E8).chi.coeffs) == coeffs
    expected = BiRational(BiLaurent(60, 30, {(2 * k, 2 * k): c for k, c in enumerate(coeffs) if c}))
    assert chi == expected


@pytest.mark.parametrize("h", range(2, 21))
def test_restriction_identity_sweep(h):
    for w in enumerate_regular(h):
        assert restriction_identity(w), w


def test_tms_examples():
    assert is_tms_dual(A1, principal_group(A1), A1, trivial_group(A1))
    assert is_tms_dual(E12, principal_group(E12), E12, trivial_group(E12))
    e8 = WeightSystem.of(6, 10, 15, 30)
    with pytest.raises(UnitMismatchError):
        is_tms_dual(e8, principal_group(e8), E12, trivial_group(E12))
    # same h but not dual
    other = WeightSystem.of(1, 20, 21, 42)
    assert not is_tms_dual(E12, principal_group(E12), other, trivial_group(other))


def test_dual_pair_examples():
    assert is_dual_pair(A1, A1)
    assert is_dual_pair(E12, E12)
    assert is_dual_pair(WeightSystem.of(3, 8, 12, 24), WeightSystem.of(6, 8, 9, 24))
    assert not is_dual_pair(WeightSystem.of(3, 8, 12, 24), WeightSystem.of(3, 8, 12, 24))


SMALL = [w for h in range(2, 10) for w in enumerate_regular(h)]


@pytest.mark.parametrize("w", SMALL, ids=str)
def test_fast_path_matches_direct_oracle(w):
    for g in (trivial_group(w), principal_group(w)):
        assert orbifold_poincare(w, g) == orbifold_poincare_direct(w, g)


def test_fast_path_matches_direct_oracle_on_other_groups():
    w = WeightSystem.of(2, 3, 4, 8)
    for gens in ([(2, 0, 4)], [(0, 0, 4)], [(2, 3, 4), (0, 0, 4)]):
        g = generated_group(8, gens)
        assert orbifold_poincare(w, g) == orbifold_poincare_direct(w, g)


@pytest.mark.parametrize("w", [A1, E8, WeightSystem.of(3, 4, 6, 12), WeightSystem.of(3, 4, 5, 13)], ids=str)
def test_values_are_real_on_conjugate_pairs(w):
    for g in (trivial_group(w), principal_group(w)):
        assert realness_defect(orbifold_poincare(w, g)) < 1e-9


def test_alpha_order_does_not_matter():
    w = WeightSystem.of(3, 4, 6, 12)
    g = principal_group(w)
    shuffled = list(g.elements)
    random.Random(1).shuffle(shuffled)
    g2 = DiagonalGroup(12, tuple(shuffled), g.generators)
    assert orbifold_poincare(w, g) == orbifold_poincare(w, g2)
    assert orbifold_poincare_direct(w, g2) == orbifold_poincare(w, g)


def test_mirror_image_is_an_involution():
    # -ybar^c (-ybar^-c f(y, ybar)) = f
    w = WeightSystem.of(2, 2, 3, 6)
    chi = orbifold_poincare(w, principal_group(w))
    assert mirror_image(w, mirror_image(w, chi)) == chi
    assert mirror_image(w, chi) != chi


@pytest.mark.parametrize("h", range(2, 19))
def test_dual_pairs_small_h(h):
    for w in enumerate_regular(h):
        if classify(w):
            assert is_dual_pair(w, dual_of(w)), w
