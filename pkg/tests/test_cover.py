import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metaplectic.cover import (
    CocyclePath,
    CoverElement,
    cocycle_gsp,
    cocycle_sp,
    conj_by,
    conj_by_product,
    cover_inverse,
    cover_mul,
    inverse_sign,
    kubota_cocycle,
)
from metaplectic.errors import ConjugatorNotOmegaZero, UnsupportedCocyclePath
from metaplectic.symplectic import (
    g_one,
    i_lambda,
    j_element,
    make_gsp,
    random_gsp,
    random_omega_zero,
    random_sp,
    siegel_unipotent,
    lower_unipotent,
)

seeds = st.integers(0, 10**6)
primes = st.sampled_from([2, 3, 5, 7])


def _cocycle(g, h, p):
    return cocycle_gsp(g, h, p)[0]


@given(seeds, primes)
def test_n1_rule_matches_kubota(seed, p):
    rng = random.Random(seed)
    g, h = random_sp(1, rng=rng), random_sp(1, rng=rng)
    assert cocycle_sp(g, h, p)[0] == kubota_cocycle(g, h, p)


@given(seeds, primes)
def test_gsp2_cocycle_identity(seed, p):
    rng = random.Random(seed)
    g, h, k = (random_gsp(1, rng=rng) for _ in range(3))
    assert _cocycle(g, h, p) * _cocycle(g @ h, k, p) == _cocycle(g, h @ k, p) * _cocycle(h, k, p)


@given(seeds, st.sampled_from([2, 3]), primes)
def test_omega_zero_triples(seed, n, p):
    rng = random.Random(seed)
    g = random_omega_zero(n, rng)
    h = random_sp(n, rng=rng)
    k = random_omega_zero(n, rng)
    lhs = cocycle_sp(g, h, p)[0] * cocycle_sp(g @ h, k, p)[0]
    rhs = cocycle_sp(g, h @ k, p)[0] * cocycle_sp(h, k, p)[0]
    assert lhs == rhs


def test_paths_and_frozen_values():
    J = j_element(1)
    # Frozen from kubota_cocycle.
    assert cocycle_sp(J, J, 2) == (1, CocyclePath.KUBOTA_N1)
    a = make_gsp([[0, 1], [-1, 3]])
    b = make_gsp([[0, 1], [-1, 2]])
    assert cocycle_sp(a, b, 3) == (-1, CocyclePath.KUBOTA_N1)
    assert cocycle_sp(a, b, 2) == (-1, CocyclePath.KUBOTA_N1)
    assert cocycle_sp(J, J.inverse(), 3)[1] is CocyclePath.INVERSE_PAIR
    u = siegel_unipotent([[1]])
    assert cocycle_sp(u, J, 3)[1] is CocyclePath.OMEGA_ZERO_LEFT
    assert cocycle_sp(J, u, 3)[1] is CocyclePath.OMEGA_ZERO_RIGHT
    s = make_gsp([[1, 2], [0, 1]])
    t = make_gsp([[0, 3], [Fraction(-1, 3), 0]])
    prod = cover_mul(CoverElement(s, -1), CoverElement(t, 1), 3)
    assert prod.eps == -1 and prod.path is CocyclePath.OMEGA_ZERO_LEFT


def test_unsupported_big_cell_pair():
    a = lower_unipotent([[1, 0], [0, 1]])
    b = lower_unipotent([[2, 1], [1, 3]])
    with pytest.raises(UnsupportedCocyclePath):
        cocycle_sp(a, b, 3)


@given(seeds, st.sampled_from([1, 2, 3]), primes)
def test_inverse(seed, n, p):
    rng = random.Random(seed)
    g = random_gsp(n, rng=rng)
    assert inverse_sign(g, p) == _cocycle(g, g.inverse(), p)
    s = CoverElement(g, rng.choice([1, -1]))
    one = cover_mul(s, cover_inverse(s, p), p)
    assert one.g.is_identity and one.eps == 1


@given(seeds, st.sampled_from([1, 2, 3]), primes)
def test_i_lambda_has_trivial_cocycle(seed, n, p):
    rng = random.Random(seed)
    y = Fraction(rng.choice([-6, -3, -1, 2, 3, 5, 7, 10]), rng.randint(1, 5))
    assert _cocycle(i_lambda(y, n), random_gsp(n, rng=rng), p) == 1


@given(seeds, primes)
def test_conjugation_sign_matches_group_law(seed, p):
    rng = random.Random(seed)
    lam = Fraction(rng.choice([-5, -2, -1, 1, 3, 6, 7]), rng.randint(1, 4))
    g = random_omega_zero(1, rng, lam)
    t = CoverElement(random_gsp(1, rng=rng), rng.choice([1, -1]))
    a, b = conj_by(g, t, p), conj_by_product(CoverElement(g, 1), t, p)
    assert a.g == b.g and a.eps == b.eps


def test_conjugator_must_be_parabolic():
    with pytest.raises(ConjugatorNotOmegaZero):
        conj_by(j_element(1), CoverElement(j_element(1), 1), 3)
