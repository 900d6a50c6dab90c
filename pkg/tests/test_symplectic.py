import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metaplectic import matrices as mx
from metaplectic.cover import kubota_x
from metaplectic.errors import NotSimilitude, ShapeMismatch
from metaplectic.symplectic import (
    bruhat_factor,
    cell_rank,
    g_one,
    i_lambda,
    in_omega_zero,
    j_element,
    make_gsp,
    random_gsp,
    random_omega_zero,
    random_sp,
    siegel_levi,
    tau,
    torus,
    x_of,
)

seeds = st.integers(0, 10**6)
primes = st.sampled_from([2, 3, 5, 7])


def test_make_gsp_and_similitude():
    g = make_gsp([[2, 0], [0, 3]])
    assert g.lam == 6 and not g.is_sp
    assert g_one(g).is_sp
    with pytest.raises(NotSimilitude):
        make_gsp([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(ShapeMismatch):
        make_gsp([[1, 0], [0, 1]], n=2)


def test_weyl_elements():
    # Frozen: x(J_2n) = (-1)^n as a class, and J has full cell rank.
    for n in (1, 2, 3):
        assert cell_rank(j_element(n)) == n
        assert x_of(j_element(n), 3) == x_of(torus([1] * n), 3) * (-1) ** n
        assert x_of(tau(n, n), 3).rep == (2 if n % 2 else 1)
        assert x_of(tau(n, n), 5).is_square  # -1 is a square at 5
    assert x_of(j_element(1), 3).rep == 2  # -1 is the non-residue class at 3


def test_omega_zero_value_is_det():
    a = [[2, 1], [0, 3]]
    assert x_of(siegel_levi(a), 5) == x_of(siegel_levi([[6, 0], [0, 1]]), 5)
    assert x_of(siegel_levi(a), 5).rep == 1  # 6 = 1 mod 5


@given(seeds, primes)
def test_kubota_agreement(seed, p):
    g = random_sp(1, seed=seed)
    assert x_of(g, p) == kubota_x(g, p)


@given(seeds, st.sampled_from([2, 3]), primes)
def test_factorization_is_valid_and_x_independent(seed, n, p):
    rng = random.Random(seed)
    g = random_sp(n, rng=rng)
    fac = bruhat_factor(g, rng)
    assert fac.product().m == g.m
    assert in_omega_zero(fac.p1) and in_omega_zero(fac.p2)
    assert fac.j == cell_rank(g)
    assert x_of(g, p, rng=rng) == x_of(g, p)


@given(seeds, st.sampled_from([2, 3]), primes)
def test_x_map_identities(seed, n, p):
    rng = random.Random(seed)
    g = random_sp(n, rng=rng)
    j = cell_rank(g)
    p1, p2 = random_omega_zero(n, rng), random_omega_zero(n, rng)
    assert x_of(p1 @ g @ p2, p) == x_of(p1, p) * x_of(g, p) * x_of(p2, p)
    assert x_of(g.inverse(), p) == x_of(g, p) * (-1) ** j
    lam = Fraction(rng.choice([2, 3, 5, 7, -1, 6]), rng.randint(1, 4))
    assert x_of(g.conj(lam), p) == x_of(g, p) * lam ** j


@given(seeds)
def test_gsp_group_law(seed):
    rng = random.Random(seed)
    g, h = random_gsp(2, rng=rng), random_gsp(2, rng=rng)
    assert (g @ h).lam == g.lam * h.lam
    assert (g @ g.inverse()).is_identity
    assert i_lambda(g.lam, 2) @ g_one(g) == g


def test_matrix_helpers():
    m = mx.mat([[1, 2], [3, 4]])
    assert mx.det(m) == -2
    assert mx.matmul(m, mx.inverse(m)) == mx.identity(2)
    assert mx.rank(mx.mat([[1, 2], [2, 4]])) == 1
