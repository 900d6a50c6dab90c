import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from metaplectic.characters import Character
from metaplectic.cover import CoverElement, cover_mul
from metaplectic.padic import PadicContext, PsiSpec
from metaplectic.symplectic import torus
from metaplectic.torus import (
    GenuineTorusChar,
    commutator_check,
    eigen_project,
    induce,
    induction_roundtrip,
    random_torus_cover,
    restrict_decompose,
)


def _rho(p, n, seed=0):
    rng = random.Random(seed)
    xi = [Character(p, rng.randrange(p - 1 if p > 2 else 4), Fraction(rng.randint(-3, 3), 2),
                    Fraction(rng.randint(0, 7), 8)) for _ in range(n)]
    return induce(GenuineTorusChar(xi, PsiSpec(PadicContext(p)), Character(p, 1)))


@pytest.mark.parametrize("p,dim", [(2, 8), (3, 4), (5, 4)])
def test_dimension_and_genuine(p, dim):
    rho = _rho(p, 1)
    assert rho.dim == dim
    one = CoverElement(torus([1]), 1)
    assert np.allclose(rho(one), np.eye(dim))
    assert np.allclose(rho(CoverElement(torus([1]), -1)), -np.eye(dim))


@given(st.integers(0, 10**6), st.sampled_from([3, 5]), st.sampled_from([1, 2]))
def test_homomorphism(seed, p, n):
    rho = _rho(p, n)
    rng = random.Random(seed)
    s, t = random_torus_cover(n, rng), random_torus_cover(n, rng)
    assert np.abs(rho(cover_mul(s, t, p)) - rho(s) @ rho(t)).max() < 1e-10


@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]))
def test_commutator_signs(seed, p):
    rng = random.Random(seed)
    assert commutator_check(random_torus_cover(2, rng), random_torus_cover(2, rng), p)


@pytest.mark.parametrize("p", [3, 5])
def test_restriction_multiplicity_one(p):
    rho = _rho(p, 2, seed=3)
    dec = restrict_decompose(rho)
    assert [m for _, m in dec] == [1] * rho.dim
    projs = [eigen_project(rho, om) for om, _ in dec]
    for i, P in enumerate(projs):
        assert np.allclose(P @ P, P)
        for j, Q in enumerate(projs):
            if i != j:
                assert np.allclose(P @ Q, 0)
    assert np.allclose(sum(projs), np.eye(rho.dim))


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (2, 1)])
def test_induction_roundtrip(p, n):
    rho = _rho(p, n, seed=11)
    for om, _ in restrict_decompose(rho)[:2]:
        assert induction_roundtrip(rho, om)


def test_base_character_rejects_nonsquare_similitude():
    rho = _rho(3, 1)
    with pytest.raises(ValueError):
        rho.base(CoverElement(torus([1], 2), 1))
