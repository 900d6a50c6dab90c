import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metaplectic.characters import (
    Character,
    abs_char,
    conj_char,
    conj_char_direct,
    dual_central_identity,
    eta_char,
    from_zp,
    omega_set,
    primitive_root,
    twist_action,
    unramified,
)
from metaplectic.padic import PadicContext, PsiSpec, hilbert_symbol
from metaplectic.structure import CentralElement, LeviShape, z_t_reps
from metaplectic.symplectic import i_lambda

nonzero = st.fractions(min_value=-500, max_value=500, max_denominator=50).filter(lambda x: x != 0)


def test_primitive_roots():
    assert [primitive_root(p) for p in (3, 5, 7, 11)] == [2, 2, 3, 2]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@given(b=nonzero)
def test_eta_is_hilbert_symbol(p, b):
    for a in PadicContext(p).classes:
        assert eta_char(a.rep, p)(b) == hilbert_symbol(a, b, p)


@given(nonzero, nonzero)
def test_characters_are_multiplicative(a, b):
    chi = Character(7, 2, Fraction(1, 3), Fraction(1, 5))
    assert abs(chi(a * b) - chi(a) * chi(b)) < 1e-9 * max(1, abs(chi(a * b)))


def test_values_and_algebra():
    chi = unramified(5, Fraction(1, 4))
    assert chi(5) == 1j and chi.order == 4
    assert chi * chi.inverse() == Character(5)
    assert abs(abs_char(3, 1)(3) - 1 / 3) < 1e-15
    assert (chi ** 4) == Character(5)
    f = from_zp(5, complex(math.cos(1), math.sin(1)))
    assert f.is_unitary and not f.exact


def test_json_roundtrip():
    for chi in (eta_char(2, 3), abs_char(5, Fraction(1, 2)), Character(7, 3, Fraction(1, 3), Fraction(1, 6)),
                from_zp(5, 0.5 + 0.25j, 2)):
        data = json.loads(json.dumps(chi.to_json()))
        assert Character.from_json(data, chi.p) == chi
    assert eta_char(2, 3).to_json() == "eta:2"


@pytest.mark.parametrize("p,size", [(3, 4), (5, 4), (2, 8)])
def test_omega_set_sizes(p, size):
    psi = PsiSpec(PadicContext(p))
    odd = LeviShape.parse("1;1")
    even = LeviShape.parse("2;0")
    chi = unramified(p, Fraction(1, 3))
    assert len(omega_set([chi, chi], odd, psi, p)) == size
    assert len(omega_set([chi, chi], even, psi, p)) == 1


@pytest.mark.parametrize("p", [3, 5])
def test_twist_action_matches_group_law(p):
    ctx = PadicContext(p)
    psi = PsiSpec(ctx)
    t = LeviShape.parse("1,1;1")
    omega = omega_set([eta_char(ctx.nonresidue, p)] * 3, t, psi, ctx)[0]
    for a in ctx.classes:
        g = i_lambda(a.rep, t.n)
        for z in z_t_reps(t, ctx):
            assert abs(conj_char(omega, g)(z) - conj_char_direct(omega, g, z, ctx)) < 1e-12
    images = [twist_action(omega, a.rep) for a in ctx.classes]
    zs = z_t_reps(t, ctx)
    assert all(not images[i].agrees_with(images[j], zs) for i in range(4) for j in range(i))


def test_extensions_are_genuine():
    ctx = PadicContext(3)
    t = LeviShape.parse("1;0")
    for om in omega_set([unramified(3, Fraction(1, 5))] * 2, t, PsiSpec(ctx), ctx):
        z = CentralElement(t, (2,), 1, 1)
        assert abs(om(CentralElement(t, (2,), 1, -1)) + om(z)) < 1e-12


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_central_identity(p, n):
    chi = Character(p, 1, Fraction(1, 2), Fraction(1, 3))
    assert dual_central_identity(chi, PsiSpec(PadicContext(p)), n, p, samples=10)
