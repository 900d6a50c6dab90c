import pytest

from metaplectic.cover import cover_mul
from metaplectic.errors import ShapeMismatch
from metaplectic.padic import PadicContext
from metaplectic.structure import (
    CentralElement,
    LeviShape,
    LeviType,
    center_image,
    center_mul,
    levi_element,
    levi_type,
    noncommuting_witness,
    shapes,
    x_on_center,
    z_t_reps,
)
from metaplectic.symplectic import make_gsp, x_of, g_one


def test_parse_and_type():
    t = LeviShape.parse("1,2;1")
    assert t.parts == (1, 2) and t.tail == 1 and t.n == 4 and str(t) == "1,2;1"
    assert levi_type(t) is LeviType.ODD
    assert levi_type(LeviShape.parse("2;2")) is LeviType.EVEN
    assert levi_type(LeviShape.parse(";1")) is LeviType.ODD
    with pytest.raises(ShapeMismatch):
        LeviShape((), 0)


def test_shape_counts():
    # Compositions of n - tail summed over tail: 2^n shapes in total.
    assert [len(list(shapes(n))) for n in range(1, 5)] == [2, 4, 8, 16]


def test_frozen_center_images():
    assert [str(c) for c in center_image(LeviShape.parse("1;0"), 3)] == ["1", "2", "3", "6"]
    assert [str(c) for c in center_image(LeviShape.parse("2;0"), 3)] == ["1"]
    assert len(center_image(LeviShape.parse("1;1"), 2)) == 8
    assert len(z_t_reps(LeviShape.parse("1,2;0"), 2)) == 8
    assert len(z_t_reps(LeviShape.parse("2;2"), 5)) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_image_full_iff_odd(p):
    full = sorted(PadicContext(p).classes)
    for n in range(1, 5):
        for t in shapes(n):
            assert (center_image(t, p) == full) == (levi_type(t) is LeviType.ODD)


def test_x_on_center_matches_x_map():
    t = LeviShape.parse("1,2;1")
    z = CentralElement(t, (3, 5), 7)
    assert x_on_center(z, 5) == x_of(g_one(z.matrix), 5)


def test_center_mul_frozen_and_law():
    t = LeviShape.parse("1;0")
    z = center_mul(CentralElement(t, (2,)), CentralElement(t, (3,)), 3)
    assert z.eps == -1 and z.a == (6,)
    law = cover_mul(CentralElement(t, (2,)).cover(), CentralElement(t, (3,)).cover(), 3)
    assert law.eps == z.eps and law.g == z.matrix


@pytest.mark.parametrize("p", [3, 7])
def test_witness_iff_nonsquare(p):
    for t in (LeviShape.parse("1;1"), LeviShape.parse("1,2;0"), LeviShape.parse(";3")):
        for z in z_t_reps(t, p):
            assert (noncommuting_witness(z, p) is None) == x_on_center(z, p).is_square


def test_levi_element_is_similitude():
    t = LeviShape.parse("1,1;1")
    h = make_gsp([[2, 1], [0, 1]])
    g = levi_element(t, [[[3]], [[5]]], h)
    assert g.lam == 2
    assert make_gsp(g.m).lam == 2
    with pytest.raises(ShapeMismatch):
        levi_element(t, [[[3]]], h)
