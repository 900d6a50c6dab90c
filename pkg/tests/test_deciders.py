import math
import random
from fractions import Fraction

import pytest

from metaplectic.characters import Character, abs_char, eta_char, trivial, unramified
from metaplectic.deciders import (
    PrincipalSeriesDatum,
    Status,
    counterexample_build,
    gsp4_reducibility,
    odd_unitary_rule,
    simple_roots,
    weyl_orbit,
    whittaker_orbit_count,
)
from metaplectic.errors import UnsupportedPrime
from metaplectic.padic import PadicContext, PsiSpec
from metaplectic.structure import LeviShape, shapes

H = Fraction(1, 2)


def datum(p, *chis):
    return PrincipalSeriesDatum(len(chis), chis, PsiSpec(PadicContext(p)))


def unit_circle(p, angle, e=0):
    return Character(p, e, Fraction(0), angle / (2 * math.pi))


def test_orbit_sizes():
    assert len(weyl_orbit(datum(3, abs_char(3, 1), trivial(3)))) == 4
    assert len(weyl_orbit(datum(3, trivial(3), trivial(3)))) == 1
    assert len(weyl_orbit(datum(5, unit_circle(5, 1), unit_circle(5, 2)))) == 8


@pytest.mark.parametrize("p", [3, 5, 7])
def test_families(p):
    xi = Character(p, 1, 0, Fraction(1, 7))
    s = Fraction(1, 3)
    v = gsp4_reducibility(datum(p, xi * abs_char(p, s + H), xi * abs_char(p, s - H)))
    assert (v.status, v.tag) == (Status.REDUCIBLE, "II")
    u = PadicContext(p).nonresidue
    v = gsp4_reducibility(datum(p, abs_char(p, Fraction(2, 5)), eta_char(u, p) * abs_char(p, H)))
    assert (v.status, v.tag) == (Status.REDUCIBLE, "III")
    chi = unramified(p, Fraction(1, 4))
    v = gsp4_reducibility(datum(p, chi, chi))
    assert (v.status, v.tag) == (Status.REDUCIBLE, "I")
    v = gsp4_reducibility(datum(p, unit_circle(p, 1), unit_circle(p, 2)))
    assert v.status is Status.IRREDUCIBLE and v.tag is None


def test_verdict_json_shape():
    v = gsp4_reducibility(datum(5, abs_char(5, 1), trivial(5)))
    data = v.to_json()
    assert data["status"] == "Reducible"
    assert data["witness"]["tag"] == "II"
    assert len(data["orbit"]) == 4


def test_generic_unitary_pairs_irreducible():
    rng = random.Random(5)
    for _ in range(50):
        p = rng.choice([3, 5, 7])
        a = Character(p, rng.randrange(p - 1), 0, rng.random())
        b = Character(p, rng.randrange(p - 1), 0, rng.random())
        assert gsp4_reducibility(datum(p, a, b)).status is Status.IRREDUCIBLE


def test_p2_is_out_of_scope():
    with pytest.raises(UnsupportedPrime):
        gsp4_reducibility(datum(2, trivial(2), trivial(2)))
    with pytest.raises(UnsupportedPrime):
        counterexample_build(2)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_counterexample(p):
    ce = counterexample_build(p)
    assert ce.ok, [fact for fact, ok in ce.log if not ok]
    assert ce.chi.order == 4


def test_counterexample_rank_four():
    ce = counterexample_build(5, n=4)
    assert ce.ok
    v = odd_unitary_rule(ce.datum)
    assert v.status is Status.UNKNOWN and v.note


def test_odd_unitary_rule():
    chi = unramified(3, Fraction(1, 4))
    assert odd_unitary_rule(datum(3, chi, chi, chi)).status is Status.IRREDUCIBLE
    assert odd_unitary_rule(datum(3, chi, chi)).tag == "I"
    with pytest.raises(ValueError):
        odd_unitary_rule(datum(3, abs_char(3, 1)))


def test_simple_roots():
    assert simple_roots(LeviShape.parse("2,1;2")) == [("short", 0), ("short", 3), ("long", 4)]
    assert simple_roots(LeviShape.parse("1;0")) == []


@pytest.mark.parametrize("p", [3, 5])
def test_whittaker_counts(p):
    index = PadicContext(p).index
    for n in range(1, 5):
        for t in shapes(n):
            expected = index if t.tail else 1
            assert whittaker_orbit_count(t, "T", p).count == expected
            assert whittaker_orbit_count(t, "T+", p).count == expected
            assert whittaker_orbit_count(t, "T'", p).count == 1


def test_whittaker_representatives():
    res = whittaker_orbit_count(LeviShape.parse("1;1"), "T", 3)
    assert [str(r) for r in res.representatives] == ["(1)", "(2)", "(3)", "(6)"]
    assert sum(res.orbit_sizes) == 4
