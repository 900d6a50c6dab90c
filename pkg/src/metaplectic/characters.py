"""Tamely ramified characters of Q_p^* and genuine characters of covered centers.

A character chi is stored as (e, s, theta): on units it is
u -> exp(2 pi i e log_g(u mod p) / (p - 1)) for a fixed primitive root g
(for p = 2, bit 0 of e gives chi(-1) and bit 1 gives chi(5)), and at the
uniformizer chi(p) = p^-s exp(2 pi i theta).  With Fraction s and theta
everything is exact; float parameters are compared with a 1e-12 tolerance.
"""

from __future__ import annotations

import cmath
import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .cover import conj_by
from .errors import UnsupportedRamification
from .padic import (
    PadicContext,
    PsiSpec,
    SquareClass,
    as_fraction,
    gamma_value,
    hilbert_symbol,
    square_class,
    unit_part,
    unit_residue,
    valuation,
)
from .structure import (
    CentralElement,
    LeviShape,
    LeviType,
    levi_type,
    x_on_center,
)
from .symplectic import GSpElement, i_lambda

TOL = 1e-12
Real = Union[Fraction, float]


@functools.lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    phi = p - 1
    factors = {q for q in range(2, phi + 1) if phi % q == 0 and all(q % r for r in range(2, q))}
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


@functools.lru_cache(maxsize=None)
def _dlog_table(p: int) -> dict:
    g = primitive_root(p)
    return {pow(g, k, p): k for k in range(p - 1)}


def _unit_count(p: int) -> int:
    return 4 if p == 2 else p - 1


_QUARTER = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}


def root_of_unity(angle) -> complex:
    """exp(2 pi i angle), exact when 4 * angle is an integer."""
    if isinstance(angle, Fraction) and (4 * angle).denominator == 1:
        return _QUARTER[int(4 * angle) % 4]
    return cmath.exp(2j * math.pi * float(angle))


def _frac_or_float(x) -> Real:
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return float(x)


@dataclass(frozen=True, eq=False)
class Character:
    p: int
    e: int = 0
    s: Real = Fraction(0)
    theta: Real = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "e", int(self.e) % _unit_count(self.p))
        object.__setattr__(self, "s", _frac_or_float(self.s))
        th = _frac_or_float(self.theta)
        object.__setattr__(self, "theta", th % 1 if isinstance(th, Fraction) else th % 1.0)

    @property
    def exact(self) -> bool:
        return isinstance(self.s, Fraction) and isinstance(self.theta, Fraction)

    @property
    def zp(self) -> complex:
        return self.p ** (-float(self.s)) * root_of_unity(self.theta)

    def unit_angle(self, u) -> Fraction:
        """chi(u) = exp(2 pi i angle) for a p-adic unit u."""
        p = self.p
        if p == 2:
            r = unit_residue(as_fraction(u), 8)
            bits = {1: (0, 0), 7: (1, 0), 5: (0, 1), 3: (1, 1)}[r]
            return Fraction((self.e & 1) * bits[0] + ((self.e >> 1) & 1) * bits[1], 2)
        k = _dlog_table(p)[unit_residue(as_fraction(u), p)]
        return Fraction(self.e * k, p - 1) % 1

    def __call__(self, a) -> complex:
        a = as_fraction(a)
        v = valuation(a, self.p)
        ang = self.unit_angle(unit_part(a, self.p)) + v * self.theta
        if self.s == 0:
            return root_of_unity(ang)
        return self.p ** (-v * float(self.s)) * root_of_unity(ang)

    def __mul__(self, other: "Character") -> "Character":
        if other.p != self.p:
            raise ValueError("characters over different primes")
        if self.p == 2:
            e = self.e ^ other.e
        else:
            e = self.e + other.e
        return Character(self.p, e, self.s + other.s, self.theta + other.theta)

    def inverse(self) -> "Character":
        e = self.e if self.p == 2 else -self.e
        return Character(self.p, e, -self.s, -self.theta)

    def __pow__(self, k: int) -> "Character":
        out = trivial(self.p)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if (self.p, self.e) != (other.p, other.e):
            return False
        if self.exact and other.exact:
            return self.s == other.s and self.theta == other.theta
        return abs(self.zp - other.zp) < TOL

    def __hash__(self):
        return hash((self.p, self.e))

    @property
    def is_unitary(self) -> bool:
        return self.s == 0 if self.exact else abs(abs(self.zp) - 1) < TOL

    @property
    def is_quadratic(self) -> bool:
        return (self * self) == trivial(self.p)

    @property
    def is_unramified(self) -> bool:
        return self.e == 0

    @property
    def order(self) -> Optional[int]:
        """Order in the character group, or None when infinite."""
        if self.p == 2:
            unit_order = 1 if self.e == 0 else 2
        else:
            unit_order = (self.p - 1) // math.gcd(self.e, self.p - 1)
        if not self.exact:
            return None
        if self.s != 0:
            return None
        return math.lcm(unit_order, self.theta.denominator)

    def unit_restriction(self) -> "Character":
        return Character(self.p, self.e)

    def to_json(self):
        if self.exact:
            if self.e == 0 and self.theta == 0:
                return f"abs:{self.s}"
            if self.s == 0:
                for cls in PadicContext(self.p).classes:
                    if eta_char(cls.rep, self.p) == self:
                        return f"eta:{cls.rep}"
            return {"p": self.p, "e": self.e, "s": str(self.s), "theta": str(self.theta)}
        z = self.zp
        return {"p": self.p, "e": self.e, "zp_re": z.real, "zp_im": z.imag}

    @classmethod
    def from_json(cls, obj, p: Optional[int] = None) -> "Character":
        if isinstance(obj, str):
            if p is None:
                raise ValueError("symbolic character tags need a prime")
            tag, _, arg = obj.partition(":")
            if tag == "eta":
                return eta_char(Fraction(arg), p)
            if tag == "abs":
                return abs_char(p, Fraction(arg))
            if tag == "trivial":
                return trivial(p)
            raise ValueError(f"unknown character tag {obj!r}")
        p = int(obj.get("p", p))
        e = int(obj.get("e", 0))
        if "zp_re" in obj:
            return from_zp(p, complex(obj["zp_re"], obj.get("zp_im", 0.0)), e)
        return cls(p, e, Fraction(obj.get("s", 0)), Fraction(obj.get("theta", 0)))

    def __repr__(self):
        return f"Character(p={self.p}, e={self.e}, s={self.s}, theta={self.theta})"


def trivial(p: int) -> Character:
    return Character(p)


def abs_char(p: int, s=Fraction(1)) -> Character:
    """|.|^s, with |p| = 1/p."""
    return Character(p, 0, s, 0)


def unramified(p: int, theta=Fraction(0), s=Fraction(0)) -> Character:
    return Character(p, 0, s, theta)


def from_zp(p: int, zp: complex, e: int = 0) -> Character:
    if zp == 0:
        raise ValueError("zp must be nonzero")
    s = -math.log(abs(zp)) / math.log(p)
    theta = cmath.phase(zp) / (2 * math.pi)
    return Character(p, e, s, theta)


def char_eval(chi: Character, a) -> complex:
    return chi(a)


def eta_char(a, p) -> Character:
    """eta_a(b) = (a, b) as a Character."""
    p = p.p if isinstance(p, PadicContext) else int(p)
    a = as_fraction(a)
    at_p = hilbert_symbol(a, p, p)
    theta = Fraction(0) if at_p == 1 else Fraction(1, 2)
    if p == 2:
        e = (hilbert_symbol(a, -1, 2) == -1) | ((hilbert_symbol(a, 5, 2) == -1) << 1)
        return Character(2, e, 0, theta)
    alpha = valuation(a, p)
    return Character(p, (alpha % 2) * (p - 1) // 2, 0, theta)


def check_tame(chi: Character, ctx) -> None:
    p = ctx.p if isinstance(ctx, PadicContext) else int(ctx)
    if chi.p != p:
        raise UnsupportedRamification("character defined over a different prime")


def unitary_characters(p: int, thetas: Sequence = (0,)) -> List[Character]:
    """All tame unit parts combined with the given uniformizer angles."""
    return [Character(p, e, 0, th) for e in range(_unit_count(p)) for th in thetas]


# Genuine central characters ------------------------------------------------

@functools.lru_cache(maxsize=None)
def _gamma(psi: PsiSpec, rep: Fraction) -> complex:
    return gamma_value(psi, rep)


@dataclass(frozen=True)
class GenuineCentralCharacter:
    """(z, e) -> e eta_a(x(z_1)) gamma_psi(x(z_1)) eta'(z) on Z(M+_t cover).

    eta_prime holds one Character per parameter (a_1, ..., a_r, b) of the
    central element.
    """

    shape: LeviShape
    eta_prime: Tuple[Character, ...]
    psi: PsiSpec
    twist: SquareClass

    def __post_init__(self):
        if len(self.eta_prime) != self.shape.r + 1:
            raise ValueError("eta_prime needs one character per central parameter")

    @property
    def p(self) -> int:
        return self.psi.context.p

    def eta_prime_value(self, z: CentralElement) -> complex:
        val = complex(1)
        for chi, a in zip(self.eta_prime, tuple(z.a) + (z.b,)):
            val *= chi(a)
        return val

    def __call__(self, z: CentralElement) -> complex:
        x = x_on_center(z, self.p)
        return (z.eps * hilbert_symbol(self.twist, x, self.p) * _gamma(self.psi, x.rep)
                * self.eta_prime_value(z))

    def agrees_with(self, other: "GenuineCentralCharacter", elements) -> bool:
        return all(abs(self(z) - other(z)) < TOL for z in elements)


def _psi(psi, ctx) -> PsiSpec:
    if isinstance(psi, PsiSpec):
        return psi
    return PsiSpec(ctx if isinstance(ctx, PadicContext) else PadicContext(int(ctx)))


def genuine_center_char(eta_prime: Character, psi: PsiSpec, n: int) -> GenuineCentralCharacter:
    """(a I_2n, e) -> e eta'(a) gamma_psi(a^n) on the center of the GSp+ cover."""
    return GenuineCentralCharacter(LeviShape((), n), (eta_prime,), psi,
                                   square_class(1, psi.context.p))


def scalar_central(n: int, a, eps: int = 1) -> CentralElement:
    return CentralElement(LeviShape((), n), (), a, eps)


def omega_set(eta_prime: Sequence[Character], t: LeviShape, psi, ctx) -> List[GenuineCentralCharacter]:
    """All extensions to Z(M+_t cover) of the genuine character of Z(M_t cover)
    whose non-genuine part is eta_prime."""
    psi = _psi(psi, ctx)
    eta_prime = tuple(eta_prime)
    classes = psi.context.classes
    if levi_type(t) is LeviType.EVEN:
        return [GenuineCentralCharacter(t, eta_prime, psi, classes[0])]
    return [GenuineCentralCharacter(t, eta_prime, psi, a) for a in classes]


def conj_char(omega: GenuineCentralCharacter, g: GSpElement) -> GenuineCentralCharacter:
    """omega^g, which is omega twisted by eta_{lam(g)} on x(z_1)."""
    twist = omega.twist * g.lam
    return GenuineCentralCharacter(omega.shape, omega.eta_prime, omega.psi, twist)


def conj_char_direct(omega: GenuineCentralCharacter, g: GSpElement, z: CentralElement, ctx) -> complex:
    """omega(g z g^-1) with the conjugate computed through the cover group law."""
    conj = conj_by(g, z.cover(), ctx)
    return omega(CentralElement(z.shape, z.a, z.b, conj.eps))


def twist_action(omega: GenuineCentralCharacter, a) -> GenuineCentralCharacter:
    """Action of the coset of i(a) in M_t / M+_t."""
    return conj_char(omega, i_lambda(a, omega.shape.n))


def dual_central_identity(eta_prime: Character, psi, n: int, ctx, samples: int = 50,
                          seed: int = 0) -> bool:
    """Check (eta'^-1 o lam) (x) tau^sigma = omega_tau^-1 on scalars a I_2n.

    tau has central character (a I, e) -> e eta'(a) gamma_psi(a^n) and sigma
    is i(-1).  The sigma twist is computed through the cover group law.
    """
    psi = _psi(psi, ctx)
    p = psi.context.p
    omega = genuine_center_char(eta_prime, psi, n)
    sigma = i_lambda(-1, n)
    rng = random.Random(seed)
    points = [c.rep for c in psi.context.classes]
    while len(points) < len(psi.context.classes) + samples:
        points.append(Fraction(rng.choice([k for k in range(-60, 61) if k]), rng.randint(1, 60)))
    inv = eta_prime.inverse()
    for a in points:
        for eps in (1, -1):
            z = scalar_central(n, a, eps)
            lhs = inv(z.lam) * conj_char_direct(omega, sigma, z, p)
            rhs = 1 / omega(z)
            if abs(lhs - rhs) > 1e-10:
                return False
    return True
