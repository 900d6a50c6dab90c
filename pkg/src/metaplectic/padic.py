"""Square classes of Q_p, Hilbert symbols and the normalized Weil factor.

Everything here is exact except :func:`weil_gauss_oracle`, which evaluates a
truncated Gauss integral numerically and is used both as an independent check
and to pin the one value (gamma at the uniformizer) that the algebraic
relations cannot determine.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from . import _backend
from .errors import DepthTooSmall, NotStabilized, UnsupportedPrime, ZeroInput

Rational = Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def as_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, str):
        return Fraction(a.strip())
    if isinstance(a, SquareClass):
        return a.rep
    if isinstance(a, float):
        raise TypeError("use exact rationals, not floats")
    return Fraction(a)


def valuation(a, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    a = as_fraction(a)
    if a == 0:
        raise ZeroInput("valuation of zero")
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(a, p: int) -> Fraction:
    a = as_fraction(a)
    return a / Fraction(p) ** valuation(a, p)


def unit_residue(u: Fraction, modulus: int) -> int:
    """Image of a p-adic unit (rational with no p in num/den) in Z/modulus."""
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def least_nonresidue(p: int) -> int:
    if p == 2:
        return 5
    return next(a for a in range(2, p) if legendre(a, p) == -1)


@dataclass(frozen=True)
class PadicContext:
    """The prime together with the truncation depths used by the oracles.

    ``oracle_depth`` defaults to the smallest modulus exponent at which the
    Hensel argument settles solvability for reduced inputs (3 for odd p,
    5 for p = 2).
    """

    p: int
    oracle_depth: Optional[int] = None
    gauss_terms: int = 4

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.oracle_depth is None:
            object.__setattr__(self, "oracle_depth", 5 if self.p == 2 else 3)
        if self.oracle_depth < 3:
            raise ValueError("oracle_depth must be >= 3")
        if self.gauss_terms < 4:
            raise ValueError("gauss_terms must be >= 4")

    @functools.cached_property
    def nonresidue(self) -> int:
        return least_nonresidue(self.p)

    @functools.cached_property
    def classes(self) -> Tuple["SquareClass", ...]:
        """Canonical representatives of F*/F*^2 in a fixed order."""
        if self.p == 2:
            reps = (1, -1, 5, -5, 2, -2, 10, -10)
        else:
            u = self.nonresidue
            reps = (1, u, self.p, u * self.p)
        return tuple(SquareClass(Fraction(r), self.p) for r in reps)

    @property
    def index(self) -> int:
        """[F* : F*^2]."""
        return 8 if self.p == 2 else 4


@functools.total_ordering
@dataclass(frozen=True)
class SquareClass:
    """Canonical representative of an element of Q_p^* / (Q_p^*)^2."""

    rep: Fraction
    p: int = field(compare=True)

    def __mul__(self, other):
        if isinstance(other, SquareClass):
            other = other.rep
        return square_class(self.rep * as_fraction(other), self.p)

    __rmul__ = __mul__

    def __lt__(self, other):
        return _class_key(self) < _class_key(other)

    @property
    def is_square(self) -> bool:
        return self.rep == 1

    def __str__(self):
        return str(self.rep)


@functools.lru_cache(maxsize=None)
def _class_order(p: int):
    return {c.rep: i for i, c in enumerate(PadicContext(p).classes)}


def _class_key(c: SquareClass):
    return _class_order(c.p)[c.rep]


def square_class(a, ctx) -> SquareClass:
    """Canonical square-class representative of the nonzero rational ``a``."""
    p = ctx.p if isinstance(ctx, PadicContext) else int(ctx)
    a = as_fraction(a)
    if a == 0:
        raise ZeroInput("0 has no square class")
    v = valuation(a, p)
    u = a / Fraction(p) ** v
    odd = v % 2
    if p == 2:
        r = unit_residue(u, 8)
        rep = {1: 1, 3: -5, 5: 5, 7: -1}[r]
    else:
        rep = 1 if legendre(unit_residue(u, p), p) == 1 else least_nonresidue(p)
    return SquareClass(Fraction(rep * (p if odd else 1)), p)


def _eps2(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega2(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a, b, ctx) -> int:
    """Quadratic Hilbert symbol (a, b) over Q_p by the closed formulas."""
    p = ctx.p if isinstance(ctx, PadicContext) else int(ctx)
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ZeroInput("Hilbert symbol of zero")
    alpha, beta = valuation(a, p), valuation(b, p)
    ua, ub = a / Fraction(p) ** alpha, b / Fraction(p) ** beta
    if p == 2:
        u, v = unit_residue(ua, 8), unit_residue(ub, 8)
        e = _eps2(u) * _eps2(v) + alpha * _omega2(v) + beta * _omega2(u)
        return -1 if e % 2 else 1
    u, v = unit_residue(ua, p), unit_residue(ub, p)
    sign = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1
    return sign * legendre(u, p) ** (beta % 2) * legendre(v, p) ** (alpha % 2)


def _reduced_integer(a: Fraction, p: int) -> int:
    """Integer in the square class of ``a`` with p-adic valuation 0 or 1."""
    n = a.numerator * a.denominator
    while n % (p * p) == 0:
        n //= p * p
    return n


def hilbert_oracle(a, b, ctx: PadicContext) -> int:
    """Hilbert symbol by exhaustive search for a primitive solution.

    Decides solvability of z^2 = a x^2 + b y^2 modulo p**oracle_depth after
    moving a and b to integers of valuation <= 1 inside their square classes.
    A primitive solution mod p^(2d+1), with d the largest possible valuation
    of the gradient, lifts by Hensel's lemma; smaller depths are refused.
    """
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ZeroInput("Hilbert symbol of zero")
    p = ctx.p
    ai, bi = _reduced_integer(a, p), _reduced_integer(b, p)
    grad = max(ai % p == 0, bi % p == 0) + (1 if p == 2 else 0)
    needed = max(2 * grad + 1, 2)
    if ctx.oracle_depth < needed:
        raise DepthTooSmall(f"need oracle_depth >= {needed}, have {ctx.oracle_depth}")
    return 1 if _backend.hilbert_search(ai, bi, p, ctx.oracle_depth) else -1


@dataclass(frozen=True)
class QuadraticCharacter:
    """b -> (a, b)_F, the quadratic character attached to a square class."""

    a: SquareClass

    def __call__(self, b) -> int:
        return hilbert_symbol(self.a.rep, b, self.a.p)


def eta(a) -> QuadraticCharacter:
    if not isinstance(a, SquareClass):
        raise TypeError("eta expects a SquareClass")
    return QuadraticCharacter(a)


@functools.total_ordering
@dataclass(frozen=True)
class FourthRoot:
    """A fourth root of unity i**k, kept exactly."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    @classmethod
    def from_sign(cls, s: int) -> "FourthRoot":
        return cls(0 if s == 1 else 2)

    @classmethod
    def from_complex(cls, z: complex, tol: float = 1e-9) -> "FourthRoot":
        for k, w in enumerate((1, 1j, -1, -1j)):
            if abs(z - w) < tol:
                return cls(k)
        raise ValueError(f"{z} is not within {tol} of a fourth root of unity")

    @property
    def gaussian(self) -> Tuple[int, int]:
        return ((1, 0), (0, 1), (-1, 0), (0, -1))[self.k]

    @property
    def value(self) -> complex:
        re, im = self.gaussian
        return complex(re, im)

    def __mul__(self, other):
        if isinstance(other, FourthRoot):
            return FourthRoot(self.k + other.k)
        if other in (1, -1):
            return FourthRoot(self.k + (0 if other == 1 else 2))
        return self.value * other

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return FourthRoot(self.k * e)

    def inverse(self) -> "FourthRoot":
        return FourthRoot(-self.k)

    def __complex__(self):
        return self.value

    def __lt__(self, other):
        return self.k < other.k

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.k]


@dataclass(frozen=True)
class PsiSpec:
    """The additive character x -> psi(shift * x), psi of conductor Z_p.

    The base character is psi(x) = exp(2 pi i {x}_p) with {x}_p the p-adic
    fractional part.
    """

    context: PadicContext
    shift: SquareClass = None

    def __post_init__(self):
        if self.shift is None:
            object.__setattr__(self, "shift", self.context.classes[0])
        elif not isinstance(self.shift, SquareClass):
            object.__setattr__(self, "shift", square_class(self.shift, self.context))
        if self.shift.p != self.context.p:
            raise ValueError("shift belongs to a different prime")

    def twisted(self, b) -> "PsiSpec":
        return PsiSpec(self.context, self.shift * b)


def _gauss_integral(a: Fraction, p: int, level: int) -> complex:
    """Truncated Weil integral of x -> psi(a x^2) over p^-level Z_p (unscaled)."""
    v = valuation(a, p)
    n = 2 * level - v
    if n <= 0:
        return complex(1.0)
    u = a / Fraction(p) ** v
    c = unit_residue(u, p ** n)
    return _backend.gauss_phase_sum(c, p, n)


def _phase(z: complex) -> complex:
    if abs(z) < 1e-300:
        raise NotStabilized("vanishing Gauss sum")
    return z / abs(z)


def _stable_phase(a: Fraction, ctx: PadicContext) -> complex:
    m = ctx.gauss_terms
    z0 = _phase(_gauss_integral(a, ctx.p, m))
    z1 = _phase(_gauss_integral(a, ctx.p, m + 1))
    if abs(z0 - z1) >= 1e-9:
        raise NotStabilized(f"Gauss sums for a={a} differ between levels {m} and {m + 1}")
    return z0


def weil_gauss_oracle(psi: PsiSpec, a) -> complex:
    """gamma_psi(a) from stabilized Gauss sums.

    The Weil index of x -> psi(s a x^2) divided by that of x -> psi(s x^2),
    each computed as the phase of a truncated Gauss integral at two
    consecutive truncation levels which must agree to 1e-9.
    """
    a = as_fraction(a)
    if a == 0:
        raise ZeroInput("gamma of zero")
    ctx = psi.context
    s = psi.shift.rep
    z = _stable_phase(s * a, ctx) / _stable_phase(s, ctx)
    try:
        FourthRoot.from_complex(z, 1e-9)
    except ValueError:
        raise NotStabilized(f"gamma({a}) = {z} is not a fourth root of unity") from None
    return z


@functools.lru_cache(maxsize=None)
def _gamma_at_uniformizer(p: int) -> FourthRoot:
    """gamma_psi(p) for the base character, seeded once from the oracle."""
    ctx = PadicContext(p)
    return FourthRoot.from_complex(weil_gauss_oracle(PsiSpec(ctx), p))


def weil_factor(psi: PsiSpec, a) -> FourthRoot:
    """Normalized Weil factor gamma_psi(a), exactly, for odd p.

    gamma is 1 on units for the base character; the value at p comes from
    the oracle; everything else follows from
    gamma(ab) = gamma(a) gamma(b) (a, b) and gamma_{psi_b} = eta_b gamma_psi.
    """
    ctx = psi.context
    p = ctx.p
    if p == 2:
        raise UnsupportedPrime("exact Weil factors are only tabulated for odd p")
    a = as_fraction(a)
    if a == 0:
        raise ZeroInput("gamma of zero")
    v = valuation(a, p)
    if v % 2 == 0:
        base = FourthRoot(0)
    else:
        u = unit_residue(unit_part(a, p), p)
        base = _gamma_at_uniformizer(p) * legendre(u, p)
    return base * hilbert_symbol(psi.shift.rep, a, p)


def gamma_value(psi: PsiSpec, a) -> complex:
    """gamma_psi(a) as a complex number, using the oracle when p = 2."""
    if psi.context.p == 2:
        return weil_gauss_oracle(psi, a)
    return weil_factor(psi, a).value
