"""Group law of the metaplectic double cover of GSp(2n).

Elements are pairs (g, eps).  The Sp(2n) cocycle is evaluated only through
closed formulas (inverse pairs, a Siegel-parabolic factor, or n = 1), and
every product records which one was used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from . import matrices as mx
from .errors import ConjugatorNotOmegaZero, ShapeMismatch, UnsupportedCocyclePath
from .padic import SquareClass, hilbert_symbol, square_class
from .symplectic import (
    GSpElement,
    cell_rank,
    g_one,
    identity,
    in_omega_zero,
    x_of,
)


class CocyclePath(str, enum.Enum):
    INVERSE_PAIR = "InversePair"
    OMEGA_ZERO_LEFT = "OmegaZeroLeft"
    OMEGA_ZERO_RIGHT = "OmegaZeroRight"
    KUBOTA_N1 = "KubotaN1"
    CENTRAL_FACTOR = "CentralFactor"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CoverElement:
    g: GSpElement
    eps: int = 1
    path: Optional[CocyclePath] = field(default=None, compare=False)

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def lam(self) -> Fraction:
        return self.g.lam

    def __repr__(self):
        return f"CoverElement({self.g!r}, eps={self.eps})"


def _p(ctx) -> int:
    return ctx.p if hasattr(ctx, "p") else int(ctx)


def _h(a, b, ctx) -> int:
    return hilbert_symbol(a, b, _p(ctx))


def cover_identity(n: int) -> CoverElement:
    return CoverElement(identity(n), 1)


def kubota_x(g: GSpElement, ctx) -> SquareClass:
    """n = 1 x-map: the lower-left entry if nonzero, else the lower-right."""
    c, d = g.m[1][0], g.m[1][1]
    return square_class(c if c != 0 else d, _p(ctx))


def kubota_cocycle(g: GSpElement, h: GSpElement, ctx) -> int:
    """Kubota's closed form on SL(2), independent of the Bruhat machinery."""
    x1, x2, x12 = kubota_x(g, ctx), kubota_x(h, ctx), kubota_x(g @ h, ctx)
    return _h(x12.rep / x1.rep, x12.rep / x2.rep, ctx)


def cocycle_sp(g: GSpElement, h: GSpElement, ctx) -> Tuple[int, CocyclePath]:
    """Rao's cocycle c(g, h) on Sp(2n) with the rule that produced it."""
    if g.n != h.n:
        raise ShapeMismatch("rank mismatch")
    if not (g.is_sp and h.is_sp):
        raise ValueError("cocycle_sp expects elements of Sp(2n)")
    p = _p(ctx)
    if mx.matmul(g.m, h.m) == mx.identity(2 * g.n):
        j = cell_rank(g)
        x = x_of(g, p).rep
        val = _h(x, (-1) ** j * x, p)
        if (j * (j - 1) // 2) % 2:
            val *= _h(-1, -1, p)
        return val, CocyclePath.INVERSE_PAIR
    if in_omega_zero(g):
        return _h(x_of(g, p), x_of(h, p), p), CocyclePath.OMEGA_ZERO_LEFT
    if in_omega_zero(h):
        return _h(x_of(g, p), x_of(h, p), p), CocyclePath.OMEGA_ZERO_RIGHT
    if g.n == 1:
        return kubota_cocycle(g, h, p), CocyclePath.KUBOTA_N1
    raise UnsupportedCocyclePath(
        "no closed formula for two big-cell factors with n >= 2")


def v_lambda(g: GSpElement, lam, ctx) -> int:
    """Sign lifting g -> g^{i(lam)} to an automorphism of the Sp cover."""
    lam = Fraction(lam)
    if lam == 1:
        return 1
    p = _p(ctx)
    j = cell_rank(g)
    val = _h(x_of(g, p), lam ** (j + 1), p)
    if (j * (j - 1) // 2) % 2:
        val *= _h(lam, lam, p)
    return val


def cocycle_gsp(g: GSpElement, h: GSpElement, ctx) -> Tuple[int, CocyclePath]:
    """Extended cocycle c~(g, h) = v_{lam(h)}(g_1) c(g_1^{i(lam(h))}, h_1)."""
    mu = h.lam
    g1, h1 = g_one(g), g_one(h)
    inner = g1.conj(mu) if mu != 1 else g1
    val, path = cocycle_sp(inner, h1, ctx)
    return val * v_lambda(g1, mu, ctx), path


def cover_mul(s: CoverElement, t: CoverElement, ctx) -> CoverElement:
    val, path = cocycle_gsp(s.g, t.g, ctx)
    return CoverElement(s.g @ t.g, s.eps * t.eps * val, path)


def inverse_sign(g: GSpElement, ctx) -> int:
    """c~(g, g^-1) in closed form."""
    p = _p(ctx)
    lam = g.lam
    g1 = g_one(g)
    j = cell_rank(g1)
    val = _h(x_of(g1, p), (-lam) ** (j + 1), p)
    if (j * (j - 1) // 2) % 2:
        val *= _h(-lam, -1, p)
    return val


def cover_inverse(s: CoverElement, ctx) -> CoverElement:
    return CoverElement(s.g.inverse(), s.eps * inverse_sign(s.g, ctx),
                        CocyclePath.INVERSE_PAIR)


def conj_sign(g: GSpElement, h: GSpElement, ctx) -> int:
    """d(g, h), the sign picked up by (h, e) under conjugation by g."""
    g1, h1 = g_one(g), g_one(h)
    if not in_omega_zero(g1):
        raise ConjugatorNotOmegaZero("conjugator must lie in the Siegel parabolic")
    p = _p(ctx)
    lam = g.lam
    j = cell_rank(h1)
    val = _h(x_of(g1, p), h.lam, p) * _h(x_of(h1, p), lam ** (j + 1), p)
    if (j * (j - 1) // 2) % 2:
        val *= _h(lam, lam, p)
    return val


def conj_by(g: GSpElement, t: CoverElement, ctx) -> CoverElement:
    """(g, e) t (g, e)^-1, which does not depend on e."""
    d = conj_sign(g, t.g, ctx)
    return CoverElement(g @ t.g @ g.inverse(), t.eps * d)


def conj_by_product(s: CoverElement, t: CoverElement, ctx) -> CoverElement:
    """s t s^-1 through the group law; used to cross-check ``conj_by``."""
    return cover_mul(cover_mul(s, t, ctx), cover_inverse(s, ctx), ctx)


def commutator(s: CoverElement, t: CoverElement, ctx) -> CoverElement:
    """s t s^-1 t^-1 through the group law."""
    st = cover_mul(s, t, ctx)
    return cover_mul(cover_mul(st, cover_inverse(s, ctx), ctx), cover_inverse(t, ctx), ctx)
