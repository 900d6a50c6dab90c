"""Standard Levi subgroups of GSp(2n), their centers and the quotient Z_t.

A shape t = (n_1, ..., n_r; n_{r+1}) names the Levi
GL(n_1) x ... x GL(n_r) x GSp(2 n_{r+1}).  It has odd type when some n_k
(tail included) is odd.  M denotes the Levi in GSp(2n) and M+ its
subgroup of elements with square similitude; Z_t = Z(M+ cover) / Z(M cover).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from . import matrices as mx
from .cover import CocyclePath, CoverElement, conj_by
from .errors import ShapeMismatch
from .padic import PadicContext, SquareClass, as_fraction, hilbert_symbol, square_class
from .symplectic import GSpElement, torus


class LeviType(str, enum.Enum):
    ODD = "Odd"
    EVEN = "Even"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LeviShape:
    parts: Tuple[int, ...]
    tail: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(k) for k in self.parts))
        if any(k < 0 for k in self.parts) or self.tail < 0:
            raise ShapeMismatch("shape entries must be nonnegative")
        if self.n == 0:
            raise ShapeMismatch("empty shape")

    @classmethod
    def parse(cls, text: str) -> "LeviShape":
        """Parse "1,2;1" (parts before the semicolon, tail after)."""
        head, _, tail = text.partition(";")
        parts = tuple(int(s) for s in head.split(",") if s.strip())
        return cls(parts, int(tail) if tail.strip() else 0)

    @property
    def n(self) -> int:
        return sum(self.parts) + self.tail

    @property
    def r(self) -> int:
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) + ";" + str(self.tail)


def levi_type(t: LeviShape) -> LeviType:
    odd = any(k % 2 for k in t.parts) or t.tail % 2
    return LeviType.ODD if odd else LeviType.EVEN


def shapes(n: int) -> Iterator[LeviShape]:
    """All shapes of rank n with positive GL parts."""
    for tail in range(n, -1, -1):
        rest = n - tail
        for parts in _compositions(rest):
            yield LeviShape(parts, tail)


def _compositions(m: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in _compositions(m - first):
            yield (first,) + rest


def levi_element(t: LeviShape, gl_blocks: Sequence, h: Optional[GSpElement] = None) -> GSpElement:
    """[g_1, ..., g_r; h]: g_i on top, lam(h) g_i^-T below, h on the tail coordinates."""
    if len(gl_blocks) != t.r:
        raise ShapeMismatch("one GL block per part is required")
    n, k = t.n, t.tail
    if h is None:
        h = GSpElement(k, mx.identity(2 * k), Fraction(1))
    if h.n != k:
        raise ShapeMismatch("tail element has the wrong rank")
    lam = h.lam
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    off = 0
    for size, blk in zip(t.parts, gl_blocks):
        blk = mx.mat(blk)
        if len(blk) != size:
            raise ShapeMismatch("GL block size does not match the shape")
        tilde = mx.scale(lam, mx.transpose(mx.inverse(blk)))
        for i in range(size):
            for j in range(size):
                out[off + i][off + j] = blk[i][j]
                out[n + off + i][n + off + j] = tilde[i][j]
        off += size
    for i in range(k):
        for j in range(k):
            for di, dj in ((0, 0), (0, n), (n, 0), (n, n)):
                out[di + off + i][dj + off + j] = h.m[i + di // n * k][j + dj // n * k]
    return GSpElement(n, mx.mat(out), lam)


@dataclass(frozen=True)
class CentralElement:
    """diag(a_k I, b I, b^2 a_k^-1 I, b I) in Z(M+_t), with a sign."""

    shape: LeviShape
    a: Tuple[Fraction, ...]
    b: Fraction = Fraction(1)
    eps: int = 1
    path: Optional[CocyclePath] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_fraction(x) for x in self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if len(self.a) != self.shape.r:
            raise ShapeMismatch("one parameter per GL part is required")
        if any(x == 0 for x in self.a) or self.b == 0:
            raise ValueError("central parameters must be nonzero")

    @property
    def lam(self) -> Fraction:
        return self.b * self.b

    @property
    def matrix(self) -> GSpElement:
        top, bottom = [], []
        for size, ak in zip(self.shape.parts, self.a):
            top += [ak] * size
            bottom += [self.lam / ak] * size
        top += [self.b] * self.shape.tail
        bottom += [self.b] * self.shape.tail
        return GSpElement(self.shape.n, mx.diag(top + bottom), self.lam)

    def cover(self) -> CoverElement:
        return CoverElement(self.matrix, self.eps)


def identity_center(t: LeviShape) -> CentralElement:
    return CentralElement(t, (Fraction(1),) * t.r, Fraction(1), 1)


def x_on_center(c: CentralElement, ctx) -> SquareClass:
    """x(g_1) = b^{n_{r+1}} times the product of a_k over odd n_k."""
    val = c.b ** c.shape.tail
    for size, ak in zip(c.shape.parts, c.a):
        if size % 2:
            val *= ak
    return square_class(val, ctx)


def _ctx(ctx) -> PadicContext:
    return ctx if isinstance(ctx, PadicContext) else PadicContext(int(ctx))


def center_image(t: LeviShape, ctx) -> List[SquareClass]:
    """x(Z_1(M+_t)) by enumeration over class representatives of the parameters."""
    ctx = _ctx(ctx)
    reps = [c.rep for c in ctx.classes]
    seen = set()
    for params in itertools.product(reps, repeat=t.r + 1):
        seen.add(x_on_center(CentralElement(t, params[:-1], params[-1]), ctx))
    return sorted(seen)


def z_t_reps(t: LeviShape, ctx) -> List[CentralElement]:
    """Representatives of Z_t, indexed by their x-value."""
    ctx = _ctx(ctx)
    if levi_type(t) is LeviType.EVEN:
        return [identity_center(t)]
    odd = [i for i, size in enumerate(t.parts) if size % 2]
    out = []
    for cls in ctx.classes:
        a = [Fraction(1)] * t.r
        b = Fraction(1)
        if odd:
            a[odd[0]] = cls.rep
        else:
            b = cls.rep
        out.append(CentralElement(t, tuple(a), b, 1))
    return out


def z_t_rep_for(t: LeviShape, cls: SquareClass, ctx) -> CentralElement:
    for c in z_t_reps(t, ctx):
        if x_on_center(c, ctx) == cls:
            return c
    raise ValueError(f"class {cls} is not in the image of the center")


def center_mul(c1: CentralElement, c2: CentralElement, ctx) -> CentralElement:
    """Product in Z(M+_t cover): the sign picks up (x(g_1), x(g'_1))."""
    if c1.shape != c2.shape:
        raise ShapeMismatch("central elements of different shapes")
    sign = hilbert_symbol(x_on_center(c1, ctx), x_on_center(c2, ctx), _ctx(ctx))
    a = tuple(x * y for x, y in zip(c1.a, c2.a))
    return CentralElement(c1.shape, a, c1.b * c2.b, c1.eps * c2.eps * sign,
                          CocyclePath.CENTRAL_FACTOR)


def in_genuine_center(c: CentralElement, ctx) -> bool:
    """Membership in Z(M_t cover): x(g_1) must be a square."""
    return x_on_center(c, ctx).is_square


def conj_sign_by_center(c: CentralElement, g: GSpElement, ctx) -> int:
    """The sign d with (h, e)(g, e')(h, e)^-1 = (g, d e') for h = c.matrix."""
    return conj_by(c.matrix, CoverElement(g, 1), ctx).eps


def noncommuting_witness(c: CentralElement, ctx) -> Optional[GSpElement]:
    """A torus element of M_t whose lift does not commute with the lift of c."""
    ctx = _ctx(ctx)
    n = c.shape.n
    for lam_cls in ctx.classes:
        g = torus([1] * n, lam_cls.rep)
        if conj_sign_by_center(c, g, ctx) == -1:
            return g
    return None
