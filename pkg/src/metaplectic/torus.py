"""Genuine representations of the covered diagonal torus of GSp(2n).

T' is the full diagonal torus and T+ its subgroup with square similitude.
A genuine character of the T+ cover is induced to the T' cover, giving a
representation of dimension [F* : F*^2] on functions over the cosets of
i(a).  Matrices are complex numpy arrays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .characters import Character, _gamma, trivial
from .cover import CoverElement, commutator, cover_inverse, cover_mul
from .padic import PadicContext, PsiSpec, SquareClass, hilbert_symbol, square_class
from .structure import LeviShape, z_t_reps
from .symplectic import GSpElement, g_one, i_lambda, torus, x_of

TOL = 1e-10


def torus_shape(n: int) -> LeviShape:
    return LeviShape((1,) * n, 0)


def is_torus(g: GSpElement) -> bool:
    size = 2 * g.n
    return all(g.m[i][j] == 0 for i in range(size) for j in range(size) if i != j)


@dataclass(frozen=True)
class GenuineTorusChar:
    """(t, e) -> e eta_twist(x(t_1)) xi(t) gamma_psi(x(t_1)) on the T+ cover.

    xi(t) = xi_1(t_1) ... xi_n(t_n) xi_0(lam(t)).
    """

    xi: Tuple[Character, ...]
    psi: PsiSpec
    xi0: Optional[Character] = None
    twist: Optional[SquareClass] = None

    def __post_init__(self):
        p = self.psi.context.p
        object.__setattr__(self, "xi", tuple(self.xi))
        if self.xi0 is None:
            object.__setattr__(self, "xi0", trivial(p))
        if self.twist is None:
            object.__setattr__(self, "twist", square_class(1, p))

    @property
    def n(self) -> int:
        return len(self.xi)

    @property
    def p(self) -> int:
        return self.psi.context.p

    def twisted(self, a) -> "GenuineTorusChar":
        return GenuineTorusChar(self.xi, self.psi, self.xi0, self.twist * a)

    def __call__(self, sigma: CoverElement) -> complex:
        g = sigma.g
        if not is_torus(g):
            raise ValueError("not a torus element")
        if not square_class(g.lam, self.p).is_square:
            raise ValueError("similitude is not a square; element is outside T+")
        x = x_of(g_one(g), self.p)
        val = complex(sigma.eps * hilbert_symbol(self.twist, x, self.p)) * _gamma(self.psi, x.rep)
        for chi, t in zip(self.xi, (g.m[i][i] for i in range(g.n))):
            val *= chi(t)
        return val * self.xi0(g.lam)


@dataclass
class TorusRep:
    """Ind from the T+ cover to the T' cover of a genuine character."""

    base: GenuineTorusChar
    labels: Tuple[SquareClass, ...] = field(init=False)
    _reps: Dict[SquareClass, CoverElement] = field(init=False, repr=False)
    _inv: Dict[SquareClass, CoverElement] = field(init=False, repr=False)

    def __post_init__(self):
        ctx = self.base.psi.context
        self.labels = tuple(ctx.classes)
        n = self.base.n
        self._reps = {a: CoverElement(i_lambda(a.rep, n), 1) for a in self.labels}
        self._inv = {a: cover_inverse(r, self.p) for a, r in self._reps.items()}
        self._index = {a: k for k, a in enumerate(self.labels)}

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def dim(self) -> int:
        return len(self.labels)

    def coset_rep(self, a: SquareClass) -> CoverElement:
        return self._reps[a]

    def __call__(self, sigma: CoverElement) -> np.ndarray:
        """rho(sigma) e_b = chi+(r_a^-1 sigma r_b) e_a with a = lam(sigma) b."""
        d = self.dim
        out = np.zeros((d, d), dtype=complex)
        for b in self.labels:
            a = b * sigma.g.lam
            h = cover_mul(cover_mul(self._inv[a], sigma, self.p), self._reps[b], self.p)
            out[self._index[a], self._index[b]] = self.base(h)
        return out


def induce(chi_plus: GenuineTorusChar) -> TorusRep:
    return TorusRep(chi_plus)


def zt_elements(rho: TorusRep) -> List[CoverElement]:
    return [z.cover() for z in z_t_reps(torus_shape(rho.base.n), rho.base.psi.context)]


def omega_candidates(rho: TorusRep) -> List[GenuineTorusChar]:
    """The extensions eta_a chi+ (a over the classes)."""
    return [rho.base.twisted(a) for a in rho.labels]


def eigen_project(rho: TorusRep, omega: GenuineTorusChar) -> np.ndarray:
    """phi_omega = d^-1 sum_{b in Z_t} omega(b)^-1 rho(b)."""
    acc = np.zeros((rho.dim, rho.dim), dtype=complex)
    for b in zt_elements(rho):
        acc += rho(b) / omega(b)
    return acc / rho.dim


def restrict_decompose(rho: TorusRep) -> List[Tuple[GenuineTorusChar, int]]:
    out = []
    for omega in omega_candidates(rho):
        phi = eigen_project(rho, omega)
        out.append((omega, int(np.linalg.matrix_rank(phi, tol=1e-8))))
    return out


def _value_at(rho: TorusRep, omega: GenuineTorusChar, values: Dict[SquareClass, np.ndarray],
              g: CoverElement) -> np.ndarray:
    """f(g) for the f in Ind(rho_omega) with f(r_y) = values[y]; f(h r) = rho(h) f(r)."""
    y = square_class(g.g.lam, rho.p)
    h = cover_mul(g, rho._inv[y], rho.p)
    return rho(h) @ values[y]


def induction_roundtrip(rho: TorusRep, omega: GenuineTorusChar) -> bool:
    """Check f(v(f)) = f on a spanning set of Ind(rho_omega), and v(f(v)) = v."""
    n = rho.base.n
    phi = eigen_project(rho, omega)
    u, sv, _ = np.linalg.svd(phi)
    image = [u[:, k] for k in range(len(sv)) if sv[k] > 1e-8]
    inv_elems = {a: CoverElement(i_lambda(1 / a.rep, n), 1) for a in rho.labels}

    def v_of(values):
        acc = np.zeros(rho.dim, dtype=complex)
        for a in rho.labels:
            acc += rho(rho.coset_rep(a)) @ _value_at(rho, omega, values, inv_elems[a])
        return acc

    def f_of(v):
        return {y: phi @ (rho(rho.coset_rep(y)) @ v) for y in rho.labels}

    for y0 in rho.labels:
        for w in image:
            # f with value w at r_{y0} (extended by rho(h)) and 0 on other cosets
            values = {y: (w if y == y0 else np.zeros(rho.dim, dtype=complex)) for y in rho.labels}
            back = f_of(v_of(values))
            if any(np.abs(back[y] - values[y]).max() > TOL for y in rho.labels):
                return False
    for k in range(rho.dim):
        v = np.zeros(rho.dim, dtype=complex)
        v[k] = 1
        if np.abs(v_of(f_of(v)) - v).max() > TOL:
            return False
    return True


def random_torus_cover(n: int, rng: random.Random, plus: bool = False,
                       classes: Sequence[SquareClass] = ()) -> CoverElement:
    def q():
        return Fraction(rng.choice([k for k in range(-9, 10) if k]), rng.randint(1, 9))

    lam = q() ** 2 if plus else q()
    return CoverElement(torus([q() for _ in range(n)], lam), rng.choice([1, -1]))


def commutator_sign(s: CoverElement, t: CoverElement, ctx) -> int:
    """Predicted sign of the commutator of two covered torus elements."""
    p = ctx.p if isinstance(ctx, PadicContext) else int(ctx)
    xs, xt = x_of(g_one(s.g), p), x_of(g_one(t.g), p)
    return hilbert_symbol(xs, t.g.lam, p) * hilbert_symbol(xt, s.g.lam, p)


def commutator_check(s: CoverElement, t: CoverElement, ctx) -> bool:
    c = commutator(s, t, ctx)
    return c.g.is_identity and c.eps == commutator_sign(s, t, ctx)
