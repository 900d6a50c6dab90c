"""Exact GSp(2n) elements, Siegel-Bruhat cells and Rao's x-map.

Conventions: J = [[0, I], [-I, 0]], i(lam) = diag(I, lam I), g_1 = i(lam^-1) g,
and conjugation h^g = g^-1 h g.  The Siegel parabolic is Omega_0, and the
cell Omega_j holds the elements whose lower-left block has rank j.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import matrices as mx
from .errors import NotSimilitude, ShapeMismatch
from .padic import SquareClass, as_fraction, square_class


def J(n: int) -> mx.Matrix:
    z, i = mx.zeros(n), mx.identity(n)
    return mx.block(z, i, mx.neg(i), z)


@dataclass(frozen=True)
class GSpElement:
    """A 2n x 2n rational matrix g with g J g^T = lam J."""

    n: int
    m: mx.Matrix
    lam: Fraction

    def __matmul__(self, other: "GSpElement") -> "GSpElement":
        if self.n != other.n:
            raise ShapeMismatch("rank mismatch")
        return GSpElement(self.n, mx.matmul(self.m, other.m), self.lam * other.lam)

    def inverse(self) -> "GSpElement":
        return GSpElement(self.n, mx.inverse(self.m), 1 / self.lam)

    def conj(self, lam) -> "GSpElement":
        """self^{i(lam)} = i(lam)^-1 self i(lam)."""
        lam = as_fraction(lam)
        n = self.n
        rows = []
        for r, row in enumerate(self.m):
            row = row[:n] + tuple(x * lam for x in row[n:])
            if r >= n:
                row = tuple(x / lam for x in row)
            rows.append(row)
        return GSpElement(n, tuple(rows), self.lam)

    @property
    def blocks(self):
        return mx.blocks(self.m)

    @property
    def is_sp(self) -> bool:
        return self.lam == 1

    @property
    def is_identity(self) -> bool:
        return self.m == mx.identity(2 * self.n)

    def one(self) -> "GSpElement":
        return g_one(self)

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.m)
        return f"GSpElement(n={self.n}, lam={self.lam}, [{rows}])"


def similitude(m: mx.Matrix) -> Optional[Fraction]:
    """The scalar lam with m J m^T = lam J, or None if there is none."""
    size = len(m)
    if size % 2 or any(len(row) != size for row in m):
        return None
    n = size // 2
    j = J(n)
    lhs = mx.mul_all(m, j, mx.transpose(m))
    lam = lhs[0][n]
    if lam == 0 or lhs != mx.scale(lam, j):
        return None
    return lam


def make_gsp(matrix, n: int = None, ctx=None) -> GSpElement:
    m = mx.mat(matrix)
    if n is not None and len(m) != 2 * n:
        raise ShapeMismatch(f"expected a {2 * n}x{2 * n} matrix")
    lam = similitude(m)
    if lam is None:
        raise NotSimilitude("matrix is not a symplectic similitude")
    return GSpElement(len(m) // 2, m, lam)


def identity(n: int) -> GSpElement:
    return GSpElement(n, mx.identity(2 * n), Fraction(1))


def i_lambda(lam, n: int) -> GSpElement:
    lam = as_fraction(lam)
    return GSpElement(n, mx.diag([1] * n + [lam] * n), lam)


def j_element(n: int) -> GSpElement:
    return GSpElement(n, J(n), Fraction(1))


def g_one(g: GSpElement) -> GSpElement:
    """i(lam(g)^-1) g, the Sp(2n) component of g."""
    if g.lam == 1:
        return g
    n, lam = g.n, g.lam
    rows = g.m[:n] + tuple(tuple(x / lam for x in row) for row in g.m[n:])
    return GSpElement(n, rows, Fraction(1))


def siegel_levi(a: mx.Matrix) -> GSpElement:
    """diag(a, a^-T)."""
    a = mx.mat(a)
    n = len(a)
    z = mx.zeros(n)
    return GSpElement(n, mx.block(a, z, z, mx.transpose(mx.inverse(a))), Fraction(1))


def siegel_unipotent(s: mx.Matrix) -> GSpElement:
    """[[I, s], [0, I]] for symmetric s."""
    s = mx.mat(s)
    n = len(s)
    if s != mx.transpose(s):
        raise ValueError("unipotent parameter must be symmetric")
    return GSpElement(n, mx.block(mx.identity(n), s, mx.zeros(n), mx.identity(n)), Fraction(1))


def lower_unipotent(s: mx.Matrix) -> GSpElement:
    s = mx.mat(s)
    n = len(s)
    if s != mx.transpose(s):
        raise ValueError("unipotent parameter must be symmetric")
    return GSpElement(n, mx.block(mx.identity(n), mx.zeros(n), s, mx.identity(n)), Fraction(1))


def torus(entries: Sequence, lam=1) -> GSpElement:
    """diag(t_1..t_n, lam/t_1..lam/t_n)."""
    t = [as_fraction(x) for x in entries]
    lam = as_fraction(lam)
    return GSpElement(len(t), mx.diag(t + [lam / x for x in t]), lam)


def embed_i_rn(h: GSpElement, r: int, n: int) -> GSpElement:
    """The block embedding of GSp(2r) into GSp(2n) on the last r coordinates."""
    if h.n != r:
        raise ShapeMismatch(f"element has rank {h.n}, expected {r}")
    if r > n:
        raise ShapeMismatch("r must not exceed n")
    a, b, c, d = h.blocks
    k = n - r
    size = 2 * n
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(k):
        out[i][i] = Fraction(1)
        out[n + i][n + i] = h.lam
    for i in range(r):
        for j in range(r):
            out[k + i][k + j] = a[i][j]
            out[k + i][n + k + j] = b[i][j]
            out[n + k + i][k + j] = c[i][j]
            out[n + k + i][n + k + j] = d[i][j]
    return GSpElement(n, mx.mat(out), h.lam)


def tau(j: int, n: int) -> GSpElement:
    """Cell representative: J_{2j} placed on the last j coordinates."""
    if not 0 <= j <= n:
        raise ShapeMismatch("cell index out of range")
    if j == 0:
        return identity(n)
    return embed_i_rn(j_element(j), j, n)


def cell_rank(g: GSpElement) -> int:
    """Rank of the lower-left block of g_1."""
    n = g.n
    return _rank_cached(tuple(row[:n] for row in g.m[n:]))


@functools.lru_cache(maxsize=200_000)
def _rank_cached(c: mx.Matrix) -> int:
    return mx.rank(c)


def in_omega_zero(g: GSpElement) -> bool:
    n = g.n
    return all(x == 0 for row in g.m[n:] for x in row[:n])


@dataclass(frozen=True)
class BruhatFactorization:
    """g = p1 * tau_j * p2 with p1, p2 in the Siegel parabolic."""

    p1: GSpElement
    j: int
    p2: GSpElement
    tau_j: GSpElement

    def product(self) -> GSpElement:
        return self.p1 @ self.tau_j @ self.p2


def _random_invertible(k: int, rng: random.Random) -> list:
    """A random k x k invertible rational matrix (permutation * unipotent * diagonal)."""
    if k == 0:
        return []
    perm = list(range(k))
    rng.shuffle(perm)
    m = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        m[i][perm[i]] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    for _ in range(k):
        i, j = rng.randrange(k), rng.randrange(k)
        if i != j:
            c = Fraction(rng.randint(-3, 3))
            m[i] = [x + c * y for x, y in zip(m[i], m[j])]
    return m


def _block_diag(a: list, b: list) -> mx.Matrix:
    ka, kb = len(a), len(b)
    out = [[Fraction(0)] * (ka + kb) for _ in range(ka + kb)]
    for i in range(ka):
        out[i][:ka] = a[i]
    for i in range(kb):
        out[ka + i][ka:] = b[i]
    return mx.mat(out)


def _equivalence_form(gamma: mx.Matrix, rng: Optional[random.Random]):
    """Invertible P, Q with P gamma Q = diag(0_{n-j}, -I_j); returns (P, Q, j)."""
    n = len(gamma)
    m = [list(r) for r in gamma]
    p = [list(r) for r in mx.identity(n)]
    cols = list(range(n))
    if rng is not None:
        rng.shuffle(cols)
    pivots = []
    row = 0
    for col in cols:
        cand = [r for r in range(row, n) if m[r][col] != 0]
        if not cand:
            continue
        piv = rng.choice(cand) if rng is not None else cand[0]
        m[row], m[piv] = m[piv], m[row]
        p[row], p[piv] = p[piv], p[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        p[row] = [x / pv for x in p[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
                p[r] = [x - f * y for x, y in zip(p[r], p[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    j = row
    order = pivots + [c for c in range(n) if c not in pivots]
    # m Q0 = [[I_j, F], [0, 0]] with Q0 the column permutation `order`.
    q0 = [[Fraction(int(order[c] == r)) for c in range(n)] for r in range(n)]
    f = [[m[i][order[c]] for c in range(j, n)] for i in range(j)]
    q1 = [list(r) for r in mx.identity(n)]
    for i in range(j):
        for c in range(n - j):
            q1[i][j + c] = -f[i][c]
    # Rotate the identity block to the bottom-right corner and negate it.
    shift = [[Fraction(int(r == (c + n - j) % n)) for c in range(n)] for r in range(n)]
    pmat = mx.neg(mx.matmul(mx.mat(shift), mx.mat(p)))
    qmat = mx.mul_all(mx.mat(q0), mx.mat(q1), mx.transpose(mx.mat(shift)))
    if rng is not None:
        r1, r2 = _random_invertible(n - j, rng), _random_invertible(j, rng)
        r1q = _random_invertible(n - j, rng)
        r2inv = [list(r) for r in mx.inverse(mx.mat(r2))] if j else []
        pmat = mx.matmul(_block_diag(r1, r2), pmat)
        qmat = mx.matmul(qmat, _block_diag(r1q, r2inv))
    return pmat, qmat, j


def bruhat_factor(g: GSpElement, rng: Optional[random.Random] = None) -> BruhatFactorization:
    """Factor g in Sp(2n) as p1 tau_j p2 with p1, p2 in Omega_0.

    Row and column reduction of the lower-left block by Siegel Levi
    elements, then symmetric shears clear the lower-right block.  With
    ``rng`` the pivots and the residual Levi freedom are randomized, giving a
    different but equally valid factorization.
    """
    if not g.is_sp:
        raise NotSimilitude("bruhat_factor expects an element of Sp(2n)")
    n = g.n
    _, _, gamma, _ = g.blocks
    pm, qm, j = _equivalence_form(gamma, rng)
    l1 = siegel_levi(mx.transpose(mx.inverse(pm)))
    r1 = siegel_levi(qm)
    g1 = l1 @ g @ r1
    k = n - j
    _, _, _, delta = g1.blocks
    d21 = [list(delta[k + i][:k]) for i in range(j)]
    d22 = [list(delta[k + i][k:]) for i in range(j)]
    s = [[Fraction(0)] * n for _ in range(n)]
    for i in range(j):
        for c in range(k):
            s[k + i][c] = d21[i][c]
            s[c][k + i] = d21[i][c]
        for c in range(j):
            s[k + i][k + c] = d22[i][c]
    r2 = siegel_unipotent(s)
    g2 = g1 @ r2
    _, _, _, delta2 = g2.blocks
    d11 = mx.mat([row[:k] for row in delta2[:k]])
    mt = _block_diag([list(r) for r in mx.inverse(d11)], [list(r) for r in mx.identity(j)])
    l2 = siegel_levi(mx.transpose(mx.inverse(mt)))
    g3 = l2 @ g2
    t = tau(j, n)
    u = g3 @ t.inverse()
    p1 = (l2 @ l1).inverse() @ u
    p2 = (r1 @ r2).inverse()
    fac = BruhatFactorization(p1, j, p2, t)
    assert in_omega_zero(p1) and in_omega_zero(p2), "factorization left Omega_0"
    assert fac.product().m == g.m, "factorization does not reproduce g"
    return fac


def _x_tau(j: int) -> int:
    # Calibrated so that n = 1 reproduces Kubota's convention x(J_2) = -1.
    return (-1) ** j


@functools.lru_cache(maxsize=200_000)
def _x_cached(m: mx.Matrix, p: int) -> SquareClass:
    n = len(m) // 2
    g = GSpElement(n, m, Fraction(1))
    a, _, c, _ = g.blocks
    if mx.is_zero(c):
        return square_class(mx.det(a), p)
    # With P c Q = diag(0, -I_j) and D11 the leading (n-j) block of
    # P d Q^-T, the factorization gives x = det P / (det Q det D11) (-1)^j.
    pm, qm, j = _equivalence_form(c, None)
    k = n - j
    dd = mx.mul_all(pm, g.blocks[3], mx.transpose(mx.inverse(qm)))
    d11 = mx.det(tuple(row[:k] for row in dd[:k])) if k else Fraction(1)
    return square_class(mx.det(pm) / (mx.det(qm) * d11) * _x_tau(j), p)


def _x_from_factorization(fac: BruhatFactorization, p: int) -> SquareClass:
    d1 = mx.det(fac.p1.blocks[0])
    d2 = mx.det(fac.p2.blocks[0])
    return square_class(d1 * d2 * _x_tau(fac.j), p)


def x_of(g: GSpElement, ctx, rng: Optional[random.Random] = None) -> SquareClass:
    """Rao's x-map Sp(2n) -> F*/F*^2.

    det of the upper-left block on Omega_0, extended through the
    factorization g = p1 tau_j p2 as x(p1) x(tau_j) x(p2).  Passing ``rng``
    evaluates through a randomized factorization (used to test that the
    value does not depend on the factorization).
    """
    p = ctx.p if hasattr(ctx, "p") else int(ctx)
    if not g.is_sp:
        raise NotSimilitude("x is defined on Sp(2n); apply g_one first")
    if rng is not None:
        return _x_from_factorization(bruhat_factor(g, rng), p)
    return _x_cached(g.m, p)


def _rand_q(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([i for i in range(-9, 10) if i]), rng.randint(1, 9))


def _rand_symmetric(n: int, rng: random.Random) -> mx.Matrix:
    s = [[Fraction(0)] * n for _ in range(n)]
    density = rng.random()
    for i in range(n):
        for j in range(i, n):
            if rng.random() < density:
                s[i][j] = s[j][i] = _rand_q(rng)
    return mx.mat(s)


def _random_generator(n: int, rng: random.Random) -> GSpElement:
    kind = rng.randrange(5)
    if kind == 0:
        return torus([_rand_q(rng) for _ in range(n)])
    if kind == 1:
        a = [list(r) for r in mx.identity(n)]
        if n > 1 and rng.random() < 0.5:
            i, j = rng.sample(range(n), 2)
            a[i], a[j] = a[j], a[i]
        elif n > 1:
            i, j = rng.sample(range(n), 2)
            a[i][j] = _rand_q(rng)
        else:
            a[0][0] = _rand_q(rng)
        return siegel_levi(a)
    if kind == 2:
        return siegel_unipotent(_rand_symmetric(n, rng))
    if kind == 3:
        return lower_unipotent(_rand_symmetric(n, rng))
    return tau(rng.randint(1, n), n)


def random_sp(n: int, ctx=None, seed=None, rng: Optional[random.Random] = None,
              max_length: int = 12) -> GSpElement:
    """A seeded random word of length <= 12 in Sp(2n) generators."""
    rng = rng if rng is not None else random.Random(seed)
    g = identity(n)
    for _ in range(rng.randint(1, max_length)):
        g = g @ _random_generator(n, rng)
    return g


def random_gsp(n: int, ctx=None, seed=None, rng: Optional[random.Random] = None) -> GSpElement:
    rng = rng if rng is not None else random.Random(seed)
    lam = _rand_q(rng)
    return i_lambda(lam, n) @ random_sp(n, rng=rng)


def random_omega_zero(n: int, rng: random.Random, lam=1) -> GSpElement:
    """Random element of the Siegel parabolic (times i(lam))."""
    a = [list(r) for r in _random_invertible(n, rng)]
    g = siegel_levi(a) @ siegel_unipotent(_rand_symmetric(n, rng))
    return i_lambda(lam, n) @ g if lam != 1 else g
