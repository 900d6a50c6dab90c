"""Reducibility verdicts for genuine principal series and Whittaker orbit counts.

GSp(4): for p odd, pi(chi) with chi_0 = chi_1 (x) chi_2 [x] gamma_psi is reducible
iff chi_0 is Weyl conjugate to one of

  I.   chi_1 eta_a (x) chi_2 eta_a, with a a non-square;
  II.  xi |.|^{s+1/2} (x) xi |.|^{s-1/2};
  III. xi |.|^s (x) eta_b |.|^{1/2}.

II and III are tested in the equivalent closed forms chi_1'/chi_2' = |.| and
(chi_2')^2 = |.|: any tame character is a unitary one times |.|^s with s real,
so the existential quantifiers over xi, s and b drop out.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .characters import (
    Character,
    _gamma,
    abs_char,
    eta_char,
    trivial,
    unramified,
)
from .cover import CoverElement, conj_by
from .errors import UnsupportedPrime, UnsupportedRamification
from .padic import PadicContext, PsiSpec, SquareClass, hilbert_symbol, square_class
from .structure import LeviShape
from .symplectic import g_one, i_lambda, torus, x_of

Pair = Tuple[Character, Character]


class Status(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PrincipalSeriesDatum:
    """Inducing data chi_1 (x) ... (x) chi_n [x] gamma_psi, with optional xi."""

    n: int
    chis: Tuple[Character, ...]
    psi: PsiSpec
    xi: Optional[Character] = None

    def __post_init__(self):
        object.__setattr__(self, "chis", tuple(self.chis))
        if len(self.chis) != self.n:
            raise ValueError("one character per torus coordinate is required")

    @property
    def p(self) -> int:
        return self.psi.context.p

    def torus_value(self, t: CoverElement) -> complex:
        """eps gamma_psi(x(t_1)) chi_1(t_11) ... chi_n(t_nn) on the Sp torus cover."""
        g = t.g
        x = x_of(g_one(g), self.p)
        val = complex(t.eps) * _gamma(self.psi, x.rep)
        for k, chi in enumerate(self.chis):
            val *= chi(g.m[k][k])
        return val


@dataclass
class Verdict:
    status: Status
    tag: Optional[str] = None
    witness: Optional[Pair] = None
    orbit: List[Pair] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)
    note: str = ""

    def to_json(self):
        def pair(pr):
            return [c.to_json() for c in pr]

        out = {
            "status": str(self.status),
            "witness": None if self.tag is None else {
                "tag": self.tag,
                "element": pair(self.witness) if self.witness else None,
            },
            "orbit": [pair(pr) for pr in self.orbit],
        }
        if self.tags:
            out["conditions"] = list(self.tags)
        if self.note:
            out["note"] = self.note
        return out


def _pair_in(pair: Pair, items: Sequence[Pair]) -> bool:
    return any(pair[0] == q[0] and pair[1] == q[1] for q in items)


def weyl_orbit(datum: PrincipalSeriesDatum) -> List[Pair]:
    """Orbit of (chi_1, chi_2) under swap and (chi_1, chi_2) -> (chi_1, chi_2^-1).

    The gamma_psi factor is carried along unchanged.
    """
    if datum.n != 2:
        raise ValueError("the Weyl orbit engine handles n = 2")
    start = (datum.chis[0], datum.chis[1])
    orbit = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for c1, c2 in frontier:
            for img in ((c2, c1), (c1, c2.inverse())):
                if not _pair_in(img, orbit):
                    orbit.append(img)
                    nxt.append(img)
        frontier = nxt
    return orbit


def _check_scope(datum: PrincipalSeriesDatum) -> None:
    p = datum.p
    if p == 2:
        raise UnsupportedPrime("the GSp(4) classification needs odd residual characteristic")
    for chi in datum.chis:
        if chi.p != p:
            raise UnsupportedRamification("character is not a tame character of Q_p^*")


def gsp4_reducibility(datum: PrincipalSeriesDatum, ctx=None) -> Verdict:
    _check_scope(datum)
    p = datum.p
    orbit = weyl_orbit(datum)
    chi1, chi2 = datum.chis
    absv = abs_char(p, 1)
    nonsquares = [c for c in PadicContext(p).classes if not c.is_square]
    twisted = [(chi1 * eta_char(a.rep, p), chi2 * eta_char(a.rep, p)) for a in nonsquares]
    found = {}
    for pr in orbit:
        if "I" not in found and _pair_in(pr, twisted):
            found["I"] = pr
        if "II" not in found and pr[0] * pr[1].inverse() == absv:
            found["II"] = pr
        if "III" not in found and pr[1] * pr[1] == absv:
            found["III"] = pr
    tags = [t for t in ("I", "II", "III") if t in found]
    if not tags:
        return Verdict(Status.IRREDUCIBLE, orbit=orbit)
    return Verdict(Status.REDUCIBLE, tags[0], found[tags[0]], orbit, tags)


def odd_unitary_rule(datum: PrincipalSeriesDatum, ctx=None) -> Verdict:
    """Unitary genuine principal series: irreducible for odd n."""
    if not all(chi.is_unitary for chi in datum.chis):
        raise ValueError("the rule applies to unitary inducing data")
    if datum.n % 2:
        return Verdict(Status.IRREDUCIBLE, "odd-unitary")
    if datum.n == 2:
        return gsp4_reducibility(datum, ctx)
    return Verdict(Status.UNKNOWN, note=(
        "even n beyond GSp(4): reducible unitary principal series exist "
        "(order-4 construction) but no complete criterion is implemented"))


@dataclass
class Counterexample:
    datum: PrincipalSeriesDatum
    chi: Character
    b: Fraction
    xi: Character
    log: List[Tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.log)


def _random_torus_sp(n: int, rng: random.Random) -> CoverElement:
    entries = [Fraction(rng.choice([k for k in range(-30, 31) if k]), rng.randint(1, 30))
               for _ in range(n)]
    return CoverElement(torus(entries), rng.choice([1, -1]))


def counterexample_build(p: int, ctx=None, n: int = 2, samples: int = 25,
                         seed: int = 0) -> Counterexample:
    """Order-4 unramified chi with chi eta_b = chi^-1, and its checks."""
    if p == 2:
        raise UnsupportedPrime("the construction is stated for odd p")
    pctx = ctx if isinstance(ctx, PadicContext) else PadicContext(p)
    psi = PsiSpec(pctx)
    chi = unramified(p, Fraction(1, 4))
    b = Fraction(pctx.nonresidue)
    eta_b = eta_char(b, p)
    xi = trivial(p) if (chi(-1) ** n).real > 0 else eta_char(pctx.nonresidue * p, p)
    log: List[Tuple[str, bool]] = []
    log.append(("chi has order 4", chi.order == 4))
    log.append(("b is not a square", not square_class(b, p).is_square))
    log.append(("eta_b is unramified and quadratic",
                eta_b.is_unramified and eta_b.is_quadratic and eta_b != trivial(p)))
    log.append(("chi eta_b = chi^-1", chi * eta_b == chi.inverse()))

    datum = PrincipalSeriesDatum(n, (chi,) * n, psi, xi)
    twisted = PrincipalSeriesDatum(n, (chi * eta_b,) * n, psi, xi)
    rng = random.Random(seed)
    conj_ok = psi_ok = True
    sigma = i_lambda(b, n)
    psi_b = psi.twisted(b)
    for _ in range(samples):
        t = _random_torus_sp(n, rng)
        # chi_psi composed with conjugation by i(b), through the cover group law
        lhs = datum.torus_value(conj_by(sigma, t, p))
        if abs(lhs - twisted.torus_value(t)) > 1e-12:
            conj_ok = False
        x = x_of(g_one(t.g), p)
        if abs(_gamma(psi_b, x.rep) - hilbert_symbol(b, x, p) * _gamma(psi, x.rep)) > 1e-12:
            psi_ok = False
    log.append(("chi_psi^{i(b)} = (chi eta_b)_psi on the torus cover", conj_ok))
    log.append(("gamma_{psi_b} = eta_b gamma_psi", psi_ok))
    log.append(("xi(-1) = chi^n(-1)", abs(xi(-1) - chi(-1) ** n) < 1e-12))
    # The central extension must agree with chi_psi on -I, the overlap with T.
    minus = CoverElement(torus([-1] * n), 1)
    ext = xi(-1) / _gamma(psi, Fraction((-1) ** n))
    log.append(("central extension matches chi_psi at -I",
                abs(ext - datum.torus_value(minus)) < 1e-12))
    if n == 2:
        v = gsp4_reducibility(datum)
        log.append(("GSp(4) verdict is Reducible(I)",
                    v.status is Status.REDUCIBLE and v.tag == "I"))
    return Counterexample(datum, chi, b, xi, log)


# Whittaker orbits ----------------------------------------------------------

class TorusGroup(str, enum.Enum):
    T = "T"
    TPLUS = "T+"
    TPRIME = "T'"

    @classmethod
    def parse(cls, text: str) -> "TorusGroup":
        key = text.strip().lower().replace("plus", "+").replace("prime", "'")
        for g in cls:
            if g.value.lower() == key:
                return g
        raise ValueError(f"unknown torus group {text!r}")


@dataclass(frozen=True)
class NondegChar:
    shape: LeviShape
    coefficients: Tuple[SquareClass, ...]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


def simple_roots(t: LeviShape) -> List[Tuple[str, int]]:
    """Simple roots of N_t: ("short", i) for e_i - e_{i+1}, ("long", n-1) for 2 e_n."""
    roots = []
    off = 0
    for size in t.parts:
        roots += [("short", off + k) for k in range(size - 1)]
        off += size
    if t.tail:
        roots += [("short", off + k) for k in range(t.tail - 1)]
        roots.append(("long", t.n - 1))
    return roots


def _root_value(root, entries, lam):
    kind, i = root
    if kind == "short":
        return entries[i] / entries[i + 1]
    return entries[i] * entries[i] / lam


@dataclass
class WhittakerOrbits:
    count: int
    representatives: List[NondegChar]
    orbit_sizes: List[int]


def whittaker_orbit_count(shape: LeviShape, group, ctx) -> WhittakerOrbits:
    """Orbits of non-degenerate characters of N_t under the covered torus group.

    Characters are coefficient vectors in (F*/F*^2)^m, and t acts on the
    coefficient of root alpha by alpha(t).
    """
    group = TorusGroup.parse(group) if isinstance(group, str) else TorusGroup(group)
    pctx = ctx if isinstance(ctx, PadicContext) else PadicContext(int(ctx))
    p = pctx.p
    classes = list(pctx.classes)
    roots = simple_roots(shape)
    n = shape.n
    gens = []
    one = Fraction(1)
    for i in range(n):
        for c in classes:
            entries = [one] * n
            entries[i] = c.rep
            gens.append((entries, one))
    if group is TorusGroup.TPRIME:
        gens += [([one] * n, c.rep) for c in classes]
    shifts = []
    for entries, lam in gens:
        shifts.append(tuple(square_class(_root_value(r, entries, lam), p) for r in roots))

    import itertools

    space = list(itertools.product(classes, repeat=len(roots)))
    seen = {}
    orbits: List[List[Tuple[SquareClass, ...]]] = []
    for vec in space:
        if vec in seen:
            continue
        idx = len(orbits)
        seen[vec] = idx
        members = [vec]
        stack = [vec]
        while stack:
            v = stack.pop()
            for sh in shifts:
                w = tuple(a * b for a, b in zip(v, sh))
                if w not in seen:
                    seen[w] = idx
                    members.append(w)
                    stack.append(w)
        orbits.append(members)
    # Preferred representatives psi^{i(a)} = (1, ..., 1, a).
    reps = []
    unit = classes[0]
    for members in orbits:
        pref = None
        for a in classes:
            cand = (unit,) * (len(roots) - 1) + (a,) if roots else ()
            if cand in members:
                pref = cand
                break
        reps.append(NondegChar(shape, pref if pref is not None else min(members)))
    return WhittakerOrbits(len(orbits), reps, [len(m) for m in orbits])
