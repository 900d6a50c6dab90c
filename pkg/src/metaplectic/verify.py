"""Seeded invariant suites with machine-readable reports.

Each suite owns a generator seeded from (suite, p, seed), so a report is a
function of its arguments alone.  ``samples`` sets the size of the main
randomized check of a suite; secondary checks use fixed fractions of it.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np

from . import matrices as mx
from .characters import (
    Character,
    abs_char,
    conj_char,
    conj_char_direct,
    dual_central_identity,
    eta_char,
    omega_set,
    twist_action,
    unramified,
)
from .cover import (
    CoverElement,
    cocycle_gsp,
    cocycle_sp,
    conj_by,
    conj_by_product,
    cover_mul,
    inverse_sign,
    kubota_cocycle,
    kubota_x,
)
from .deciders import (
    PrincipalSeriesDatum,
    Status,
    TorusGroup,
    counterexample_build,
    gsp4_reducibility,
    weyl_orbit,
    whittaker_orbit_count,
)
from .errors import UnknownSuite, UnsupportedCocyclePath
from .padic import (
    FourthRoot,
    PadicContext,
    PsiSpec,
    hilbert_oracle,
    hilbert_symbol,
    square_class,
    weil_factor,
    weil_gauss_oracle,
)
from .structure import (
    CentralElement,
    LeviType,
    center_image,
    center_mul,
    levi_type,
    noncommuting_witness,
    shapes,
    x_on_center,
    z_t_reps,
)
from .symplectic import (
    cell_rank,
    g_one,
    i_lambda,
    random_gsp,
    random_omega_zero,
    random_sp,
    x_of,
)
from .torus import (
    GenuineTorusChar,
    commutator_check,
    eigen_project,
    induce,
    induction_roundtrip,
    random_torus_cover,
    restrict_decompose,
)

DEFAULT_PRIMES = (3, 5, 7)
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 42
TOL = 1e-10


@dataclass
class SuiteReport:
    suite: str
    p: int
    seed: int
    samples: int
    checks: int = 0
    failures: List[dict] = field(default_factory=list)
    elapsed: float = 0.0
    tally: Dict[str, List[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "p": self.p,
            "seed": self.seed,
            "samples": self.samples,
            "checks": self.checks,
            "failures": self.failures,
            "tally": {k: {"checks": v[0], "failed": v[1]} for k, v in sorted(self.tally.items())},
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


class _Recorder:
    """Collects check outcomes for one suite run."""

    def __init__(self, report: SuiteReport, limit: int = 20):
        self.report = report
        self.limit = limit

    def check(self, name: str, ok: bool, inputs=None, expected=None, actual=None) -> bool:
        self.report.checks += 1
        counts = self.report.tally.setdefault(name, [0, 0])
        counts[0] += 1
        counts[1] += not ok
        if not ok and len(self.report.failures) < self.limit:
            self.report.failures.append({
                "check": name,
                "inputs": _plain(inputs),
                "expected": _plain(expected),
                "actual": _plain(actual),
            })
        elif not ok:
            self.report.failures.append({"check": name})
        return ok


def _plain(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, complex):
        return [repr(obj.real), repr(obj.imag)]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if hasattr(obj, "m") and hasattr(obj, "lam"):
        return {"matrix": [[str(x) for x in row] for row in obj.m], "lam": str(obj.lam)}
    return str(obj)


def _count(samples: int, fraction: float) -> int:
    return max(1, int(round(samples * fraction)))


def _rand_nonzero(rng: random.Random, p: int, spread: int = 3) -> Fraction:
    unit = Fraction(rng.choice([k for k in range(-50, 51) if k % p]), rng.choice([k for k in range(1, 30) if k % p]))
    return unit * Fraction(p) ** rng.randint(-spread, spread)


# suites ---------------------------------------------------------------------

def suite_hilbert(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    for _ in range(samples):
        a, b = _rand_nonzero(rng, p), _rand_nonzero(rng, p)
        h, o = hilbert_symbol(a, b, ctx), hilbert_oracle(a, b, ctx)
        rec.check("closed form = oracle", h == o, [a, b], o, h)
    classes = ctx.classes
    for a in classes:
        for b in classes:
            h = hilbert_symbol(a, b, ctx)
            rec.check("symmetry", h == hilbert_symbol(b, a, ctx), [a, b])
            rec.check("(a,b) = (a,-ab)", h == hilbert_symbol(a, -a.rep * b.rep, ctx), [a, b])
            for c in classes:
                rec.check("bilinearity", hilbert_symbol(a, b * c, ctx)
                          == h * hilbert_symbol(a, c, ctx), [a, b, c])
        if not a.is_square:
            rec.check("non-degeneracy", any(hilbert_symbol(a, b, ctx) == -1 for b in classes), [a])
        else:
            rec.check("square is in the radical", all(hilbert_symbol(a, b, ctx) == 1 for b in classes), [a])


def suite_weil(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    psi = PsiSpec(ctx)
    classes = ctx.classes
    for a in classes:
        g = weil_factor(psi, a)
        o = weil_gauss_oracle(psi, a.rep)
        rec.check("table = Gauss-sum oracle", abs(g.value - o) < 1e-9, [a], o, g.value)
        rec.check("gamma^-1 = gamma_{psi^-1}",
                  g.inverse() == weil_factor(psi.twisted(-1), a), [a])
        for b in classes:
            lhs = weil_factor(psi, a.rep * b.rep)
            rhs = g * weil_factor(psi, b)
            if hilbert_symbol(a, b, ctx) == -1:
                rhs = rhs * FourthRoot.from_sign(-1)
            rec.check("gamma(ab) = gamma(a) gamma(b) (a,b)", lhs == rhs, [a, b], rhs, lhs)
            tw = weil_factor(psi.twisted(b.rep), a)
            exp = g if hilbert_symbol(b, a, ctx) == 1 else g * FourthRoot.from_sign(-1)
            rec.check("gamma_{psi_b} = eta_b gamma_psi", tw == exp, [a, b], exp, tw)
    for _ in range(_count(samples, 0.05)):
        a, s = _rand_nonzero(rng, p), _rand_nonzero(rng, p)
        rec.check("gamma trivial on squares",
                  weil_factor(psi, a * s * s) == weil_factor(psi, a), [a, s])


def _omega_zero_det(g) -> Fraction:
    n = g.n
    return mx.det(tuple(row[:n] for row in g.m[:n]))


def suite_xmap(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    per_rank = _count(samples, 0.5)
    for n in (2, 3):
        for _ in range(per_rank):
            g = random_sp(n, rng=rng)
            j = cell_rank(g)
            x = x_of(g, p)
            p1, p2 = random_omega_zero(n, rng), random_omega_zero(n, rng)
            lhs = x_of(p1 @ g @ p2, p)
            rhs = x_of(p1, p) * x * x_of(p2, p)
            rec.check("x(p1 g p2) = x(p1) x(g) x(p2)", lhs == rhs, [p1, g, p2], rhs, lhs)
            inv = x_of(g.inverse(), p)
            rec.check("x(g^-1) = (-1)^j x(g)", inv == x * (-1) ** j, [g], x * (-1) ** j, inv)
            lam = _rand_nonzero(rng, p, 2)
            xl = x_of(g.conj(lam), p)
            rec.check("x(g^{i(lam)}) = lam^j x(g)", xl == x * lam ** j, [g, lam], x * lam ** j, xl)
            rec.check("Omega_0 value is det(a)",
                      x_of(p1, p) == square_class(_omega_zero_det(p1), p), [p1])
        for _ in range(_count(samples, 0.02)):
            g = random_sp(n, rng=rng)
            rec.check("x independent of the factorization",
                      x_of(g, p, rng=rng) == x_of(g, p), [g])
    for _ in range(per_rank):
        g = random_sp(1, rng=rng)
        rec.check("n = 1 agrees with Kubota", x_of(g, p) == kubota_x(g, p), [g])


def _cocycle_identity(g, h, k, p) -> Optional[bool]:
    try:
        a = cocycle_sp(g, h, p)[0] * cocycle_sp(g @ h, k, p)[0]
        b = cocycle_sp(g, h @ k, p)[0] * cocycle_sp(h, k, p)[0]
    except UnsupportedCocyclePath:
        return None
    return a == b


def _coc_inv(g, p) -> int:
    j = cell_rank(g)
    x = x_of(g, p)
    val = hilbert_symbol(x, x * (-1) ** j, p)
    if (j * (j - 1) // 2) % 2:
        val *= hilbert_symbol(-1, -1, p)
    return val


def suite_cocycle(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    # n = 1: full group law, Kubota values.
    for _ in range(samples):
        g, h, k = (random_gsp(1, rng=rng) for _ in range(3))
        lhs = cocycle_gsp(g, h, p)[0] * cocycle_gsp(g @ h, k, p)[0]
        rhs = cocycle_gsp(g, h @ k, p)[0] * cocycle_gsp(h, k, p)[0]
        rec.check("2-cocycle identity, GSp(2)", lhs == rhs, [g, h, k])
        g1, h1 = g_one(g), g_one(h)
        rec.check("rule value = Kubota", cocycle_sp(g1, h1, p)[0] == kubota_cocycle(g1, h1, p), [g1, h1])
    # n = 2: rule-covered triples, one factor drawn from the Siegel parabolic.
    done = 0
    target = _count(samples, 0.1)
    while done < target:
        pool = [random_sp(2, rng=rng, max_length=6), random_omega_zero(2, rng)]
        g, h, k = (rng.choice(pool) if rng.random() < 0.5 else random_omega_zero(2, rng)
                   for _ in range(3))
        res = _cocycle_identity(g, h, k, p)
        if res is None:
            continue
        done += 1
        rec.check("2-cocycle identity, Sp(4)", res, [g, h, k])
    for _ in range(_count(samples, 0.05)):
        n = rng.randint(1, 3)
        g = random_sp(n, rng=rng)
        rec.check("inverse sign reduces to the Sp formula at lam = 1",
                  inverse_sign(g, p) == _coc_inv(g, p) == cocycle_sp(g, g.inverse(), p)[0], [g])
        gg = random_gsp(n, rng=rng)
        rec.check("inverse sign = c~(g, g^-1)",
                  inverse_sign(gg, p) == cocycle_gsp(gg, gg.inverse(), p)[0], [gg])
    for _ in range(_count(samples, 0.05)):
        n = rng.randint(1, 3)
        y = _rand_nonzero(rng, p, 2)
        s = random_gsp(n, rng=rng)
        rec.check("c~(i(y), s) = 1", cocycle_gsp(i_lambda(y, n), s, p)[0] == 1, [y, s])
    for _ in range(_count(samples, 0.1)):
        lam = _rand_nonzero(rng, p, 2)
        g = random_omega_zero(1, rng, lam)
        t = CoverElement(random_gsp(1, rng=rng), rng.choice([1, -1]))
        a = conj_by(g, t, p)
        b = conj_by_product(CoverElement(g, 1), t, p)
        rec.check("d(g, h) = brute-force conjugation sign",
                  a.g == b.g and a.eps == b.eps, [g, t.g], b.eps, a.eps)


def suite_structure(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    full = sorted(ctx.classes)
    for n in range(1, 5):
        for t in shapes(n):
            img = center_image(t, ctx)
            odd = levi_type(t) is LeviType.ODD
            rec.check("center image is full iff odd type", (img == full) == odd, [str(t)],
                      odd, [str(c) for c in img])
            reps = z_t_reps(t, ctx)
            rec.check("Z_t has the predicted size", len(reps) == (ctx.index if odd else 1), [str(t)])
            for z in reps:
                x = x_on_center(z, ctx)
                w = noncommuting_witness(z, ctx)
                rec.check("commutation witness iff x is a non-square",
                          (w is not None) == (not x.is_square), [str(t), str(x)])
            params = [c.rep for c in ctx.classes]
            elems = [CentralElement(t, a[:-1], a[-1]) for a in itertools.product(params, repeat=t.r + 1)]
            if len(elems) > 16:
                elems = rng.sample(elems, 16)
            for z1 in elems:
                for z2 in elems:
                    prod = center_mul(z1, z2, ctx)
                    law = cover_mul(z1.cover(), z2.cover(), ctx)
                    rec.check("center product = cover product",
                              law.g == prod.matrix and law.eps == prod.eps,
                              [str(t), z1.a, z1.b, z2.a, z2.b], prod.eps, law.eps)


def suite_characters(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    psi = PsiSpec(ctx)
    etas = [unramified(p, Fraction(1, 3)), eta_char(ctx.nonresidue, p) * abs_char(p, Fraction(1, 5))]
    for n in range(1, 4):
        for t in shapes(n):
            eta_prime = [rng.choice(etas) for _ in range(t.r + 1)]
            omegas = omega_set(eta_prime, t, psi, ctx)
            odd = levi_type(t) is LeviType.ODD
            rec.check("|Omega_chi|", len(omegas) == (ctx.index if odd else 1), [str(t)], ctx.index, len(omegas))
            zs = [z for z in z_t_reps(t, ctx)]
            genuine = [CentralElement(t, z.a, z.b, -1) for z in zs]
            for om in omegas:
                rec.check("extension is genuine",
                          all(abs(om(g) + om(z)) < TOL for g, z in zip(genuine, zs)), [str(t)])
            if not odd:
                continue
            start = omegas[0]
            images = [twist_action(start, a.rep) for a in ctx.classes]
            distinct = all(not images[i].agrees_with(images[j], zs)
                           for i in range(len(images)) for j in range(i))
            covers = all(any(om.agrees_with(im, zs) for im in images) for om in omegas)
            rec.check("Z_t acts simply transitively on Omega_chi", distinct and covers, [str(t)])
            for a in ctx.classes:
                g = i_lambda(a.rep, n)
                for z in zs:
                    direct = conj_char_direct(start, g, z, ctx)
                    rec.check("conjugated character matches the group law",
                              abs(conj_char(start, g)(z) - direct) < TOL, [str(t), a, z.a, z.b])
    for n in (1, 2, 3):
        for chi in etas:
            rec.check("dual central identity",
                      dual_central_identity(chi, psi, n, ctx, samples=_count(samples, 0.02),
                                            seed=rng.randrange(1 << 30)), [n, chi.to_json()])


def _random_char(p: int, rng: random.Random) -> Character:
    e = rng.randrange((p - 1) if p > 2 else 4)
    return Character(p, e, Fraction(rng.randint(-6, 6), 4), Fraction(rng.randint(0, 11), 12))


def suite_torusreps(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    psi = PsiSpec(ctx)
    reps = {}
    for n in (1, 2):
        reps[n] = induce(GenuineTorusChar([_random_char(p, rng) for _ in range(n)], psi,
                                          _random_char(p, rng)))
        rec.check("dimension is [F*:F*^2]", reps[n].dim == ctx.index, [n], ctx.index, reps[n].dim)
    for _ in range(samples):
        n = rng.choice((1, 2))
        rho = reps[n]
        s, t = random_torus_cover(n, rng), random_torus_cover(n, rng)
        st = cover_mul(s, t, p)
        err = float(np.abs(rho(st) - rho(s) @ rho(t)).max())
        rec.check("rho is a homomorphism", err < TOL, [s.g, s.eps, t.g, t.eps], 0.0, err)
    for _ in range(_count(samples, 0.02)):
        n = rng.choice((1, 2))
        s, t = random_torus_cover(n, rng), random_torus_cover(n, rng)
        rec.check("commutator sign", commutator_check(s, t, p), [s.g, t.g])
    rounds = max(1, min(20, samples))
    for k in range(rounds):
        n = 1 + k % 2
        rho = induce(GenuineTorusChar([_random_char(p, rng) for _ in range(n)], psi,
                                      _random_char(p, rng)))
        dec = restrict_decompose(rho)
        rec.check("restriction has multiplicity one", all(m == 1 for _, m in dec), [n])
        projs = [eigen_project(rho, om) for om, _ in dec]
        ok = all(np.abs(P @ P - P).max() < TOL for P in projs)
        ok = ok and all(np.abs(projs[i] @ projs[j]).max() < TOL
                        for i in range(len(projs)) for j in range(len(projs)) if i != j)
        ok = ok and np.abs(sum(projs) - np.eye(rho.dim)).max() < TOL
        rec.check("eigen-projections are orthogonal idempotents", bool(ok), [n])
        om = dec[rng.randrange(len(dec))][0]
        rec.check("induction roundtrip", induction_roundtrip(rho, om), [n])


def _generic_unitary(p: int, rng: random.Random) -> Character:
    e = rng.randrange(p - 1)
    return Character(p, e, Fraction(0), rng.random() * math.sqrt(2) % 1.0)


def suite_deciders(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is outside the decider scope")
    ctx = PadicContext(p)
    psi = PsiSpec(ctx)

    def datum(a, b):
        return PrincipalSeriesDatum(2, (a, b), psi)

    cases = []
    for k in range(5):
        xi = Character(p, rng.randrange(p - 1), 0, Fraction(rng.randint(0, 9), 10))
        s = Fraction(rng.randint(-8, 8), 7)
        cases.append((datum(xi * abs_char(p, s + Fraction(1, 2)), xi * abs_char(p, s - Fraction(1, 2))), "II"))
        b = rng.choice(ctx.classes).rep
        other = Character(p, rng.randrange(p - 1), Fraction(rng.randint(-5, 5), 3), Fraction(1, 7))
        cases.append((datum(other, eta_char(b, p) * abs_char(p, Fraction(1, 2))), "III"))
    chi4 = unramified(p, Fraction(1, 4))
    cases.append((datum(chi4, chi4), "I"))
    for d, tag in cases:
        v = gsp4_reducibility(d)
        rec.check("reducibility family", v.status is Status.REDUCIBLE and tag in v.tags,
                  [c.to_json() for c in d.chis], tag, v.to_json())
        for pair in weyl_orbit(d):
            w = gsp4_reducibility(datum(*pair))
            rec.check("verdict invariant on the Weyl orbit",
                      w.status is v.status and w.tags == v.tags,
                      [c.to_json() for c in pair], v.tags, w.tags)
    for _ in range(_count(samples, 0.1)):
        d = datum(_generic_unitary(p, rng), _generic_unitary(p, rng))
        v = gsp4_reducibility(d)
        rec.check("generic unitary pair is irreducible", v.status is Status.IRREDUCIBLE,
                  [c.to_json() for c in d.chis], "Irreducible", str(v.status))
    ce = counterexample_build(p, ctx)
    for fact, ok in ce.log:
        rec.check("counterexample: " + fact, ok, [p])


def suite_whittaker(rec: _Recorder, p: int, rng: random.Random, samples: int) -> None:
    ctx = PadicContext(p)
    for n in range(1, 5):
        for t in shapes(n):
            for group in TorusGroup:
                res = whittaker_orbit_count(t, group, ctx)
                if group is TorusGroup.TPRIME or t.tail == 0:
                    exp = 1
                else:
                    exp = ctx.index
                rec.check("Whittaker orbit count", res.count == exp, [str(t), group.value],
                          exp, res.count)
                rec.check("representatives lie in distinct orbits",
                          len(set(r.coefficients for r in res.representatives)) == res.count,
                          [str(t), group.value])


SUITES: Dict[str, Callable] = {
    "hilbert": suite_hilbert,
    "weil": suite_weil,
    "xmap": suite_xmap,
    "cocycle": suite_cocycle,
    "structure": suite_structure,
    "characters": suite_characters,
    "torusreps": suite_torusreps,
    "deciders": suite_deciders,
    "whittaker": suite_whittaker,
}

# Suites whose every check is in scope at p = 2.
P2_SUITES = ("hilbert", "structure")


def run_suite(name: str, p: int = 3, seed: int = DEFAULT_SEED,
              samples: int = DEFAULT_SAMPLES) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = SuiteReport(name, p, seed, samples)
    rng = random.Random(f"{name}:{p}:{seed}")
    start = time.perf_counter()
    SUITES[name](_Recorder(report), p, rng, samples)
    report.elapsed = time.perf_counter() - start
    return report


@dataclass
class AggregateReport:
    reports: List[SuiteReport]

    @property
    def checks(self) -> int:
        return sum(r.checks for r in self.reports)

    @property
    def failures(self) -> int:
        return sum(len(r.failures) for r in self.reports)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self, timing: bool = False) -> dict:
        return {
            "checks": self.checks,
            "failures": self.failures,
            "ok": self.ok,
            "suites": [r.to_json(timing) for r in self.reports],
        }


def run_all(primes: Iterable[int] = DEFAULT_PRIMES, seed: int = DEFAULT_SEED,
            samples: int = DEFAULT_SAMPLES, suites: Optional[Iterable[str]] = None,
            include_p2: bool = True) -> AggregateReport:
    """Every suite at every prime; p = 2 additionally for the p = 2 suites."""
    names = list(suites) if suites is not None else list(SUITES)
    primes = sorted(set(primes))
    if include_p2 and 2 not in primes:
        extra = [(n, 2) for n in names if n in P2_SUITES]
    else:
        extra = []
    jobs = [(n, p) for p in primes for n in names if p != 2 or n in P2_SUITES] + extra
    reports = [run_suite(n, p, seed, samples) for n, p in jobs]
    reports.sort(key=lambda r: (r.suite, r.p))
    return AggregateReport(reports)


def dumps(report, timing: bool = False) -> str:
    return json.dumps(report.to_json(timing), indent=2, sort_keys=True)
