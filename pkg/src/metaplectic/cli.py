"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports failures,
2 on bad input or an unsupported case.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .characters import Character, omega_set
from .cover import (
    CoverElement,
    cocycle_gsp,
    conj_by,
    cover_inverse,
    cover_mul,
)
from .deciders import (
    PrincipalSeriesDatum,
    counterexample_build,
    gsp4_reducibility,
    whittaker_orbit_count,
)
from .errors import MetaplecticError
from .padic import (
    FourthRoot,
    PadicContext,
    PsiSpec,
    gamma_value,
    hilbert_symbol,
    square_class,
    weil_factor,
)
from .structure import CentralElement, LeviShape, center_image, center_mul, x_on_center, z_t_reps
from .symplectic import bruhat_factor, cell_rank, g_one, make_gsp, x_of
from . import verify as vf


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _matrix_source(text: str):
    """Inline JSON or a path to a JSON file."""
    raw = text if text.lstrip().startswith("[") else Path(text).read_text()
    rows = json.loads(raw)
    return [[Fraction(str(x)) for x in row] for row in rows]


def _gsp(text: str):
    return make_gsp(_matrix_source(text))


def _matrix_json(g) -> list:
    return [[str(x) for x in row] for row in g.m]


def _character(text: str, p: int) -> Character:
    text = text.strip()
    obj = json.loads(text) if text.startswith("{") else text
    return Character.from_json(obj, p)


def _central(text: str, shape: LeviShape) -> CentralElement:
    """"a_1,...,a_r;b" (b defaults to 1)."""
    head, _, tail = text.partition(";")
    a = tuple(Fraction(s) for s in head.split(",") if s.strip())
    b = Fraction(tail) if tail.strip() else Fraction(1)
    return CentralElement(shape, a, b)


def _central_str(z: CentralElement) -> str:
    return ",".join(str(a) for a in z.a) + ";" + str(z.b)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# handlers --------------------------------------------------------------------

def cmd_hilbert(args):
    print(f"{hilbert_symbol(args.a, args.b, args.p):+d}")


def cmd_weil(args):
    psi = PsiSpec(PadicContext(args.p), args.shift)
    if args.p == 2:
        print(FourthRoot.from_complex(gamma_value(psi, args.a)))
    else:
        print(weil_factor(psi, args.a))


def cmd_squareclass(args):
    print(square_class(args.a, args.p))


def cmd_xmap(args):
    print(x_of(g_one(_gsp(args.matrix)), args.p))


def cmd_cellrank(args):
    print(cell_rank(g_one(_gsp(args.matrix))))


def cmd_bruhat(args):
    g = g_one(_gsp(args.matrix))
    fac = bruhat_factor(g)
    _emit({"p1": _matrix_json(fac.p1), "j": fac.j, "p2": _matrix_json(fac.p2),
           "x": str(x_of(g, args.p))})


def cmd_cocycle(args):
    val, path = cocycle_gsp(_gsp(args.g), _gsp(args.h), args.p)
    _emit({"value": val, "path": path.value})


def cmd_covermul(args):
    s = CoverElement(_gsp(args.g), args.eps)
    t = CoverElement(_gsp(args.h), args.eps2)
    out = cover_mul(s, t, args.p)
    _emit({"matrix": _matrix_json(out.g), "eps": out.eps, "path": out.path.value})


def cmd_inverse(args):
    out = cover_inverse(CoverElement(_gsp(args.g), args.eps), args.p)
    _emit({"matrix": _matrix_json(out.g), "eps": out.eps, "path": out.path.value})


def cmd_conj(args):
    out = conj_by(_gsp(args.g), CoverElement(_gsp(args.h), args.eps), args.p)
    _emit({"matrix": _matrix_json(out.g), "eps": out.eps, "path": "ConjugationSign"})


def cmd_center_image(args):
    for c in center_image(LeviShape.parse(args.shape), args.p):
        print(c)


def cmd_zt_reps(args):
    shape = LeviShape.parse(args.shape)
    for z in z_t_reps(shape, args.p):
        print(f"{_central_str(z)}\tx={x_on_center(z, args.p)}")


def cmd_center_mul(args):
    shape = LeviShape.parse(args.shape)
    z = center_mul(_central(args.z1, shape), _central(args.z2, shape), args.p)
    _emit({"element": _central_str(z), "eps": z.eps, "path": z.path.value})


def cmd_omega_set(args):
    shape = LeviShape.parse(args.shape)
    etas = [_character(t, args.p) for t in args.eta_prime] or [Character(args.p)]
    if len(etas) == 1:
        etas = etas * (shape.r + 1)
    ctx = PadicContext(args.p)
    omegas = omega_set(etas, shape, PsiSpec(ctx), ctx)
    zs = z_t_reps(shape, ctx)
    rows = []
    for om in omegas:
        vals = {}
        for z in zs:
            v = om(z)
            vals[_central_str(z)] = [round(v.real, 12) + 0.0, round(v.imag, 12) + 0.0]
        rows.append({"twist": str(om.twist), "values": vals})
    _emit(rows)


def cmd_torus_rep(args):
    failed = 0
    for p in args.p or [3]:
        rep = vf.run_suite("torusreps", p, args.seed, args.samples)
        for name, (total, bad) in sorted(rep.tally.items()):
            print(f"p={p} {'PASS' if not bad else 'FAIL'} {name} ({total - bad}/{total})")
        failed += len(rep.failures)
    return 1 if failed else 0


def cmd_decide_gsp4(args):
    ctx = PadicContext(args.p)
    chis = (_character(args.chi1, args.p), _character(args.chi2, args.p))
    _emit(gsp4_reducibility(PrincipalSeriesDatum(2, chis, PsiSpec(ctx))).to_json())


def cmd_counterexample(args):
    ce = counterexample_build(args.p, n=args.n)
    for fact, ok in ce.log:
        print(f"{'PASS' if ok else 'FAIL'} {fact}")
    print(json.dumps({"chi": ce.chi.to_json(), "b": str(ce.b), "xi": ce.xi.to_json()},
                     sort_keys=True))
    return 0 if ce.ok else 1


def cmd_whittaker(args):
    res = whittaker_orbit_count(LeviShape.parse(args.shape), args.group, args.p)
    _emit({"count": res.count,
           "representatives": [[str(c) for c in r.coefficients] for r in res.representatives]})


def cmd_verify(args):
    if args.suite:
        reports = [vf.run_suite(args.suite, p, args.seed, args.samples)
                   for p in (args.p or [vf.DEFAULT_PRIMES[0]])]
        agg = vf.AggregateReport(reports)
    else:
        agg = vf.run_all(args.p or vf.DEFAULT_PRIMES, args.seed, args.samples)
    for r in agg.reports:
        status = "ok" if r.ok else f"{len(r.failures)} failures"
        print(f"{r.suite:<11} p={r.p:<2} checks={r.checks:<6} {status}  ({r.elapsed:.1f}s)")
    print(f"total checks={agg.checks} failures={agg.failures}")
    if args.json:
        Path(args.json).write_text(vf.dumps(agg, timing=args.timing) + "\n")
    return 0 if agg.ok else 1


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metaplectic",
                                     description="Exact arithmetic in metaplectic covers of Sp and GSp over Q_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, p=True):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        if p:
            sp.add_argument("--p", type=int, required=True)
        return sp

    sp = add("hilbert", cmd_hilbert, "Hilbert symbol (a, b)")
    sp.add_argument("a", type=_rational)
    sp.add_argument("b", type=_rational)
    sp = add("weil", cmd_weil, "normalized Weil factor gamma_psi(a)")
    sp.add_argument("a", type=_rational)
    sp.add_argument("--shift", type=_rational, default=Fraction(1),
                    help="use psi_S(x) = psi(S x)")
    sp = add("squareclass", cmd_squareclass, "canonical square class representative")
    sp.add_argument("a", type=_rational)

    for name, func, text in (("xmap", cmd_xmap, "x(g_1) as a square class"),
                             ("cellrank", cmd_cellrank, "Bruhat cell index j of g_1"),
                             ("bruhat", cmd_bruhat, "Siegel-parabolic Bruhat factorization")):
        sp = add(name, func, text)
        sp.add_argument("matrix", help="JSON file or inline JSON of \"num/den\" strings")

    sp = add("cocycle", cmd_cocycle, "extended cocycle c~(g, h) with its rule")
    sp.add_argument("g")
    sp.add_argument("h")
    sp = add("covermul", cmd_covermul, "product of two cover elements")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--eps", type=int, choices=(1, -1), default=1)
    sp.add_argument("--eps2", type=int, choices=(1, -1), default=1)
    sp = add("inverse", cmd_inverse, "inverse in the cover")
    sp.add_argument("g")
    sp.add_argument("--eps", type=int, choices=(1, -1), default=1)
    sp = add("conj", cmd_conj, "(g, e) (h, eps) (g, e)^-1 for g_1 in the Siegel parabolic")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--eps", type=int, choices=(1, -1), default=1)

    for name, func, text in (("center-image", cmd_center_image, "x-image of the center"),
                             ("zt-reps", cmd_zt_reps, "representatives of Z_t"),
                             ("center-mul", cmd_center_mul, "product of central elements")):
        sp = add(name, func, text)
        sp.add_argument("--shape", required=True, help='e.g. "1,2;1"')
    sp.add_argument("z1", help='"a_1,...,a_r;b"')
    sp.add_argument("z2")

    sp = add("omega-set", cmd_omega_set, "extensions of a genuine central character")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--eta-prime", action="append", default=[],
                    help="character tag or JSON, once per central parameter or once for all")

    sp = sub.add_parser("torus-rep", help="induced torus representations")
    tsub = sp.add_subparsers(dest="action", required=True)
    tv = tsub.add_parser("verify", help="check the torus representation properties")
    tv.set_defaults(func=cmd_torus_rep)
    tv.add_argument("--p", type=int, action="append")
    tv.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    tv.add_argument("--samples", type=int, default=vf.DEFAULT_SAMPLES)

    sp = add("decide-gsp4", cmd_decide_gsp4, "reducibility of a genuine GSp(4) principal series")
    sp.add_argument("--chi1", required=True)
    sp.add_argument("--chi2", required=True)
    sp = add("counterexample", cmd_counterexample, "reducible unitary principal series of order 4")
    sp.add_argument("--n", type=int, default=2)
    sp = add("whittaker-orbits", cmd_whittaker, "orbits of non-degenerate characters")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--group", choices=("T", "T+", "T'"), default="T")

    sp = sub.add_parser("verify", help="run the invariant suites")
    sp.set_defaults(func=cmd_verify)
    sp.add_argument("--suite", help="one of: " + ", ".join(vf.SUITES))
    sp.add_argument("--p", type=int, action="append")
    sp.add_argument("--samples", type=int, default=vf.DEFAULT_SAMPLES)
    sp.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    sp.add_argument("--json", metavar="FILE")
    sp.add_argument("--timing", action="store_true", help="include elapsed times in the JSON")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (MetaplecticError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
