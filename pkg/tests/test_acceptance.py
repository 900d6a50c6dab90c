"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line with its runtime.  Run directly
with ``python3 tests/test_acceptance.py`` for just those lines.
"""

import json
import subprocess
import sys
import time

import pytest

from metaplectic import verify as vf

LINES = []


def _report(number, title, reports, limit, extra_ok=True):
    elapsed = sum(r.elapsed for r in reports)
    checks = sum(r.checks for r in reports)
    failures = sum(len(r.failures) for r in reports)
    ok = failures == 0 and elapsed < limit and extra_ok
    line = (f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: "
            f"{checks} checks, {failures} failures, {elapsed:.1f}s (limit {limit}s)")
    LINES.append(line)
    print(line)
    return ok, failures, elapsed


def _run(name, primes, samples=vf.DEFAULT_SAMPLES):
    return [vf.run_suite(name, p, vf.DEFAULT_SEED, samples) for p in primes]


def test_criterion_01_hilbert():
    ok, failures, elapsed = _report(1, "Hilbert symbol vs oracle, p in {2,3,5,7}",
                                    _run("hilbert", [2, 3, 5, 7]), 10)
    assert failures == 0 and elapsed < 10


def test_criterion_02_weil():
    ok, failures, elapsed = _report(2, "Weil factor relations and oracle, p in {3,5,7}",
                                    _run("weil", [3, 5, 7]), 30)
    assert failures == 0 and elapsed < 30


def test_criterion_03_xmap():
    ok, failures, elapsed = _report(3, "x-map identities on Sp(4), Sp(6), n = 1 Kubota",
                                    _run("xmap", [3, 5, 7]), 60)
    assert failures == 0 and elapsed < 60


def test_criterion_04_cocycle():
    # samples = 10^4 gives 10^4 n = 1 triples, 10^3 n = 2 triples, 500 + 500
    # inverse and i(y) samples and 10^3 conjugation checks.
    ok, failures, elapsed = _report(4, "cocycle identity, inverse, i(y), conjugation sign",
                                    _run("cocycle", [3], samples=10000), 60)
    assert failures == 0 and elapsed < 60


def test_criterion_05_structure():
    ok, failures, elapsed = _report(5, "center images, witnesses, central products, n <= 4",
                                    _run("structure", [3, 5, 7]), 30)
    assert failures == 0 and elapsed < 30


def test_criterion_06_characters():
    ok, failures, elapsed = _report(6, "Omega_chi sizes, Z_t action, dual central identity",
                                    _run("characters", [2, 3, 5, 7]), 10)
    assert failures == 0 and elapsed < 10


def test_criterion_07_torus():
    ok, failures, elapsed = _report(7, "torus reps: homomorphism, decomposition, roundtrip",
                                    _run("torusreps", [3, 5]), 60)
    assert failures == 0 and elapsed < 60


def test_criterion_08_deciders():
    ok, failures, elapsed = _report(8, "GSp(4) verdict families, generic pairs, counterexample",
                                    _run("deciders", [3, 5, 7]), 10)
    assert failures == 0 and elapsed < 10


def test_criterion_09_whittaker():
    ok, failures, elapsed = _report(9, "Whittaker orbit counts, n <= 4, p in {3,5}",
                                    _run("whittaker", [3, 5]), 10)
    assert failures == 0 and elapsed < 10


@pytest.mark.slow
def test_criterion_10_end_to_end(tmp_path):
    out = tmp_path / "verify.json"
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "metaplectic.cli", "verify", "--json", str(out)],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    again = vf.dumps(vf.run_all()) + "\n"
    deterministic = out.exists() and out.read_text() == again
    data = json.loads(out.read_text()) if out.exists() else {"checks": 0, "failures": -1}
    ok = proc.returncode == 0 and data["failures"] == 0 and elapsed < 300 and deterministic
    line = (f"criterion 10 {'PASS' if ok else 'FAIL'}  metaplectic verify, p in {{3,5,7}}: "
            f"{data['checks']} checks, {data['failures']} failures, {elapsed:.1f}s (limit 300s), "
            f"{'deterministic' if deterministic else 'NOT deterministic'}")
    LINES.append(line)
    print(line)
    assert proc.returncode == 0, proc.stderr
    assert data["failures"] == 0
    assert elapsed < 300
    assert deterministic


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
