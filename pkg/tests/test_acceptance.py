"""One line per acceptance criterion: ``[PASS] criterion N ...`` (run with ``-s`` to see it)."""

import subprocess
import sys
import time

from exprgen import corpus
from cofin import suites
from cofin.syntax import parse, show


def announce(n: int, ok: bool, what: str, seconds: float, limit: float | None = None) -> None:
    budget = "" if limit is None else f" (limit {limit:.0f} s)"
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {what} in {seconds:.2f} s{budget}")


def run_suite(n: int, name: str, what: str, limit: float | None, **kw) -> None:
    t = time.perf_counter()
    report = suites.SUITES[name](**kw)
    dt = time.perf_counter() - t
    failed = [c for c in report["checks"] if c["status"] != "pass"]
    ok = not failed and (limit is None or dt < limit)
    announce(n, ok, what, dt, limit)
    assert not failed, failed
    if limit is not None:
        assert dt < limit


def test_criterion_1_finite_universe():
    run_suite(1, "finite", "finite-universe filters, Heyting formula, adjunction items, interior", 5)


def test_criterion_2_cofinite_via_density():
    run_suite(2, "acont", "cofinite iff content dense over 210 sets with evidence", 10,
              corpus_size=210)


def test_criterion_3_L_idempotent_and_dense():
    run_suite(3, "ldn", "L = L.L, <u in L> = L for u in F, L dense", 10)


def test_criterion_4_sigma_example():
    run_suite(4, "sigma", "(sigma) membership, notnot(sigma) = E, L vs (sigma)", None)


def test_criterion_5_extended_not_dense():
    run_suite(5, "extcof", "dense implies extended on 200 ideals; Alm(2k..) extended, not dense",
              None, count=200)


def test_criterion_6_fdn():
    run_suite(6, "fdn", "extent plus L-condition agrees with density on 100 ideals", None,
              count=100, samples=50)


def test_criterion_7_derived_rules():
    run_suite(7, "rules", "filter and ideal rules on 500 instances each plus finite bridge",
              None, count=500)


def test_criterion_8_monoid():
    run_suite(8, "monoid", "associativity, sigma factorization, retractions, records, atomicity", 10)


def test_criterion_9_cli():
    t = time.perf_counter()
    exprs = corpus(200)
    texts = [show(e) for e in exprs]
    round_trip = all(show(parse(s)) == s and parse(s) == e for s, e in zip(texts, exprs))
    proc = subprocess.run([sys.executable, "-m", "cofin.cli", "check", "all"],
                          capture_output=True, text=True, timeout=120)
    dt = time.perf_counter() - t
    ok = round_trip and proc.returncode == 0 and dt < 60
    announce(9, ok, "200-expression round trip and `cofin check all` exit 0", dt, 60)
    assert round_trip
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert all(line.startswith(("pass", "  pass")) for line in proc.stdout.splitlines())
    assert dt < 60

