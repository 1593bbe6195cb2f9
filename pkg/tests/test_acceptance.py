"""Acceptance gate.

One test per shipped guarantee, each printing a [A..] PASS/FAIL line at its
stated tolerance.  Run with `pytest tests/test_acceptance.py -v -s` to see
the lines; plain pytest captures them but keeps the assertions.

Frozen constants come from an independent 30-digit multi-precision run.
"""

import json
import math
import random
import time

from malmsten.closedform import (
    MalmstenParams,
    delta_closed,
    delta_derivative,
    malmsten_c,
    vardi_b_constant,
)
from malmsten.cli import main, parse_csv, parse_json, render_json
from malmsten.proofchain import (
    check_alt_series_digamma,
    check_sech_cosine_transform,
    delta_integrand,
    malmsten_c_integrand,
    run_full_chain,
    vardi_b_integrand,
)
from malmsten.quad import integrate_semi_infinite
from malmsten.specfun import digamma, ln_gamma

VARDI_CONSTANT = -0.52088561260197689108

ALT_SERIES_ORACLE = [
    (0.5, 1.5707963267948966192),
    (1.0, 0.69314718055994530942),
    (1.5, 0.42920367320510338077),
    (2.0, 0.30685281944005469058),
    (3.25, 0.17655249508480029415),
    (10.0, 0.052487740074975325503),
]


def _verdict(cid: str, ok: bool, detail: str):
    print(f"[{cid}] {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{cid}: {detail}"


def test_a01_delta_quadrature_matches_closed_form_on_grid():
    grid = [0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0]
    worst = 0.0
    slowest = 0.0
    for a in grid:
        t0 = time.perf_counter()
        res = integrate_semi_infinite(delta_integrand(a))
        dt = time.perf_counter() - t0
        closed = delta_closed(a)
        err = abs(res.value - closed) / max(1.0, abs(closed))
        worst = max(worst, err)
        slowest = max(slowest, dt)
        if not res.converged:
            _verdict("A01", False, f"quadrature did not converge at a={a}")
    ok = worst <= 1e-8 and slowest < 1.0
    _verdict("A01", ok, f"worst scaled err {worst:.3e} (tol 1e-8), slowest point {slowest * 1000.0:.1f} ms (cap 1000)")


def test_a02_delta_at_half_hits_ln_two_over_pi():
    err = abs(delta_closed(0.5) - math.log(2.0 / math.pi))
    _verdict("A02", err <= 1e-13, f"|delta(1/2) - ln(2/pi)| = {err:.3e} (tol 1e-13)")


def test_a03_vardi_constant_by_quadrature_and_both_closed_forms():
    res = integrate_semi_infinite(vardi_b_integrand())
    form_a = math.pi * math.log(2.0 * math.pi ** 1.5 / math.exp(2.0 * ln_gamma(0.25)))
    form_b = math.pi * math.log(math.sqrt(2.0 * math.pi) * math.exp(ln_gamma(0.75) - ln_gamma(0.25)))
    quad_err = abs(res.value - vardi_b_constant())
    form_err = abs(form_a - form_b)
    frozen_err = abs(vardi_b_constant() - VARDI_CONSTANT)
    ok = res.converged and quad_err <= 1e-8 and form_err <= 1e-13 and frozen_err <= 1e-12
    _verdict("A03", ok,
             f"quad err {quad_err:.3e} (tol 1e-8), form gap {form_err:.3e} (tol 1e-13), "
             f"frozen gap {frozen_err:.3e} (tol 1e-12)")


def test_a04_general_integral_quadrature_and_scaling_law():
    pairs = [(1.0, 1.0), (2.0, 3.0), (0.1, 0.5), (5.0, 0.25)]
    worst_quad = 0.0
    for a, b in pairs:
        params = MalmstenParams(a, b)
        res = integrate_semi_infinite(malmsten_c_integrand(params))
        closed = malmsten_c(params)
        err = abs(res.value - closed) / max(1.0, abs(closed))
        worst_quad = max(worst_quad, err)
        if not res.converged:
            _verdict("A04", False, f"quadrature did not converge at (a,b)=({a},{b})")
    rng = random.Random(20260814)
    worst_scale = 0.0
    for _ in range(100):
        a = 10.0 ** rng.uniform(-3.0, 3.0)
        lam = 10.0 ** rng.uniform(-2.0, 2.0)
        b = 10.0 ** rng.uniform(-2.0, 2.0)
        lhs = malmsten_c(MalmstenParams(lam * a, b))
        rhs = malmsten_c(MalmstenParams(a, b)) + (math.pi / (2.0 * b)) * math.log(lam)
        worst_scale = max(worst_scale, abs(lhs - rhs))
    ok = worst_quad <= 1e-8 and worst_scale <= 1e-12
    _verdict("A04", ok,
             f"worst quad err {worst_quad:.3e} (tol 1e-8), worst scaling residual {worst_scale:.3e} (tol 1e-12)")


def test_a05_full_identity_chain_on_reference_grid():
    t0 = time.perf_counter()
    report = run_full_chain([0.25, 0.5, 1.0, 2.0, 4.0], tol=1e-8)
    elapsed = time.perf_counter() - t0
    failing = [s.name for s in report.steps if not s.passed]
    ok = report.overall_pass and not failing and elapsed < 30.0
    _verdict("A05", ok,
             f"{len(report.steps)} steps, {len(report.skipped)} skipped, "
             f"failing={failing or 'none'}, wall {elapsed:.2f} s (cap 30)")


def test_a06_sech_cosine_transform_grid():
    worst = 0.0
    for i in range(50):
        t = 10.0 * i / 49.0
        rep = check_sech_cosine_transform(t, tol=1e-10)
        worst = max(worst, rep.abs_err)
        if not rep.passed:
            _verdict("A06", False, f"transform check failed at t={t}")
    _verdict("A06", worst <= 1e-10, f"worst abs err over 50 points in [0,10]: {worst:.3e} (tol 1e-10)")


def test_a07_alternating_series_reaches_digamma_values():
    worst = 0.0
    for mu, expected in ALT_SERIES_ORACLE:
        rep = check_alt_series_digamma(mu, tol=1e-10)
        series_err = abs(rep.lhs - expected)
        closed_err = abs(rep.rhs - expected)
        worst = max(worst, series_err)
        if not (rep.passed and closed_err <= 1e-12):
            _verdict("A07", False, f"mu={mu}: series err {series_err:.3e}, closed err {closed_err:.3e}")
    _verdict("A07", worst <= 1e-10, f"worst series err over 6 mu values: {worst:.3e} (tol 1e-10)")


def test_a08_derivative_matches_central_difference():
    h = 1e-5
    worst = 0.0
    for a in (0.5, 1.0, 2.0, 8.0):
        fd = (delta_closed(a + h) - delta_closed(a - h)) / (2.0 * h)
        worst = max(worst, abs(delta_derivative(a) - fd))
    _verdict("A08", worst <= 1e-6, f"worst |analytic - central diff| = {worst:.3e} (tol 1e-6)")


def test_a09_gamma_kernel_identities():
    worst_refl = 0.0
    for k in range(1, 101):
        x = k / 101.0
        lhs = ln_gamma(x) + ln_gamma(1.0 - x)
        rhs = math.log(math.pi) - math.log(math.sin(math.pi * x))
        worst_refl = max(worst_refl, abs(lhs - rhs))
    worst_rec = 0.0
    for k in range(100):
        x = 0.1 * (1000.0 ** (k / 99.0))
        worst_rec = max(worst_rec, abs(digamma(x + 1.0) - digamma(x) - 1.0 / x))
    ok = worst_refl <= 1e-12 and worst_rec <= 1e-13
    _verdict("A09", ok,
             f"reflection worst {worst_refl:.3e} (tol 1e-12), recurrence worst {worst_rec:.3e} (tol 1e-13)")


def _malformed_corpus(rng: random.Random, n: int):
    """Seeded corpus of invocations that are malformed by construction."""
    bad_floats = ["nan", "inf", "-inf", "abc", "", "1e999x", "--"]
    cases = []
    while len(cases) < n:
        roll = rng.randrange(10)
        if roll == 0:
            cases.append([rng.choice(["frobnicate", "evall", "EVAL", "-x", "0.5"])])
        elif roll == 1:
            cases.append(["eval", "--which", rng.choice(["a", "c"])])
        elif roll == 2:
            cases.append(["eval", "--which", "a", "--a", rng.choice(bad_floats)])
        elif roll == 3:
            cases.append(["eval", "--which", "b", "--a", format(rng.uniform(-5, 5), ".3g")])
        elif roll == 4:
            cases.append(["quad", "--which", "b", "--rel-tol",
                          rng.choice(["1e-15", "0", "-1e-9", "nan", "abc"])])
        elif roll == 5:
            cases.append(["verify", "--grid", rng.choice(["", ",", "1,,2", "abc", "nan", "1;2"])])
        elif roll == 6:
            cases.append(["table", "--a-min", "0", "--a-max", "1", "--steps",
                          rng.choice(["0", "1", "-3", "abc", "2.5"])])
        elif roll == 7:
            cases.append(["table", "--a-min", format(rng.uniform(1, 5), ".3g"), "--a-max", "0", "--steps", "4"])
        elif roll == 8:
            cases.append([rng.choice(["eval", "quad"]), "--which", "a", "--a", "1.0", "--bogus"])
        else:
            cases.append([rng.choice(["eval", "quad", "verify", "table"]), "--a"])
    return cases


def test_a10_cli_exit_codes_and_round_trips_under_fuzz(capsys):
    rng = random.Random(1105)
    crashes = []
    wrong_code = []
    corpus = _malformed_corpus(rng, 1050)
    for argv in corpus:
        try:
            code = main(argv)
        except BaseException as exc:  # anything escaping main counts as a crash
            crashes.append((argv, repr(exc)))
            continue
        if code != 2:
            wrong_code.append((argv, code))

    # Token soup: any exit code in the contract is acceptable, crashes are not.
    vocab = ["eval", "quad", "verify", "table", "--which", "a", "b", "c", "--a",
             "--b", "--grid", "--tol", "--steps", "--a-min", "--a-max", "--format",
             "json", "csv", "--rel-tol", "nan", "0", "-1", "0.5", "1,2", "", "--help"]
    soup_codes = set()
    for _ in range(300):
        argv = [rng.choice(vocab) for _ in range(rng.randrange(7))]
        try:
            soup_codes.add(main(argv))
        except BaseException as exc:
            crashes.append((argv, repr(exc)))
    capsys.readouterr()  # drop fuzz noise before the verdict line

    ok_codes = soup_codes <= {0, 1, 2, 3}

    # Round trips on well-formed invocations.
    code = main(["quad", "--which", "a", "--a", "0.25"])
    out = capsys.readouterr().out
    record = parse_json(out)
    json_ok = code == 0 and render_json(record) + "\n" == out and json.loads(out)["results"]["converged"] is True

    code = main(["table", "--a-min", "0.5", "--a-max", "1.5", "--steps", "3"])
    rows = parse_csv(capsys.readouterr().out)
    csv_ok = code == 0 and len(rows) == 3 and all(float(r["abs_err"]) <= 1e-8 for r in rows)

    code = main(["verify", "--grid", "0.5"])
    doc = json.loads(capsys.readouterr().out)
    verify_ok = code == 0 and doc["results"]["overall_pass"] is True

    ok = not crashes and not wrong_code and ok_codes and json_ok and csv_ok and verify_ok
    _verdict("A10", ok,
             f"{len(corpus)} malformed + 300 soup invocations; crashes={len(crashes)}, "
             f"miscoded={len(wrong_code)}, soup codes {sorted(soup_codes)}, round trips "
             f"{'ok' if (json_ok and csv_ok and verify_ok) else 'BROKEN'}")
