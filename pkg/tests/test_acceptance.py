"""Acceptance criteria, one test per criterion.

Every tolerance below is fixed; each test prints a single PASS/FAIL line
(visible in ``pytest -v`` output) before asserting. Runtime limits are part
of each criterion. Inputs are drawn from fixed seeds.
"""
import time
from math import factorial, log

import numpy as np
import pytest

from hillspec.bloch import coeff_bruteforce, coeff_explicit, coeff_recurrence
from hillspec.floquet import convergence_report, hill_discriminant, monodromies, verify_bloch
from hillspec.inverse import ADMISSIBILITY_BOUND, recover_potential
from hillspec.limits import LimitProbe, coefficient_limit, function_limit
from hillspec.norming import NormingSequence, forward_map, harmonic_sum, tail_bound
from hillspec.potential import PotentialSpec, random_spec

TWO_PI = 2 * np.pi
SEED = 20261016


@pytest.fixture
def verdict(capsys):
    """Print one line per criterion, bypassing output capture, then assert."""

    def emit(label, ok, elapsed, limit, detail):
        ok = bool(ok) and elapsed < limit
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}; {elapsed:.2f}s (limit {limit}s)"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return emit


def rel_err(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(float(np.max(np.abs(b))), 1e-300))


def random_disc(rng, size, radius):
    r = radius * np.sqrt(rng.uniform(size=size))
    return r * np.exp(2j * np.pi * rng.uniform(size=size))


def test_criterion_1_discriminant_identity(verdict):
    rng = np.random.default_rng(SEED + 1)
    ts = np.array([0.3, 1.0, np.pi - 0.2, 1 + 0.5j])
    ns = np.arange(-3, 4)
    n_grid, t_grid = np.meshgrid(ns, ts, indexing="ij")
    lams = (TWO_PI * n_grid + t_grid).ravel() ** 2
    target = 2 * np.cos(t_grid).ravel()
    start = time.perf_counter()
    worst = 0.0
    for degree in (1, 2, 3, 3, 2):
        spec = random_spec(rng, degree, 2.0)
        worst = max(worst, float(np.max(np.abs(hill_discriminant(spec, lams, 2048) - target))))
    elapsed = time.perf_counter() - start
    verdict("1 discriminant identity", worst <= 5e-6, elapsed, 5, f"max |trace - 2cos t| = {worst:.2e} <= 5e-06")


def test_criterion_2_closed_form_norming(verdict):
    start = time.perf_counter()
    s = forward_map(PotentialSpec([1.0]), 10).values
    closed = np.array([1.0 / (factorial(n - 1) ** 2 * TWO_PI ** (2 * (n - 1))) for n in range(1, 11)])
    err = float(np.max(np.abs(s - closed) / closed))
    q1, q2, q3 = 0.7 - 0.2j, 1.1j, -0.4
    s3 = forward_map(PotentialSpec([q1, q2, q3]), 3).values
    displayed = np.array([
        q1,
        q2 + q1**2 / TWO_PI**2,
        q3 + q1 * q2 / TWO_PI**2 + q1**3 / (4 * TWO_PI**4),
    ])
    err_disp = float(np.max(np.abs(s3 - displayed) / np.abs(displayed)))
    elapsed = time.perf_counter() - start
    verdict(
        "2 closed-form norming numbers", err <= 1e-12 and err_disp <= 1e-12, elapsed, 1,
        f"closed form rel {err:.2e}, displayed n<=3 rel {err_disp:.2e} <= 1e-12",
    )


def test_criterion_3_inverse_roundtrip(verdict):
    rng = np.random.default_rng(SEED + 3)
    start = time.perf_counter()
    worst_q = worst_s = 0.0
    for _ in range(100):
        spec = random_spec(rng, 10, 2.0)
        q = recover_potential(forward_map(spec, 10)).spec.coeffs
        worst_q = max(worst_q, rel_err(q, spec.coeffs))
        seq = NormingSequence(random_disc(rng, 10, ADMISSIBILITY_BOUND))
        back = forward_map(recover_potential(seq).spec, 10).values
        worst_s = max(worst_s, rel_err(back, seq.values))
    elapsed = time.perf_counter() - start
    verdict(
        "3 inverse roundtrip", worst_q <= 1e-11 and worst_s <= 1e-11, elapsed, 5,
        f"q->s->q rel {worst_q:.2e}, s->q->s rel {worst_s:.2e} <= 1e-11",
    )


def test_criterion_4_admissible_bound(verdict):
    rng = np.random.default_rng(SEED + 4)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        seq = NormingSequence(random_disc(rng, 40, ADMISSIBILITY_BOUND))
        worst = max(worst, recover_potential(seq).max_modulus)
    elapsed = time.perf_counter() - start
    verdict("4 admissible sequences give |q_n| <= 2pi", worst <= TWO_PI + 1e-12, elapsed, 5,
            f"max |q_n| = {worst:.6f} <= {TWO_PI:.6f}")


def test_criterion_5_triple_agreement(verdict):
    rng = np.random.default_rng(SEED + 5)
    start = time.perf_counter()
    worst = 0.0
    cases = 0
    for _ in range(6):
        spec = random_spec(rng, int(rng.integers(1, 4)), 2.0)
        for _ in range(3):
            n = int(rng.integers(-3, 4))
            t = complex(rng.uniform(0.2, np.pi - 0.2), rng.uniform(-0.5, 0.5))
            c = coeff_recurrence(spec, n, t, 12).coeffs
            for p in range(1, 13):
                e = coeff_explicit(spec, n, t, p)
                b = coeff_bruteforce(spec, n, t, p)
                scale = max(abs(b), 1e-300)
                worst = max(worst, abs(c[p] - e) / scale, abs(c[p] - b) / scale, abs(e - b) / scale)
            cases += 1
    elapsed = time.perf_counter() - start
    verdict("5 Bloch algorithm triple agreement", worst <= 1e-11, elapsed, 10,
            f"{cases} (spec, n, t) cases, p <= 12, max rel {worst:.2e} <= 1e-11")


def test_criterion_6_eigenfunction_verification(verdict):
    spec = PotentialSpec([1.0])
    start = time.perf_counter()
    residuals = []
    for n, t in ((0, np.pi / 2), (1, 0.5), (-2, 1 + 0.3j)):
        report = verify_bloch(spec, coeff_recurrence(spec, n, t, 60), 2048, 1e-5)
        residuals.append(report.residual)
    elapsed = time.perf_counter() - start
    verdict("6 eigenfunction verification", max(residuals) <= 1e-5, elapsed, 5,
            "residuals " + ", ".join(f"{r:.1e}" for r in residuals) + " <= 1e-05")


def test_criterion_7_limit_identities(verdict):
    spec = PotentialSpec([1.0])
    start = time.perf_counter()
    orders = {}
    for mode, n in (("periodic", 1), ("antiperiodic", 0)):
        probe = LimitProbe(mode, n, (1e-2, 1e-3, 1e-4, 1e-5))
        for p in (0, 1):
            orders[f"{mode} p={p}"] = coefficient_limit(spec, probe, p).details["observed_order"]
        orders[f"{mode} Psi"] = function_limit(spec, probe).details["observed_order"]
    elapsed = time.perf_counter() - start
    # an infinite order means the error is already at rounding level at every offset
    ok = all(o >= 0.9 for o in orders.values())
    verdict("7 degenerate limits", ok, elapsed, 5,
            "slopes " + ", ".join(f"{k}: {v:.3f}" for k, v in orders.items()) + " >= 0.9")


def test_criterion_8_harmonic_sums_and_tail_bound(verdict):
    rng = np.random.default_rng(SEED + 8)
    start = time.perf_counter()
    eq68 = all(harmonic_sum(n) < 2 * (1 + log(n)) / n for n in range(4, 10_001))
    eq70 = all(harmonic_sum(n) <= 1.0 for n in range(2, 10_001))
    tail_ok = True
    checked = 0
    eps = np.finfo(float).eps
    for _ in range(50):
        spec = random_spec(rng, int(rng.integers(1, 6)), float(rng.uniform(0.1, 2.0)))
        s = forward_map(spec, 20).values
        q = spec.padded(20)
        for n in range(1, 21):
            bound = tail_bound(spec, n)
            tail = abs(s[n - 1] - q[n - 1])
            # rounding of the subtraction s_n - q_n; the bound itself is attainable
            tail_ok &= tail <= bound * (1 + 1e-12) + 8 * eps * abs(s[n - 1])
            checked += np.isfinite(bound)
    elapsed = time.perf_counter() - start
    verdict("8 harmonic sums and tail bound", eq68 and eq70 and tail_ok, elapsed, 5,
            f"B(n) < 2(1+ln n)/n: {eq68}, B(n) <= 1: {eq70}, tail bound ({checked} finite cases): {tail_ok}")


def test_criterion_9_wronskian_and_order(verdict):
    rng = np.random.default_rng(SEED + 9)
    start = time.perf_counter()
    worst = 0.0
    for degree in (0, 1, 2, 3):
        spec = random_spec(rng, degree, 2.0)
        lams = random_disc(rng, 50, 100.0)
        worst = max(worst, max(m.det_residual for m in monodromies(spec, lams, 1024)))
    order = convergence_report(400.0, 128, 12.0)
    elapsed = time.perf_counter() - start
    verdict("9 Wronskian and integrator order", worst <= 1e-9 and order.passed, elapsed, 2,
            f"max |det - 1| = {worst:.2e} <= 1e-09, step-halving ratio {order.details['ratio']:.2f} >= 12")
