import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hillspec import bloch
from hillspec.bloch import (
    bloch_series,
    coeff_bruteforce,
    coeff_explicit,
    coeff_recurrence,
    eigenvalue,
    evaluate_bloch,
    evaluate_bloch_derivative,
    recurrence_residual,
    series_from_json,
    series_to_json,
    weight_d,
)
from hillspec.exceptions import ComplexityGuard, ParseError, ResonantDenominator
from hillspec.potential import PotentialSpec

from .conftest import potentials, quasimomenta

PI = np.pi


@pytest.mark.parametrize(
    "n, t, expected",
    [(0, 0.0, 0.0), (1, 0.5, (2 * PI + 0.5) ** 2), (-1, 0.5, (-2 * PI + 0.5) ** 2)],
)
def test_eigenvalue(n, t, expected):
    assert eigenvalue(n, t) == pytest.approx(expected, rel=1e-15)


def test_eigenvalue_rounded_values():
    assert eigenvalue(1, 0.5).real == pytest.approx(46.0116, abs=1e-4)
    assert eigenvalue(-1, 0.5).real == pytest.approx(33.4452, abs=1e-4)


@pytest.mark.parametrize(
    "n, t, p, expected",
    [(0, PI / 2, 1, -1 / (6 * PI**2)), (1, 0.0, 1, -1 / (2 * PI * 6 * PI))],
)
def test_weight_d(n, t, p, expected):
    assert weight_d(n, t, p) == pytest.approx(expected, rel=1e-14)
    # same quantity written as an eigenvalue gap
    gap = eigenvalue(n, t) - (2 * PI * (n + p) + t) ** 2
    assert weight_d(n, t, p) == pytest.approx(1 / gap, rel=1e-12)


def test_weight_d_resonance():
    with pytest.raises(ResonantDenominator) as info:
        weight_d(-1, 0.0, 2)
    assert (info.value.n, info.value.p) == (-1, 2)


def test_zero_potential_has_trivial_series(zero):
    series = coeff_recurrence(zero, 2, 0.7, 10)
    assert series.coeffs[0] == 1
    assert np.all(series.coeffs[1:] == 0)
    assert coeff_explicit(zero, 2, 0.7, 5) == 0
    assert coeff_bruteforce(zero, 2, 0.7, 5) == 0


def test_two_step_hand_unrolled(q1):
    # c_1 = d_1 q_1, c_2 = d_2 q_1 c_1 with d_p = -1/(2 pi p (2 pi p + pi))
    c1 = -1 / (6 * PI**2)
    c2 = 1 / (120 * PI**4)
    series = coeff_recurrence(q1, 0, PI / 2, 2)
    np.testing.assert_allclose(series.coeffs, [1, c1, c2], rtol=1e-14)
    assert coeff_explicit(q1, 0, PI / 2, 1) == pytest.approx(c1, rel=1e-14)
    assert coeff_explicit(q1, 0, PI / 2, 2) == pytest.approx(c2, rel=1e-14)
    assert coeff_bruteforce(q1, 0, PI / 2, 2) == pytest.approx(c2, rel=1e-14)


def test_series_invariants(q1):
    series = coeff_recurrence(q1, 0, PI / 2, 5)
    assert series.terms == 5
    assert series.coeffs[0] == 1
    assert series.eigenvalue == eigenvalue(0, PI / 2)
    assert series.coeffs.size == 6  # nothing stored below p = 0


def test_oracle_equivalence_fixed_case():
    spec = PotentialSpec([1.0, 0.5])
    for p in range(1, 9):
        e = coeff_explicit(spec, 1, 1.0, p)
        b = coeff_bruteforce(spec, 1, 1.0, p)
        assert abs(e - b) <= 1e-13 * abs(b)


def test_bruteforce_guard(q1):
    with pytest.raises(ComplexityGuard):
        coeff_bruteforce(q1, 0, 0.5, bloch.BRUTEFORCE_MAX_P + 1)


def test_compositions_are_complete():
    comps = list(bloch.compositions(5))
    assert len(comps) == 2**4
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == 5 and min(c) >= 1 for c in comps)


@pytest.mark.parametrize("t", [0.0, PI])
def test_degenerate_points_allowed_for_regular_branch(q1, t):
    n = 1 if t == 0.0 else 0
    series = coeff_recurrence(q1, n, t, 20)
    assert np.all(np.isfinite(series.coeffs))


@pytest.mark.parametrize("n, t", [(-1, 0.0), (-2, 0.0), (-1, PI), (-3, PI)])
def test_mirrored_branch_rejected_at_degenerate_points(q1, n, t):
    with pytest.raises(ResonantDenominator):
        coeff_recurrence(q1, n, t, 20)
    with pytest.raises(ResonantDenominator):
        coeff_explicit(q1, n, t, 10)


@settings(max_examples=40, deadline=None)
@given(potentials(max_degree=4, max_modulus=2.0), st.integers(-4, 4), quasimomenta())
def test_three_algorithms_agree(spec, n, t):
    c = coeff_recurrence(spec, n, t, 12).coeffs
    for p in range(1, 13):
        explicit = coeff_explicit(spec, n, t, p)
        brute = coeff_bruteforce(spec, n, t, p)
        assert abs(c[p] - explicit) <= 1e-11 * (1 + abs(c[p]))
        assert abs(c[p] - brute) <= 1e-11 * (1 + abs(c[p]))


@settings(max_examples=40, deadline=None)
@given(potentials(max_degree=4, max_modulus=2.0), st.integers(-4, 4), quasimomenta(), st.integers(1, 60))
def test_recurrence_residual(spec, n, t, terms):
    series = coeff_recurrence(spec, n, t, terms)
    assert np.max(np.abs(recurrence_residual(spec, series))) <= 1e-11


@settings(max_examples=40, deadline=None)
@given(potentials(max_degree=3, max_modulus=2.0), st.integers(-3, 3), quasimomenta())
def test_quasi_periodicity(spec, n, t):
    series = coeff_recurrence(spec, n, t, 30)
    v0, v1 = evaluate_bloch(series, 0.0), evaluate_bloch(series, 1.0)
    scale = np.sum(np.abs(series.coeffs))
    assert abs(v1 - np.exp(1j * t) * v0) <= 1e-12 * scale * abs(np.exp(1j * t)) * 10


def test_quasi_periodicity_example(q1):
    series = coeff_recurrence(q1, 0, PI / 2, 30)
    assert abs(evaluate_bloch(series, 1.0) - np.exp(1j * PI / 2) * evaluate_bloch(series, 0.0)) <= 1e-12


def test_evaluate_at_origin_is_coefficient_sum(q1, zero):
    assert evaluate_bloch(coeff_recurrence(zero, 0, 0.7, 5), 0.0) == 1
    series = coeff_recurrence(q1, 1, 0.3, 10)
    assert evaluate_bloch(series, 0.0) == pytest.approx(np.sum(series.coeffs), rel=1e-15)


def test_derivative_matches_finite_difference(q1):
    series = coeff_recurrence(q1, -1, 0.4 + 0.2j, 20)
    h = 1e-6
    fd = (evaluate_bloch(series, 0.3 + h) - evaluate_bloch(series, 0.3 - h)) / (2 * h)
    assert evaluate_bloch_derivative(series, 0.3) == pytest.approx(fd, rel=1e-7)


@pytest.mark.parametrize("n, t", [(0, PI / 2), (2, 0.4), (-3, 1 + 0.5j)])
def test_coefficient_decay_envelope(n, t):
    spec = PotentialSpec([1.5, -1j, 0.7])
    P = 40
    c = np.abs(coeff_recurrence(spec, n, t, P).coeffs)
    p = np.arange(P + 1)
    p0 = 4
    C = np.max(c[p0 : p0 + 4] * p[p0 : p0 + 4] ** 2)
    window = slice(P // 2, P + 1)
    assert np.all(c[window] <= C / p[window] ** 2)
    # running maximum from the right never increases going outward
    envelope = np.maximum.accumulate(c[window][::-1])[::-1]
    assert np.all(np.diff(envelope) <= 0)


@settings(max_examples=20, deadline=None)
@given(potentials(), potentials(), st.integers(-5, 5), quasimomenta())
def test_eigenvalue_independent_of_potential(a, b, n, t):
    ea = coeff_recurrence(a, n, t, 3).eigenvalue
    eb = coeff_recurrence(b, n, t, 3).eigenvalue
    assert ea == eb == eigenvalue(n, t)


def test_bloch_series_methods_agree(q1):
    ref = bloch_series(q1, 1, 0.5, 8).coeffs
    for method in ("explicit", "bruteforce"):
        np.testing.assert_allclose(bloch_series(q1, 1, 0.5, 8, method).coeffs, ref, rtol=1e-13)
    with pytest.raises(ValueError):
        bloch_series(q1, 1, 0.5, 8, "magic")


def test_json_roundtrip(q1):
    series = coeff_recurrence(q1, -2, 1 + 0.3j, 6)
    again = series_from_json(series_to_json(series))
    np.testing.assert_array_equal(again.coeffs, series.coeffs)
    assert again.index == series.index
    assert series_to_json(series).count("[") > 0
    with pytest.raises(ParseError):
        series_from_json('{"n": 0, "t": [0, 0], "coeffs": [[2, 0]]}')
