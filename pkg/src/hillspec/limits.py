"""Numerical checks of the degenerate limits at t -> 0 and t -> pi.

Near the double eigenvalues the mirrored Bloch function ``Psi_{-n,-t}``
blows up like ``1/t`` (resp. ``1/(pi - t)``); rescaled, it converges to a
norming number times the regular Bloch function:

    8 n pi t Psi_{-n,-t}            -> s_{2n}   Psi_{n,0}     (t -> 0,  n >= 1)
    4 (2n+1) (t - pi) pi Psi_{-n,-t} -> s_{2n+1} Psi_{n,pi}   (t -> pi, n >= 0)

and coefficient-wise. The probes below walk a geometric sequence of offsets
``delta`` (``t = delta`` or ``t = pi - delta``) and measure the observed
convergence order from a log-log fit of the error.
"""
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_int
from .bloch import coeff_recurrence, evaluate_bloch
from .exceptions import ValidationError
from .norming import forward_map
from .reports import VerificationReport

DEFAULT_T_SEQUENCE = (1e-2, 1e-3, 1e-4, 1e-5)
DEFAULT_X_SAMPLES = (0.0, 0.25, 0.5, 0.75)
MODES = ("periodic", "antiperiodic")
# errors below this (relative to the target scale) count as exact agreement
NOISE_FLOOR = 1e-13


@dataclass(frozen=True)
class LimitProbe:
    mode: str
    n: int
    t_sequence: tuple = DEFAULT_T_SEQUENCE
    x_samples: tuple = DEFAULT_X_SAMPLES
    terms: int = 50
    min_order: float = 0.9
    shift: int = field(init=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        n = check_int(self.n, "n", minimum=1 if self.mode == "periodic" else 0)
        object.__setattr__(self, "n", n)
        ts = tuple(float(t) for t in self.t_sequence)
        if not ts:
            raise ValidationError("t_sequence must not be empty")
        if any(not (0.0 < t < np.pi) for t in ts):
            raise ValidationError("t_sequence values must lie strictly between 0 and pi")
        if any(b >= a for a, b in zip(ts, ts[1:])):
            raise ValidationError("t_sequence must be strictly decreasing")
        object.__setattr__(self, "t_sequence", ts)
        object.__setattr__(self, "x_samples", tuple(float(x) for x in self.x_samples))
        # index offset between the mirrored and the regular branch
        object.__setattr__(self, "shift", 2 * n if self.mode == "periodic" else 2 * n + 1)
        check_int(self.terms, "terms", minimum=self.shift)

    def quasimomentum(self, delta):
        return delta if self.mode == "periodic" else np.pi - delta

    def scale(self, t):
        if self.mode == "periodic":
            return 8.0 * self.n * np.pi * t
        return 4.0 * (2 * self.n + 1) * (t - np.pi) * np.pi

    @property
    def limit_t(self):
        return 0.0 if self.mode == "periodic" else np.pi


def observed_order(deltas, errors, floor):
    """Least-squares slope of log(error) against log(delta).

    Points at or below ``floor`` are dropped; if fewer than two remain the
    order is reported as infinite (the error is already at rounding level).
    """
    deltas = np.asarray(deltas, dtype=float)
    errors = np.asarray(errors, dtype=float)
    keep = errors > floor
    if keep.sum() < 2:
        return float("inf")
    slope, _ = np.polyfit(np.log(deltas[keep]), np.log(errors[keep]), 1)
    return float(slope)


def _mirrored(spec, probe, delta):
    t = probe.quasimomentum(delta)
    return t, coeff_recurrence(spec, -probe.n, -t, probe.terms)


def _norming_target(spec, probe):
    return complex(forward_map(spec, probe.shift).values[probe.shift - 1])


def _order_report(check, probe, inputs, errors, target_scale, extra):
    floor = NOISE_FLOOR * (1.0 + target_scale)
    order = observed_order(probe.t_sequence, errors, floor)
    deficit = max(0.0, probe.min_order - order)
    details = {
        "deltas": list(probe.t_sequence),
        "errors": [float(e) for e in errors],
        "observed_order": order,
        "min_order": probe.min_order,
    }
    details.update(extra)
    return VerificationReport(check, inputs, float(deficit), 0.0, details)


def coefficient_limit(spec, probe, p=0):
    """Rescaled mirrored coefficient against ``c_{p,n}(t*) s``.

    The residual is the shortfall of the observed convergence order below
    ``probe.min_order`` (zero when the order is adequate).
    """
    p = check_int(p, "p", minimum=-probe.shift)
    if probe.shift + p > probe.terms:
        raise ValidationError(f"p={p} needs terms >= {probe.shift + p}")
    s = _norming_target(spec, probe)
    if p >= 0:
        c_regular = coeff_recurrence(spec, probe.n, probe.limit_t, p).coeffs[p]
    else:
        c_regular = 0j
    target = complex(c_regular * s)
    values, errors = [], []
    for delta in probe.t_sequence:
        t, series = _mirrored(spec, probe, delta)
        v = complex(probe.scale(t) * series.coeffs[probe.shift + p])
        values.append(v)
        errors.append(abs(v - target))
    inputs = {"mode": probe.mode, "n": probe.n, "p": p, "degree": spec.degree}
    return _order_report(
        "coefficient_limit", probe, inputs, errors, abs(target),
        {"target": target, "norming_number": s, "scaled_values": values},
    )


def function_limit(spec, probe):
    """Rescaled mirrored Bloch function against ``s Psi_{n,t*}`` on ``x_samples``."""
    s = _norming_target(spec, probe)
    regular = coeff_recurrence(spec, probe.n, probe.limit_t, probe.terms - probe.shift)
    xs = np.asarray(probe.x_samples)
    target = s * evaluate_bloch(regular, xs)
    errors = []
    for delta in probe.t_sequence:
        t, series = _mirrored(spec, probe, delta)
        left = probe.scale(t) * evaluate_bloch(series, xs)
        errors.append(float(np.max(np.abs(left - target))) if xs.size else 0.0)
    inputs = {"mode": probe.mode, "n": probe.n, "terms": probe.terms, "degree": spec.degree}
    scale = float(np.max(np.abs(target))) if xs.size else 0.0
    return _order_report(
        "function_limit", probe, inputs, errors, scale,
        {"norming_number": s, "x_samples": list(probe.x_samples)},
    )


def boundedness_probe(spec, probe, rtol=0.05):
    """Empirical boundedness of the rescaled pairing ``(q Psi_{-n,-t}, e^{i(2 pi m - t)x})``.

    The pairing at frequency index ``m`` is the finite convolution
    ``sum_j q_j c_{m+n-j}`` of the truncated series. For each offset the
    maximum over ``m`` is rescaled. The sequence counts as bounded when it is
    non-increasing up to a relative noise allowance ``rtol``; the residual is
    the largest relative step up between consecutive offsets.
    """
    maxima = []
    for delta in probe.t_sequence:
        t, series = _mirrored(spec, probe, delta)
        if spec.degree:
            conv = np.convolve(spec.coeffs, series.coeffs)[: probe.terms]
            peak = float(np.max(np.abs(conv)))
        else:
            peak = 0.0
        maxima.append(float(abs(probe.scale(t)) * peak))
    growth = 0.0
    for prev, cur in zip(maxima, maxima[1:]):
        if cur <= prev:
            continue
        growth = max(growth, (cur - prev) / prev if prev > 0 else float("inf"))
    inputs = {"mode": probe.mode, "n": probe.n, "terms": probe.terms, "degree": spec.degree}
    return VerificationReport(
        "boundedness", inputs, float(growth), rtol,
        {"deltas": list(probe.t_sequence), "scaled_maxima": maxima},
    )
