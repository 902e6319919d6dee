"""Independent ODE check: monodromy of -y'' + q(x) y = lam y over one period.

Nothing here uses the closed-form eigenvalues or coefficients; the module
only integrates the equation. Classical fixed-step RK4 applied to the
first-order system ``(y, y')' = [[0, 1], [q - lam, 0]] (y, y')`` is linear in
the state, so each step is a 2x2 propagator. All propagators are built at
once and multiplied in order by pairwise reduction.
"""
from dataclasses import dataclass

import numpy as np

from ._validation import DTYPE, as_complex, check_int
from .bloch import evaluate_bloch, evaluate_bloch_derivative
from .potential import PotentialSpec, evaluate_potential
from .reports import VerificationReport

MIN_STEPS = 64


@dataclass(frozen=True)
class MonodromyMatrix:
    """``[[theta(1), phi(1)], [theta'(1), phi'(1)]]`` at spectral parameter ``lam``."""

    theta: complex
    phi: complex
    dtheta: complex
    dphi: complex
    lam: complex
    det_residual: float

    @property
    def matrix(self):
        return np.array([[self.theta, self.phi], [self.dtheta, self.dphi]], dtype=DTYPE)

    @property
    def trace(self):
        return self.theta + self.dphi

    @property
    def entry_det_residual(self):
        """``|theta phi' - phi theta' - 1|`` from the stored entries.

        Bounded below by rounding of order ``eps * |theta phi'|``, which
        dominates ``det_residual`` when the solutions grow large.
        """
        return float(abs(self.theta * self.dphi - self.phi * self.dtheta - 1.0))


def _ordered_product(mats):
    """``mats[-1] @ ... @ mats[0]`` along axis -3."""
    while mats.shape[-3] > 1:
        if mats.shape[-3] % 2:
            eye = np.broadcast_to(np.eye(2, dtype=DTYPE), mats.shape[:-3] + (1, 2, 2))
            mats = np.concatenate([mats, eye], axis=-3)
        mats = mats[..., 1::2, :, :] @ mats[..., 0::2, :, :]
    return mats[..., 0, :, :]


def step_matrices(spec, lams, steps):
    """Per-step RK4 transfer matrices, shape ``lams.shape + (steps, 2, 2)``."""
    steps = check_int(steps, "steps", minimum=MIN_STEPS)
    lams = np.asarray(lams, dtype=DTYPE)
    h = 1.0 / steps
    x = np.arange(steps) * h
    q0 = evaluate_potential(spec, x)
    qh = evaluate_potential(spec, x + 0.5 * h)
    q1 = evaluate_potential(spec, x + h)

    def system(qv):
        a = np.zeros(lams.shape + (steps, 2, 2), dtype=DTYPE)
        a[..., 0, 1] = 1.0
        a[..., 1, 0] = qv - lams[..., None]
        return a

    eye = np.eye(2, dtype=DTYPE)
    A1, A2, A3 = system(q0), system(qh), system(q1)
    K1 = A1
    K2 = A2 @ (eye + 0.5 * h * K1)
    K3 = A2 @ (eye + 0.5 * h * K2)
    K4 = A3 @ (eye + h * K3)
    return eye + (h / 6.0) * (K1 + 2.0 * K2 + 2.0 * K3 + K4)


def propagator(spec, lams, steps):
    """RK4 transfer matrices over [0, 1] for an array of ``lam`` values.

    Returns shape ``lams.shape + (2, 2)``.
    """
    return _ordered_product(step_matrices(spec, lams, steps))


def _det(M):
    return M[..., 0, 0] * M[..., 1, 1] - M[..., 0, 1] * M[..., 1, 0]


def _wronskian_drift(S):
    """``|det(monodromy) - 1|`` evaluated as ``|prod_k det(S_k) - 1|``.

    Equal to the determinant of the product in exact arithmetic, but free of
    the cancellation in ``theta phi' - phi theta'`` when the entries are large
    (e.g. strongly negative ``lam``), so it measures the integrator alone.
    """
    return np.abs(np.prod(_det(S), axis=-1) - 1.0)


def integrate_hill(spec, lam, y0, dy0, steps=1024):
    """``(y(1), y'(1))`` for the solution with ``y(0) = y0``, ``y'(0) = dy0``."""
    lam = as_complex(lam, "lam")
    M = propagator(spec, lam, steps)
    y = M @ np.array([as_complex(y0, "y0"), as_complex(dy0, "dy0")], dtype=DTYPE)
    return complex(y[0]), complex(y[1])


def _to_record(M, lam, drift):
    return MonodromyMatrix(
        complex(M[0, 0]), complex(M[0, 1]), complex(M[1, 0]), complex(M[1, 1]),
        complex(lam), float(drift),
    )


def monodromy(spec, lam, steps=1024):
    lam = as_complex(lam, "lam")
    S = step_matrices(spec, lam, steps)
    return _to_record(_ordered_product(S), lam, _wronskian_drift(S))


def monodromies(spec, lams, steps=1024):
    """Vectorised :func:`monodromy` over a 1-D collection of ``lam`` values."""
    lams = np.atleast_1d(np.asarray(lams, dtype=DTYPE))
    S = step_matrices(spec, lams, steps)
    Ms, drift = _ordered_product(S), _wronskian_drift(S)
    return [_to_record(M, lam, d) for M, lam, d in zip(Ms, lams, drift)]


def hill_discriminant(spec, lam, steps=2048):
    """Trace of the monodromy matrix. Accepts a scalar or an array of ``lam``."""
    Ms = propagator(spec, lam, steps)
    tr = Ms[..., 0, 0] + Ms[..., 1, 1]
    return complex(tr) if np.ndim(lam) == 0 else tr


def discriminant_report(spec, n, t, steps=2048, tolerance=5e-6):
    """Compare the integrated discriminant at ``(2 pi n + t)**2`` with ``2 cos t``."""
    t = as_complex(t, "t")
    lam = (2.0 * np.pi * n + t) ** 2
    value = hill_discriminant(spec, lam, steps)
    target = 2.0 * np.cos(t)
    return VerificationReport(
        "discriminant",
        {"n": n, "t": t, "steps": steps, "degree": spec.degree},
        float(abs(value - target)),
        tolerance,
        {"discriminant": value, "target": target},
    )


def verify_bloch(spec, series, steps=2048, tolerance=1e-5):
    """Integrate from the series' own initial data and test quasi-periodicity.

    The residual is ``max(|y(1) - e^{it} Psi(0)| / sum|c_p|,
    |y'(1) - e^{it} Psi'(0)| / sum|k_p c_p|)`` with ``k_p`` the term
    frequencies, i.e. each error relative to the magnitude scale of the series.
    """
    psi0 = evaluate_bloch(series, 0.0)
    dpsi0 = evaluate_bloch_derivative(series, 0.0)
    y1, dy1 = integrate_hill(spec, series.eigenvalue, psi0, dpsi0, steps)
    phase = np.exp(1j * series.t)
    scale_y = float(np.sum(np.abs(series.coeffs)))
    scale_dy = float(np.sum(np.abs(series.coeffs * series.frequencies))) or 1.0
    err_y = abs(y1 - phase * psi0) / scale_y
    err_dy = abs(dy1 - phase * dpsi0) / scale_dy
    return VerificationReport(
        "bloch_eigenfunction",
        {"n": series.n, "t": series.t, "terms": series.terms, "steps": steps},
        float(max(err_y, err_dy)),
        tolerance,
        {"value_error": err_y, "derivative_error": err_dy, "tail_estimate": series.tail_estimate()},
    )


def wronskian_report(spec, lam, steps=1024, tolerance=1e-9):
    m = monodromy(spec, lam, steps)
    return VerificationReport(
        "wronskian", {"lam": complex(lam), "steps": steps}, m.det_residual, tolerance,
        {"trace": m.trace, "entry_det_residual": m.entry_det_residual},
    )


def free_solution_error(lam, steps):
    """Error of ``y(1)`` for q = 0, y(0) = 1, y'(0) = 0 against ``cos(sqrt(lam))``."""

    lam = as_complex(lam, "lam")
    y1, _ = integrate_hill(PotentialSpec([]), lam, 1.0, 0.0, steps)
    return abs(y1 - np.cos(np.sqrt(lam)))


def convergence_report(lam=400.0, steps=128, min_ratio=12.0):
    """Step-halving check of fourth-order convergence on the free equation.

    Residual is ``min_ratio / observed_ratio``; the check passes when it is <= 1.
    """
    coarse = free_solution_error(lam, steps)
    fine = free_solution_error(lam, 2 * steps)
    ratio = coarse / fine if fine > 0 else float("inf")
    return VerificationReport(
        "integrator_order",
        {"lam": complex(lam), "steps": steps},
        float(min_ratio / ratio),
        1.0,
        {"coarse_error": coarse, "fine_error": fine, "ratio": ratio, "min_ratio": min_ratio},
    )
