"""Bloch eigenvalues and Bloch-function coefficients for one-sided potentials.

For a potential with ``q_k = 0`` whenever ``k <= 0`` the quasi-periodic
problem ``-y'' + q y = lam y``, ``y(1) = exp(i t) y(0)`` has eigenvalues
``(2 pi n + t)**2`` regardless of ``q``, and the eigenfunction normalized by
its leading Fourier mode is the one-sided series

    Psi_{n,t}(x) = sum_{p >= 0} c_p exp(i (2 pi (n + p) + t) x),   c_0 = 1.

Three independent routes to ``c_p`` are provided:

* :func:`coeff_recurrence` - the triangular convolution recurrence,
  O(P N); this is the production path.
* :func:`coeff_explicit` - the closed composition-sum formula collapsed by a
  dynamic program over partial sums, O(p**2) per coefficient.
* :func:`coeff_bruteforce` - the same closed formula with every composition
  enumerated literally, O(2**p); an oracle only.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import _jsonio
from ._validation import DTYPE, as_complex, check_int
from .exceptions import ComplexityGuard, ParseError, ResonantDenominator

TWO_PI = 2.0 * np.pi
RESONANCE_RTOL = 1e-12
BRUTEFORCE_MAX_P = 22


class BlochIndex(NamedTuple):
    n: int
    t: complex


@dataclass(frozen=True, eq=False)
class BlochSeries:
    """Truncated Bloch function ``sum_{p=0}^{P} c_p exp(i(2 pi(n+p)+t)x)``."""

    index: BlochIndex
    eigenvalue: complex
    coeffs: np.ndarray

    @property
    def n(self):
        return self.index.n

    @property
    def t(self):
        return self.index.t

    @property
    def terms(self):
        return self.coeffs.size - 1

    @property
    def frequencies(self):
        """Angular frequency ``2 pi (n + p) + t`` of each stored term."""
        p = np.arange(self.coeffs.size)
        return TWO_PI * (self.n + p) + self.t

    def tail_estimate(self):
        """Modulus of the last stored coefficient, a proxy for the truncation error."""
        return float(abs(self.coeffs[-1])) if self.terms > 0 else 0.0

    def __call__(self, x):
        return evaluate_bloch(self, x)


def _index(n, t):
    return check_int(n, "n"), as_complex(t, "t")


def _resonance_scale(n, t):
    return RESONANCE_RTOL * (1.0 + abs(TWO_PI * n) + abs(t))


def eigenvalue(n, t):
    """Bloch eigenvalue ``(2 pi n + t)**2``; the potential plays no role."""
    n, t = _index(n, t)
    return (TWO_PI * n + t) ** 2


def weight_d(n, t, p):
    """``-1 / (2 pi p (2 pi (2n + p) + 2t))``, i.e. ``1 / (lam_n - (2 pi (n+p) + t)**2)``."""
    n, t = _index(n, t)
    p = check_int(p, "p", minimum=1)
    factor = TWO_PI * (2 * n + p) + 2 * t
    if abs(factor) < _resonance_scale(n, t):
        raise ResonantDenominator(n, p, t, "2*pi*(2n+p) + 2t = 0")
    return -1.0 / (TWO_PI * p * factor)


def _weights_d(n, t, terms):
    """``weight_d`` for p = 1..terms as an array; raises at the first resonant p."""
    p = np.arange(1, terms + 1)
    factor = TWO_PI * (2 * n + p) + 2 * t
    bad = np.flatnonzero(np.abs(factor) < _resonance_scale(n, t))
    if bad.size:
        raise ResonantDenominator(n, int(p[bad[0]]), t, "2*pi*(2n+p) + 2t = 0")
    return -1.0 / (TWO_PI * p * factor)


def coeff_recurrence(spec, n, t, terms):
    """Bloch series with ``terms`` coefficients beyond ``c_0`` via the recurrence

        (lam_n - (2 pi (n+p) + t)**2) c_p = sum_{m=1}^{min(p, N)} q_m c_{p-m}.
    """
    n, t = _index(n, t)
    terms = check_int(terms, "terms", minimum=0)
    d = _weights_d(n, t, terms)
    q = spec.coeffs
    c = np.zeros(terms + 1, dtype=DTYPE)
    c[0] = 1.0
    for p in range(1, terms + 1):
        m = min(p, q.size)
        # sum_{j=1}^{m} q_j c_{p-j}
        c[p] = d[p - 1] * np.dot(q[:m], c[p - 1 :: -1][:m])
    return BlochSeries(BlochIndex(n, t), (TWO_PI * n + t) ** 2, c)


def coeff_explicit(spec, n, t, p):
    """Single coefficient ``c_p`` from the closed composition-sum formula.

    The sum over compositions ``(n_1, ..., n_k, p - n(k))`` factorises over
    partial sums ``m = n(s)``: with ``w(m) = 1 / ((2pi(2n+p-m) + 2t) 2pi(m-p))``,
    ``h(m)`` collects every chain ending at partial sum ``m``.
    """
    n, t = _index(n, t)
    p = check_int(p, "p", minimum=1)
    d = weight_d(n, t, p)
    scale = _resonance_scale(n, t)
    q = spec.padded(p)  # q[j-1] = q_j
    h = np.zeros(p, dtype=DTYPE)  # h[m] for m = 1..p-1
    for m in range(1, p):
        factor = TWO_PI * (2 * n + p - m) + 2 * t
        if abs(factor) < scale:
            raise ResonantDenominator(n, p, t, f"partial sum m={m}")
        w = 1.0 / (factor * TWO_PI * (m - p))
        acc = q[m - 1]
        if m > 1:
            # sum_{m' < m} h(m') q_{m - m'}
            acc += np.dot(h[1:m], q[m - 2 :: -1][: m - 1])
        h[m] = w * acc
    total = q[p - 1]
    if p > 1:
        total += np.dot(h[1:p], q[p - 2 :: -1][: p - 1])
    return complex(d * total)


def compositions(total):
    """Yield every composition of ``total`` into positive parts, as tuples."""
    for k in range(total):
        for cuts in combinations(range(1, total), k):
            bounds = (0,) + cuts + (total,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def coeff_bruteforce(spec, n, t, p):
    """``c_p`` by literal enumeration of all ``2**(p-1)`` compositions of ``p``."""
    n, t = _index(n, t)
    p = check_int(p, "p", minimum=1)
    if p > BRUTEFORCE_MAX_P:
        raise ComplexityGuard(f"p={p} exceeds enumeration limit {BRUTEFORCE_MAX_P}")
    d = weight_d(n, t, p)
    scale = _resonance_scale(n, t)
    total = 0j
    for parts in compositions(p):
        # parts = (n_1, ..., n_k, p - n(k))
        num = 1 + 0j
        for part in parts:
            num *= spec.q(part)
        if num == 0:
            continue
        den = 1 + 0j
        partial = 0
        for part in parts[:-1]:
            partial += part
            factor = TWO_PI * (2 * n + p - partial) + 2 * t
            if abs(factor) < scale:
                raise ResonantDenominator(n, p, t, f"partial sum {partial}")
            den *= factor * TWO_PI * (partial - p)
        total += num / den
    return complex(d * total)


def bloch_series(spec, n, t, terms, method="recurrence"):
    """Assemble a :class:`BlochSeries` with any of the three algorithms."""
    if method == "recurrence":
        return coeff_recurrence(spec, n, t, terms)
    n, t = _index(n, t)
    terms = check_int(terms, "terms", minimum=0)
    if method == "explicit":
        one = coeff_explicit
    elif method == "bruteforce":
        one = coeff_bruteforce
    else:
        raise ValueError(f"unknown method {method!r}")
    c = np.empty(terms + 1, dtype=DTYPE)
    c[0] = 1.0
    for p in range(1, terms + 1):
        c[p] = one(spec, n, t, p)
    return BlochSeries(BlochIndex(n, t), (TWO_PI * n + t) ** 2, c)


def evaluate_bloch(series, x):
    """``Psi(x)`` for scalar or array ``x``."""
    xs = np.asarray(x, dtype=float)
    out = np.exp(1j * np.multiply.outer(xs, series.frequencies)) @ series.coeffs
    return complex(out) if np.ndim(x) == 0 else out


def evaluate_bloch_derivative(series, x):
    """``Psi'(x)`` by exact term-wise differentiation."""
    xs = np.asarray(x, dtype=float)
    k = series.frequencies
    out = np.exp(1j * np.multiply.outer(xs, k)) @ (1j * k * series.coeffs)
    return complex(out) if np.ndim(x) == 0 else out


def recurrence_residual(spec, series):
    """``(lam_n - (2pi(n+p)+t)^2) c_p - sum_m q_m c_{p-m}`` for p = 1..P."""
    n, t, c = series.n, series.t, series.coeffs
    p = np.arange(1, c.size)
    diag = -TWO_PI * p * (TWO_PI * (2 * n + p) + 2 * t)
    conv = np.convolve(spec.coeffs, c) if spec.degree else np.zeros(c.size, dtype=DTYPE)
    # conv[j] = sum_i q_{i+1} c_{j-i}, so sum_{m>=1} q_m c_{p-m} is conv[p-1]
    rhs = np.zeros(c.size, dtype=DTYPE)
    rhs[1:] = conv[: c.size - 1]
    return diag * c[1:] - rhs[1:]


def series_to_dict(series):
    return {
        "n": series.n,
        "t": _jsonio.pair(series.t),
        "eigenvalue": _jsonio.pair(series.eigenvalue),
        "coeffs": _jsonio.pairs(series.coeffs),
    }


def series_to_json(series):
    return _jsonio.dumps(series_to_dict(series))


def series_from_json(text):
    data = _jsonio.loads_object(text, "bloch")
    for key in ("n", "t", "coeffs"):
        if key not in data:
            raise ParseError(key, "missing required field")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParseError("n", f"expected integer, got {n!r}")
    t = _jsonio.unpair(data["t"], "t")
    if not isinstance(data["coeffs"], list) or not data["coeffs"]:
        raise ParseError("coeffs", "expected a non-empty list of [re, im] pairs")
    c = np.array(
        [_jsonio.unpair(v, f"coeffs[{i}]") for i, v in enumerate(data["coeffs"])], dtype=DTYPE
    )
    if c[0] != 1:
        raise ParseError("coeffs[0]", "leading coefficient must be [1, 0]")
    return BlochSeries(BlochIndex(n, t), (TWO_PI * n + t) ** 2, c)
