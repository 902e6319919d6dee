"""One-sided trigonometric-polynomial potentials.

A potential ``q(x) = sum_{k=1}^{N} q_k exp(2*pi*i*k*x)`` has period 1 and no
Fourier modes at non-positive frequencies. The representation only stores
``q_1..q_N``, so the one-sided constraint cannot be violated after
construction.
"""
from dataclasses import dataclass, field

import numpy as np

from . import _jsonio
from ._validation import DTYPE, check_complex_vector
from .exceptions import DomainError, ParseError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True, eq=False)
class PotentialSpec:
    """Immutable coefficient record; ``coeffs[k-1]`` holds ``q_k``."""

    coeffs: np.ndarray
    coeff_bound: float = field(init=False)

    def __post_init__(self):
        arr = check_complex_vector(self.coeffs, "coeffs")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        bound = float(np.max(np.abs(arr))) if arr.size else 0.0
        object.__setattr__(self, "coeff_bound", bound)

    @classmethod
    def from_coeffs(cls, *coeffs):
        return cls(np.asarray(coeffs, dtype=DTYPE))

    @property
    def degree(self):
        return int(self.coeffs.size)

    def q(self, k):
        """Coefficient ``q_k`` for any integer ``k``; zero outside ``1..N``."""
        if 1 <= k <= self.coeffs.size:
            return complex(self.coeffs[k - 1])
        return 0j

    def padded(self, length):
        """``q_1..q_length`` as an array, zero-padded past the degree."""
        out = np.zeros(length, dtype=DTYPE)
        m = min(length, self.coeffs.size)
        out[:m] = self.coeffs[:m]
        return out

    def scaled(self, alpha):
        return PotentialSpec(self.coeffs * complex(alpha))

    def __eq__(self, other):
        if not isinstance(other, PotentialSpec):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"PotentialSpec(degree={self.degree}, coeffs={self.coeffs.tolist()!r})"

    def __call__(self, x):
        return evaluate_potential(self, x)


def evaluate_potential(spec, x):
    """Evaluate ``q(x)``. Accepts a scalar or an array of real ``x``."""
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise ValueError("x must be finite")
    if spec.degree == 0:
        out = np.zeros(xs.shape, dtype=DTYPE)
    else:
        k = np.arange(1, spec.degree + 1)
        phases = np.exp(1j * TWO_PI * np.multiply.outer(xs, k))
        out = phases @ spec.coeffs
    return complex(out) if np.ndim(x) == 0 else out


def parse_spec(text):
    """Parse the potential JSON format.

    ``coeffs`` is either a list whose entry ``k`` (1-based) is ``q_k``, or a
    sparse mapping ``{"k": [re, im]}``. Index keys must be positive; other
    top-level keys (e.g. the ``diagnostics`` block written by ``inverse``)
    are ignored.
    """
    data = _jsonio.loads_object(text, "potential")
    if "coeffs" not in data:
        raise ParseError("coeffs", "missing required field")
    raw = data["coeffs"]
    if isinstance(raw, list):
        values = [_jsonio.unpair(v, f"coeffs[{i}]") for i, v in enumerate(raw)]
    elif isinstance(raw, dict):
        entries = {}
        for key, v in raw.items():
            try:
                k = int(key)
            except ValueError:
                raise ParseError(f"coeffs[{key!r}]", "index must be an integer") from None
            if k <= 0:
                raise DomainError(
                    f"coeffs[{key!r}]: coefficient at index {k} <= 0 is not allowed "
                    "for a one-sided potential"
                )
            entries[k] = _jsonio.unpair(v, f"coeffs[{key!r}]")
        size = max(entries, default=0)
        values = [entries.get(k, 0j) for k in range(1, size + 1)]
    else:
        raise ParseError("coeffs", "expected a list of [re, im] pairs or an index mapping")
    return PotentialSpec(np.array(values, dtype=DTYPE))


def serialize_spec(spec):
    """Canonical (dense list) JSON text for ``spec``."""
    return _jsonio.dumps({"coeffs": _jsonio.pairs(spec.coeffs)})


def mean_value(spec, points=2048):
    """Trapezoid quadrature of ``q`` over one period (zero for this class)."""
    x = np.linspace(0.0, 1.0, points + 1)
    y = evaluate_potential(spec, x)
    trapezoid = getattr(np, "trapezoid", None) or np.trapz
    return complex(trapezoid(y, x))


def random_spec(rng, degree, max_modulus=2.0):
    """Random coefficients with ``|q_k| <= max_modulus``, uniform in the disc."""
    radius = max_modulus * np.sqrt(rng.uniform(size=degree))
    angle = rng.uniform(0.0, 2.0 * np.pi, size=degree)
    return PotentialSpec(radius * np.exp(1j * angle))


__all__ = [
    "PotentialSpec",
    "evaluate_potential",
    "parse_spec",
    "serialize_spec",
    "mean_value",
    "random_spec",
]
