"""Recovery of potential coefficients from norming numbers.

The forward map is triangular with unit diagonal: ``s_n - q_n`` depends only
on ``q_1..q_{n-1}``. Solving for ``q_n`` in increasing ``n`` is therefore an
exact finite inversion.
"""
from dataclasses import dataclass

import numpy as np

from . import _jsonio
from ._validation import DTYPE, as_real
from .exceptions import ValidationError
from .norming import _tail_sum
from .potential import PotentialSpec

TWO_PI = 2.0 * np.pi
# |s_n| below this for every n guarantees |q_n| <= 2 pi
ADMISSIBILITY_BOUND = TWO_PI - TWO_PI / (TWO_PI - 1.0)


@dataclass(frozen=True)
class InverseResult:
    spec: PotentialSpec
    bounded: bool
    max_modulus: float
    threshold: float


def recover_potential(seq, threshold=TWO_PI):
    """Solve the norming equations for ``q_1..q_M``.

    ``bounded`` reports whether every recovered ``|q_n| <= threshold``; it is
    a diagnostic, never an error.
    """
    threshold = as_real(threshold, "threshold")
    if threshold <= 0:
        raise ValidationError(f"threshold must be positive, got {threshold}")
    s = seq.values
    q = np.zeros(s.size, dtype=DTYPE)
    for n in range(1, s.size + 1):
        q[n - 1] = s[n - 1] - _tail_sum(q, n)
    max_modulus = float(np.max(np.abs(q))) if q.size else 0.0
    return InverseResult(PotentialSpec(q), max_modulus <= threshold, max_modulus, threshold)


def check_admissibility(seq):
    """True iff ``|s_n| <= 2 pi - 2 pi / (2 pi - 1)`` for every stored ``n``."""
    return bool(np.all(np.abs(seq.values) <= ADMISSIBILITY_BOUND))


def result_to_json(result):
    return _jsonio.dumps(
        {
            "coeffs": _jsonio.pairs(result.spec.coeffs),
            "diagnostics": {"bounded": result.bounded, "max_modulus": result.max_modulus},
        }
    )
