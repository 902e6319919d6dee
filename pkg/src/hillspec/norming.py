"""Norming numbers ``s_n`` of a one-sided potential.

    s_n = q_n + sum_{k=1}^{n-1} S_k(n),
    S_k(n) = sum over compositions (n_1, ..., n_k, n - n(k)) of
             q_{n_1} ... q_{n_k} q_{n - n(k)} / prod_s (2 pi n(s)) (2 pi (n - n(s))).

Only partial sums appear in the denominators, so the composition sum
collapses to an O(n**2) dynamic program (:func:`norming_number`). The literal
enumeration is kept as :func:`forward_bruteforce` for cross-checking.
"""
from dataclasses import dataclass, field

import numpy as np

from . import _jsonio
from ._validation import DTYPE, check_complex_vector, check_int
from .bloch import compositions
from .exceptions import ComplexityGuard, ParseError

TWO_PI = 2.0 * np.pi
BRUTEFORCE_MAX_N = 22


@dataclass(frozen=True, eq=False)
class NormingSequence:
    """``values[k-1]`` holds ``s_k``."""

    values: np.ndarray
    source: str = "user-supplied"
    length: int = field(init=False)

    def __post_init__(self):
        arr = check_complex_vector(self.values, "values")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "length", int(arr.size))

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, NormingSequence):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    __hash__ = None


def _tail_sum(q, n):
    """``sum_k S_k(n)`` from ``q`` where ``q[j-1] = q_j`` (needs ``len(q) >= n-1``)."""
    if n < 2:
        return 0j
    m = np.arange(1, n)
    w = 1.0 / ((TWO_PI * m) * (TWO_PI * (n - m)))
    h = np.zeros(n, dtype=DTYPE)  # h[m], m = 1..n-1
    for j in range(1, n):
        acc = q[j - 1]
        if j > 1:
            acc = acc + np.dot(h[1:j], q[j - 2 :: -1][: j - 1])
        h[j] = w[j - 1] * acc
    return complex(np.dot(h[1:n], q[n - 2 :: -1][: n - 1]))


def norming_number(q, n):
    """``s_n`` for coefficient array ``q`` (``q[j-1] = q_j``, zero past its end)."""
    qn = np.zeros(n, dtype=DTYPE)
    k = min(n, len(q))
    qn[:k] = q[:k]
    return qn[n - 1] + _tail_sum(qn, n)


def forward_map(spec, count):
    """Norming numbers ``s_1..s_count`` of ``spec``. Total cost O(count**3)."""
    count = check_int(count, "count", minimum=0)
    q = spec.padded(count)
    s = np.empty(count, dtype=DTYPE)
    for n in range(1, count + 1):
        s[n - 1] = q[n - 1] + _tail_sum(q, n)
    return NormingSequence(s, source="computed-from-potential")


def forward_bruteforce(spec, n):
    """``s_n`` summed literally over all compositions of ``n``."""
    n = check_int(n, "n", minimum=1)
    if n > BRUTEFORCE_MAX_N:
        raise ComplexityGuard(f"n={n} exceeds enumeration limit {BRUTEFORCE_MAX_N}")
    total = 0j
    for parts in compositions(n):
        num = 1 + 0j
        for part in parts:
            num *= spec.q(part)
        if num == 0:
            continue
        den = 1.0
        partial = 0
        for part in parts[:-1]:
            partial += part
            den *= (TWO_PI * partial) * (TWO_PI * (n - partial))
        total += num / den
    return total


def harmonic_sum(n):
    """``B(n) = sum_{k=1}^{n-1} 1 / (k (n - k))``."""
    n = check_int(n, "n", minimum=1)
    k = np.arange(1, n, dtype=float)
    return float(np.sum(1.0 / (k * (n - k))))


def tail_bound(spec, n):
    """Certified bound on ``|s_n - q_n|``.

    Sums ``M**(k+1) B(n)**k / (2 pi)**(2k)`` over k = 1..n-1 with
    ``M = max |q_j|``. Returns ``inf`` when the ratio ``M B(n) / (2 pi)**2``
    is not below one.
    """
    n = check_int(n, "n", minimum=1)
    M = spec.coeff_bound
    if n < 2 or M == 0.0:
        return 0.0
    ratio = M * harmonic_sum(n) / TWO_PI**2
    if ratio >= 1.0:
        return float("inf")
    k = np.arange(1, n)
    return float(M * np.sum(ratio**k))


def sequence_to_json(seq):
    return _jsonio.dumps({"values": _jsonio.pairs(seq.values)})


def sequence_from_json(text):
    data = _jsonio.loads_object(text, "norming")
    if "values" not in data:
        raise ParseError("values", "missing required field")
    raw = data["values"]
    if not isinstance(raw, list):
        raise ParseError("values", "expected a list of [re, im] pairs")
    vals = [_jsonio.unpair(v, f"values[{i}]") for i, v in enumerate(raw)]
    return NormingSequence(np.array(vals, dtype=DTYPE))
