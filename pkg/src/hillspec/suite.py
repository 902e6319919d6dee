"""Cross-check suites run by ``hillspec verify``."""
import numpy as np

from .bloch import coeff_bruteforce, coeff_explicit, coeff_recurrence
from .floquet import convergence_report, discriminant_report, verify_bloch, wronskian_report
from .inverse import recover_potential
from .limits import LimitProbe, coefficient_limit, function_limit
from .norming import forward_bruteforce, forward_map, tail_bound
from .reports import VerificationReport

DISCRIMINANT_T = (0.3, 1.0, np.pi - 0.2, 1 + 0.5j)
BLOCH_INDICES = ((0, np.pi / 2), (1, 0.5), (-2, 1 + 0.3j))
ALGORITHM_INDICES = ((0, np.pi / 2), (1, 0.5), (-2, 1 + 0.3j), (3, -0.7))
WRONSKIAN_LAMBDAS = (0.0, 25.0, 100.0, -40.0 + 30j, 60j)

SUITES = ("discriminant", "wronskian", "order", "bloch", "algorithms", "norming", "inverse", "limits")


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300) if a != b else 0.0


def discriminant_suite(spec, steps=2048, tolerance=5e-6):
    return [
        discriminant_report(spec, n, t, steps, tolerance)
        for n in range(-3, 4)
        for t in DISCRIMINANT_T
    ]


def wronskian_suite(spec, steps=1024, tolerance=1e-9):
    return [wronskian_report(spec, lam, steps, tolerance) for lam in WRONSKIAN_LAMBDAS]


def bloch_suite(spec, terms=60, steps=2048, tolerance=1e-5):
    return [
        verify_bloch(spec, coeff_recurrence(spec, n, t, terms), steps, tolerance)
        for n, t in BLOCH_INDICES
    ]


def algorithm_report(spec, n, t, max_p=12, tolerance=1e-11):
    """Largest relative disagreement among the three coefficient algorithms."""
    c = coeff_recurrence(spec, n, t, max_p).coeffs
    worst = 0.0
    for p in range(1, max_p + 1):
        explicit = coeff_explicit(spec, n, t, p)
        brute = coeff_bruteforce(spec, n, t, p)
        worst = max(worst, _rel(c[p], explicit), _rel(c[p], brute), _rel(explicit, brute))
    return VerificationReport(
        "algorithm_agreement", {"n": n, "t": complex(t), "max_p": max_p}, worst, tolerance
    )


def algorithm_suite(spec, tolerance=1e-11):
    return [algorithm_report(spec, n, t, tolerance=tolerance) for n, t in ALGORITHM_INDICES]


def norming_suite(spec, max_n=12, tolerance=1e-12):
    """Brute-force agreement of ``s_n``, and ``|s_n - q_n| <= tail_bound``.

    The bound can be attained exactly, so its residual is the excess relative
    to the bound, compared against the same rounding ``tolerance``.
    """
    s = forward_map(spec, max_n).values
    worst = max(
        (_rel(s[n - 1], forward_bruteforce(spec, n)) for n in range(1, max_n + 1)), default=0.0
    )
    q = spec.padded(max_n)
    excess = 0.0
    for n in range(1, max_n + 1):
        bound = tail_bound(spec, n)
        if np.isfinite(bound):
            tail = abs(s[n - 1] - q[n - 1])
            slack = 8 * np.finfo(float).eps * abs(s[n - 1])
            over = max(tail - slack - bound, 0.0)
            excess = max(excess, over / bound if bound > 0 else (0.0 if over == 0 else np.inf))
    return [
        VerificationReport("norming_bruteforce", {"max_n": max_n}, worst, tolerance),
        VerificationReport("tail_bound", {"max_n": max_n}, excess, tolerance),
    ]


def inverse_suite(spec, count=None, tolerance=1e-11):
    count = max(spec.degree, 10) if count is None else count
    s = forward_map(spec, count)
    q = recover_potential(s).spec.coeffs
    target = spec.padded(count)
    scale = max(float(np.max(np.abs(target))) if count else 0.0, 1e-300)
    err = float(np.max(np.abs(q - target))) / scale if count else 0.0
    back = forward_map(recover_potential(s).spec, count).values
    sscale = max(float(np.max(np.abs(s.values))) if count else 0.0, 1e-300)
    err_back = float(np.max(np.abs(back - s.values))) / sscale if count else 0.0
    return [
        VerificationReport("inverse_roundtrip", {"count": count}, err, tolerance),
        VerificationReport("forward_roundtrip", {"count": count}, err_back, tolerance),
    ]


def limits_suite(spec, terms=50):
    reports = []
    for mode, n in (("periodic", 1), ("antiperiodic", 0)):
        probe = LimitProbe(mode, n, terms=terms)
        reports.extend(coefficient_limit(spec, probe, p) for p in (0, 1))
        reports.append(function_limit(spec, probe))
    return reports


def run(spec, suites=SUITES, steps=None, terms=60, tolerance=None):
    """Run the named suites; ``tolerance`` overrides every per-check default."""
    extra = {} if tolerance is None else {"tolerance": tolerance}
    reports = []
    for name in suites:
        if name == "discriminant":
            reports += discriminant_suite(spec, steps or 2048, **extra)
        elif name == "wronskian":
            reports += wronskian_suite(spec, steps or 1024, **extra)
        elif name == "order":
            reports.append(convergence_report())
        elif name == "bloch":
            reports += bloch_suite(spec, terms, steps or 2048, **extra)
        elif name == "algorithms":
            reports += algorithm_suite(spec, **extra)
        elif name == "norming":
            reports += norming_suite(spec, **extra)
        elif name == "inverse":
            reports += inverse_suite(spec, **extra)
        elif name == "limits":
            reports += limits_suite(spec, max(terms, 4))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return reports

