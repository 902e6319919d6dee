"""Exact Bloch spectra, Bloch functions and norming numbers of Hill operators
whose potentials have only positive Fourier modes, plus the inverse map from
norming numbers back to the potential and an ODE-based cross-check path."""
from .bloch import (
    BlochIndex,
    BlochSeries,
    bloch_series,
    coeff_bruteforce,
    coeff_explicit,
    coeff_recurrence,
    eigenvalue,
    evaluate_bloch,
    evaluate_bloch_derivative,
    weight_d,
)
from .estimators import BlochSolver, FloquetDiscriminant, NormingTransformer
from .exceptions import ComplexityGuard, DomainError, HillSpecError, ParseError, ResonantDenominator
from .floquet import MonodromyMatrix, hill_discriminant, integrate_hill, monodromy, verify_bloch
from .inverse import InverseResult, check_admissibility, recover_potential
from .limits import LimitProbe, boundedness_probe, coefficient_limit, function_limit
from .norming import NormingSequence, forward_bruteforce, forward_map, tail_bound
from .potential import PotentialSpec, evaluate_potential, parse_spec, serialize_spec
from .reports import VerificationReport

__version__ = "0.1.0"
