"""scikit-learn style front ends.

The functional modules take a :class:`~hillspec.potential.PotentialSpec`
directly; these wrappers expose the same computations through
``fit``/``predict``/``transform`` so they can sit in pipelines, be cloned,
and report their hyper-parameters with ``get_params``.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import DTYPE, check_complex_matrix, check_index_array, check_int, check_potential
from .bloch import TWO_PI, bloch_series
from .floquet import hill_discriminant
from .inverse import recover_potential
from .norming import NormingSequence, forward_map
from .potential import PotentialSpec


class BlochSolver(BaseEstimator):
    """Bloch eigenpairs of a fixed potential.

    ``fit`` takes the potential; ``predict`` maps rows ``(n, t)`` to
    eigenvalues and ``transform`` maps them to rows of series coefficients
    ``c_0..c_terms``.
    """

    def __init__(self, terms=50, method="recurrence"):
        self.terms = terms
        self.method = method

    def fit(self, X, y=None):
        check_int(self.terms, "terms", minimum=0)
        if self.method not in ("recurrence", "explicit", "bruteforce"):
            raise ValueError(f"unknown method {self.method!r}")
        self.potential_ = check_potential(X)
        return self

    def series(self, n, t):
        check_is_fitted(self, "potential_")
        return bloch_series(self.potential_, n, t, self.terms, self.method)

    def predict(self, X):
        check_is_fitted(self, "potential_")
        n, t = check_index_array(X)
        return (TWO_PI * n + t) ** 2

    def transform(self, X):
        check_is_fitted(self, "potential_")
        n, t = check_index_array(X)
        out = np.empty((n.size, self.terms + 1), dtype=DTYPE)
        for i, (ni, ti) in enumerate(zip(n, t)):
            out[i] = self.series(int(ni), complex(ti)).coeffs
        return out


class NormingTransformer(TransformerMixin, BaseEstimator):
    """Row-wise potential coefficients <-> norming numbers.

    Each row of ``X`` holds ``q_1..q_N``; ``transform`` returns
    ``s_1..s_M`` with ``M = n_terms`` (default ``N``) and ``inverse_transform``
    solves back. ``inverse_bounded_`` records the boundedness diagnostic of
    the last inverse call, one flag per row.
    """

    def __init__(self, n_terms=None, threshold=TWO_PI):
        self.n_terms = n_terms
        self.threshold = threshold

    def fit(self, X, y=None):
        X = check_complex_matrix(X)
        self.n_features_in_ = X.shape[1]
        self.n_terms_ = self.n_features_in_ if self.n_terms is None else check_int(
            self.n_terms, "n_terms", minimum=0
        )
        return self

    def transform(self, X):
        check_is_fitted(self, "n_terms_")
        X = check_complex_matrix(X)
        out = np.empty((X.shape[0], self.n_terms_), dtype=DTYPE)
        for i, row in enumerate(X):
            out[i] = forward_map(PotentialSpec(row), self.n_terms_).values
        return out

    def inverse_transform(self, X):
        check_is_fitted(self, "n_terms_")
        X = check_complex_matrix(X)
        out = np.empty_like(X)
        bounded = np.empty(X.shape[0], dtype=bool)
        for i, row in enumerate(X):
            result = recover_potential(NormingSequence(row), self.threshold)
            out[i] = result.spec.coeffs
            bounded[i] = result.bounded
        self.inverse_bounded_ = bounded
        return out


class FloquetDiscriminant(BaseEstimator):
    """Hill discriminant ``lam -> trace M(lam)`` by numerical integration."""

    def __init__(self, steps=2048):
        self.steps = steps

    def fit(self, X, y=None):
        check_int(self.steps, "steps", minimum=64)
        self.potential_ = check_potential(X)
        return self

    def predict(self, lams):
        check_is_fitted(self, "potential_")
        lams = np.atleast_1d(np.asarray(lams, dtype=DTYPE))
        return np.asarray(hill_discriminant(self.potential_, lams, self.steps))

    def residual(self, n, t):
        """``|Delta((2 pi n + t)^2) - 2 cos t|`` for matching arrays ``n`` and ``t``."""
        n = np.asarray(n)
        t = np.asarray(t, dtype=DTYPE)
        return np.abs(self.predict((TWO_PI * n + t) ** 2) - 2.0 * np.cos(t))
