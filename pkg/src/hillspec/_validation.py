"""Input validation helpers.

scikit-learn's ``check_array`` rejects complex input, so the few checks we
need for complex coefficient data live here.
"""
import numbers

import numpy as np

from .exceptions import ValidationError

DTYPE = np.complex128


def as_complex(value, name="value"):
    """Coerce a scalar (real, complex, or ``[re, im]`` pair) to a finite complex."""
    if isinstance(value, (list, tuple)) and len(value) == 2:
        value = complex(float(value[0]), float(value[1]))
    try:
        z = complex(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a complex scalar, got {value!r}") from None
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValidationError(f"{name} must be finite, got {z!r}")
    return z


def as_real(value, name="value"):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ValidationError(f"{name} must be a real number, got {value!r}")
    x = float(value)
    if not np.isfinite(x):
        raise ValidationError(f"{name} must be finite, got {x!r}")
    return x


def check_int(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_complex_vector(values, name="coeffs"):
    """Return a finite 1-D complex128 array (a copy)."""
    arr = np.array(values, dtype=DTYPE, copy=True)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or Inf")
    return arr


def check_complex_matrix(X, name="X"):
    """2-D finite complex array; a 1-D input is treated as a single row."""
    arr = np.array(X, dtype=DTYPE, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValidationError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains NaN or Inf")
    return arr


def check_potential(X):
    """Accept a ``PotentialSpec``, a coefficient vector, or a single-row matrix."""
    from .potential import PotentialSpec

    if isinstance(X, PotentialSpec):
        return X
    arr = np.asarray(X, dtype=DTYPE)
    if arr.ndim == 2 and arr.shape[0] == 1:
        arr = arr[0]
    return PotentialSpec(check_complex_vector(arr, "X"))


def check_index_array(X):
    """Split rows ``(n, t)`` into an int array of bands and a complex array of t.

    ``n`` must be integral; ``t`` may be complex.
    """
    arr = np.asarray(X, dtype=DTYPE)
    if arr.ndim == 1 and arr.size == 2:
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError(f"index array must have shape (k, 2), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("index array contains NaN or Inf")
    n = arr[:, 0]
    if np.any(n.imag != 0) or np.any(n.real != np.round(n.real)):
        raise ValidationError("band index column must hold integers")
    return n.real.astype(int), arr[:, 1]
