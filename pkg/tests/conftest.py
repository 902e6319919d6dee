import numpy as np
import pytest
from hypothesis import strategies as st

from hillspec.potential import PotentialSpec, random_spec


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def q1():
    """q(x) = exp(2 pi i x)."""
    return PotentialSpec.from_coeffs(1.0)


@pytest.fixture
def zero():
    return PotentialSpec([])


def complex_disc(max_modulus):
    return st.builds(
        lambda r, a: r * np.exp(1j * a),
        st.floats(0.0, max_modulus),
        st.floats(0.0, 2 * np.pi),
    )


def potentials(max_degree=4, max_modulus=2.0):
    return st.lists(complex_disc(max_modulus), min_size=0, max_size=max_degree).map(PotentialSpec)


def distance_to_pi_lattice(t):
    k = np.round(t.real / np.pi)
    return abs(t - k * np.pi)


def quasimomenta(margin=0.1):
    return st.builds(complex, st.floats(-3.0, 3.0), st.floats(-1.0, 1.0)).filter(
        lambda t: distance_to_pi_lattice(t) > margin
    )


__all__ = ["random_spec", "potentials", "quasimomenta", "complex_disc"]
