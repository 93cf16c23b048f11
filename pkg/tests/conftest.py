import numpy as np
import pytest

from qgames import StateVector


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)


@pytest.fixture
def random_state(rng):
    """Factory for normalized random state vectors."""

    def make(n_players: int = 3) -> StateVector:
        dim = 2**n_players
        amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return StateVector(n_players, amps / np.linalg.norm(amps))

    return make


@pytest.fixture
def random_params(rng):
    """Factory for uniform random strategy parameters."""
    from qgames import StrategyParams

    def make() -> "StrategyParams":
        return StrategyParams(rng.uniform(0.0, np.pi), rng.uniform(0.0, np.pi / 2))

    return make
