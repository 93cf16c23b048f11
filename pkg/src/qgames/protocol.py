"""The full game pipeline: entangle, apply the players' strategies,
disentangle, measure, and score.

Expected payoffs always go through the full probability contraction against
the payoff table; there is exactly one evaluation path for every game.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import DimensionError, DomainError
from .gamespec import GameSpec
from .qcore import StateVector, entangling_gate_apply, probabilities, tensor_apply
from .strategies import StrategyParams, unitary_of


def final_state(game: GameSpec, profile: Sequence[StrategyParams]) -> StateVector:
    """State just before measurement: disentangle(strategies(entangle(|0...0>)))."""
    if len(profile) != game.n_players:
        raise DimensionError(
            f"profile has {len(profile)} strategies for {game.n_players} players"
        )
    state = StateVector.basis(game.n_players)
    state = entangling_gate_apply(state, game.gamma)
    state = tensor_apply(state, [unitary_of(p) for p in profile])
    return entangling_gate_apply(state, game.gamma, dagger=True)


def expected_payoffs(game: GameSpec, profile: Sequence[StrategyParams]) -> np.ndarray:
    """Measurement-probability-weighted payoff for each player, as an (N,) array."""
    probs = probabilities(final_state(game, profile))
    return probs @ game.table.as_array


def classical_payoff(game: GameSpec, outcome: str) -> np.ndarray:
    """Payoff row for a definite classical outcome; KeyError for unknown outcomes."""
    return np.array(game.table.payoffs_for(outcome), dtype=float)


def classical_mixed_payoffs(
    game: GameSpec, coop_probs: Sequence[float]
) -> np.ndarray:
    """Expected payoffs when each player independently cooperates with the
    given probability and defects otherwise."""
    if len(coop_probs) != game.n_players:
        raise DimensionError(
            f"got {len(coop_probs)} probabilities for {game.n_players} players"
        )
    weights = np.array([1.0])
    for prob in coop_probs:
        prob = float(prob)
        if not (math.isfinite(prob) and 0.0 <= prob <= 1.0):
            raise DomainError(f"cooperation probability must lie in [0, 1], got {prob!r}")
        weights = np.kron(weights, np.array([prob, 1.0 - prob]))
    return weights @ game.table.as_array
