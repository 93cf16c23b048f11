"""Best-response search over the strategy manifold, epsilon-Nash verification,
equilibrium enumeration over finite strategy sets, Pareto checks, and
entanglement sweeps.

All searches are deterministic: candidates are scanned theta-major /
phi-minor with ascending values, and a tie keeps the earliest candidate.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gamespec import GameSpec, PayoffTable
from .protocol import expected_payoffs
from .qcore import validate_gamma
from .strategies import PHI_MAX, THETA_MAX, Profile, StrategyParams

# Far above the simulator's 1e-9 numerical noise and far below the smallest
# meaningful payoff gap of the built-in game (2).
DEFAULT_EPSILON = 1e-6

# The Pareto scan visits a full product grid of alternative profiles; axes
# are thinned before scanning so the product never exceeds this many profiles.
PARETO_MAX_PROFILES = 100_000

_WEAK_TOL = 1e-9  # slack when comparing payoff vectors in the Pareto check


@dataclass(frozen=True)
class SearchConfig:
    """Resolution of the grid-plus-refinement best-response search.

    The coarse pass covers the whole strategy rectangle; each refinement
    round re-grids a window shrunk by `refine_shrink` around the incumbent
    best, clipped to the domain.
    """

    theta_points: int = 101
    phi_points: int = 51
    refine_rounds: int = 3
    refine_shrink: float = 0.2

    def __post_init__(self):
        if self.theta_points < 2 or self.phi_points < 2:
            raise DomainError("grids need at least 2 points per axis")
        if self.refine_rounds < 0:
            raise DomainError("refine_rounds must be nonnegative")
        if not (0.0 < self.refine_shrink < 1.0):
            raise DomainError("refine_shrink must lie strictly between 0 and 1")


@dataclass(frozen=True)
class BestResponseResult:
    """Best strategy found for one player with everyone else held fixed.

    `gap` is `best_payoff` minus the payoff of the player's incumbent
    strategy; the incumbent is always a candidate, so the gap is never
    negative.
    """

    best_params: StrategyParams
    best_payoff: float
    gap: float


@dataclass(frozen=True)
class NashReport:
    """Verdict of an epsilon-Nash check: is_nash iff max per-player gap <= epsilon."""

    is_nash: bool
    epsilon: float
    per_player: tuple[BestResponseResult, ...]


def _axis_grid(lo: float, hi: float, points: int, cap: float) -> list[float]:
    """Uniform grid clamped into [0, cap] so 1-ulp overshoot never leaves the domain."""
    return [min(max(float(v), 0.0), cap) for v in np.linspace(lo, hi, points)]


def best_response(
    game: GameSpec,
    profile: Sequence[StrategyParams],
    player: int,
    config: SearchConfig = SearchConfig(),
) -> BestResponseResult:
    """Search the (theta, phi) rectangle for the player's best reply.

    Candidate order: the player's incumbent strategy, the four domain
    corners, the coarse grid, then each refinement grid. A candidate
    replaces the incumbent best only with a strictly larger payoff, so
    ties keep the earliest candidate and results are reproducible.
    """
    profile = tuple(profile)
    if not 0 <= player < game.n_players:
        raise IndexError(f"player index {player} out of range for {game.n_players} players")

    def payoff_of(params: StrategyParams) -> float:
        trial = profile[:player] + (params,) + profile[player + 1 :]
        return float(expected_payoffs(game, trial)[player])

    current = profile[player]
    current_payoff = payoff_of(current)
    best_params, best_payoff = current, current_payoff

    def consider(params: StrategyParams) -> None:
        nonlocal best_params, best_payoff
        value = payoff_of(params)
        if value > best_payoff:
            best_params, best_payoff = params, value

    for theta in (0.0, THETA_MAX):
        for phi in (0.0, PHI_MAX):
            consider(StrategyParams(theta, phi))

    theta_lo, theta_hi = 0.0, THETA_MAX
    phi_lo, phi_hi = 0.0, PHI_MAX
    for round_no in range(config.refine_rounds + 1):
        if round_no:
            theta_half = THETA_MAX * config.refine_shrink**round_no / 2.0
            phi_half = PHI_MAX * config.refine_shrink**round_no / 2.0
            theta_lo = max(0.0, best_params.theta - theta_half)
            theta_hi = min(THETA_MAX, best_params.theta + theta_half)
            phi_lo = max(0.0, best_params.phi - phi_half)
            phi_hi = min(PHI_MAX, best_params.phi + phi_half)
        for theta in _axis_grid(theta_lo, theta_hi, config.theta_points, THETA_MAX):
            for phi in _axis_grid(phi_lo, phi_hi, config.phi_points, PHI_MAX):
                consider(StrategyParams(theta, phi))

    return BestResponseResult(best_params, best_payoff, best_payoff - current_payoff)


def epsilon_nash_check(
    game: GameSpec,
    profile: Sequence[StrategyParams],
    epsilon: float = DEFAULT_EPSILON,
    config: SearchConfig = SearchConfig(),
) -> NashReport:
    """Run best_response for every player; the profile is an epsilon-Nash
    equilibrium when no player's gap exceeds epsilon."""
    epsilon = float(epsilon)
    if not (math.isfinite(epsilon) and epsilon >= 0.0):
        raise DomainError(f"epsilon must be nonnegative, got {epsilon!r}")
    results = tuple(
        best_response(game, profile, player, config) for player in range(game.n_players)
    )
    worst = max(result.gap for result in results)
    return NashReport(worst <= epsilon, epsilon, results)


def enumerate_equilibria(
    game: GameSpec,
    candidate_set: Sequence[StrategyParams],
    epsilon: float = DEFAULT_EPSILON,
) -> list[Profile]:
    """Set-relative Nash enumeration over candidate_set**N.

    A profile qualifies when no player can gain more than epsilon by
    switching to another member of the candidate set; deviations outside
    the set are not considered, and no completeness claim is made beyond
    it. Cost grows as len(candidate_set)**n_players. Profiles are returned
    in product order (player 0 varying slowest).
    """
    candidates = tuple(candidate_set)
    if not candidates:
        raise DomainError("candidate_set must be nonempty")
    epsilon = float(epsilon)
    if not (math.isfinite(epsilon) and epsilon >= 0.0):
        raise DomainError(f"epsilon must be nonnegative, got {epsilon!r}")

    n = game.n_players
    indices = range(len(candidates))
    payoff_by_choice = {
        choice: expected_payoffs(game, tuple(candidates[i] for i in choice))
        for choice in itertools.product(indices, repeat=n)
    }

    equilibria: list[Profile] = []
    for choice in itertools.product(indices, repeat=n):
        own = payoff_by_choice[choice]
        stable = all(
            payoff_by_choice[choice[:p] + (alt,) + choice[p + 1 :]][p] <= own[p] + epsilon
            for p in range(n)
            for alt in indices
        )
        if stable:
            equilibria.append(tuple(candidates[i] for i in choice))
    return equilibria


def pareto_check(
    game: GameSpec,
    profile: Sequence[StrategyParams],
    config: SearchConfig = SearchConfig(),
) -> bool:
    """Grid-relative Pareto-optimality check; a sampling argument, not a proof.

    Scans the product of per-player (theta, phi) grids and returns False as
    soon as some sampled profile weakly improves every player and strictly
    improves at least one (with 1e-9 slack against rounding). The per-axis
    point counts are deterministically halved until the product holds at
    most PARETO_MAX_PROFILES profiles; grid corners survive the thinning.
    """
    current = expected_payoffs(game, tuple(profile))

    theta_points, phi_points = config.theta_points, config.phi_points
    while (theta_points * phi_points) ** game.n_players > PARETO_MAX_PROFILES:
        if theta_points >= phi_points and theta_points > 2:
            theta_points = max(2, (theta_points + 1) // 2)
        elif phi_points > 2:
            phi_points = max(2, (phi_points + 1) // 2)
        else:
            break

    grid = [
        StrategyParams(theta, phi)
        for theta in _axis_grid(0.0, THETA_MAX, theta_points, THETA_MAX)
        for phi in _axis_grid(0.0, PHI_MAX, phi_points, PHI_MAX)
    ]
    for alternative in itertools.product(grid, repeat=game.n_players):
        payoffs = expected_payoffs(game, alternative)
        if np.all(payoffs >= current - _WEAK_TOL) and np.any(payoffs > current + _WEAK_TOL):
            return False
    return True


def payoff_sweep(
    table: PayoffTable,
    profile: Sequence[StrategyParams],
    gamma_values: Sequence[float],
) -> list[tuple[float, np.ndarray]]:
    """Evaluate expected payoffs of one profile at each entanglement angle.

    Output order matches input order; every gamma is range-checked before
    any evaluation happens.
    """
    gammas = [validate_gamma(g) for g in gamma_values]
    profile = tuple(profile)
    return [
        (gamma, expected_payoffs(GameSpec(table.n_players, gamma, table), profile))
        for gamma in gammas
    ]
