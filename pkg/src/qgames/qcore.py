"""State vectors and the operator algebra of the entangling-gate protocol.

Conventions used by every module in this package:

* Outcome indices are bitstrings read left to right, player 0 first, so
  player 0 owns the most significant bit: for three players the amplitude
  at index ``0b100`` belongs to outcome ``"100"``.
* Bit value 0 is ``|0>`` = Cooperate, bit value 1 is ``|1>`` = Defect.

The entangling gate is applied through its exact two-term closed form
(the square of a flip on every qubit is the identity, so the exponential
series collapses), never through a general matrix exponential.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, NormalizationError, ValidationError

MIN_PLAYERS = 2
MAX_PLAYERS = 12  # keeps state vectors desk-scale (at most 4096 amplitudes)

ATOL_STRICT = 1e-12  # internal identities
ATOL_BOUNDARY = 1e-9  # accepted drift at API boundaries


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.setflags(write=False)
    return arr


IDENTITY_2 = _frozen([[1, 0], [0, 1]])
PAULI_X = _frozen([[0, 1], [1, 0]])
PAULI_Y = _frozen([[0, -1j], [1j, 0]])


def validate_gamma(gamma: float) -> float:
    """Check the entanglement angle lies in [0, pi/2]; returns it as a float."""
    gamma = float(gamma)
    if not (math.isfinite(gamma) and 0.0 <= gamma <= math.pi / 2):
        raise DomainError(f"gamma must lie in [0, pi/2], got {gamma!r}")
    return gamma


def outcome_bitstrings(n_players: int) -> list[str]:
    """All outcome bitstrings in index order (player 0 = leftmost character)."""
    return [format(k, f"0{n_players}b") for k in range(2**n_players)]


def outcome_index(bits: str) -> int:
    """Amplitude index of an outcome bitstring."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValidationError(f"not an outcome bitstring: {bits!r}")
    return int(bits, 2)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Joint pure state of all players' qubits: 2**n_players amplitudes.

    Amplitudes are copied on construction and frozen; instances are safe to
    share across threads. The norm is not forced to 1 here (tests build raw
    vectors), but every protocol operation preserves it and `probabilities`
    rejects states whose norm has drifted beyond 1e-9.
    """

    n_players: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not (MIN_PLAYERS <= self.n_players <= MAX_PLAYERS):
            raise DomainError(
                f"n_players must lie in [{MIN_PLAYERS}, {MAX_PLAYERS}], got {self.n_players!r}"
            )
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_players,):
            raise DimensionError(
                f"expected {2**self.n_players} amplitudes for {self.n_players} players, "
                f"got shape {amps.shape}"
            )
        if not np.isfinite(amps).all():
            raise ValidationError("amplitudes must be finite (no NaN/Inf)")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_players: int, outcome: str | int = 0) -> StateVector:
        """Computational basis state |outcome>; defaults to all-Cooperate |0...0>."""
        index = outcome_index(outcome) if isinstance(outcome, str) else int(outcome)
        amps = np.zeros(2**n_players, dtype=complex)
        amps[index] = 1.0
        return cls(n_players, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def is_unitary(op: np.ndarray, atol: float = ATOL_STRICT) -> bool:
    """True when op is a 2x2 matrix with op^dagger op = I within atol."""
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        return False
    return abs(op.conj().T @ op - IDENTITY_2).max() <= atol


def tensor_apply(state: StateVector, ops: Sequence[np.ndarray]) -> StateVector:
    """Apply one 2x2 unitary per player: (op_0 x ... x op_{N-1}) |state>.

    Player p's operator acts on qubit p (the p-th bit from the left).
    """
    n = state.n_players
    if len(ops) != n:
        raise DimensionError(f"expected {n} operators, got {len(ops)}")
    checked = []
    for p, op in enumerate(ops):
        mat = np.asarray(op, dtype=complex)
        if mat.shape != (2, 2):
            raise DimensionError(f"operator for player {p} is not 2x2")
        if not is_unitary(mat):
            raise ValidationError(f"operator for player {p} is not unitary")
        checked.append(mat)
    psi = state.amplitudes
    for p, mat in enumerate(checked):
        # Split the flat index around qubit p and mix its two slices.
        blocks = psi.reshape(2**p, 2, 2 ** (n - 1 - p))
        zero, one = blocks[:, 0, :], blocks[:, 1, :]
        mixed = np.empty_like(blocks)
        mixed[:, 0, :] = mat[0, 0] * zero + mat[0, 1] * one
        mixed[:, 1, :] = mat[1, 0] * zero + mat[1, 1] * one
        psi = mixed.reshape(-1)
    return StateVector(n, psi)


def entangling_gate_apply(
    state: StateVector, gamma: float, dagger: bool = False
) -> StateVector:
    """Apply the entangling gate: cos(gamma/2) I +/- i sin(gamma/2) X on every qubit.

    The minus sign is the daggered gate. Flipping every qubit reverses the
    amplitude order, so the whole gate is two vector operations.
    """
    gamma = validate_gamma(gamma)
    cos_half = math.cos(gamma / 2.0)
    sin_half = math.sin(gamma / 2.0)
    phase = -1j if dagger else 1j
    amps = cos_half * state.amplitudes + (phase * sin_half) * state.amplitudes[::-1]
    return StateVector(state.n_players, amps)


def probabilities(state: StateVector) -> np.ndarray:
    """Measurement distribution |amplitude|^2, renormalized to sum to 1.

    Rejects states whose norm deviates from 1 by more than 1e-9.
    """
    amps = state.amplitudes
    probs = amps.real**2 + amps.imag**2
    total = float(probs.sum())
    if abs(math.sqrt(total) - 1.0) > ATOL_BOUNDARY:
        raise NormalizationError(
            f"state norm is {math.sqrt(total)!r}, expected 1 within 1e-9"
        )
    return probs / total
