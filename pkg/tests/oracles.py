"""Independent dense-matrix reference implementations, used only by tests.

Everything here is deliberately longhand: explicit pairwise Kronecker
expansion, a truncated power series for the entangler, and plain
enumeration for expectations. Nothing calls into the package's own algebra,
so agreement between the two is a real cross-check.
"""

import itertools

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)

# Outcome-index order 000..111; rows are (payoff_0, payoff_1, payoff_2).
PD3_ROWS = np.array(
    [
        [3, 3, 3],
        [2, 2, 5],
        [2, 5, 2],
        [0, 4, 4],
        [5, 2, 2],
        [4, 0, 4],
        [4, 4, 0],
        [1, 1, 1],
    ],
    dtype=float,
)


def kron_chain(mats):
    """Tensor product of a sequence of matrices, expanded pairwise."""
    out = np.array([[1.0]], dtype=complex)
    for mat in mats:
        out = np.kron(out, np.asarray(mat, dtype=complex))
    return out


def taylor_expm(matrix, terms=60):
    """Matrix exponential by truncated power series."""
    matrix = np.asarray(matrix, dtype=complex)
    result = np.eye(matrix.shape[0], dtype=complex)
    term = np.eye(matrix.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ matrix / k
        result = result + term
    return result


def dense_entangler(n, gamma, dagger=False):
    """exp(+-i gamma/2 X x ... x X) as a dense matrix via the series oracle."""
    sign = -1.0 if dagger else 1.0
    return taylor_expm(sign * 1j * (gamma / 2.0) * kron_chain([SIGMA_X] * n))


def dense_strategy(theta, phi):
    """Reference strategy matrix, restated independently of the package."""
    return np.array(
        [
            [np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)],
            [-np.exp(-1j * phi) * np.sin(theta / 2), np.cos(theta / 2)],
        ],
        dtype=complex,
    )


def dense_final_state(n, gamma, angle_pairs):
    """Full 2^n x 2^n pipeline: disentangle @ local moves @ entangle @ |0...0>."""
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = 1.0
    moves = kron_chain([dense_strategy(t, f) for t, f in angle_pairs])
    return dense_entangler(n, gamma, dagger=True) @ moves @ dense_entangler(n, gamma) @ psi


def dense_payoffs(table_rows, gamma, angle_pairs):
    """Expected payoffs from the dense pipeline; table_rows is (2^n, n)."""
    table_rows = np.asarray(table_rows, dtype=float)
    n = table_rows.shape[1]
    psi = dense_final_state(n, gamma, angle_pairs)
    probs = np.abs(psi) ** 2
    return (probs / probs.sum()) @ table_rows


def bernoulli_mixture_payoffs(table_rows, coop_probs):
    """Expectation over independent cooperate/defect draws, by enumeration."""
    table_rows = np.asarray(table_rows, dtype=float)
    n = len(coop_probs)
    total = np.zeros(n)
    for index in range(2**n):
        bits = format(index, f"0{n}b")
        weight = 1.0
        for p, bit in enumerate(bits):
            weight *= coop_probs[p] if bit == "0" else 1.0 - coop_probs[p]
        total += weight * table_rows[index]
    return total


def set_relative_equilibria(table_rows, gamma, candidate_angles, epsilon):
    """Brute-force set-relative Nash enumeration on the dense pipeline.

    candidate_angles: list of (theta, phi) pairs. Returns the qualifying
    profiles as tuples of candidate indices, in product order.
    """
    n = np.asarray(table_rows).shape[1]
    indices = range(len(candidate_angles))
    cache = {
        choice: dense_payoffs(
            table_rows, gamma, [candidate_angles[i] for i in choice]
        )
        for choice in itertools.product(indices, repeat=n)
    }
    found = []
    for choice in itertools.product(indices, repeat=n):
        own = cache[choice]
        stable = all(
            cache[choice[:p] + (alt,) + choice[p + 1 :]][p] <= own[p] + epsilon
            for p in range(n)
            for alt in indices
        )
        if stable:
            found.append(choice)
    return found
