"""Quantum Chinos game simulator."""

from chinos._core import (
    ChinosError,
    admissible_pairs,
    averaged_probs,
    block_decomposition,
    calibrated_depolarizing_p,
    classical_round,
    compare_experiment,
    crossing_angles,
    equilibrium,
    estimate_overlap,
    metric_labels,
    metric_matrix,
    monte_carlo,
    orthogonal_guesses,
    outcome_probs,
    purity_relation,
    two_qubit_probabilities,
    winning_probability,
    __version__,
)

__all__ = [
    "ChinosError",
    "admissible_pairs",
    "averaged_probs",
    "block_decomposition",
    "calibrated_depolarizing_p",
    "classical_round",
    "compare_experiment",
    "crossing_angles",
    "equilibrium",
    "estimate_overlap",
    "metric_labels",
    "metric_matrix",
    "monte_carlo",
    "orthogonal_guesses",
    "outcome_probs",
    "purity_relation",
    "two_qubit_probabilities",
    "winning_probability",
    "__version__",
]
