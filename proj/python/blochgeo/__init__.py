"""Bloch-length geometry of two-qubit states.

Decomposition into local Bloch vectors and the correlation tensor, the purity
bound from the marginal length difference, the 3D (|a|, |b|, |T|) state-space
model with its bounding surfaces and region classifiers, the named state
families that saturate them, exact two-qubit entanglement detection, and
Monte Carlo audits of every inequality.
"""

from ._core import (
    ArgumentError,
    ValidationError,
    appendix_extremal,
    audit,
    bloch_length,
    cc_state,
    check_theorem1,
    chsh_violation_possible,
    classify_point,
    classify_state,
    concurrence,
    decompose,
    diagonal_state,
    entangling_unitary,
    entanglement_report,
    entropy_entanglement_witness,
    in_model,
    linear_entropy,
    lower_surface,
    marginal_bloch_lengths,
    memms,
    mems,
    mems_max_concurrence,
    mems_optimal,
    model_point,
    point_cloud_csv,
    ppt_min_eigenvalue,
    purity_bound,
    qubit_monogamy_slack,
    reconstruct,
    rho_lb,
    rho_ub,
    sample_states,
    surface_mesh_csv,
    triangle_comparison_bound,
    tripartite_bound,
    tripartite_saturating,
    upper_surface,
    werner,
)

__all__ = [
    "ArgumentError",
    "ValidationError",
    "appendix_extremal",
    "audit",
    "bloch_length",
    "cc_state",
    "check_theorem1",
    "chsh_violation_possible",
    "classify_point",
    "classify_state",
    "concurrence",
    "decompose",
    "diagonal_state",
    "entangling_unitary",
    "entanglement_report",
    "entropy_entanglement_witness",
    "in_model",
    "linear_entropy",
    "lower_surface",
    "marginal_bloch_lengths",
    "memms",
    "mems",
    "mems_max_concurrence",
    "mems_optimal",
    "model_point",
    "point_cloud_csv",
    "ppt_min_eigenvalue",
    "purity_bound",
    "qubit_monogamy_slack",
    "reconstruct",
    "rho_lb",
    "rho_ub",
    "sample_states",
    "surface_mesh_csv",
    "triangle_comparison_bound",
    "tripartite_bound",
    "tripartite_saturating",
    "upper_surface",
    "werner",
]

__version__ = "0.1.0"
