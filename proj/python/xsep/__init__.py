"""Three-qubit X-state separability toolkit."""

from ._core import (
    __version__,
    a_value,
    b_value,
    decide,
    decompose_acin,
    delta,
    dual_norm,
    dual_norm_oracle,
    is_state,
    is_witness,
    pair_value,
    phase_difference,
    region_scan_pqqq,
    region_scan_theta,
    x_norm,
    x_norm_oracle,
)

__all__ = [
    "__version__",
    "a_value",
    "b_value",
    "decide",
    "decompose_acin",
    "delta",
    "dual_norm",
    "dual_norm_oracle",
    "is_state",
    "is_witness",
    "pair_value",
    "phase_difference",
    "region_scan_pqqq",
    "region_scan_theta",
    "x_norm",
    "x_norm_oracle",
]
