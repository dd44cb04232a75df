"""Two-robot wireless evacuation on l_p unit circles.

Pass ``math.inf`` as ``p`` for the square (max-norm) circle.
"""

from ._core import (
    Branch,
    CriticalParams,
    CurveTable,
    Direction,
    MonotonicityReport,
    OptimalityReport,
    __version__,
    chord_length,
    cost_table,
    critical_params,
    critical_params_branch,
    evac_time,
    generic_lower_bound,
    lchord_table,
    min_chord_L,
    optimality_report,
    pi_p,
    pi_table,
    profile_table,
    robot_positions,
    separation,
    sigma,
    sigma_table,
    simulate_exit,
    verify_L_monotone,
    verify_sigma_monotone,
    weak_lower_bound,
    worst_case_cost,
    worst_case_cost_at,
    worst_case_grid_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
