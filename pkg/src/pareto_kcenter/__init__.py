"""Distance-based representative skylines: k-center along the planar
Pareto front.

The library computes skylines output-sensitively, decides coverability
by k radius-bounded disks with or without materializing the skyline,
solves the optimization exactly by sorted-matrix selection or parametric
search, and offers linear/near-linear routes for very small k, all
validated against brute-force oracles.
"""

from .decision import DecisionOutcome, decide_grouped, decide_materialized
from .errors import (DegenerateSpan, EmptyInput, InstanceTooLarge,
                     InternalInvariantViolation, InvalidEpsilon, NotFound,
                     RankOutOfRange)
from .exact import (SolveResult, SortedDistanceMatrix, matrix_select,
                    multi_array_search, param_next_relevant, solve_parametric,
                    solve_via_matrix)
from .geom import (AlphaCurve, LEFT, Point, PointSet, RIGHT_OR_BEYOND,
                   SkylineArray, cmp_perturbed_high, cmp_perturbed_right,
                   dist_sq, dominates, key_high, key_right, side_of_alpha)
from .grouped import (GroupedSkyline, build, next_on_skyline,
                      next_relevant_point, test_membership_and_prev)
from .instances import GENERATORS, InstanceSpec, generate
from .instrument import counters
from .oracle import (brute_matrix_rank, brute_opt, brute_psi_sq,
                     brute_skyline)
from .skyline import (BoundedResult, skyline_bounded, skyline_optimal,
                      slow_skyline)
from .smallk import (Slab, approx_solve, bisector_extremes, gonzalez_2approx,
                     solve_one_center)

__version__ = "0.1.0"

__all__ = [
    "AlphaCurve", "BoundedResult", "DecisionOutcome", "DegenerateSpan",
    "EmptyInput", "GENERATORS", "GroupedSkyline", "InstanceSpec",
    "InstanceTooLarge", "InternalInvariantViolation", "InvalidEpsilon",
    "LEFT", "NotFound", "Point", "PointSet", "RIGHT_OR_BEYOND",
    "RankOutOfRange", "SkylineArray", "Slab", "SolveResult",
    "SortedDistanceMatrix", "approx_solve", "bisector_extremes",
    "brute_matrix_rank", "brute_opt", "brute_psi_sq", "brute_skyline",
    "build", "cmp_perturbed_high", "cmp_perturbed_right", "counters",
    "decide_grouped", "decide_materialized", "dist_sq", "dominates",
    "generate", "gonzalez_2approx", "key_high", "key_right",
    "matrix_select", "multi_array_search", "next_on_skyline",
    "next_relevant_point", "param_next_relevant", "side_of_alpha",
    "skyline_bounded", "skyline_optimal", "slow_skyline",
    "solve_one_center", "solve_parametric", "solve_via_matrix",
    "test_membership_and_prev",
]
