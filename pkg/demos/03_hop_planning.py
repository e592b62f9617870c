"""Hop planning: reliable angles, interruption risk, and feasibility.

Shows how the planner chooses a hop count for a requested endpoint
separation: it starts from the fewest geometrically possible hops and
increases the count until the per-hop search radius (the reliable
angle) fits inside the hop geometry — or flags the plan as infeasible
(a type-I interruption) when no count works within the failure budget.
"""

import math

from leoroute import (
    PRESET_PARAMS,
    iteration_bound,
    max_hop_angle,
    min_sats_grid_minimum,
    n_min_ideal,
    plan_hops,
    reliable_angle,
)

R_EARTH = 6371.0
ARC = math.pi  # endpoints half a world apart

for name in ("starlink", "kuiper", "oneweb"):
    altitude_km, n_sat = PRESET_PARAMS[name]
    radius = R_EARTH + altitude_km
    theta_max = max_hop_angle(radius, R_EARTH, 3000.0)
    print(f"=== {name}: {n_sat} satellites at {altitude_km:.0f} km "
          f"(max hop angle {theta_max:.4f} rad)")
    print(f"  fewest possible hops for a half circle: {n_min_ideal(ARC, theta_max)}")
    for eps in (0.1, 0.01):
        plan = plan_hops(ARC, theta_max, n_sat, eps)
        flag = "TYPE-I INTERRUPTED" if plan.type1_interrupted else "feasible"
        print(f"  eps={eps:<5}: n_hat={plan.n_hat:3d} hops, "
              f"reliable angle {plan.reliable_angle:.4f} rad, "
              f"{plan.iterations_used} planner iterations -> {flag}")
    # The planner provably terminates within this many iterations (the
    # bound is astronomically loose on dense shells, tight on sparse ones).
    bound = iteration_bound(0.1, theta_max, n_sat)
    print(f"  iteration bound at eps=0.1: "
          f"{bound:.1f}" if bound < 1e6 else f"  iteration bound at eps=0.1: {bound:.3g}")
    # How many satellites would make a half-circle plan comfortable?
    print(f"  satellites sufficient for eps=0.01: "
          f"{min_sats_grid_minimum(ARC, theta_max, 0.01)}")
    print()

# The reliable angle by itself: the search radius that keeps the chance
# of finding no satellite within budget, spread over n hops.
print("reliable angle vs hop count (650 satellites, eps=0.01):")
for n in (3, 9, 30, 69):
    print(f"  n={n:3d}: {reliable_angle(0.01, n, 650):.4f} rad")
