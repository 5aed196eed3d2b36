"""The decision problem: can k disks of radius lambda, centered on
skyline points, cover the whole skyline?

Two procedures answer it: a linear greedy over the materialized skyline,
and a grouped greedy that never materializes the skyline at all.  They
return identical centers.
"""

import math

from pareto_kcenter import (InstanceSpec, build, decide_grouped,
                            decide_materialized, dist_sq, generate,
                            skyline_optimal)

P = generate(InstanceSpec("uniform-square", n=4000, seed=7))
sky = skyline_optimal(P)
print(f"n={len(P)}, h={len(sky)}")

k = 3
# Candidate radii are pairwise skyline distances; probe a few.
diam_sq = dist_sq(sky[0], sky[-1])
for frac in (0.05, 0.15, 0.4):
    lam_sq = diam_sq * frac * frac
    out = decide_materialized(sky, k, lam_sq)
    verdict = "FEASIBLE" if out.feasible else "INCOMPLETE"
    print(f"lambda = {math.sqrt(lam_sq):8.2f} (k={k}): {verdict}"
          + (f", centers={len(out.centers)}" if out.feasible else ""))

# The grouped variant sees only per-group skylines (here kappa = k).
G = build(P, kappa=k)
for frac in (0.05, 0.15, 0.4):
    lam_sq = diam_sq * frac * frac
    a = decide_materialized(sky, k, lam_sq)
    b = decide_grouped(G, k, lam_sq)
    assert a.feasible == b.feasible and a.centers == b.centers
print("grouped decision reproduces the materialized one, center for center")

# Feasible outcomes are self-certifying: every skyline point is within
# lambda of some returned center.
lam_sq = diam_sq * 0.16
out = decide_grouped(G, k, lam_sq)
worst = max(min(dist_sq(p, c) for c in out.centers) for p in sky)
print(f"certificate: worst covering distance^2 {worst:.1f} <= {lam_sq:.1f}")
