"""Global skyline queries over per-group skylines, without materializing
the skyline itself.

The point set is split into groups, each group gets the dummy extremes
(-M, M) and (M, -M) appended, and each group's skyline is stored for
binary searches.  Three queries are answered against this structure:
next point on the global skyline, membership + predecessor, and the
next relevant point (farthest skyline point right of p within a radius).
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

from .errors import InternalInvariantViolation
from .geom import (LEFT, AlphaCurve, Point, PointSet, SkylineArray, dist_sq,
                   side_of_alpha)
from .instrument import bisect_charge, counters
from .skyline import _scan_skyline, split_groups

SEARCHES = "binary_searches"
PROBES = "binary_search_probes"


class GroupedSkyline:
    """Immutable after build; all queries are pure."""

    __slots__ = ("groups", "t", "kappa", "M", "lambda_max", "lambda_max_sq",
                 "p0", "q0", "lo_dummy", "hi_dummy", "n")

    def __init__(self, groups, kappa, M, lambda_max, p0, q0, n):
        self.groups: list[SkylineArray] = groups
        self.t: int = len(groups)
        self.kappa: int = kappa
        self.M: float = M
        self.lambda_max: float = lambda_max
        self.lambda_max_sq: float = lambda_max * lambda_max
        self.p0: Point = p0
        self.q0: Point = q0
        self.lo_dummy = Point(-M, M)
        self.hi_dummy = Point(M, -M)
        self.n = n


def build(P: PointSet, kappa: int) -> GroupedSkyline:
    """Split P into ceil(n/kappa) dummy-padded groups with stored skylines."""
    P.require_nonempty()
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    p0 = max(P.points, key=lambda p: (p.y, p.x))
    q0 = max(P.points, key=lambda p: (p.x, p.y))
    lambda_max = 1.0 + math.sqrt(dist_sq(p0, q0))
    maxcoord = max(max(abs(p.x), abs(p.y)) for p in P.points)
    M = 2.0 * lambda_max + maxcoord
    lo_dummy = Point(-M, M)
    hi_dummy = Point(M, -M)
    groups = []
    for chunk in split_groups(P.points, kappa):
        chunk.append(lo_dummy)
        chunk.append(hi_dummy)
        groups.append(_scan_skyline(chunk))
    return GroupedSkyline(groups, kappa, M, lambda_max, p0, q0, len(P))


def next_on_skyline(G: GroupedSkyline, x0: float) -> Point:
    """Leftmost global-skyline point strictly right of x0.

    Returns the (M, -M) dummy once x0 passes the last real point.
    """
    best = None
    best_key = None
    counters.add(SEARCHES, G.t)
    for g in G.groups:
        idx = bisect_right(g.xs, x0)
        counters.add(PROBES, bisect_charge(len(g)))
        if idx >= len(g):
            continue
        cand = g[idx]
        key = (cand.y, cand.x)
        if best_key is None or key > best_key:
            best, best_key = cand, key
    if best is None:
        raise InternalInvariantViolation(f"no point right of x0={x0}")
    return best


def _last_above(g: SkylineArray, y0: float) -> Point | None:
    """Rightmost group-skyline point with y > y0 (group ys are decreasing)."""
    lo, hi = 0, len(g)
    probes = 0
    while lo < hi:
        mid = (lo + hi) // 2
        probes += 1
        if g[mid].y > y0:
            lo = mid + 1
        else:
            hi = mid
    counters.add(PROBES, probes)
    return g[lo - 1] if lo > 0 else None


def test_membership_and_prev(G: GroupedSkyline, p: Point) -> tuple[bool, Point | None]:
    """Is p on the global skyline, and what precedes x(p) on it?

    Two passes of per-group binary searches: an x-keyed pass locates the
    highest point at x >= x(p) (equal to p exactly when p is on the
    skyline), then a y-keyed pass finds the predecessor.  The predecessor
    of the leftmost real point is the (-M, M) dummy; None only for the
    left dummy itself.
    """
    counters.add(SEARCHES, 2 * G.t)
    best = None
    best_key = None
    for g in G.groups:
        idx = bisect_left(g.xs, p.x)
        counters.add(PROBES, bisect_charge(len(g)))
        if idx >= len(g):
            continue
        cand = g[idx]
        key = (cand.y, cand.x)
        if best_key is None or key > best_key:
            best, best_key = cand, key
    if best is None:
        raise InternalInvariantViolation(f"no point at or right of x={p.x}")
    member = p == best

    prev = None
    prev_key = None
    for g in G.groups:
        cand = _last_above(g, best.y)
        if cand is None:
            continue
        key = (cand.x, cand.y)
        if prev_key is None or key > prev_key:
            prev, prev_key = cand, key
    return member, prev


test_membership_and_prev.__test__ = False  # keep pytest collection away


def next_relevant_point(G: GroupedSkyline, p: Point, lambda_sq: float) -> Point:
    """Farthest global-skyline point q with x(q) >= x(p) within the radius.

    Per group, a binary search against the alpha curve yields the last
    point on the covered side and its successor; the membership dichotomy
    then picks the right global answer.  Requires p on the global skyline.
    """
    if lambda_sq >= G.lambda_max_sq:
        # Radius exceeds any real pairwise distance: the whole suffix is
        # covered, and the dummies must be kept out of the searches.
        return G.q0
    if p == G.q0:
        return p

    alpha = AlphaCurve(p, lambda_sq)
    q_best = None
    q_best_key = None
    succ_best = None
    succ_best_key = None
    counters.add(SEARCHES, G.t)
    for g in G.groups:
        # Index 0 (left dummy) is always covered-side; the last index
        # (right dummy) never is, since lambda < lambda_max.
        lo, hi = 0, len(g) - 1
        probes = 0
        while hi - lo > 1:
            mid = (lo + hi) // 2
            probes += 1
            if side_of_alpha(g[mid], alpha) is LEFT:
                lo = mid
            else:
                hi = mid
        counters.add(PROBES, probes)
        q_i = g[lo]
        succ_i = g[lo + 1]
        key_q = (q_i.x, q_i.y)
        if q_best_key is None or key_q > q_best_key:
            q_best, q_best_key = q_i, key_q
        key_s = (succ_i.y, succ_i.x)
        if succ_best_key is None or key_s > succ_best_key:
            succ_best, succ_best_key = succ_i, key_s

    member, prev = test_membership_and_prev(G, succ_best)
    result = prev if member else q_best
    if result is None or abs(result.x) == G.M:
        raise InternalInvariantViolation(
            "next relevant point landed on a dummy; is p on the skyline?")
    return result
