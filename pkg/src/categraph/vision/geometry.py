"""2D helpers: convex hull, smallest enclosing circle, oriented bounding box.

Points are (x, y) float pairs.  A circle is (cx, cy, r).
"""

from __future__ import annotations

import math
import random
from typing import Sequence

Point = tuple[float, float]
Circle = tuple[float, float, float]

_CONTAINMENT_SLACK = 1.0 + 1e-12


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Monotone-chain convex hull in counterclockwise order."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    def cross(o: Point, a: Point, b: Point) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_area(vertices: Sequence[Point]) -> float:
    """Shoelace area of a simple polygon."""
    n = len(vertices)
    if n < 3:
        return 0.0
    total = 0.0
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return abs(total) / 2.0


def _circle_from_diameter(a: Point, b: Point) -> Circle:
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return (cx, cy, r)


def _in_circle(circle: Circle, p: Point) -> bool:
    return math.hypot(p[0] - circle[0], p[1] - circle[1]) <= circle[2] * _CONTAINMENT_SLACK


def min_enclosing_circle(points: Sequence[Point]) -> Circle:
    """Smallest circle containing all points (randomized incremental,
    expected linear time; internally seeded so results are reproducible)."""
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        raise ValueError("need at least one point")
    random.Random(0x5EED).shuffle(pts)

    circle: Circle | None = None
    for i, p in enumerate(pts):
        if circle is None or not _in_circle(circle, p):
            circle = _circle_with_point(pts[: i + 1], p)
    assert circle is not None
    return circle


def _circle_with_point(points: Sequence[Point], p: Point) -> Circle:
    circle: Circle = (p[0], p[1], 0.0)
    for i, q in enumerate(points):
        if not _in_circle(circle, q):
            if circle[2] == 0.0:
                circle = _circle_from_diameter(p, q)
            else:
                circle = _circle_with_two_points(points[: i + 1], p, q)
    return circle


def _circle_with_two_points(points: Sequence[Point], p: Point, q: Point) -> Circle:
    # Any circle through p and q has its center m + t*n on their bisector
    # (m midpoint, n unit normal) and radius sqrt(|pq|^2/4 + t^2).  Each
    # point constrains t to a half-line; the feasible t closest to 0 gives
    # the smallest circle.
    mx, my = (p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0
    dx, dy = q[0] - p[0], q[1] - p[1]
    d = math.hypot(dx, dy)
    if d == 0.0:
        return _circle_with_point(points, p)
    nx, ny = -dy / d, dx / d
    quarter = d * d / 4.0
    lo, hi = -math.inf, math.inf
    for r in points:
        if r == p or r == q:
            continue  # on every circle through p and q by construction
        ax, ay = r[0] - mx, r[1] - my
        a = ax * nx + ay * ny
        b = ax * ax + ay * ay - quarter
        if a > 0.0:
            lo = max(lo, b / (2.0 * a))
        elif a < 0.0:
            hi = min(hi, b / (2.0 * a))
        # a == 0: the point lies on the pq line and is inside iff b <= 0;
        # the incremental invariant guarantees feasibility there
    t = 0.0
    if lo > 0.0:
        t = lo
    elif hi < 0.0:
        t = hi
    return (mx + t * nx, my + t * ny, math.sqrt(quarter + t * t))


def oriented_bounding_box(points: Sequence[Point]) -> tuple[float, tuple[float, float]]:
    """Minimum-area bounding rectangle over the convex hull, found by
    rotating calipers over the hull edges.  Returns (area, (width, height))."""
    hull = convex_hull(points)
    if len(hull) < 2:
        return 0.0, (0.0, 0.0)
    if len(hull) == 2:
        (x0, y0), (x1, y1) = hull
        return 0.0, (math.hypot(x1 - x0, y1 - y0), 0.0)
    best_area = math.inf
    best_dims = (0.0, 0.0)
    for i in range(len(hull)):
        x0, y0 = hull[i]
        x1, y1 = hull[(i + 1) % len(hull)]
        ex, ey = x1 - x0, y1 - y0
        length = math.hypot(ex, ey)
        if length == 0.0:
            continue
        ux, uy = ex / length, ey / length
        lo_u = hi_u = lo_v = hi_v = None
        for px, py in hull:
            u = px * ux + py * uy
            v = -px * uy + py * ux
            lo_u = u if lo_u is None else min(lo_u, u)
            hi_u = u if hi_u is None else max(hi_u, u)
            lo_v = v if lo_v is None else min(lo_v, v)
            hi_v = v if hi_v is None else max(hi_v, v)
        w, h = hi_u - lo_u, hi_v - lo_v
        area = w * h
        if area < best_area:
            best_area = area
            best_dims = (w, h)
    return best_area, best_dims
