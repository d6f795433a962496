"""Independent reference computations used only by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from obforge import sbd


def front_points(d, comp):
    """Corners of ``comp`` in front coordinates, with non-uniform line values."""
    a = {i: Fraction(3 * i * i + i, 1) for i in range(1, d.p + 1)}
    b = {j: Fraction(2 * j * j + 5 * j, 1) for j in range(1, d.q + 1)}
    return [((a[r] - b[c]) / 2, (a[r] + b[c]) / 2, r, c) for r, c in comp.corners]


def front_tb(d):
    """tb per component from the front polygon: signed crossings minus left cusps.

    Crossings are found by intersecting front segments directly; the row
    strand is over.  Left cusps are corners where ``y`` is a strict local
    minimum along the loop.
    """
    comps = sbd.components(d)
    segs = []
    for comp in comps:
        pts = front_points(d, comp)
        n = len(pts)
        for k in range(n):
            p0, p1 = pts[k], pts[(k + 1) % n]
            horizontal = p0[2] == p1[2]
            segs.append((comp.id, horizontal, p0[:2], p1[:2]))
    writhe = {c.id: 0 for c in comps}
    for s in segs:
        for t in segs:
            if not (s[1] and not t[1]):
                continue
            hit = _proper_intersection(s[2], s[3], t[2], t[3])
            if hit and s[0] == t[0]:
                u = (s[3][0] - s[2][0], s[3][1] - s[2][1])
                v = (t[3][0] - t[2][0], t[3][1] - t[2][1])
                writhe[s[0]] += 1 if u[0] * v[1] - u[1] * v[0] > 0 else -1
    cusps = {c.id: 0 for c in comps}
    for comp in comps:
        pts = front_points(d, comp)
        n = len(pts)
        for k in range(n):
            y_prev, y, y_next = pts[k - 1][0], pts[k][0], pts[(k + 1) % n][0]
            if y < y_prev and y < y_next:
                cusps[comp.id] += 1
    return tuple(writhe[c.id] - cusps[c.id] for c in comps)


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _proper_intersection(a, b, c, d):
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def alexander(xs, os):
    """Normalized Alexander polynomial coefficients of a grid knot (minesweeper determinant)."""
    import sympy as sp

    t = sp.symbols("t")
    n = len(xs)
    (comp,) = sbd.components(sbd.from_grid(xs, os))
    half = sp.Rational(1, 2)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(t ** (-winding(comp, i + half, j + half)))
        rows.append(row)
    det = sp.Matrix(rows).det()
    quot = sp.cancel(det / (1 - t) ** (n - 1))
    poly = sp.Poly(sp.expand(quot * t ** (4 * n)), t)
    coeffs = poly.all_coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(int(c) for c in coeffs)


def winding(comp, pr, pc):
    """Winding number about the point ``(row, col) = (pr, pc)``; ray toward larger columns."""
    w = 0
    cs = comp.corners
    for k in range(len(cs)):
        (r0, c0), (r1, c1) = cs[k], cs[(k + 1) % len(cs)]
        if c0 == c1 and c0 > pc and min(r0, r1) < pr < max(r0, r1):
            w += 1 if r1 > r0 else -1
    return w


def torus_boundary(p, q):
    return gcd(p, q)


def torus_euler(p, q):
    return p + q - p * q


def random_grid(rng: random.Random, n: int):
    """Uniform grid diagram of size ``n``: X and O permutations with no shared cell."""
    while True:
        xs = list(range(1, n + 1))
        os = list(range(1, n + 1))
        rng.shuffle(xs)
        rng.shuffle(os)
        if all(a != b for a, b in zip(xs, os)):
            return tuple(xs), tuple(os)
