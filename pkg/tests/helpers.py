"""Independently coded reference implementations for cross-checking.

Everything here sticks to plain Python loops and the stdlib so these
oracles cannot share a vectorization bug with the production code. Tests
freeze oracle outputs or compare them directly against the package.
"""

from __future__ import annotations

import itertools
import math

# Packed pair values for points 0, 1, 10, 11 on a line:
# pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
LINE4_VALUES = (1.0, 10.0, 11.0, 9.0, 10.0, 1.0)

CRITERIA = (
    "single",
    "complete",
    "average",
    "ward1",
    "ward2",
    "dunn",
    "dunn-variant",
    "silhouette",
)


def square_from_condensed(n, values):
    """Full square table from packed pair values, via its own pair walk."""
    s = [[0.0] * n for _ in range(n)]
    for (i, j), v in zip(itertools.combinations(range(n), 2), values):
        s[i][j] = v
        s[j][i] = v
    return s


def within_pairs(s, a):
    return [s[i][j] for i, j in itertools.combinations(sorted(a), 2)]


def cross_pairs(s, a, b):
    return [s[i][j] for i in sorted(a) for j in sorted(b)]


def diam(s, a):
    w = within_pairs(s, a)
    return max(w) if w else 0.0


def mean_within(s, a):
    w = within_pairs(s, a)
    return sum(w) / len(w) if w else 0.0


def silhouette_value(s, own, other, x):
    rest = [y for y in own if y != x]
    a = sum(s[x][y] for y in rest) / len(rest) if rest else 0.0
    b = sum(s[x][y] for y in other) / len(other)
    peak = max(a, b)
    if peak == 0.0:
        return 0.0
    return (b - a) / peak


def score(token, s, a, b):
    """Reference score of one candidate bipartition.

    Sides are put in canonical order first so the float result depends
    only on the unordered partition, not on which side was passed first.
    """
    a = sorted(a)
    b = sorted(b)
    if b and (not a or b[0] < a[0]):
        a, b = b, a
    cross = cross_pairs(s, a, b)
    if token == "single":
        return min(cross)
    if token == "complete":
        return -max(diam(s, a), diam(s, b))
    if token == "average":
        return sum(cross) / len(cross)
    if token in ("ward1", "ward2"):
        power = 2 if token == "ward1" else 1
        na, nb = len(a), len(b)
        cr = sum(v**power for v in cross)
        wa = 2.0 * sum(v**power for v in within_pairs(s, a))
        wb = 2.0 * sum(v**power for v in within_pairs(s, b))
        return (na * nb / (na + nb)) * (2.0 * cr / (na * nb) - wa / na**2 - wb / nb**2)
    if token in ("dunn", "dunn-variant"):
        num = sum(cross) / len(cross)
        if token == "dunn":
            den = max(diam(s, a), diam(s, b))
        else:
            den = max(mean_within(s, a), mean_within(s, b))
        if den == 0.0:
            return math.inf if num > 0.0 else 0.0
        return num / den
    if token == "silhouette":
        union = sorted([*a, *b])
        vals = [
            silhouette_value(s, a if x in a else b, b if x in a else a, x)
            for x in union
        ]
        return sum(vals) / len(vals)
    raise AssertionError(f"oracle has no criterion {token!r}")


def two_seeds_best(s, members, token):
    """Exhaustive seed-pair enumeration: (best score, best sides, first-max)."""
    members = sorted(members)
    best_score = None
    best_sides = None
    for gi, gj in itertools.combinations(members, 2):
        left, right = [gi], [gj]
        for x in members:
            if x in (gi, gj):
                continue
            (left if s[x][gi] <= s[x][gj] else right).append(x)
        value = score(token, s, left, right)
        if best_score is None or value > best_score:
            best_score = value
            best_sides = (frozenset(left), frozenset(right))
    return best_score, best_sides


def all_bipartitions(members):
    """Every unordered two-block partition, each yielded exactly once."""
    ms = sorted(members)
    first, rest = ms[0], ms[1:]
    for r in range(len(rest)):
        for combo in itertools.combinations(rest, r):
            left = [first, *combo]
            right = [x for x in rest if x not in combo]
            yield left, right


def concordance_counts(dvals, uvals):
    """Direct quadruple loop over unordered pairs of distinct object pairs."""
    s_plus = 0
    s_minus = 0
    for a, b in itertools.combinations(range(len(dvals)), 2):
        dd = dvals[a] - dvals[b]
        uu = uvals[a] - uvals[b]
        if dd == 0.0 or uu == 0.0:
            continue
        if (dd > 0.0) == (uu > 0.0):
            s_plus += 1
        else:
            s_minus += 1
    return s_plus, s_minus


def pearson(x, y):
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(x, y))
    vx = sum((a - mx) ** 2 for a in x)
    vy = sum((b - my) ** 2 for b in y)
    return cov / math.sqrt(vx * vy)
