"""Bipartition quality criteria under a single higher-is-better contract.

Every criterion maps a candidate bipartition of a cluster to a score, and
splitters always keep the candidate with the highest score. Criteria that
are naturally minimized (the complete-link diameter) are negated so that
the shared contract holds.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .core import Bipartition, DissimilarityMatrix, cross_values, diameter, mean_within
from .errors import DivclustError, ObjectNotInBipartitionError


class Criterion(Enum):
    """Available split-quality criteria; values double as CLI tokens."""

    SINGLE_LINK = "single"
    COMPLETE_LINK = "complete"
    AVERAGE_LINK = "average"
    WARD_ORIGINAL = "ward1"
    WARD_SZEKELY_RIZZO = "ward2"
    DUNN = "dunn"
    DUNN_VARIANT = "dunn-variant"
    SILHOUETTE = "silhouette"


def parse_criterion(token: str) -> Criterion:
    try:
        return Criterion(token)
    except ValueError:
        raise DivclustError(f"unknown criterion: {token!r}") from None


def _ward_form(table: np.ndarray, left, right) -> float:
    # Pooled pairwise form: (np*nq/(np+nq)) *
    #   [ 2/(np*nq) * sum_cross  -  1/np^2 * sum_left  -  1/nq^2 * sum_right ]
    # where the within sums run over ordered pairs (each unordered pair twice).
    np_, nq = len(left), len(right)
    cross = float(cross_values(table, left, right).sum())
    wp = float(table[np.ix_(left, left)].sum())
    wq = float(table[np.ix_(right, right)].sum())
    factor = np_ * nq / (np_ + nq)
    return factor * (2.0 * cross / (np_ * nq) - wp / np_**2 - wq / nq**2)


def _ratio(num: float, den: float) -> float:
    # Zero denominator means both sides are internally tied at zero: treat a
    # separated split as infinitely good, a fully degenerate one as neutral.
    if den == 0.0:
        return float("inf") if num > 0.0 else 0.0
    return num / den


def silhouette_values(square: np.ndarray, left, right) -> np.ndarray:
    """Silhouette widths s(x) for every object, in ascending object order.

    a(x) is the mean dissimilarity to the rest of x's own side (zero when
    that side is a singleton), b(x) the mean to the other side; s(x) is
    (b - a) / max(a, b), and zero when both means vanish.
    """
    left = np.asarray(left, dtype=int)
    right = np.asarray(right, dtype=int)
    nl, nr = left.size, right.size
    a_left = square[np.ix_(left, left)].sum(axis=1) / (nl - 1) if nl > 1 else np.zeros(nl)
    a_right = square[np.ix_(right, right)].sum(axis=1) / (nr - 1) if nr > 1 else np.zeros(nr)
    b_left = square[np.ix_(left, right)].sum(axis=1) / nr
    b_right = square[np.ix_(right, left)].sum(axis=1) / nl
    a = np.concatenate([a_left, a_right])
    b = np.concatenate([b_left, b_right])
    denom = np.maximum(a, b)
    s = np.zeros(nl + nr)
    np.divide(b - a, denom, out=s, where=denom > 0.0)
    order = np.argsort(np.concatenate([left, right]), kind="stable")
    return s[order]


def _score_sets(
    criterion: Criterion,
    square: np.ndarray,
    left,
    right,
    squared: np.ndarray | None = None,
) -> float:
    """Score one candidate split given ascending member index arrays."""
    if criterion is Criterion.SINGLE_LINK:
        return float(cross_values(square, left, right).min())
    if criterion is Criterion.COMPLETE_LINK:
        return -max(diameter(square, left), diameter(square, right))
    if criterion is Criterion.AVERAGE_LINK:
        return float(cross_values(square, left, right).mean())
    if criterion is Criterion.WARD_ORIGINAL:
        if squared is None:
            squared = square**2
        return _ward_form(squared, left, right)
    if criterion is Criterion.WARD_SZEKELY_RIZZO:
        return _ward_form(square, left, right)
    if criterion is Criterion.DUNN:
        num = float(cross_values(square, left, right).mean())
        return _ratio(num, max(diameter(square, left), diameter(square, right)))
    if criterion is Criterion.DUNN_VARIANT:
        num = float(cross_values(square, left, right).mean())
        return _ratio(num, max(mean_within(square, left), mean_within(square, right)))
    if criterion is Criterion.SILHOUETTE:
        return float(silhouette_values(square, left, right).mean())
    raise DivclustError(f"unhandled criterion: {criterion}")


def score_bipartition(criterion: Criterion, m: DissimilarityMatrix, b: Bipartition) -> float:
    """Score ``b`` on matrix ``m``; higher is a better split.

    All criteria are finite except the two Dunn ratios, which return a
    positive-infinity sentinel when the denominator is zero while the sides
    are separated.
    """
    if b.left[0] < 0 or max(b.left[-1], b.right[-1]) >= m.n:
        raise IndexError(f"bipartition indices out of range for n={m.n}")
    return _score_sets(
        criterion, m.square(), np.asarray(b.left, dtype=int), np.asarray(b.right, dtype=int)
    )


def silhouette_of_object(m: DissimilarityMatrix, b: Bipartition, x: int) -> float:
    """Silhouette width of one object under bipartition ``b``."""
    union = b.members
    if x not in union:
        raise ObjectNotInBipartitionError(f"object {x} is on neither side")
    if b.left[0] < 0 or union[-1] >= m.n:
        raise IndexError(f"bipartition indices out of range for n={m.n}")
    values = silhouette_values(m.square(), b.left, b.right)
    return float(values[union.index(x)])
