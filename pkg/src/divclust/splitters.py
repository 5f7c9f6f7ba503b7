"""Cluster splitting procedures.

Three ways to cut one cluster into two:

* :func:`two_seeds_split` - exhaustive search over all seed pairs, keeping
  the candidate that maximizes a chosen criterion;
* :func:`macnaughton_smith_split` - iterative splinter-group peeling;
* :func:`pddp_split` - sign split on the first principal coordinate, with
  a mean-distance refinement.

All splitters are deterministic: ties are broken by the documented
first-appearance / smallest-index rules, never by randomness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Bipartition, DissimilarityMatrix, object_set
from .criteria import Criterion, _score_sets, parse_criterion
from .errors import ClusterTooSmallError, DivclustError, NoPositiveEigenvalueError

POWER_ITERATION_TOL = 1e-10
POWER_ITERATION_CAP = 10_000

TWO_SEEDS = "two-seeds"
MACNAUGHTON_SMITH = "macnaughton-smith"
PDDP = "pddp"


@dataclass(frozen=True)
class Splitter:
    """A splitting procedure selector; two-seeds carries its criterion."""

    kind: str
    criterion: Criterion | None = None

    def __post_init__(self):
        if self.kind == TWO_SEEDS:
            if self.criterion is None:
                raise DivclustError("two-seeds splitter needs a criterion")
        elif self.kind in (MACNAUGHTON_SMITH, PDDP):
            if self.criterion is not None:
                raise DivclustError(f"{self.kind} splitter takes no criterion")
        else:
            raise DivclustError(f"unknown splitter: {self.kind!r}")

    @property
    def token(self) -> str:
        if self.kind == TWO_SEEDS:
            return f"{TWO_SEEDS}:{self.criterion.value}"
        return self.kind


def parse_splitter(token: str) -> Splitter:
    """Parse a splitter token: ``two-seeds:<criterion>``, ``macnaughton-smith`` or ``pddp``."""
    if token in (MACNAUGHTON_SMITH, PDDP):
        return Splitter(token)
    if token.startswith(TWO_SEEDS + ":"):
        return Splitter(TWO_SEEDS, parse_criterion(token[len(TWO_SEEDS) + 1 :]))
    raise DivclustError(f"unknown splitter: {token!r}")


def _cluster_submatrix(m: DissimilarityMatrix, members) -> tuple[tuple[int, ...], np.ndarray]:
    ms = object_set(members)
    if ms[0] < 0 or ms[-1] >= m.n:
        raise IndexError(f"cluster indices out of range for n={m.n}")
    if len(ms) < 2:
        raise ClusterTooSmallError("cannot split a singleton")
    idx = np.asarray(ms, dtype=int)
    return ms, m.square()[np.ix_(idx, idx)]


def _to_bipartition(members: tuple[int, ...], left_local, right_local) -> Bipartition:
    idx = np.asarray(members, dtype=int)
    return Bipartition(tuple(idx[left_local]), tuple(idx[right_local]))


def two_seeds_split(
    m: DissimilarityMatrix, members, criterion: Criterion
) -> Bipartition:
    """Best-scoring seed-pair split of one cluster.

    Every ordered-ascending seed pair (i, j) generates a candidate: each
    remaining object joins the nearer seed, ties going to seed i. Candidates
    are scored with ``criterion`` and the first strict maximum over the
    lexicographic pair enumeration wins.
    """
    ms, sub = _cluster_submatrix(m, members)
    k = len(ms)
    squared = sub**2 if criterion is Criterion.WARD_ORIGINAL else None
    best = -np.inf
    best_sides = None
    for a in range(k):
        col_a = sub[:, a]
        for b in range(a + 1, k):
            mask = col_a <= sub[:, b]
            mask[a] = True
            mask[b] = False
            left = np.flatnonzero(mask)
            right = np.flatnonzero(~mask)
            score = _score_sets(criterion, sub, left, right, squared)
            if score > best:
                best = score
                best_sides = (left, right)
    return _to_bipartition(ms, *best_sides)


def macnaughton_smith_split(m: DissimilarityMatrix, members) -> Bipartition:
    """Splinter-group split of one cluster.

    The object with the largest mean dissimilarity to the rest seeds the
    splinter group. Then, repeatedly, the object of the remainder whose mean
    dissimilarity to the rest of the remainder exceeds its mean to the
    splinter group by the most (strictly positive gap) moves over; ties take
    the smallest index, and peeling stops when no gap is positive or the
    remainder would drop below two members.
    """
    ms, sub = _cluster_submatrix(m, members)
    k = len(ms)
    seed = int(np.argmax(sub.sum(axis=1) / (k - 1)))
    rest = [x for x in range(k) if x != seed]
    splinter = [seed]
    while len(rest) >= 2:
        rest_idx = np.asarray(rest, dtype=int)
        spl_idx = np.asarray(splinter, dtype=int)
        within_rest = sub[np.ix_(rest_idx, rest_idx)]
        to_rest = within_rest.sum(axis=1) / (len(rest) - 1)
        to_splinter = sub[np.ix_(rest_idx, spl_idx)].sum(axis=1) / len(splinter)
        gap = to_rest - to_splinter
        j = int(np.argmax(gap))
        if not gap[j] > 0.0:
            break
        mover = rest.pop(j)
        splinter.append(mover)
        splinter.sort()
    return _to_bipartition(ms, np.asarray(rest, dtype=int), np.asarray(splinter, dtype=int))


@dataclass(frozen=True, eq=False)
class PcoaAxis:
    """First principal coordinate of a cluster: per-member coords and eigenvalue."""

    coords: np.ndarray
    eigenvalue: float


def pcoa_first_axis(m: DissimilarityMatrix, members) -> PcoaAxis:
    """Dominant principal coordinate of the cluster, by power iteration.

    The squared dissimilarities are double-centered into a Gram table, the
    dominant eigenpair is extracted with a fixed alternating-sign start
    vector, and coordinates are the unit eigenvector scaled by the square
    root of the eigenvalue. The sign is flipped so the smallest member's
    coordinate is nonpositive.

    Raises NoPositiveEigenvalueError when the dominant eigenvalue does not
    exceed ``1e-12`` times the Gram trace, as happens for all-tied clusters.
    """
    ms, sub = _cluster_submatrix(m, members)
    k = len(ms)
    d2 = sub**2
    row_mean = d2.mean(axis=1)
    gram = -0.5 * (d2 - row_mean[:, None] - row_mean[None, :] + d2.mean())
    trace = float(np.trace(gram))

    v = np.where(np.arange(k) % 2 == 0, 1.0, -1.0)
    v -= v.mean()
    v /= np.linalg.norm(v)
    for _ in range(POWER_ITERATION_CAP):
        w = gram @ v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            raise NoPositiveEigenvalueError("cluster has no positive spread")
        w /= norm
        done = float(np.abs(w - v).max()) < POWER_ITERATION_TOL
        v = w
        if done:
            break
    eigenvalue = float(v @ (gram @ v))
    if eigenvalue <= 1e-12 * trace:
        raise NoPositiveEigenvalueError("dominant eigenvalue is not positive")
    coords = np.sqrt(eigenvalue) * v
    if coords[0] > 0.0:
        coords = -coords
    coords.setflags(write=False)
    return PcoaAxis(coords, eigenvalue)


def _sides_from_coords(coords: np.ndarray) -> np.ndarray:
    """Left-side mask from axis coordinates: negative side is the left.

    If a side comes out empty, the single object with the most extreme
    coordinate of the majority sign is moved into it.
    """
    mask = coords < 0.0
    if not mask.any():
        mask[int(np.argmax(coords))] = True
    elif mask.all():
        mask[int(np.argmin(coords))] = False
    return mask


def pddp_split(m: DissimilarityMatrix, members) -> Bipartition:
    """Principal-axis split of one cluster.

    Objects split by coordinate sign on the first principal axis (negative
    side left), then refinement passes in ascending member order move any
    object strictly closer on average to the other side, leaving at least
    one member behind; passes stop when nothing moves or after Card(C)
    passes. Propagates NoPositiveEigenvalueError for degenerate clusters.
    """
    ms, sub = _cluster_submatrix(m, members)
    k = len(ms)
    axis = pcoa_first_axis(m, members)
    left_mask = _sides_from_coords(np.asarray(axis.coords))
    for _ in range(k):
        moved = False
        for x in range(k):
            own = np.flatnonzero(left_mask if left_mask[x] else ~left_mask)
            if own.size < 2:
                continue
            other = np.flatnonzero(~left_mask if left_mask[x] else left_mask)
            # own includes x itself, whose zero self-distance drops out of the sum
            mean_own = float(sub[x, own].sum()) / (own.size - 1)
            mean_other = float(sub[x, other].mean())
            if mean_other < mean_own:
                left_mask[x] = not left_mask[x]
                moved = True
        if not moved:
            break
    return _to_bipartition(ms, np.flatnonzero(left_mask), np.flatnonzero(~left_mask))


def split_cluster(m: DissimilarityMatrix, members, splitter: Splitter) -> Bipartition:
    """Apply one splitter to one cluster."""
    if splitter.kind == TWO_SEEDS:
        return two_seeds_split(m, members, splitter.criterion)
    if splitter.kind == MACNAUGHTON_SMITH:
        return macnaughton_smith_split(m, members)
    return pddp_split(m, members)
