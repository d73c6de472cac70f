"""Rank and arrival statistics on finished networks.

All functions here are pure: they read a network or plain arrays and
return new values. Ranks are 1-based, rank 1 is the highest degree.
Arrival numbers are 1-based ordinal positions in the arrival sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

import numpy as np

from .errors import InvalidInputError, UnknownNodeError

if TYPE_CHECKING:  # pragma: no cover
    from .growth import GrowthNetwork, KernelConfig


@dataclass(frozen=True)
class DegreeStats:
    """Moment summary of a degree sample.

    Variance is the population variance; skewness is the moment ratio
    m3 / m2^(3/2) without bias correction. A zero-variance sample is
    flagged degenerate and reports skewness 0 instead of NaN.
    """

    max: float
    variance: float
    skewness: float
    mean: float
    min: float
    degenerate: bool = False


@dataclass
class RunResult:
    """Per-node final records of one growth run.

    Arrays are aligned: entry i describes the node with arrival number
    ``arrival[i]``. ``rank_arrival_diff = arrival - rank`` throughout,
    so positive values mark late arrivals that climbed the ranking.
    """

    arrival: np.ndarray
    final_degree: np.ndarray
    rank: np.ndarray
    rank_arrival_diff: np.ndarray
    rci: float
    config_echo: "KernelConfig"
    trajectories: Optional[dict[int, list[tuple[int, int]]]] = field(default=None)

    @property
    def n_nodes(self) -> int:
        return len(self.arrival)

    def arrivals_by_rank(self) -> np.ndarray:
        """Arrival numbers reordered so position j holds the rank-(j+1) node."""
        order = np.argsort(self.rank)
        return self.arrival[order]


def rank_by_degree(degrees, arrivals) -> np.ndarray:
    """Rank nodes by descending degree, ties broken by earlier arrival.

    Parameters
    ----------
    degrees, arrivals : array-like of int
        Aligned per-node final degrees and arrival numbers.

    Returns
    -------
    np.ndarray of int
        Rank per node (permutation of 1..N), aligned with the inputs.
    """
    degrees = np.asarray(degrees)
    arrivals = np.asarray(arrivals)
    if degrees.size == 0:
        raise InvalidInputError("cannot rank an empty degree list")
    if degrees.shape != arrivals.shape:
        raise InvalidInputError(
            f"degrees and arrivals length mismatch: {degrees.shape} vs {arrivals.shape}"
        )
    # lexsort: last key is primary. Descending degree, then ascending arrival.
    order = np.lexsort((arrivals, -degrees))
    ranks = np.empty(degrees.size, dtype=np.int64)
    ranks[order] = np.arange(1, degrees.size + 1)
    return ranks


def rank_arrival_difference(arrival: int, rank: int) -> int:
    """Difference arrival - rank; e.g. the 100th arrival ranked 10th scores 90."""
    return arrival - rank


def _check_permutation(values: np.ndarray, name: str) -> None:
    if not np.array_equal(np.sort(values), np.arange(1, values.size + 1)):
        raise InvalidInputError(f"{name} is not a permutation of 1..{values.size}")


def rci(arrivals, ranks) -> float:
    """Rank Change Index of a full arrival/rank assignment.

    Sums |arrival - rank| over all nodes and normalizes by
    sum_{m=1..N} |m - (N - m)|, the score of an idealized reversal.
    0 means arrival order preserved; a perfect reversal scores 1 for
    even N (slightly below 1 for odd N, a quirk of the normalizer).
    """
    arrivals = np.asarray(arrivals, dtype=np.int64)
    ranks = np.asarray(ranks, dtype=np.int64)
    if arrivals.shape != ranks.shape:
        raise InvalidInputError("arrivals and ranks length mismatch")
    n = arrivals.size
    if n < 2:
        raise InvalidInputError("RCI needs at least two nodes")
    _check_permutation(arrivals, "arrivals")
    _check_permutation(ranks, "ranks")
    numerator = int(np.abs(arrivals - ranks).sum())
    m = np.arange(1, n + 1)
    denominator = int(np.abs(m - (n - m)).sum())
    return numerator / denominator


def top_k_arrivals(results: list[RunResult], k: int) -> list[float]:
    """Position-wise mean arrival of the rank-1..rank-k nodes across runs."""
    if not results:
        raise InvalidInputError("no run results to average")
    for res in results:
        if res.n_nodes < k:
            raise InvalidInputError(f"run has fewer than k={k} nodes")
    stacked = np.stack([res.arrivals_by_rank()[:k] for res in results])
    return [float(v) for v in stacked.mean(axis=0)]


def max_arrival_in_top_fraction(result: RunResult, fraction: float) -> int:
    """Largest arrival number among the top ceil(fraction * N) ranked nodes."""
    if not 0 < fraction <= 1:
        raise InvalidInputError(f"fraction must be in (0, 1], got {fraction}")
    k = int(np.ceil(fraction * result.n_nodes))
    return int(result.arrivals_by_rank()[:k].max())


def degree_stats(degrees) -> DegreeStats:
    """Moment statistics of a degree sample (population moments)."""
    x = np.asarray(degrees, dtype=np.float64)
    if x.size == 0:
        raise InvalidInputError("empty degree sample")
    mean = float(x.mean())
    centered = x - mean
    m2 = float(np.mean(centered**2))
    if m2 == 0.0:
        return DegreeStats(
            max=float(x.max()), variance=0.0, skewness=0.0,
            mean=mean, min=float(x.min()), degenerate=True,
        )
    m3 = float(np.mean(centered**3))
    return DegreeStats(
        max=float(x.max()),
        variance=m2,
        skewness=m3 / m2**1.5,
        mean=mean,
        min=float(x.min()),
    )


def record_trajectory(net: "GrowthNetwork", node: int) -> list[tuple[int, int]]:
    """Full (step, degree) event sequence of one node, for trajectory plots."""
    if not 1 <= node <= net.node_count:
        raise UnknownNodeError(node)
    return list(net.degree_events[node])
