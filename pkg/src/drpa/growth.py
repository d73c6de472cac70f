"""Degree-recency-biased preferential attachment (DRPA) growth engine.

One node arrives per time step and attaches to m existing nodes drawn
without replacement with probability proportional to

    w_i = k_i * ((k_i - k_i(t - r)) / k_i) ** beta
        = k_i ** (1 - beta) * (recent degree change of i) ** beta

where k_i is the current degree and r is the recency span in steps.
beta = 0 reduces to classical preferential attachment (0**0 == 1 by
convention), beta = 1 to attachment by recent degree change alone.

Time convention: node i arrives at step i, so the step counter always
equals the node count. Seed edges are recorded at step n0, the step at
which the seed graph is complete. Degree history before a node's birth
reads as 0, which gives young nodes a full recency factor of 1.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .errors import (
    ConfigError,
    DegenerateWeightsError,
    InvalidHistoryError,
    InvalidInputError,
    UnknownNodeError,
)
from .metrics import RunResult, rank_by_degree, rci


class WarmupPolicy(str, Enum):
    """Kernel used while the recency window is not yet fully populated.

    PURE_PA_UNTIL_R: attachments during the first r global steps use
    plain degree weights. Together with the pre-birth-degree-0 rule this
    keeps the total weight positive from the very first arrival.
    """

    PURE_PA_UNTIL_R = "pure_pa_until_r"


@dataclass(frozen=True)
class KernelConfig:
    """Parameters of one growth process.

    beta: recency bias exponent in [0, 1]; negative values are rejected.
    r: recency span in node-arrival steps.
    m: edges added per arriving node.
    n0: seed-graph size (path graph); defaults to max(2, m + 1) so the
        first arrival can attach to m distinct targets.
    """

    beta: float
    r: int
    m: int = 1
    n0: Optional[int] = None
    warmup: WarmupPolicy = WarmupPolicy.PURE_PA_UNTIL_R
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must lie in [0, 1], got {self.beta}")
        if self.r < 1:
            raise ConfigError(f"recency span r must be >= 1, got {self.r}")
        if self.m < 1:
            raise ConfigError(f"m must be >= 1, got {self.m}")
        if self.n0 is None:
            object.__setattr__(self, "n0", max(2, self.m + 1))
        if self.n0 < 2 or self.n0 < self.m + 1:
            raise ConfigError(f"seed size n0={self.n0} too small for m={self.m}")
        object.__setattr__(self, "warmup", WarmupPolicy(self.warmup))


@dataclass
class GrowthNetwork:
    """The evolving graph.

    degrees is 1-indexed by node id (entry 0 is unused and stays 0);
    node ids are arrival numbers. degree_events[i] lists every degree
    change of node i as (step, new_degree), strictly increasing in both.
    """

    node_count: int
    degrees: np.ndarray
    edge_list: list[tuple[int, int]]
    degree_events: list[list[tuple[int, int]]]
    current_step: int

    def n_edges(self) -> int:
        return len(self.edge_list)


@dataclass(frozen=True)
class AttachmentWeights:
    """Unnormalized attachment weights over existing nodes (1-indexed slot 0 unused)."""

    weights: np.ndarray
    total: float

    def probabilities(self) -> np.ndarray:
        return self.weights / self.total


def recency_factor(k_now: int, k_past: int, beta: float) -> float:
    """Recency attachment factor ((k_now - k_past) / k_now) ** beta.

    0**0 evaluates to 1, so beta = 0 yields factor 1 for every node,
    including stalled ones, recovering classical PA exactly.
    """
    if k_now < 1:
        raise InvalidInputError(f"existing nodes must have degree >= 1, got {k_now}")
    if k_past > k_now:
        raise InvalidHistoryError(
            f"past degree {k_past} exceeds current degree {k_now}"
        )
    return ((k_now - k_past) / k_now) ** beta


def degree_at(net: GrowthNetwork, node: int, step: int) -> int:
    """Degree of a node at the end of the given step (0 before its birth)."""
    if not 1 <= node <= net.node_count:
        raise UnknownNodeError(node)
    if step > net.current_step:
        raise InvalidInputError(
            f"step {step} is in the future (current step {net.current_step})"
        )
    events = net.degree_events[node]
    idx = bisect_right(events, step, key=lambda e: e[0])
    if idx == 0:
        return 0
    return events[idx - 1][1]


def attachment_weights(net: GrowthNetwork, cfg: KernelConfig) -> AttachmentWeights:
    """Evaluate the attachment kernel on the current network state.

    Literal (slow) evaluation from degree history; the growth loop keeps
    an incrementally updated copy of the same quantities. During warm-up
    (current_step < r) the weights are plain degrees.
    """
    if net.node_count < 1:
        raise InvalidInputError("network has no nodes")
    w = np.zeros(net.node_count + 1)
    if net.current_step < cfg.r:
        w[1:] = net.degrees[1:]
    else:
        past_step = net.current_step - cfg.r
        for i in range(1, net.node_count + 1):
            k = int(net.degrees[i])
            k_past = degree_at(net, i, past_step)
            w[i] = k * recency_factor(k, k_past, cfg.beta)
    total = float(w.sum())
    if total <= 0.0:
        raise DegenerateWeightsError(
            "all attachment weights vanished; warm-up policy misconfigured"
        )
    return AttachmentWeights(weights=w, total=total)


def _draw_targets(w: np.ndarray, m: int, rng: np.random.Generator) -> list[int]:
    """m weighted draws without replacement from w (index base of w preserved)."""
    if m > 1:
        w = w.copy()
    targets: list[int] = []
    for _ in range(m):
        cum = np.cumsum(w)
        total = cum[-1]
        if total <= 0.0:
            raise DegenerateWeightsError(
                "attachment weights exhausted during multi-edge draw"
            )
        u = rng.random() * total
        idx = int(np.searchsorted(cum, u, side="right"))
        if idx >= cum.size:  # u rounded up onto the total
            idx = int(np.flatnonzero(w > 0)[-1])
        targets.append(idx)
        if m > 1:
            w[idx] = 0.0
    return targets


def grow(
    cfg: KernelConfig,
    target_n: int,
    trajectory_nodes: Optional[Iterable[int]] = None,
    kernel: str = "drpa",
) -> tuple[GrowthNetwork, RunResult]:
    """Grow a network to target_n nodes and summarize it.

    Parameters
    ----------
    cfg : KernelConfig
        Growth parameters, including the RNG seed.
    target_n : int
        Final node count; must exceed the seed size.
    trajectory_nodes : iterable of int, optional
        Node ids whose degree trajectories are copied into the result.
    kernel : {"drpa", "pure_pa"}
        "pure_pa" replaces the kernel with plain degree weights at every
        step (reference implementation; beta and r are ignored).

    Returns
    -------
    (GrowthNetwork, RunResult)
        The run is fully determined by (cfg, target_n, kernel): same
        inputs give a bit-identical edge list.
    """
    if kernel not in ("drpa", "pure_pa"):
        raise ConfigError(f"unknown kernel {kernel!r}")
    n0, m, r, beta = cfg.n0, cfg.m, cfg.r, cfg.beta
    if target_n <= n0:
        raise ConfigError(f"target_n={target_n} must exceed seed size n0={n0}")

    rng = np.random.default_rng(cfg.seed)
    deg = np.zeros(target_n + 1)
    recent = np.zeros(target_n + 1)
    w = np.zeros(target_n + 1)
    events: list[list[tuple[int, int]]] = [[] for _ in range(target_n + 1)]
    step_events: list[list[tuple[int, int]]] = [[] for _ in range(target_n + 1)]
    edge_list: list[tuple[int, int]] = []

    # Seed: path graph over nodes 1..n0, all edges recorded at step n0.
    for i in range(1, n0):
        edge_list.append((i, i + 1))
        deg[i] += 1
        deg[i + 1] += 1
    for i in range(1, n0 + 1):
        events[i].append((n0, int(deg[i])))
        step_events[n0].append((i, int(deg[i])))
        recent[i] += deg[i]

    drpa_kernel = kernel == "drpa"
    w_ready = False

    for t in range(n0 + 1, target_n + 1):
        s = t - 1  # current step before this arrival; s existing nodes
        if not drpa_kernel or s < r:
            active = deg[1:t]
        else:
            if not w_ready:
                w[1:t] = deg[1:t] ** (1.0 - beta) * recent[1:t] ** beta
                w_ready = True
            active = w[1:t]
        targets = _draw_targets(active, m, rng)
        for idx in targets:
            j = idx + 1
            edge_list.append((t, j))
            deg[j] += 1
            events[j].append((t, int(deg[j])))
            step_events[t].append((j, 1))
            recent[j] += 1
            if w_ready:
                w[j] = deg[j] ** (1.0 - beta) * recent[j] ** beta
        deg[t] = m
        recent[t] += m
        events[t].append((t, m))
        step_events[t].append((t, m))
        if w_ready:
            w[t] = deg[t] ** (1.0 - beta) * recent[t] ** beta
        expired = t - r
        if expired >= 1:
            for node, inc in step_events[expired]:
                recent[node] -= inc
                if w_ready:
                    w[node] = deg[node] ** (1.0 - beta) * recent[node] ** beta

    net = GrowthNetwork(
        node_count=target_n,
        degrees=deg.astype(np.int64),
        edge_list=edge_list,
        degree_events=events,
        current_step=target_n,
    )
    result = _summarize(net, cfg, trajectory_nodes)
    return net, result


def _summarize(
    net: GrowthNetwork,
    cfg: KernelConfig,
    trajectory_nodes: Optional[Iterable[int]],
) -> RunResult:
    arrivals = np.arange(1, net.node_count + 1, dtype=np.int64)
    degrees = net.degrees[1:]
    ranks = rank_by_degree(degrees, arrivals)
    trajectories = None
    if trajectory_nodes is not None:
        trajectories = {int(v): list(net.degree_events[int(v)]) for v in trajectory_nodes}
    return RunResult(
        arrival=arrivals,
        final_degree=degrees.copy(),
        rank=ranks,
        rank_arrival_diff=arrivals - ranks,
        rci=rci(arrivals, ranks),
        config_echo=cfg,
        trajectories=trajectories,
    )
