"""Ruling sets: verifiers, the power-graph pipelines and a brute-force oracle.

A k-ruling set S puts every vertex within distance k of S. An (alpha, beta)
ruling set additionally keeps members pairwise at distance >= alpha, with
beta playing the role of k.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Sequence

from rulingset.domination import (
    DEFAULT_MAX_EXACT_N,
    SizeLimitError,
    greedy_dominating_set,
    min_dominating_set,
)
from rulingset.generators import generate, search_stream
from rulingset.graph import Graph, GraphError, bfs_distances, bfs_within, check_vertices
from rulingset.independence import greedy_mis, luby_mis
from rulingset.power import power_graph

DEFAULT_MAX_ORACLE_N = 20


@dataclass(frozen=True)
class PlainK:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise GraphError(f"k must be >= 1, got {self.k}")

    def as_dict(self) -> dict:
        return {"k": self.k}


@dataclass(frozen=True)
class AlphaBeta:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise GraphError(f"alpha and beta must be >= 1, got ({self.alpha}, {self.beta})")

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}


RulingSpec = PlainK | AlphaBeta


@dataclass(frozen=True)
class RulingReport:
    set: frozenset[int]
    spec: RulingSpec
    method: str
    valid: bool
    optimal: bool
    elapsed_ms: float = 0.0
    seed: int | None = None

    @property
    def size(self) -> int:
        return len(self.set)

    @property
    def sorted(self) -> list[int]:
        return sorted(self.set)


@dataclass(frozen=True)
class KRulingCheck:
    ok: bool
    violators: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AlphaBetaCheck:
    ok: bool
    close_pairs: list[tuple[int, int, int]] = field(default_factory=list)  # (u, w, distance)
    uncovered: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_k_ruling(g: Graph, s, k: int) -> KRulingCheck:
    """Multi-source BFS from ``s`` truncated at depth ``k``."""
    PlainK(k)
    s = check_vertices(g, s)
    reached = set(s)
    frontier = deque((v, 0) for v in s)
    while frontier:
        v, d = frontier.popleft()
        if d == k:
            continue
        for u in g.adjacency[v]:
            if u not in reached:
                reached.add(u)
                frontier.append((u, d + 1))
    violators = [v for v in g.vertices if v not in reached]
    return KRulingCheck(not violators, violators)


def verify_alpha_beta(g: Graph, s, alpha: int, beta: int) -> AlphaBetaCheck:
    AlphaBeta(alpha, beta)
    s = check_vertices(g, s)
    close = []
    for u in sorted(s):
        near = bfs_distances(g, u, alpha - 1)
        close.extend((u, w, near[w]) for w in sorted(near) if w in s and w > u)
    coverage = verify_k_ruling(g, s, beta)
    return AlphaBetaCheck(not close and coverage.ok, close, coverage.violators)


def min_k_ruling_set(
    g: Graph, k: int, method: str = "exact", max_exact_n: int = DEFAULT_MAX_EXACT_N
) -> RulingReport:
    """Minimum dominating set of the k-th power, which is a k-ruling set of ``g``."""
    spec = PlainK(k)
    start = time.perf_counter()
    gk = power_graph(g, k)
    if method == "exact":
        res = min_dominating_set(gk, max_n=max_exact_n)
    elif method == "greedy":
        res = greedy_dominating_set(gk)
    else:
        raise ValueError(f"unknown method {method!r}; expected exact or greedy")
    elapsed = (time.perf_counter() - start) * 1e3
    valid = verify_k_ruling(g, res.set, k).ok
    return RulingReport(res.set, spec, method, valid, res.optimal, elapsed)


def alpha_ruling_set(g: Graph, alpha: int, method: str = "luby", seed: int = 0) -> RulingReport:
    """Maximal independent set of the (alpha-1)-th power: an (alpha, alpha-1) ruling set.

    Never claims optimality; maximal is not minimum.
    """
    if alpha < 2:
        raise GraphError(f"alpha must be >= 2 (alpha=1 imposes no separation), got {alpha}")
    spec = AlphaBeta(alpha, alpha - 1)
    start = time.perf_counter()
    gp = power_graph(g, alpha - 1)
    if method == "luby":
        res = luby_mis(gp, seed)
    elif method == "greedy":
        res = greedy_mis(gp)
    else:
        raise ValueError(f"unknown method {method!r}; expected luby or greedy")
    elapsed = (time.perf_counter() - start) * 1e3
    valid = verify_alpha_beta(g, res.set, alpha, alpha - 1).ok
    return RulingReport(res.set, spec, method, valid, False, elapsed, res.seed)


def brute_force_min_k_ruling(g: Graph, k: int, max_n: int = DEFAULT_MAX_ORACLE_N) -> RulingReport:
    """First k-ruling set in size-then-lexicographic order, by plain enumeration.

    Only uses BFS balls from the graph module, so it shares no code with
    the power/domination pipeline it is meant to check.
    """
    spec = PlainK(k)
    if g.n > max_n:
        raise SizeLimitError(f"oracle is capped at n={max_n} (graph has n={g.n})")
    start = time.perf_counter()
    balls = []
    for v in g.vertices:
        mask = 0
        for u in bfs_within(g, v, k):
            mask |= 1 << u
        balls.append(mask)
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            covered = 0
            for v in subset:
                covered |= balls[v]
            if covered == full:
                elapsed = (time.perf_counter() - start) * 1e3
                return RulingReport(frozenset(subset), spec, "oracle", True, True, elapsed)
    raise AssertionError("the full vertex set always rules the graph")


@dataclass(frozen=True)
class Witness:
    graph: Graph
    set: frozenset[int]
    pipeline: str
    check: AlphaBetaCheck
    instance: str
    index: int


def mismatch_pipeline(g: Graph, alpha: int, beta: int) -> tuple[str, frozenset[int]]:
    """The naive solver a user would reach for when beta != alpha - 1.

    For beta > alpha-1: minimum dominating set of the beta-th power, which
    ignores separation. For beta < alpha-1: greedy MIS of the
    (alpha-1)-th power, which only guarantees coverage within alpha-1.
    """
    if beta > alpha - 1:
        return f"mds-power{beta}", min_dominating_set(power_graph(g, beta)).set
    return f"mis-power{alpha - 1}", greedy_mis(power_graph(g, alpha - 1)).set


def find_beta_mismatch_witness(
    families: Sequence[str], alpha: int, beta: int, budget: int, seed: int = 0
) -> Witness | None:
    """Search generated instances for one where the naive pipeline fails verification."""
    AlphaBeta(alpha, beta)
    if beta == alpha - 1:
        raise GraphError("beta = alpha - 1 is the supported case; no witness exists there")
    for index, spec in enumerate(islice(search_stream(families, seed), budget)):
        g = generate(spec)
        pipeline, s = mismatch_pipeline(g, alpha, beta)
        check = verify_alpha_beta(g, s, alpha, beta)
        if not check.ok:
            return Witness(g, s, pipeline, check, spec.describe(), index)
    return None
