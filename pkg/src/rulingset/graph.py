"""Immutable simple undirected graphs over dense vertex ids 0..n-1."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


class Unreachable(enum.Enum):
    """Distance between vertices in different connected components."""

    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric or out-of-range adjacency {v}->{u}")

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        check_vertex(self, v)
        return self.adjacency[v]

    def edges(self) -> frozenset[tuple[int, int]]:
        """All edges as (low, high) pairs."""
        return frozenset((u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges())

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        # Bitmask of N[v] per vertex; used by the subset searches.
        return tuple(
            (1 << v) | sum(1 << u for u in nbrs) for v, nbrs in enumerate(self.adjacency)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate edges.

    Raises GraphError naming the offending pair for self-loops or ids
    outside ``0..n-1``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed in a simple graph")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for graph with n={g.n}")


def check_vertices(g: Graph, vs: Iterable[int]) -> frozenset[int]:
    s = frozenset(vs)
    for v in s:
        check_vertex(g, v)
    return s


def bfs_distances(g: Graph, source: int, radius: int | None = None) -> dict[int, int]:
    """Hop distances from ``source`` to every vertex within ``radius``."""
    check_vertex(g, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if radius is not None and d >= radius:
            continue
        for u in g.adjacency[v]:
            if u not in dist:
                dist[u] = d + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> int | Unreachable:
    check_vertex(g, v)
    return bfs_distances(g, u).get(v, UNREACHABLE)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    check_vertex(g, v)
    return g.adjacency[v] | {v}


def bfs_within(g: Graph, v: int, radius: int) -> frozenset[int]:
    """Vertices at distance at most ``radius`` from ``v``, including ``v``."""
    if radius < 0:
        raise GraphError(f"radius must be non-negative, got {radius}")
    return frozenset(bfs_distances(g, v, radius))


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v not in seen:
            comp = frozenset(bfs_distances(g, v))
            seen |= comp
            comps.append(comp)
    return comps


def eccentricity(g: Graph, v: int) -> int:
    """Largest distance from ``v`` within its own component."""
    return max(bfs_distances(g, v).values())


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of 0..n-1")
    return build_graph(g.n, ((perm[u], perm[w]) for u, w in g.edges()))
