"""k-th power of a graph: join every pair of vertices at distance <= k.

Two routes produce the same graph. ``PowerMode.BFS`` runs one depth-k
truncated BFS per vertex. ``PowerMode.ITERATIVE`` grows the edge set one
hop per round by joining the current edges with the original ones, and
stops early when a round adds nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from rulingset.graph import Graph, GraphError, bfs_distances, build_graph, check_vertex


class PowerMode(enum.Enum):
    BFS = "bfs"
    ITERATIVE = "iterative"


@dataclass(frozen=True)
class GraphDelta:
    """Edges introduced by one augmentation round, as (low, high) pairs."""

    added_edges: frozenset[tuple[int, int]]

    def __bool__(self) -> bool:
        return bool(self.added_edges)

    def __len__(self) -> int:
        return len(self.added_edges)


def expand_round(current: Graph, original: Graph) -> tuple[Graph, GraphDelta]:
    """One round of edge augmentation.

    Adds (u, w) whenever u reaches some v through ``current`` and v is
    adjacent to w in ``original``. With ``current`` equal to the i-th power
    this yields the (i+1)-th power.
    """
    if current.n != original.n:
        raise GraphError(f"vertex-count mismatch: {current.n} vs {original.n}")
    added = set()
    for u, nbrs in enumerate(current.adjacency):
        for v in nbrs:
            for w in original.adjacency[v]:
                if w != u and w not in nbrs:
                    added.add((u, w) if u < w else (w, u))
    if not added:
        return current, GraphDelta(frozenset())
    merged = build_graph(current.n, [*current.edges(), *added])
    return merged, GraphDelta(frozenset(added))


def reduce_k_graph(g: Graph, k: int) -> tuple[Graph, list[GraphDelta]]:
    """Augment ``g`` for up to k-1 rounds; returns the power and per-round deltas.

    An empty delta ends the loop regardless of the remaining rounds.
    """
    _check_k(k)
    current = g
    deltas: list[GraphDelta] = []
    i = k
    while i > 1:
        nxt, delta = expand_round(current, g)
        deltas.append(delta)
        if not delta:
            break
        i -= 1
        current = nxt
    return current, deltas


def _bfs_power(g: Graph, k: int) -> Graph:
    edges = []
    for v in g.vertices:
        edges.extend((v, u) for u in bfs_distances(g, v, k) if u > v)
    return build_graph(g.n, edges)


def power_graph(g: Graph, k: int, mode: PowerMode | str = PowerMode.BFS) -> Graph:
    """Graph on the same vertices with an edge for every pair at distance 1..k."""
    _check_k(k)
    mode = PowerMode(mode)
    if k == 1:
        return g
    if mode is PowerMode.BFS:
        return _bfs_power(g, k)
    return reduce_k_graph(g, k)[0]


def ruled_neighborhoods(g: Graph, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices at exactly distance 1 and exactly distance 2 from ``v``."""
    check_vertex(g, v)
    dist = bfs_distances(g, v, 2)
    one = frozenset(u for u, d in dist.items() if d == 1)
    two = frozenset(u for u, d in dist.items() if d == 2)
    return one, two


def _check_k(k: int) -> None:
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
