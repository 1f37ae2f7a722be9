"""Maximal independent sets: seeded synchronous Luby rounds and a greedy scan."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from rulingset.graph import Graph, check_vertices


@dataclass(frozen=True)
class MisResult:
    set: frozenset[int]
    rounds: int
    seed: int | None = None

    @property
    def sorted(self) -> list[int]:
        return sorted(self.set)


@dataclass(frozen=True)
class MisViolation:
    kind: str  # "adjacent_pair" or "extendable_vertex"
    vertices: tuple[int, ...]


def is_maximal_independent(g: Graph, s) -> tuple[bool, MisViolation | None]:
    """Check independence first, then maximality; reports the lowest-id violation."""
    s = check_vertices(g, s)
    for u in sorted(s):
        clash = sorted(w for w in g.adjacency[u] if w in s and w > u)
        if clash:
            return False, MisViolation("adjacent_pair", (u, clash[0]))
    for v in g.vertices:
        if v not in s and not (g.adjacency[v] & s):
            return False, MisViolation("extendable_vertex", (v,))
    return True, None


def draw(seed: int, round_no: int, vertex: int) -> int:
    """Unsigned 64-bit value keyed by (seed, round, vertex)."""
    key = f"{seed}:{round_no}:{vertex}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def luby_mis(g: Graph, seed: int = 0) -> MisResult:
    """Luby's randomized MIS with synchronous rounds.

    A vertex joins when its draw beats every active neighbor's draw; equal
    draws go to the lower id. Joined vertices and their neighbors leave the
    active set before the next round.
    """
    active = set(g.vertices)
    chosen: set[int] = set()
    rounds = 0
    while active:
        rounds += 1
        rank = {v: (draw(seed, rounds, v), -v) for v in active}
        joined = [
            v for v in active
            if all(rank[v] > rank[u] for u in g.adjacency[v] if u in active)
        ]
        # Commit only after all comparisons in the round are done.
        chosen.update(joined)
        for v in joined:
            active.discard(v)
            active.difference_update(g.adjacency[v])
    return MisResult(frozenset(chosen), rounds, seed)


def greedy_mis(g: Graph) -> MisResult:
    """Ascending-id scan; ``rounds`` counts one sequential step per vertex."""
    chosen: set[int] = set()
    for v in g.vertices:
        if not (g.adjacency[v] & chosen):
            chosen.add(v)
    return MisResult(frozenset(chosen), g.n, None)
