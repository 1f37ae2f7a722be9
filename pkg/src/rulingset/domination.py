"""Minimum dominating set: exact branch and bound plus a greedy baseline."""

from __future__ import annotations

from dataclasses import dataclass

from rulingset.graph import Graph, check_vertices

DEFAULT_MAX_EXACT_N = 64


class SizeLimitError(ValueError):
    """Instance is larger than the configured cap for an exponential solver."""


@dataclass(frozen=True)
class DominationResult:
    set: frozenset[int]
    size: int
    optimal: bool
    nodes_explored: int = 0

    @property
    def sorted(self) -> list[int]:
        return sorted(self.set)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def is_dominating(g: Graph, s) -> tuple[bool, int | None]:
    """Whether ``s`` dominates ``g``; on failure also the lowest uncovered id."""
    s = check_vertices(g, s)
    covered = 0
    for v in s:
        covered |= g.closed_masks[v]
    uncovered = ((1 << g.n) - 1) & ~covered
    if uncovered:
        return False, (uncovered & -uncovered).bit_length() - 1
    return True, None


class _Search:
    """Depth-first feasibility search: can ``budget`` more vertices finish covering?"""

    def __init__(self, g: Graph):
        self.closed = g.closed_masks
        self.full = (1 << g.n) - 1
        self.max_cover = max((m.bit_count() for m in self.closed), default=1)
        self.nodes = 0

    def find(self, covered: int, budget: int, allowed: int) -> list[int] | None:
        self.nodes += 1
        uncovered = self.full & ~covered
        if not uncovered:
            return []
        if budget == 0 or budget * self.max_cover < uncovered.bit_count():
            return None
        u = (uncovered & -uncovered).bit_length() - 1
        for c in _bits(self.closed[u] & allowed):
            rest = self.find(covered | self.closed[c], budget - 1, allowed & ~(1 << c))
            if rest is not None:
                return [c, *rest]
            # Every set containing c has now been ruled out from this state.
            allowed &= ~(1 << c)
        return None


def min_dominating_set(g: Graph, max_n: int = DEFAULT_MAX_EXACT_N) -> DominationResult:
    """Exact minimum dominating set.

    Finds the optimum size by iterative deepening, then fixes vertices in
    ascending id order so the returned set is the lexicographically
    smallest among all minimum dominating sets.
    """
    if g.n > max_n:
        raise SizeLimitError(
            f"exact solver is capped at n={max_n} (graph has n={g.n}); use the greedy method"
        )
    search = _Search(g)
    forced = _mask(v for v in g.vertices if not g.adjacency[v])
    base = 0
    for v in _bits(forced):
        base |= search.closed[v]
    free = search.full & ~forced

    size = forced.bit_count()
    while search.find(base, size - forced.bit_count(), free) is None:
        size += 1

    chosen, covered, excluded = forced, base, 0
    for v in range(g.n):
        if chosen.bit_count() == size:
            break
        if chosen >> v & 1:
            continue
        trial = chosen | 1 << v
        trial_cov = covered | search.closed[v]
        allowed = free & ~excluded & ~trial & ~((1 << (v + 1)) - 1)
        if search.find(trial_cov, size - trial.bit_count(), allowed) is not None:
            chosen, covered = trial, trial_cov
        else:
            excluded |= 1 << v
    result = frozenset(_bits(chosen))
    return DominationResult(result, len(result), True, search.nodes)


def greedy_dominating_set(g: Graph) -> DominationResult:
    """Repeatedly take the vertex covering the most uncovered vertices (lowest id on ties)."""
    closed = g.closed_masks
    uncovered = (1 << g.n) - 1
    chosen: set[int] = set()
    steps = 0
    while uncovered:
        steps += 1
        best = max(g.vertices, key=lambda v: ((closed[v] & uncovered).bit_count(), -v))
        chosen.add(best)
        uncovered &= ~closed[best]
    return DominationResult(frozenset(chosen), len(chosen), False, steps)
