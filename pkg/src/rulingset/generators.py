"""Seeded graph families used by the CLI, tests and benchmark scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from rulingset.graph import Graph, GraphError, build_graph

FAMILIES = ("path", "cycle", "star", "complete", "empty", "grid", "random_gnp", "random_tree")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    p: float | None = None
    seed: int = 0
    rows: int | None = None
    cols: int | None = None

    def describe(self) -> str:
        parts = [self.family, f"n={self.n}"]
        if self.p is not None:
            parts.append(f"p={self.p}")
        if self.family.startswith("random"):
            parts.append(f"seed={self.seed}")
        return " ".join(parts)


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p); pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree decoded from a random Pruefer sequence."""
    if n <= 1:
        return empty(max(n, 0))
    if n == 2:
        return path(2)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return build_graph(n, edges)


def generate(spec: GeneratorSpec) -> Graph:
    if spec.n < 0:
        raise GraphError(f"n must be non-negative, got {spec.n}")
    family = spec.family
    if family == "path":
        return path(spec.n)
    if family == "cycle":
        return cycle(spec.n)
    if family == "star":
        return star(spec.n)
    if family == "complete":
        return complete(spec.n)
    if family == "empty":
        return empty(spec.n)
    if family == "grid":
        if spec.rows is None or spec.cols is None:
            raise GraphError("grid needs rows and cols")
        if spec.rows * spec.cols != spec.n:
            raise GraphError(f"grid n={spec.n} is not rows*cols={spec.rows}*{spec.cols}")
        return grid(spec.rows, spec.cols)
    if family == "random_gnp":
        if spec.p is None:
            raise GraphError("random_gnp needs an edge probability p")
        return random_gnp(spec.n, spec.p, spec.seed)
    if family == "random_tree":
        return random_tree(spec.n, spec.seed)
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def search_stream(families: Sequence[str], seed: int = 0, p: float = 0.4) -> Iterator[GeneratorSpec]:
    """Endless stream of small instances, growing n, cycling through ``families``.

    ``random`` is shorthand for ``random_gnp`` at probability ``p``.
    """
    n = 2
    while True:
        for family in families:
            if family == "random":
                family = "random_gnp"
            if family == "cycle" and n < 3:
                continue
            if family == "grid":
                continue
            yield GeneratorSpec(
                family, n, p if family == "random_gnp" else None, seed=seed * 1000 + n
            )
        n += 1
