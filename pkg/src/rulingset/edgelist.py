"""Plain-text edge lists and vertex-set files.

One ``u v`` pair per line, ``#`` starts a comment line, and ``v <label>``
declares a vertex without adding an edge. Labels are arbitrary
whitespace-free tokens mapped to dense ids in order of first appearance.
"""

from __future__ import annotations

from dataclasses import dataclass

from rulingset.graph import Graph, GraphError, build_graph


class ParseError(GraphError):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]

    def ids(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}


def parse_edge_list(text: str) -> LabeledGraph:
    ids: dict[str, int] = {}
    edges = []

    def intern(label: str) -> int:
        return ids.setdefault(label, len(ids))

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected two tokens, got {len(tokens)}: {raw!r}")
        a, b = tokens
        if a == "v":
            intern(b)
            continue
        if a == b:
            raise ParseError(line_no, f"self-loop on {a!r}")
        edges.append((intern(a), intern(b)))
    labels = tuple(ids)
    return LabeledGraph(build_graph(len(labels), edges), labels)


def serialize_edge_list(g: Graph, labels=None) -> str:
    """Declare every vertex in id order, then list edges; parsing restores the same ids."""
    labels = list(labels) if labels is not None else [str(v) for v in g.vertices]
    if len(labels) != g.n:
        raise GraphError(f"{len(labels)} labels for a graph with n={g.n}")
    lines = [f"# n={g.n} m={g.m}"]
    lines.extend(f"v {label}" for label in labels)
    lines.extend(f"{labels[u]} {labels[w]}" for u, w in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str, lg: LabeledGraph) -> frozenset[int]:
    ids = lg.ids()
    out = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if raw.strip().startswith("#"):
            continue
        for token in raw.split():
            if token not in ids:
                raise ParseError(line_no, f"unknown vertex label {token!r}")
            out.add(ids[token])
    return frozenset(out)


def format_vertex_set(s, labels) -> str:
    return " ".join(labels[v] for v in sorted(s))
