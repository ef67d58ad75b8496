"""Weighted pair graph of a network.

Vertices are the unordered state pairs sharing an output, diagonal pairs
(x, x) included.  For each input the two member states step in parallel;
the move is kept as an edge exactly when the two successors again share an
output.  Edge weights are the input subsets, recovered by grouping inputs
with a common target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .bcn import Bcn, output, step


class PairVertex(NamedTuple):
    lo: int
    hi: int

    @property
    def diagonal(self) -> bool:
        return self.lo == self.hi

    def label(self) -> str:
        sep = "" if self.hi <= 9 else "-"
        return f"{self.lo}{sep}{self.hi}"


def make_pair(a: int, b: int) -> PairVertex:
    """Canonical unordered pair: the smaller index first."""
    return PairVertex(a, b) if a <= b else PairVertex(b, a)


@dataclass(frozen=True)
class PairGraph:
    """Per-input successor maps over the confusable pairs.

    successor[v][u] is v's unique successor under input u; the key is
    absent when stepping v under u leaves the graph.  Diagonal vertices
    never leave it.
    """

    n_inputs: int
    vertices: frozenset[PairVertex]
    successor: dict[PairVertex, dict[int, PairVertex]]

    def edges(self) -> dict[tuple[PairVertex, PairVertex], tuple[int, ...]]:
        """Weighted edge view: (source, target) -> ascending input tuple."""
        grouped: dict[tuple[PairVertex, PairVertex], list[int]] = {}
        for v in sorted(self.vertices):
            for u in sorted(self.successor[v]):
                grouped.setdefault((v, self.successor[v][u]), []).append(u)
        return {edge: tuple(inputs) for edge, inputs in grouped.items()}


def build(network: Bcn) -> PairGraph:
    """Pair graph of a network.

    Canonicalising every pair as (min, max) makes the construction
    independent of enumeration order.
    """
    vertices = {
        PairVertex(x, x2)
        for x in range(1, network.n_states + 1)
        for x2 in range(x, network.n_states + 1)
        if output(network, x) == output(network, x2)
    }
    successor: dict[PairVertex, dict[int, PairVertex]] = {}
    for v in sorted(vertices):
        row: dict[int, PairVertex] = {}
        for u in range(1, network.n_inputs + 1):
            target = make_pair(step(network, v.lo, u), step(network, v.hi, u))
            if target in vertices:
                row[u] = target
        successor[v] = row
    return PairGraph(network.n_inputs, frozenset(vertices), successor)


def pair_successor(
    graph: PairGraph, network: Bcn, vertex: PairVertex, control: int
) -> Optional[PairVertex]:
    """Successor of a vertex under one input, None when the step leaves the
    graph.  Computed from the network directly; agrees with graph.successor."""
    if vertex not in graph.vertices:
        raise ValueError(f"{vertex} is not a vertex of this pair graph")
    if not 1 <= control <= graph.n_inputs:
        raise ValueError(f"input {control} outside 1..{graph.n_inputs}")
    target = make_pair(step(network, vertex.lo, control), step(network, vertex.hi, control))
    return target if target in graph.vertices else None


def non_diagonal_vertices(graph: PairGraph) -> frozenset[PairVertex]:
    """The confusable pairs of distinct states."""
    return frozenset(v for v in graph.vertices if not v.diagonal)


def _reachable(graph: PairGraph, sources: Iterable[PairVertex]) -> set[PairVertex]:
    seen = set(sources)
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for target in graph.successor[v].values():
            if target not in seen:
                seen.add(target)
                frontier.append(target)
    return seen


def reachable_subgraph(graph: PairGraph, start: PairVertex) -> PairGraph:
    """Restriction of the graph to everything reachable from one vertex.

    Successor rows survive unchanged: reachability is closed under them.
    """
    if start not in graph.vertices:
        raise ValueError(f"{start} is not a vertex of this pair graph")
    keep = _reachable(graph, [start])
    successor = {v: dict(graph.successor[v]) for v in keep}
    return PairGraph(graph.n_inputs, frozenset(keep), successor)
