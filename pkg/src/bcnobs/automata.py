"""Finite automata built over the pair graph.

All machines here are partial DFAs over the input alphabet 1..n_inputs in
which every state is accepting: a word is rejected only by running off the
defined transitions.  Completeness of such a machine is therefore the same
as accepting every word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Optional

from .pairgraph import PairGraph, PairVertex, _reachable

Word = tuple[int, ...]


@dataclass(frozen=True)
class Dfa:
    """Partial deterministic automaton with every state accepting.

    State payloads are ascending PairVertex tuples for subset machines and
    bare PairVertex values for single-pair machines; identity is payload
    equality.  states is in breadth-first discovery order from the initial
    state, so every listed state is reachable.
    """

    alphabet_size: int
    states: tuple[Hashable, ...]
    initial: Hashable
    transitions: dict[Hashable, dict[int, Hashable]]
    finals: frozenset


def subset_automaton(graph: PairGraph, initial_vertices: Iterable[PairVertex]) -> Dfa:
    """Determinised reachability machine of the pair graph.

    States are the nonempty vertex subsets reachable from the seed set;
    input j sends a subset to the set of j-successors of its members, and
    the transition is left undefined when that set is empty.
    """
    seed = frozenset(initial_vertices)
    if not seed:
        raise ValueError("initial vertex set is empty")
    stray = seed - graph.vertices
    if stray:
        raise ValueError(f"not pair-graph vertices: {sorted(stray)}")
    initial = tuple(sorted(seed))
    states = [initial]
    seen = {initial}
    transitions: dict[Hashable, dict[int, Hashable]] = {}
    queue = deque([initial])
    while queue:
        subset = queue.popleft()
        row: dict[int, Hashable] = {}
        for letter in range(1, graph.n_inputs + 1):
            targets = {
                graph.successor[v][letter]
                for v in subset
                if letter in graph.successor[v]
            }
            if not targets:
                continue
            successor = tuple(sorted(targets))
            row[letter] = successor
            if successor not in seen:
                seen.add(successor)
                states.append(successor)
                queue.append(successor)
        transitions[subset] = row
    return Dfa(graph.n_inputs, tuple(states), initial, transitions, frozenset(states))


def vertex_automaton(graph: PairGraph, start: PairVertex) -> Dfa:
    """The part of the pair graph reachable from one vertex, read as a DFA."""
    if start not in graph.vertices:
        raise ValueError(f"{start} is not a vertex of this pair graph")
    states = [start]
    seen = {start}
    transitions: dict[Hashable, dict[int, Hashable]] = {}
    queue = deque([start])
    while queue:
        vertex = queue.popleft()
        row = dict(graph.successor[vertex])
        transitions[vertex] = row
        for letter in sorted(row):
            target = row[letter]
            if target not in seen:
                seen.add(target)
                states.append(target)
                queue.append(target)
    return Dfa(graph.n_inputs, tuple(states), start, transitions, frozenset(states))


def is_complete(dfa: Dfa) -> bool:
    """True when every state defines every letter."""
    return all(
        len(dfa.transitions[state]) == dfa.alphabet_size for state in dfa.states
    )


def shortest_undefined_word(dfa: Dfa) -> Optional[Word]:
    """Lexicographically least shortest word that runs off the transitions.

    None exactly when the machine is complete.  Breadth-first with letters
    tried in ascending order, so the first hole reached is the answer.
    """
    queue = deque([(dfa.initial, ())])
    seen = {dfa.initial}
    while queue:
        state, word = queue.popleft()
        row = dfa.transitions[state]
        for letter in range(1, dfa.alphabet_size + 1):
            if letter not in row:
                return word + (letter,)
            target = row[letter]
            if target not in seen:
                seen.add(target)
                queue.append((target, word + (letter,)))
    return None


def accepts(dfa: Dfa, word: Iterable[int]) -> bool:
    """Run a word from the initial state.

    True when every step is defined and the run ends in an accepting state;
    with all states accepting this means the word never ran off the map.
    """
    state = dfa.initial
    for letter in word:
        if not 1 <= letter <= dfa.alphabet_size:
            raise ValueError(f"letter {letter} outside 1..{dfa.alphabet_size}")
        row = dfa.transitions[state]
        if letter not in row:
            return False
        state = row[letter]
    return state in dfa.finals


class Lasso(NamedTuple):
    """Labeled pair-graph walk: drive prefix from source, then loop cycle."""

    source: PairVertex
    prefix: Word
    cycle: Word


def _shortest_labeled_path(
    graph: PairGraph, start: PairVertex, goal: PairVertex
) -> Optional[Word]:
    if start == goal:
        return ()
    queue = deque([(start, ())])
    seen = {start}
    while queue:
        vertex, word = queue.popleft()
        for letter in sorted(graph.successor[vertex]):
            target = graph.successor[vertex][letter]
            if target == goal:
                return word + (letter,)
            if target not in seen:
                seen.add(target)
                queue.append((target, word + (letter,)))
    return None


def _shortest_return(graph: PairGraph, vertex: PairVertex) -> Optional[Word]:
    """Shortest nonempty labeled walk from a vertex back to itself."""
    queue = deque([(vertex, ())])
    seen: set[PairVertex] = set()
    while queue:
        current, word = queue.popleft()
        for letter in sorted(graph.successor[current]):
            target = graph.successor[current][letter]
            if target == vertex:
                return word + (letter,)
            if target not in seen:
                seen.add(target)
                queue.append((target, word + (letter,)))
    return None


def has_reachable_cycle(
    graph: PairGraph, sources: Iterable[PairVertex]
) -> tuple[bool, Optional[Lasso]]:
    """Whether any cycle (self-loops included) is reachable from the sources.

    Reachability in zero steps counts: a source sitting on a cycle is
    already a hit.  On success the witness lasso starts at one of the
    sources and its cycle word can be repeated forever without the walk
    ever leaving the pair graph.
    """
    ordered = sorted(set(sources))
    stray = [s for s in ordered if s not in graph.vertices]
    if stray:
        raise ValueError(f"not pair-graph vertices: {stray}")
    if not ordered:
        return False, None
    reach = _reachable(graph, ordered)
    anchor = None
    cycle: Optional[Word] = None
    for vertex in sorted(reach):
        cycle = _shortest_return(graph, vertex)
        if cycle is not None:
            anchor = vertex
            break
    if anchor is None:
        return False, None
    for source in ordered:
        prefix = _shortest_labeled_path(graph, source, anchor)
        if prefix is not None:
            return True, Lasso(source, prefix, cycle)
    raise AssertionError("cycle anchor was reachable but no source reaches it")
