"""Simple undirected graphs and gcd-based constructions.

Vertices are 0..n-1.  Edges are stored as a frozenset of (u, v) pairs with
u < v; there are no loops and no multi-edges.  The gcd constructions
(divisor graphs, sequence realizations) join two vertices exactly when
their integer labels share a prime factor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .budget import Budget
from .primes import divisors_above_one


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with one positive integer label per vertex."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.vertex_count:
            raise ValueError("label count does not match vertex count")
        for x in self.labels:
            if x < 1:
                raise ValueError(f"labels must be positive, got {x}")


def graph_from_edge_list(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, normalizing edge orientation and rejecting loops."""
    normalized = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(vertex_count, frozenset(normalized))


def graph_from_cliques(vertex_count: int, cliques: Iterable[Iterable[int]]) -> Graph:
    """The graph whose edge set is the union of the given cliques."""
    edges = set()
    for clique in cliques:
        members = sorted(set(clique))
        edges.update(combinations(members, 2))
    return graph_from_edge_list(vertex_count, edges)


def realize_sequence(entries: Sequence[int]) -> LabeledGraph:
    """Graph on the entries of a positive integer sequence, joined by gcd > 1.

    Entry order is preserved; entries equal to 1 are isolated because they
    share no prime with anything.
    """
    labels = tuple(entries)
    if not labels:
        raise ValueError("cannot realize an empty sequence")
    for x in labels:
        if x < 1:
            raise ValueError(f"entries must be positive integers, got {x}")
    n = len(labels)
    edges = [(i, j) for i, j in combinations(range(n), 2) if gcd(labels[i], labels[j]) > 1]
    return LabeledGraph(graph_from_edge_list(n, edges), labels)


def divisor_graph(n: int) -> LabeledGraph:
    """Graph on the divisors of n greater than 1, joined by gcd > 1.

    Vertex i carries the (i+1)-th smallest such divisor as its label, so a
    prime n yields a single isolated vertex.
    """
    if n < 2:
        raise ValueError(f"divisor graph needs n >= 2, got {n}")
    return realize_sequence(divisors_above_one(n))


def apply_permutation(g: Graph, permutation: Sequence[int]) -> Graph:
    """Relabel g by vertex -> permutation[vertex]."""
    if sorted(permutation) != list(g.vertices()):
        raise ValueError("not a permutation of the vertex set")
    edges = [(permutation[u], permutation[v]) for u, v in g.edges]
    return graph_from_edge_list(g.vertex_count, edges)


def isolated_vertices(g: Graph) -> set[int]:
    """Vertices with no incident edge."""
    return {v for v in g.vertices() if not g.adjacency[v]}


def connected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen: set[int] = set()
    components = []
    for start in g.vertices():
        if start in seen:
            continue
        stack, component = [start], {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in component:
                    component.add(w)
                    seen.add(w)
                    stack.append(w)
        components.append(component)
    return components


def is_connected(g: Graph) -> bool:
    """True iff the graph has at most one connected component."""
    return len(connected_components(g)) <= 1


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring as a list of 0/1, or None if none exists."""
    color: list[int | None] = [None] * g.vertex_count
    for start in g.vertices():
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] is None:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return [c for c in color if c is not None]


def is_bipartite(g: Graph) -> bool:
    """True iff the vertex set splits into two independent parts."""
    return two_coloring(g) is not None


def independence_number(g: Graph, budget: int | Budget | None = None) -> int:
    """Exact size of a maximum independent set."""
    tracker = Budget.coerce(budget)
    order = sorted(g.vertices(), key=g.degree, reverse=True)
    adjacency = g.adjacency

    def best(candidates: list[int], current: int, record: int) -> int:
        tracker.charge()
        if current + len(candidates) <= record:
            return record
        if not candidates:
            return max(record, current)
        v, rest = candidates[0], candidates[1:]
        record = best([w for w in rest if w not in adjacency[v]], current + 1, record)
        return best(rest, current, record)

    return best(order, 0, 0)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return graph_from_edge_list(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path graph needs n >= 1, got {n}")
    return graph_from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, frozenset())


FAMILIES = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "empty": empty_graph,
}


def generate_family(family: str, n: int) -> Graph:
    """One of the named families: complete, path, cycle, empty."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(n)


def random_graph(n: int, edge_probability: float, rng: random.Random) -> Graph:
    """Erdos-Renyi sample; deterministic given the supplied rng."""
    if n < 1:
        raise ValueError(f"random graph needs n >= 1, got {n}")
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_probability]
    return graph_from_edge_list(n, edges)
