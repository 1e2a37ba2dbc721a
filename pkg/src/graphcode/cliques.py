"""Total clique coverings: exact minimum search and related machinery.

A total clique covering is a set of cliques that covers every vertex and
every edge.  The minimum size theta_t is found by iterative deepening over
a candidate pool holding every clique of size >= 2 plus one singleton per
isolated vertex.  Minimum coverings may contain non-maximal cliques, so the
pool is deliberately not restricted to maximal cliques.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .budget import Budget
from .graphs import Graph, isolated_vertices, realize_sequence
from .primes import prime_support

Clique = frozenset  # of vertex ids
Covering = tuple    # ordered tuple of Cliques


def maximal_cliques(g: Graph) -> set[Clique]:
    """All maximal cliques, found by pivoted recursive expansion.

    Isolated vertices appear as singleton cliques.
    """
    adjacency = g.adjacency
    found: set[Clique] = set()

    def expand(include: set[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            found.add(frozenset(include))
            return
        pivot = max(candidates | excluded, key=lambda u: len(adjacency[u] & candidates))
        for v in sorted(candidates - adjacency[pivot]):
            expand(include | {v}, candidates & adjacency[v], excluded & adjacency[v])
            candidates.remove(v)
            excluded.add(v)

    expand(set(), set(g.vertices()), set())
    return found


def all_cliques(g: Graph, min_size: int = 1) -> Iterator[Clique]:
    """Every clique of size >= min_size, each exactly once.

    Cliques grow by appending higher-indexed common neighbors, so the
    stream is deterministic.
    """
    if min_size < 1:
        raise ValueError(f"min_size must be >= 1, got {min_size}")
    adjacency = g.adjacency

    def extend(base: tuple[int, ...], candidates: list[int]) -> Iterator[Clique]:
        for idx, v in enumerate(candidates):
            grown = base + (v,)
            if len(grown) >= min_size:
                yield frozenset(grown)
            yield from extend(grown, [w for w in candidates[idx + 1:] if w in adjacency[v]])

    yield from extend((), list(g.vertices()))


def is_total_clique_covering(g: Graph, cliques: Sequence[Iterable[int]]) -> bool:
    """True iff the cliques are distinct, valid, and cover all of V and E."""
    members = [frozenset(c) for c in cliques]
    if len(set(members)) != len(members):
        return False
    for clique in members:
        if not clique:
            return False
        if not all(0 <= v < g.vertex_count for v in clique):
            return False
        if not all(g.has_edge(u, v) for u, v in combinations(sorted(clique), 2)):
            return False
    covered = set().union(*members) if members else set()
    if covered != set(g.vertices()):
        return False
    return all(any(u in c and v in c for c in members) for u, v in g.edges)


def canonical_covering(cliques: Iterable[Iterable[int]]) -> Covering:
    """Cliques ordered by (size, vertex list); singletons therefore lead."""
    return tuple(sorted((frozenset(c) for c in cliques),
                        key=lambda c: (len(c), sorted(c))))


def _candidate_pool(g: Graph) -> list[Clique]:
    pool = [frozenset({v}) for v in sorted(isolated_vertices(g))]
    pool.extend(all_cliques(g, min_size=2))
    pool.sort(key=lambda c: (len(c), sorted(c)))
    return pool


def _cover_search(g: Graph, tracker: Budget, enumerate_all: bool,
                  ) -> tuple[int, list[frozenset[Clique]]]:
    """Iterative-deepening search over the candidate pool.

    Returns (theta_t, coverings); the covering list is complete when
    enumerate_all is set and holds a single witness otherwise.
    """
    if g.vertex_count == 0:
        raise ValueError("coverings need at least one vertex")
    n = g.vertex_count
    edges = g.sorted_edges()
    edge_bit = {e: n + i for i, e in enumerate(edges)}
    pool = _candidate_pool(g)

    masks = []
    for clique in pool:
        mask = 0
        for v in clique:
            mask |= 1 << v
        for e in combinations(sorted(clique), 2):
            mask |= 1 << edge_bit[e]
        masks.append(mask)

    element_count = n + len(edges)
    full = (1 << element_count) - 1
    by_element: list[list[int]] = [[] for _ in range(element_count)]
    for idx, mask in enumerate(masks):
        probe = mask
        while probe:
            low = probe & -probe
            by_element[low.bit_length() - 1].append(idx)
            probe ^= low
    max_cover = max((m.bit_count() for m in masks), default=0)

    found: set[frozenset[Clique]] = set()

    def descend(covered: int, chosen: tuple[int, ...], remaining: int) -> bool:
        tracker.charge()
        if covered == full:
            found.add(frozenset(pool[i] for i in chosen))
            return True
        if remaining == 0:
            return False
        uncovered = full ^ covered
        if uncovered.bit_count() > remaining * max_cover:
            return False
        element = (uncovered & -uncovered).bit_length() - 1
        hit = False
        for idx in by_element[element]:
            if descend(covered | masks[idx], chosen + (idx,), remaining - 1):
                if not enumerate_all:
                    return True
                hit = True
        return hit

    lower = max(1, len(isolated_vertices(g)) + (1 if edges else 0))
    for depth in range(lower, len(pool) + 1):
        found.clear()
        if descend(0, (), depth):
            return depth, sorted(found, key=lambda cov: sorted((len(c), sorted(c)) for c in cov))
    raise AssertionError("unreachable: the full candidate pool is a covering")


def theta_t(g: Graph, budget: int | Budget | None = None) -> int:
    """Minimum size of a total clique covering."""
    tracker = Budget.coerce(budget)
    size, _ = _cover_search(g, tracker, enumerate_all=False)
    return size


def minimum_total_coverings(g: Graph, budget: int | Budget | None = None) -> list[Covering]:
    """Every minimum total clique covering, canonically ordered and deduplicated."""
    tracker = Budget.coerce(budget)
    _, coverings = _cover_search(g, tracker, enumerate_all=True)
    return [canonical_covering(c) for c in coverings]


def covering_from_sequence(entries: Sequence[int]) -> Covering:
    """The covering a coding sequence induces on its own realization.

    One singleton per leading 1, then one clique per distinct prime factor
    of the sequence (ascending), holding the positions that prime divides.
    """
    from .coding import check_sequence_shape  # local import to avoid a cycle

    check_sequence_shape(entries)
    ones = sum(1 for x in entries if x == 1)
    cliques: list[Clique] = [frozenset({i}) for i in range(ones)]
    support: list[int] = []
    seen: set[int] = set()
    for x in entries:
        for p in prime_support(x):
            if p not in seen:
                seen.add(p)
                support.append(p)
    for p in sorted(support):
        cliques.append(frozenset(i for i, x in enumerate(entries) if x % p == 0))
    return tuple(cliques)


def prop1_certificate(g: Graph, independent_set: Iterable[int],
                      covering: Sequence[Iterable[int]]) -> bool:
    """Certify theta_t(g) == |independent_set| with a matching covering.

    True iff the set is independent, the covering is a total clique covering
    of the same size, and each certified vertex lies in exactly one clique.
    Such a covering is necessarily the unique minimum one.
    """
    chosen = set(independent_set)
    if not all(0 <= v < g.vertex_count for v in chosen):
        return False
    if any(g.has_edge(u, v) for u, v in combinations(sorted(chosen), 2)):
        return False
    members = [frozenset(c) for c in covering]
    if len(members) != len(chosen):
        return False
    if not is_total_clique_covering(g, members):
        return False
    return all(sum(1 for c in members if v in c) == 1 for v in chosen)


def covering_to_text(covering: Sequence[Iterable[int]]) -> str:
    """One clique per line, space-separated vertex ids, canonical order."""
    lines = [" ".join(str(v) for v in sorted(c)) for c in canonical_covering(covering)]
    return "\n".join(lines) + "\n"


def covering_from_text(text: str) -> Covering:
    """Inverse of covering_to_text."""
    cliques = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        cliques.append(frozenset(int(tok) for tok in line.split()))
    if not cliques:
        raise ValueError("no cliques in covering text")
    return tuple(cliques)


def realization_of_sequence(entries: Sequence[int]) -> Graph:
    """Host graph for covering_from_sequence, on the sequence positions."""
    return realize_sequence(entries).graph
