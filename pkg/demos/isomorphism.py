"""Isomorphism testing by comparing canonical codes.

Two graphs get the same code exactly when they are isomorphic, so the
decision reduces to computing two sequences and comparing them.  The
brute-force permutation search cross-checks every verdict here.
"""

import random

from graphcode import (apply_permutation, brute_force_isomorphic, code, cycle_graph,
                       graph_from_edge_list, is_isomorphic_by_code, path_graph,
                       render_sequence)


def verdict(name: str, g1, g2) -> None:
    by_code = is_isomorphic_by_code(g1, g2)
    oracle = brute_force_isomorphic(g1, g2).verdict
    agree = "agrees" if by_code == oracle else "DISAGREES"
    print(f"{name}: code says {by_code}, oracle {agree}")
    print(f"  {render_sequence(code(g1))}")
    print(f"  {render_sequence(code(g2))}")


def main() -> None:
    g = path_graph(6)
    h = apply_permutation(g, (5, 3, 1, 0, 2, 4))
    verdict("path vs scrambled path", g, h)

    # same degree sequence, different graphs
    two_triangles = graph_from_edge_list(6, [(0, 1), (1, 2), (0, 2),
                                             (3, 4), (4, 5), (3, 5)])
    verdict("hexagon vs two triangles", cycle_graph(6), two_triangles)

    rng = random.Random(2)
    agreements = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        e1 = [e for e in [(i, j) for i in range(n) for j in range(i + 1, n)]
              if rng.random() < 0.5]
        e2 = [e for e in [(i, j) for i in range(n) for j in range(i + 1, n)]
              if rng.random() < 0.5]
        g1 = graph_from_edge_list(n, e1)
        g2 = graph_from_edge_list(n, e2)
        agreements += is_isomorphic_by_code(g1, g2) == brute_force_isomorphic(g1, g2).verdict
    print(f"\nrandom pairs: {agreements}/200 verdicts agree with the oracle")


if __name__ == "__main__":
    main()
