"""Structure read straight off the polynomial, no graph needed.

The polynomial of any total clique covering stores one monomial per
vertex.  Total mass counts vertices, the constant term counts isolated
ones, variable-sharing components mirror connected components, and a
2-coloring of the monomial copies decides bipartiteness.
"""

import random

from graphcode import (canonical_polynomial, cycle_graph, detect_bipartite_poly,
                       detect_disconnected_poly, empty_graph, graph_from_edge_list,
                       is_bipartite, is_connected, maximal_cliques, path_graph,
                       poly_from_covering)


def reading(name: str, g) -> None:
    f = canonical_polynomial(g)
    print(f"{name}: F = {f.render()}")
    print(f"  mass {f.total_mass} (vertices {g.vertex_count}),"
          f" constant {f.constant_term}")
    print(f"  disconnected? {detect_disconnected_poly(f)}"
          f" (truth: {not is_connected(g)})")
    print(f"  bipartite?    {detect_bipartite_poly(f)}"
          f" (truth: {is_bipartite(g)})")
    print()


def main() -> None:
    reading("square", cycle_graph(4))
    reading("pentagon", cycle_graph(5))
    reading("path plus a loose vertex",
            graph_from_edge_list(4, [(0, 1), (1, 2)]))
    reading("three isolated vertices", empty_graph(3))
    reading("two separate edges", graph_from_edge_list(4, [(0, 1), (2, 3)]))

    # the readings do not depend on which covering produced the polynomial
    rng = random.Random(9)
    trials = 300
    stable = 0
    for _ in range(trials):
        n = rng.randint(1, 6)
        edges = [e for e in [(i, j) for i in range(n) for j in range(i + 1, n)]
                 if rng.random() < 0.5]
        g = graph_from_edge_list(n, edges)
        f = poly_from_covering(g, list(maximal_cliques(g)))
        ok = (detect_disconnected_poly(f) == (not is_connected(g))
              and detect_bipartite_poly(f) == is_bipartite(g))
        stable += ok
    print(f"maximal-clique coverings: {stable}/{trials} readings match the graph truth")


if __name__ == "__main__":
    main()
