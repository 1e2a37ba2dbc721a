"""Divisor graphs: vertices are the divisors of n above 1, edges are shared factors.

For composite n the minimum total clique covering is unique and has one
clique per distinct prime of n, so theta_t counts prime factors.  The
canonical polynomial follows a closed form read off the prime exponents.
"""

from graphcode import (canonical_polynomial, divisor_graph,
                       divisor_graph_polynomial_closed_form, divisors_above_one,
                       factorize, minimum_total_coverings, theta_t)


def show(n: int) -> None:
    labeled = divisor_graph(n)
    g = labeled.graph
    print(f"G({n}): vertices {labeled.labels}")
    print(f"  {g.edge_count} edges, theta_t = {theta_t(g)},"
          f" distinct primes of {n}: {len(factorize(n))}")
    coverings = minimum_total_coverings(g)
    print(f"  minimum coverings: {len(coverings)}")
    for clique in sorted(coverings[0], key=len):
        print(f"    divisors {sorted(labeled.labels[v] for v in clique)}")
    pipeline = canonical_polynomial(g)
    closed = divisor_graph_polynomial_closed_form(n)
    print(f"  F (pipeline):    {pipeline.render()}")
    print(f"  F (closed form): {closed.render()}")
    print(f"  agreement: {pipeline == closed}")
    print()


def main() -> None:
    for n in (12, 60, 97):
        show(n)

    # the closed form tracks the pipeline across a whole range
    checked = 0
    for n in range(2, 201):
        if len(divisors_above_one(n)) > 12:
            continue
        assert canonical_polynomial(divisor_graph(n).graph) == \
            divisor_graph_polynomial_closed_form(n)
        checked += 1
    print(f"closed form == pipeline for all {checked} divisor graphs with n <= 200"
          f" and at most 12 divisors above 1")


if __name__ == "__main__":
    main()
