"""Complete graphs, paths, and cycles have codes in closed form.

K_n covers itself with one clique, so its code is n copies of 2.  Paths
and cycles are triangle-free, so their coverings are their edge sets and
the code pairs consecutive primes along the structure.
"""

from graphcode import (canonical_polynomial, closed_form_family, code,
                       generate_family, render_sequence)


def main() -> None:
    for family, sizes in [("complete", range(1, 9)), ("path", range(3, 9)),
                          ("cycle", range(4, 9))]:
        print(f"{family} graphs:")
        for n in sizes:
            g = generate_family(family, n)
            sigma = code(g)
            expected_code, expected_poly = closed_form_family(family, n)
            mark = "ok" if (sigma, canonical_polynomial(g)) == (expected_code, expected_poly) else "??"
            print(f"  n={n}: code {render_sequence(sigma):36} "
                  f"F = {expected_poly.render()}  [{mark}]")
        print()


if __name__ == "__main__":
    main()
