"""The recurring graph families, their quotients, and their values.

Three families drive everything here: disjoint triangles, odd cycles, and
marguerites (triangles sharing one hub).  The marguerite is not an extra
ingredient - it is what you get by identifying one vertex per triangle, or
every third vertex of the cycle C_{3m}.  This script builds the families,
confirms those quotient identities, and tabulates the structural values.
"""

from __future__ import annotations

from idforest import (Graph, VertexPartition, circumference, cycle_graph,
                      exact_fvs, gen_antichain_h, gen_marguerite,
                      gen_triangles, identify_partition, idf_exact,
                      is_isomorphic, max_cycle_packing, max_marguerite,
                      vc_exact)


def quotient_identities() -> None:
    print("== one family, three constructions ==")
    for m in range(1, 5):
        flower = gen_marguerite(m)

        # glue m disjoint triangles at one vertex per triangle
        hubs = [3 * i for i in range(m)]
        glued, _ = identify_partition(gen_triangles(m),
                                      VertexPartition([hubs]))

        # pinch every third vertex of the cycle on 3m vertices
        thirds = [3 * i for i in range(m)]
        pinched, _ = identify_partition(cycle_graph(3 * m),
                                        VertexPartition([thirds]))

        same = (is_isomorphic(flower, glued)
                and is_isomorphic(flower, pinched))
        print(f"  m={m}: marguerite == glued triangles == pinched C_{3 * m}?"
              f" {same}")


def values_table() -> None:
    gallery: list[tuple[str, Graph]] = []
    gallery += [(f"{m} triangle{'s' if m > 1 else ''}", gen_triangles(m))
                for m in (1, 2, 3)]
    gallery += [(f"C_{n}", cycle_graph(n)) for n in (3, 5, 7, 9)]
    gallery += [(f"marguerite({m})", gen_marguerite(m)) for m in (1, 2, 3, 4)]
    gallery += [(f"apexed ring H_{k}", gen_antichain_h(k)) for k in (1, 2, 3)]

    print()
    print("== structural values across the gallery ==")
    header = f"{'graph':<18}{'idf':>5}{'vc':>5}{'fvs':>5}{'circ':>6}" \
             f"{'pack':>6}{'flower':>8}"
    print(header)
    print("-" * len(header))
    for name, g in gallery:
        row = (idf_exact(g).value, vc_exact(g).value, len(exact_fvs(g)),
               circumference(g), max_cycle_packing(g), max_marguerite(g))
        print(f"{name:<18}{row[0]:>5}{row[1]:>5}{row[2]:>5}{row[3]:>6}"
              f"{row[4]:>6}{row[5]:>8}")

    print()
    print("reading the table:")
    print("  - m triangles: identification needs both endpoints of one edge")
    print("    per triangle, so the value is exactly 2m")
    print("  - odd cycle C_{2k+1}: a cover of the cycle costs k+1, and no")
    print("    smaller identification works")
    print("  - marguerite(m): one block containing the hub plus one petal")
    print("    vertex per petal gives m+1")
    print("  - apexed ring H_k: contains marguerite(k) but not")
    print("    marguerite(k+1), which pins the flower column at k")


def main() -> None:
    quotient_identities()
    values_table()


if __name__ == "__main__":
    main()
