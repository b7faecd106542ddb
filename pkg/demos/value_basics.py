"""A first tour of the identification number.

Identifying a set of vertices means replacing it by one new vertex that
inherits all outside neighbors.  The quantity computed here is the least
total number of vertices one must touch, across disjoint blocks, so that
identifying every block leaves a forest.  The punchline demonstrated below:
that number equals the vertex cover number of the graph with its bridges
removed, which is why the solver is fast and certificate-producing.
"""

from __future__ import annotations

from idforest import (Graph, bridges, complete_graph, cycle_graph,
                      disjoint_union, gen_marguerite, graph6_to_graph,
                      identify_partition, idf_exact, is_forest, path_graph,
                      remove_bridges, vc_exact, with_new_vertex)


def show(name: str, g: Graph) -> None:
    cert = idf_exact(g)
    blocks = "; ".join(",".join(map(str, sorted(b))) for b in cert.partition) or "(none)"
    quotient, _ = identify_partition(g, cert.partition)
    print(f"{name:<24} n={g.n:<3} m={g.m:<3} idf={cert.value}  blocks: {blocks}")
    assert is_forest(quotient), "certificates must replay"


def main() -> None:
    print("== values with certificates ==")
    show("path P6", path_graph(6))
    show("triangle", complete_graph(3))
    show("five-cycle", cycle_graph(5))
    show("K4", complete_graph(4))
    show("bowtie", gen_marguerite(2))
    show("two triangles", disjoint_union(complete_graph(3), complete_graph(3)))

    print()
    print("== why bridges never matter ==")
    # hang a long pendant path off a triangle: the pendant is all bridges
    g = complete_graph(3)
    for _ in range(4):
        g = with_new_vertex(g, [g.n - 1])
    core = remove_bridges(g)
    print(f"triangle + pendant path:   idf={idf_exact(g).value}")
    print(f"bridges removed ({len(bridges(g))} edges): idf={idf_exact(core).value}")
    print(f"cover number of the core:  vc={vc_exact(core).value}")

    print()
    print("== the value adds up over disjoint parts ==")
    parts = [cycle_graph(5), complete_graph(4), path_graph(3)]
    whole = disjoint_union(*parts)
    print(f"parts: {[idf_exact(p).value for p in parts]}"
          f" -> union: {idf_exact(whole).value}")

    print()
    print("== and it is never exactly one ==")
    # identifying a single vertex does nothing, so any useful block has two
    # or more vertices; the smallest non-forest already needs two touches
    for g6 in ("Bw", "C~", "Dhc"):
        print(f"  idf({g6}) = {idf_exact(graph6_to_graph(g6)).value}")


if __name__ == "__main__":
    main()
