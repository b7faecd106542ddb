"""Two roads to every number, and they had better agree.

The fast solver reduces to a vertex cover of the bridgeless core; the brute
oracles enumerate partitions, covers, and edge contractions directly from
the definitions.  This script runs a seeded random sweep comparing the two,
then spot-checks that the value can only drop under vertex deletion, edge
deletion, and edge contraction - the operations that generate minors.
"""

from __future__ import annotations

import random

from idforest import (Graph, brute_ecf, brute_idf, brute_vc, contract_edge,
                      delete_edge, delete_vertex, idf_exact, remove_bridges,
                      vc_exact)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def agreement_sweep(rounds: int = 150, seed: int = 31) -> None:
    print(f"== solver vs definition oracle, {rounds} seeded graphs ==")
    rng = random.Random(seed)
    for i in range(rounds):
        g = random_graph(rng, rng.randint(1, 9),
                         rng.choice([0.15, 0.3, 0.5, 0.75]))
        fast, slow = idf_exact(g).value, brute_idf(g)
        assert fast == slow, f"disagreement on {g!r}: {fast} vs {slow}"
        core = remove_bridges(g)
        assert vc_exact(core).value == brute_vc(core)
    print("   every value matched")


def contraction_comparison(rounds: int = 60, seed: int = 53) -> None:
    print()
    print("== identification value vs edge-contraction value ==")
    print("   (identification may merge non-adjacent vertices, so it wins;")
    print("    it never needs more than twice the contraction count)")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(rounds):
        g = random_graph(rng, rng.randint(3, 7), 0.5)
        if g.m > 12:
            continue
        idf, ecf = brute_idf(g), brute_ecf(g).value
        assert idf <= 2 * ecf
        if idf:
            worst = max(worst, ecf / idf ** 3)
    print(f"   bound held everywhere; max ecf/idf^3 seen: {worst:.4f}")


def monotonicity_spot_checks(rounds: int = 80, seed: int = 19) -> None:
    print()
    print("== the value never rises under minor operations ==")
    rng = random.Random(seed)
    drops = {"delete vertex": 0, "delete edge": 0, "contract edge": 0}
    for _ in range(rounds):
        g = random_graph(rng, rng.randint(4, 9), 0.45)
        before = brute_idf(g)

        v = rng.randrange(g.n)
        assert brute_idf(delete_vertex(g, v)) <= before

        if g.m:
            e = rng.choice(sorted(g.edges))
            assert brute_idf(delete_edge(g, e)) <= before
            after = brute_idf(contract_edge(g, e))
            assert after <= before
            if after < before:
                drops["contract edge"] += 1
            if brute_idf(delete_edge(g, e)) < before:
                drops["delete edge"] += 1
        if brute_idf(delete_vertex(g, v)) < before:
            drops["delete vertex"] += 1
    print(f"   {rounds} graphs, one operation of each kind per graph")
    for op, count in drops.items():
        print(f"   {op:<16} strictly decreased the value {count} times")


def main() -> None:
    agreement_sweep()
    contraction_comparison()
    monotonicity_spot_checks()


if __name__ == "__main__":
    main()
