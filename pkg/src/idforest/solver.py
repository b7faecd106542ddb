"""Exact identification-to-forest solving.

idf(G) is the minimum number of vertices touched by a disjoint family of
blocks whose blockwise identification leaves a forest.  The solver rests on
two structure facts, both re-verified by the test suite against brute force:
bridges never matter (idf(G) = idf of the bridgeless core), and on a
bridgeless graph the optimum equals the minimum vertex cover, witnessed by
splitting a cover along the core's components.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, connected_components, bridges, remove_bridges, with_new_vertex
from .graphio import graph6_str
from .identify import HeirMap, VertexPartition, identify_partition
from .vc import KernelInstance, nt_kernel, vc_decision, vc_exact


@dataclass(frozen=True)
class IdfCertificate:
    value: int
    partition: VertexPartition
    forest: Graph
    heirs: HeirMap

    def as_json_dict(self) -> dict:
        return {
            "idf": self.value,
            "partition": [sorted(b) for b in self.partition.blocks],
            "forest_graph6": graph6_str(self.forest),
        }

    def as_json(self) -> str:
        return json.dumps(self.as_json_dict(), sort_keys=True)


def partition_from_cover(g: Graph, cover: Iterable[int]) -> VertexPartition:
    """Split a vertex cover of g's bridgeless core into one block per core
    component (components contributing fewer than 2 cover vertices drop out).

    Identifying the result is always a forest: inside a component the block
    covers every edge, so the quotient is a star, and blocks never span a
    bridge, so re-adding bridges cannot close a cycle.
    """
    cover = frozenset(cover)
    core = remove_bridges(g)
    blocks = []
    for comp in connected_components(core):
        block = cover & comp
        if len(block) >= 2:
            blocks.append(block)
    return VertexPartition(blocks)


def idf_exact(g: Graph) -> IdfCertificate:
    """Minimum identification order with a witness partition."""
    core = remove_bridges(g)
    sol = vc_exact(core)
    partition = partition_from_cover(g, sol.cover)
    forest, heirs = identify_partition(g, partition)
    return IdfCertificate(value=sol.value, partition=partition, forest=forest, heirs=heirs)


def idf_decision(g: Graph, k: int) -> bool:
    """True iff idf(g) <= k."""
    return vc_decision(remove_bridges(g), k)


def apex_bridgeless(g: Graph) -> tuple[Graph, int]:
    """Add one vertex adjacent to every non-isolated vertex.

    The result has no bridges, and when g has at least one edge its minimum
    vertex cover grows by exactly one.  Returns (graph, apex label).
    """
    targets = [v for v in range(g.n) if g.degree(v) > 0]
    return with_new_vertex(g, targets), g.n


def vc_to_idf(g: Graph, k: int) -> tuple[Graph, int]:
    """Transfer a cover instance to an identification instance.

    (g, k) has a vertex cover of size <= k iff the output pair (h, k') has
    idf(h) <= k'.  Bridgeless graphs pass through unchanged; otherwise the
    apex construction is applied and the budget grows by one.
    """
    if not bridges(g):
        return g, k
    h, _ = apex_bridgeless(g)
    return h, k + 1


def idf_kernel(g: Graph, k: int) -> KernelInstance:
    """Shrink (g, k) to an equivalent instance on at most 2k+1 vertices.

    Pipeline: drop bridges, run the half-integral cover kernel, and if the
    reduced graph still has a bridge (the canonical no-instance does), apex
    it with budget+1 so the output is again bridgeless-or-decided.  The
    budget never exceeds k+1.  For k = 0 a negative answer cannot fit in
    2k+1 = 1 vertices (every such graph is a forest), so only there the
    size bound gives way to the 3-vertex canonical no-instance.
    """
    core = remove_bridges(g)
    ki = nt_kernel(core, k)
    if bridges(ki.graph):
        apexed, _ = apex_bridgeless(ki.graph)
        return KernelInstance(apexed, ki.budget + 1, ki.forced, dict(ki.origin))
    return ki
