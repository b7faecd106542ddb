"""The identification operation.

Identifying a vertex set X in a graph G deletes X and adds one fresh "heir"
vertex adjacent to every former neighbor of X outside X.  A partition of
disjoint blocks is identified blockwise; the result does not depend on block
order, so it is computed as a single quotient.

Labels in the identified graph: the untouched vertices come first in their
original order (0..t-1), then one heir per block, blocks ordered by their
minimum original vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InvalidBlockError
from .graph import Graph, is_forest


class VertexPartition:
    """Disjoint non-empty blocks of vertices.  Blocks are frozensets, stored
    sorted by minimum element; the partition's order is the number of
    vertices it touches."""

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        bs = []
        seen: set = set()
        for raw in blocks:
            block = frozenset(raw)
            if not block:
                raise InvalidBlockError("empty block")
            if block & seen:
                raise InvalidBlockError(
                    f"blocks overlap on {sorted(block & seen)}")
            seen |= block
            bs.append(block)
        self.blocks = tuple(sorted(bs, key=min))

    @property
    def order(self) -> int:
        return sum(len(b) for b in self.blocks)

    def support(self) -> frozenset:
        out: frozenset = frozenset()
        for b in self.blocks:
            out |= b
        return out

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"VertexPartition({[sorted(b) for b in self.blocks]})"


def normalize_partition(p: VertexPartition | Iterable[Iterable[int]]) -> VertexPartition:
    """Drop empty and singleton blocks; identifying those is a no-op."""
    blocks = p.blocks if isinstance(p, VertexPartition) else [frozenset(b) for b in p]
    return VertexPartition([b for b in blocks if len(b) >= 2])


@dataclass(frozen=True)
class HeirMap:
    """Where every original vertex went: untouched vertices map through
    `untouched`, block i (in the partition's block order) maps to heir label
    `heirs[i]`.  Together the images cover the identified graph exactly."""

    untouched: Mapping[int, int]
    heirs: tuple[int, ...]

    def image(self, p: VertexPartition, v: int) -> int:
        for i, block in enumerate(p.blocks):
            if v in block:
                return self.heirs[i]
        return self.untouched[v]


def identify_partition(g: Graph, p: VertexPartition) -> tuple[Graph, HeirMap]:
    """Identify every block of p in g, simultaneously."""
    support = p.support()
    for v in support:
        if not (0 <= v < g.n):
            raise InvalidBlockError(f"block vertex {v} not in graph on {g.n} vertices")
    untouched = [v for v in range(g.n) if v not in support]
    image = {v: i for i, v in enumerate(untouched)}
    t = len(untouched)
    heirs = tuple(range(t, t + len(p.blocks)))
    for i, block in enumerate(p.blocks):
        for v in block:
            image[v] = t + i
    edges = set()
    for u, v in g.edges:
        nu, nv = image[u], image[v]
        if nu != nv:
            edges.add((nu, nv))
    h = Graph(t + len(p.blocks), edges)
    return h, HeirMap(untouched={v: image[v] for v in untouched}, heirs=heirs)


def identify_set(g: Graph, x: Iterable[int]) -> tuple[Graph, int]:
    """Identify one vertex set; returns the graph and the heir's label."""
    block = frozenset(x)
    if not block:
        raise InvalidBlockError("cannot identify an empty set")
    h, hm = identify_partition(g, VertexPartition([block]))
    return h, hm.heirs[0]


def is_id_forest_partition(g: Graph, p: VertexPartition) -> bool:
    """True iff identifying p's blocks turns g into a forest."""
    h, _ = identify_partition(g, p)
    return is_forest(h)


# ---------------------------------------------------------------------------
# text format: blocks separated by ';', vertices by ','  e.g. "0,2;1,3"

def partition_to_text(p: VertexPartition) -> str:
    return ";".join(",".join(str(v) for v in sorted(b)) for b in p.blocks)


def text_to_partition(text: str) -> VertexPartition:
    text = text.strip()
    if not text:
        return VertexPartition()
    blocks = []
    for part in text.split(";"):
        items = [s.strip() for s in part.split(",")]
        if any(not s for s in items):
            raise ValueError(f"malformed partition block {part!r}")
        try:
            blocks.append([int(s) for s in items])
        except ValueError:
            raise ValueError(f"non-integer vertex in block {part!r}") from None
    return VertexPartition(blocks)
