"""Brute-force reference implementations.

Everything here is deliberately independent of the fast solvers: direct
enumeration over subsets, set partitions and branch-set assignments.  Sizes
are guarded; these exist to pin down expected values and to cross-check the
clever code, not to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping

from .errors import SizeLimitError
from .graph import Graph, is_forest
from .identify import VertexPartition, identify_partition

BRUTE_IDF_MAX = 9
BRUTE_VC_MAX = 20
BRUTE_ECF_MAX_EDGES = 20
BRUTE_MINOR_MAX = 12


def _set_partitions(items: list) -> Iterator[list[list]]:
    """All set partitions, by restricted growth strings."""
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, maxv: int):
        if i == n:
            blocks: dict[int, list] = {}
            for x, b in zip(items, rgs):
                blocks.setdefault(b, []).append(x)
            yield [blocks[b] for b in sorted(blocks)]
            return
        for b in range(maxv + 2):
            rgs[i] = b
            yield from rec(i + 1, max(maxv, b))

    yield from rec(1, 0)


def brute_idf(g: Graph) -> int:
    """idf by exhausting supports in increasing size, then all partitions of
    the support with every block of size >= 2 (singleton blocks are no-ops)."""
    if g.n > BRUTE_IDF_MAX:
        raise SizeLimitError(f"brute_idf supports up to {BRUTE_IDF_MAX} vertices, got {g.n}")
    if is_forest(g):
        return 0
    for s in range(2, g.n + 1):
        for support in combinations(range(g.n), s):
            for blocks in _set_partitions(list(support)):
                if any(len(b) < 2 for b in blocks):
                    continue
                h, _ = identify_partition(g, VertexPartition(blocks))
                if is_forest(h):
                    return s
    raise AssertionError("identifying all vertices of a component always yields a forest")


def brute_vc(g: Graph) -> int:
    """Minimum vertex cover size by subset enumeration in increasing size."""
    if g.n > BRUTE_VC_MAX:
        raise SizeLimitError(f"brute_vc supports up to {BRUTE_VC_MAX} vertices, got {g.n}")
    edges = [(1 << u) | (1 << v) for u, v in g.edges]
    for s in range(g.n + 1):
        for subset in combinations(range(g.n), s):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if all(mask & e for e in edges):
                return s
    raise AssertionError("the full vertex set covers everything")


@dataclass(frozen=True)
class EcfValue:
    """Minimum number of edge contractions to a forest, with one witness set."""
    value: int
    witness: frozenset


def brute_ecf(g: Graph) -> EcfValue:
    """ecf by enumerating contraction sets in increasing size.

    Contracting an edge set F is identifying each connected component of the
    spanning subgraph (V, F); parallels merge, loops vanish.
    """
    if g.m > BRUTE_ECF_MAX_EDGES:
        raise SizeLimitError(f"brute_ecf supports up to {BRUTE_ECF_MAX_EDGES} edges, got {g.m}")
    edges = sorted(g.edges)
    for s in range(g.m + 1):
        for chosen in combinations(edges, s):
            parent = list(range(g.n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in chosen:
                parent[find(u)] = find(v)
            groups: dict[int, list[int]] = {}
            for v in range(g.n):
                groups.setdefault(find(v), []).append(v)
            blocks = [grp for grp in groups.values() if len(grp) >= 2]
            h, _ = identify_partition(g, VertexPartition(blocks))
            if is_forest(h):
                return EcfValue(value=s, witness=frozenset(chosen))
    raise AssertionError("contracting every edge always yields a forest")


# ---------------------------------------------------------------------------
# minor testing by explicit branch-set models

@dataclass(frozen=True)
class MinorModel:
    """A minor model: pairwise disjoint connected branch sets in the host,
    one per pattern vertex, with every pattern edge realized by a host edge."""

    pattern: Graph
    branch_sets: Mapping[int, frozenset]

    def validates_in(self, host: Graph) -> bool:
        sets = [self.branch_sets.get(v) for v in range(self.pattern.n)]
        if any(s is None or not s for s in sets):
            return False
        union: set = set()
        for s in sets:
            if not all(0 <= v < host.n for v in s):
                return False
            if union & s:
                return False
            union |= s
            if not _connected_in(host, s):
                return False
        for u, v in self.pattern.edges:
            if not _touching(host, sets[u], sets[v]):
                return False
        return True

    def as_json_dict(self) -> dict:
        return {"branch_sets": [sorted(self.branch_sets[v]) for v in range(self.pattern.n)]}


def _connected_in(host: Graph, vertices: frozenset) -> bool:
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in host.adj[u]:
            if w in vertices and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _touching(host: Graph, a: frozenset, b: frozenset) -> bool:
    return any(w in b for v in a for w in host.adj[v])


def _mask_neighbors(adj: tuple[int, ...], mask: int) -> int:
    out = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        out |= adj[v]
        m &= m - 1
    return out & ~mask


def _connected_subsets(adj: tuple[int, ...], allowed: int, max_size: int) -> Iterator[int]:
    """All connected subsets (as bitmasks) of the allowed set, each once.

    Seeded at its minimum vertex; grown by include/exclude over the frontier.
    """
    rest = allowed
    while rest:
        seed = (rest & -rest).bit_length() - 1
        seed_bit = 1 << seed
        scope = rest  # only vertices >= seed, so the seed is the minimum

        def grow(current: int, frontier: int, banned: int) -> Iterator[int]:
            yield current
            if bin(current).count("1") >= max_size:
                return
            f = frontier
            while f:
                c = (f & -f).bit_length() - 1
                cbit = 1 << c
                f &= f - 1
                new_frontier = (f | (_mask_neighbors(adj, current | cbit) & scope)) & ~banned & ~(current | cbit)
                yield from grow(current | cbit, new_frontier, banned)
                banned |= cbit

        yield from grow(seed_bit, _mask_neighbors(adj, seed_bit) & scope, ~scope)
        rest &= rest - 1


def brute_minor(h: Graph, g: Graph) -> MinorModel | None:
    """Search for a model of pattern h inside host g; None when there is none."""
    if g.n > BRUTE_MINOR_MAX:
        raise SizeLimitError(f"brute_minor supports hosts up to {BRUTE_MINOR_MAX} vertices, got {g.n}")
    if h.n > g.n or h.m > g.m:
        return None
    if h.n == 0:
        return MinorModel(h, {})
    adj = g.adj_masks
    # assign big pattern components first, high degree vertices first inside them
    comps: list[list[int]] = []
    seen: set = set()
    for s in range(h.n):
        if s in seen:
            continue
        stack, comp = [s], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in h.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    comps.sort(key=len, reverse=True)
    order: list[int] = []
    for comp in comps:
        order.extend(sorted(comp, key=lambda v: (-h.degree(v), v)))
    pos = {v: i for i, v in enumerate(order)}

    assignment: dict[int, int] = {}  # pattern vertex -> branch mask

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        free = ((1 << g.n) - 1) & ~used
        remaining_after = len(order) - i - 1
        budget = bin(free).count("1") - remaining_after
        if budget <= 0:
            return False
        fixed_nbrs = [assignment[q] for q in h.adj[p] if q in assignment]
        open_nbrs = sum(1 for q in h.adj[p] if q not in assignment)
        for bmask in _connected_subsets(adj, free, budget):
            nb = _mask_neighbors(adj, bmask)
            if any(not (nb & s) for s in fixed_nbrs):
                continue
            if bin(nb & free & ~bmask).count("1") < open_nbrs:
                continue
            assignment[p] = bmask
            if place(i + 1, used | bmask):
                return True
            del assignment[p]
        return False

    if not place(0, 0):
        return None
    sets = {p: frozenset(v for v in range(g.n) if (mask >> v) & 1)
            for p, mask in assignment.items()}
    return MinorModel(pattern=h, branch_sets=sets)
