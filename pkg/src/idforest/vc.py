"""Exact vertex cover at desk scale.

The workhorse is the half-integral relaxation: an optimal {0, 1/2, 1}
solution is read off a minimum vertex cover of the bipartite double cover
(maximum matching + alternating-path argument).  The (V0, V1/2, V1) split
drives both the 2k-vertex kernel and the preprocessing of the exact
branching solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import SizeLimitError
from .graph import Graph, induced_subgraph

VC_MAX_VERTICES = 64

#: canonical constant-size no-instance emitted once a kernel run has already
#: decided "no": a single edge with budget 0.
TRIVIAL_NO_GRAPH = Graph(2, [(0, 1)])
TRIVIAL_NO_BUDGET = 0


@dataclass(frozen=True)
class VcSolution:
    value: int
    cover: frozenset

    def covers(self, g: Graph) -> bool:
        return all(u in self.cover or v in self.cover for u, v in g.edges)


@dataclass(frozen=True)
class KernelInstance:
    """Reduced instance equivalent to the original decision.

    `forced` is the set of original vertices already committed to the cover,
    `origin` maps kernel vertices back to original labels (synthetic
    vertices, e.g. an added apex or the trivial no-instance, are absent).
    """

    graph: Graph
    budget: int
    forced: frozenset
    origin: Mapping[int, int]


def is_trivial_no(k: KernelInstance) -> bool:
    # unambiguous: a genuine reduced instance always satisfies |V| <= 2*budget
    return k.graph == TRIVIAL_NO_GRAPH and k.budget == TRIVIAL_NO_BUDGET


# ---------------------------------------------------------------------------
# half-integral relaxation via the bipartite double cover

def _double_cover_min_cover(g: Graph) -> tuple[set, set]:
    """Minimum vertex cover of the bipartite double cover.

    Left copy of v is v, right copy is indexed separately.  Returns
    (left_cover, right_cover) as sets of original vertex labels.
    """
    match_right: dict[int, int] = {}   # right vertex -> matched left vertex
    match_left: dict[int, int] = {}

    def try_augment(u: int, visited: set) -> bool:
        for w in sorted(g.adj[u]):
            if w in visited:
                continue
            visited.add(w)
            if w not in match_right or try_augment(match_right[w], visited):
                match_right[w] = u
                match_left[u] = w
                return True
        return False

    for u in range(g.n):
        try_augment(u, set())

    # alternating reachability from unmatched left vertices
    frontier = [u for u in range(g.n) if u not in match_left]
    left_z = set(frontier)
    right_z: set = set()
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w not in right_z:
                    right_z.add(w)
                    mu = match_right.get(w)
                    if mu is not None and mu not in left_z:
                        left_z.add(mu)
                        nxt.append(mu)
        frontier = nxt
    left_cover = set(range(g.n)) - left_z
    right_cover = right_z
    return left_cover, right_cover


def lp_half_integral(g: Graph) -> tuple[frozenset, frozenset, frozenset]:
    """Optimal half-integral relaxation as (V0, Vhalf, V1)."""
    left, right = _double_cover_min_cover(g)
    v1 = frozenset(left & right)
    v0 = frozenset(v for v in range(g.n) if v not in left and v not in right)
    vhalf = frozenset(v for v in range(g.n) if (v in left) != (v in right))
    return v0, vhalf, v1


def nt_kernel(g: Graph, k: int) -> KernelInstance:
    """Crown-style kernel from the half-integral split.

    The V1 vertices are forced into the cover, V0 is discarded, and the
    half-valued part survives.  A run that is already decided negative
    (budget overdrawn, or more than 2*budget surviving vertices) returns
    the canonical trivial no-instance.
    """
    if k < 0:
        raise ValueError(f"budget must be non-negative, got {k}")
    _, vhalf, v1 = lp_half_integral(g)
    budget = k - len(v1)
    sub, origin = induced_subgraph(g, vhalf)
    keep = [v for v in range(sub.n) if sub.degree(v) > 0]
    sub, origin2 = induced_subgraph(sub, keep)
    origin = tuple(origin[v] for v in origin2)
    if budget < 0 or sub.n > 2 * budget:
        return KernelInstance(TRIVIAL_NO_GRAPH, TRIVIAL_NO_BUDGET, frozenset(), {})
    return KernelInstance(sub, budget, frozenset(v1), dict(enumerate(origin)))


# ---------------------------------------------------------------------------
# exact solver

def _path_cycle_cover(g: Graph, comp: list[int]) -> set:
    """Minimum cover of a component with max degree <= 2 (path or cycle)."""
    if len(comp) == 1:
        return set()
    degs = {v: len(g.adj[v] & frozenset(comp)) for v in comp}
    ends = sorted(v for v in comp if degs[v] <= 1)
    start = ends[0] if ends else min(comp)
    # walk the component
    order = [start]
    seen = {start}
    while True:
        nxt = [w for w in sorted(g.adj[order[-1]]) if w in degs and w not in seen]
        if not nxt:
            break
        order.append(nxt[0])
        seen.add(nxt[0])
    t = len(order)
    if ends:  # path: every second vertex
        return {order[i] for i in range(1, t, 2)}
    if t % 2 == 0:  # even cycle: alternate
        return {order[i] for i in range(1, t, 2)}
    # odd cycle: ceil(t/2), the wrap-around edge needs one extra
    return {order[i] for i in range(1, t - 1, 2)} | {order[t - 1]}


def _vc_component(g: Graph, comp: list[int], best_cap: int) -> set | None:
    """Minimum cover of g restricted to comp, or None if it must exceed best_cap."""
    alive = frozenset(comp)
    degs = {v: len(g.adj[v] & alive) for v in comp}
    maxdeg = max(degs.values(), default=0)
    if maxdeg == 0:
        return set()
    if maxdeg <= 2:
        sol = _path_cycle_cover(g, comp)
        return sol if len(sol) <= best_cap else None
    v = min(u for u in comp if degs[u] == maxdeg)
    # branch: take v ...
    best: set | None = None
    rest = [u for u in comp if u != v]
    sub = _vc_split(g, rest, best_cap - 1)
    if sub is not None:
        best = {v} | sub
        best_cap = min(best_cap, len(best) - 1)
    # ... or take all of N(v)
    nv = g.adj[v] & alive
    rest2 = [u for u in comp if u != v and u not in nv]
    sub2 = _vc_split(g, rest2, best_cap - len(nv))
    if sub2 is not None:
        cand = set(nv) | sub2
        if best is None or len(cand) < len(best):
            best = cand
    return best


def _vc_split(g: Graph, verts: list[int], cap: int) -> set | None:
    """Minimum cover of g[verts] if its size is <= cap, else None."""
    if cap < 0:
        return None
    alive = set(verts)
    comps: list[list[int]] = []
    seen: set = set()
    for s in verts:
        if s in seen:
            continue
        stack, comp = [s], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    total: set = set()
    for comp in comps:
        sol = _vc_component(g, comp, cap - len(total))
        if sol is None:
            return None
        total |= sol
    return total if len(total) <= cap else None


def vc_exact(g: Graph) -> VcSolution:
    """Minimum vertex cover with witness.

    Preprocesses with the half-integral split, then branches on a maximum
    degree vertex (take it, or take its whole neighborhood); ties go to the
    smallest label, components with max degree <= 2 are solved directly.
    """
    if g.n > VC_MAX_VERTICES:
        raise SizeLimitError(f"vc_exact supports up to {VC_MAX_VERTICES} vertices, got {g.n}")
    _, vhalf, v1 = lp_half_integral(g)
    sub, origin = induced_subgraph(g, vhalf)
    sol = _vc_split(sub, list(range(sub.n)), sub.n)
    assert sol is not None
    cover = frozenset(v1) | frozenset(origin[v] for v in sol)
    return VcSolution(value=len(cover), cover=cover)


def vc_decision(g: Graph, k: int) -> bool:
    """True iff g has a vertex cover of size at most k."""
    ki = nt_kernel(g, k)
    return vc_exact(ki.graph).value <= ki.budget
