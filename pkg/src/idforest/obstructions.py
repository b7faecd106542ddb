"""Canonical enumeration of small graphs and minor-minimal obstruction sets.

Graphs are enumerated one isomorphism class at a time by canonical
augmentation: a child on n+1 vertices is kept exactly when deleting its
canonical last vertex reproduces the parent it was grown from, so no global
seen-set is needed and independent branches parallelize trivially.

On top of the enumeration sit the obstruction scans (minor-minimal graphs
outside "vertex cover at most k" and outside "identification distance to a
forest at most k"), a battery of structural cross-checks relating the two
sets, and a report reconciling the three named families against the
computed ground truth.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from collections.abc import Callable, Iterator, MutableMapping
from dataclasses import dataclass, field
from itertools import combinations, islice

from .canon import canonical_form, canonical_graph, canonical_labeling
from .errors import SizeLimitError
from .graph import (Graph, bridges, connected_components, contract_edge,
                    delete_edge, delete_vertex, disjoint_union,
                    induced_subgraph, is_2_connected, with_new_vertex)
from .graphio import graph6_str, graph6_to_graph
from .minors import gen_cycle, gen_marguerite, gen_triangles
from .oracle import brute_minor
from .solver import idf_decision, idf_exact
from .vc import vc_decision, vc_exact

ENUMERATION_MAX_VERTICES = 10
_MATERIALIZED_MAX = 9
_CHUNK = 16

Predicate = Callable[[Graph], bool]

_levels: dict[int, list[str]] = {}


def _augmented_children(parent: Graph) -> list[Graph]:
    """Canonical children of a canonical parent, sorted by canonical code.

    Every way of attaching one new vertex is tried; a candidate survives when
    deleting the vertex that its own canonical labeling puts last gives back
    the parent's class.  Duplicates within one parent are merged here; across
    parents the acceptance rule already guarantees disjointness.
    """
    parent_code = canonical_form(parent)
    out: dict[bytes, Graph] = {}
    for bits in range(1 << parent.n):
        nbrs = [v for v in range(parent.n) if (bits >> v) & 1]
        child = with_new_vertex(parent, nbrs)
        positions = canonical_labeling(child)
        drop = positions.index(child.n - 1)
        if canonical_form(delete_vertex(child, drop)) == parent_code:
            rep = canonical_graph(child)
            out.setdefault(canonical_form(rep), rep)
    return [out[code] for code in sorted(out)]


def _augment_worker(parent_line: str) -> list[str]:
    children = _augmented_children(graph6_to_graph(parent_line))
    return [graph6_str(c) for c in children]


def _map_parents(parents: list[str], workers: int) -> Iterator[list[str]]:
    if workers <= 1 or len(parents) < 2 * _CHUNK:
        for line in parents:
            yield _augment_worker(line)
        return
    with multiprocessing.Pool(workers) as pool:
        yield from pool.imap(_augment_worker, parents, chunksize=_CHUNK)


def _level_path(checkpoint_dir: str, n: int) -> str:
    return os.path.join(checkpoint_dir, f"graphs-n{n}.g6")


def _ensure_level(n: int, workers: int, checkpoint_dir: str | None):
    if n in _levels:
        return
    if checkpoint_dir is not None and os.path.exists(_level_path(checkpoint_dir, n)):
        with open(_level_path(checkpoint_dir, n)) as fh:
            _levels[n] = [line.strip() for line in fh if line.strip()]
        return
    if n == 0:
        _levels[0] = [graph6_str(Graph(0))]
    else:
        _ensure_level(n - 1, workers, checkpoint_dir)
        level = [child for batch in _map_parents(_levels[n - 1], workers)
                 for child in batch]
        _levels[n] = level
    if checkpoint_dir is not None:
        os.makedirs(checkpoint_dir, exist_ok=True)
        with open(_level_path(checkpoint_dir, n), "w") as fh:
            fh.writelines(line + "\n" for line in _levels[n])


def enumerate_graphs(n: int, *, workers: int = 1,
                     checkpoint_dir: str | None = None) -> Iterator[Graph]:
    """Stream one canonical representative per isomorphism class of simple
    graphs on n vertices, in a deterministic order.

    Levels up to 9 vertices are materialized (and reused across calls, or
    persisted to checkpoint_dir when given); the 10-vertex level is streamed
    parent by parent because it no longer fits comfortably in memory.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > ENUMERATION_MAX_VERTICES:
        raise SizeLimitError(
            f"enumeration supports up to {ENUMERATION_MAX_VERTICES} vertices, got {n}")
    if n <= _MATERIALIZED_MAX:
        _ensure_level(n, workers, checkpoint_dir)
        for line in _levels[n]:
            yield graph6_to_graph(line)
        return

    _ensure_level(_MATERIALIZED_MAX, workers, checkpoint_dir)
    parents = _levels[_MATERIALIZED_MAX]
    done = 0
    partial = progress = None
    if checkpoint_dir is not None:
        os.makedirs(checkpoint_dir, exist_ok=True)
        partial = os.path.join(checkpoint_dir, f"graphs-n{n}.partial.g6")
        progress = os.path.join(checkpoint_dir, f"graphs-n{n}.progress")
        if os.path.exists(progress) and os.path.exists(partial):
            with open(progress) as fh:
                done = int(fh.read().strip() or 0)
            with open(partial) as fh:
                for line in fh:
                    if line.strip():
                        yield graph6_to_graph(line.strip())
    for processed, batch in enumerate(_map_parents(parents[done:], workers), start=done + 1):
        for line in batch:
            yield graph6_to_graph(line)
        if checkpoint_dir is not None:
            with open(partial, "a") as fh:
                fh.writelines(line + "\n" for line in batch)
            with open(progress, "w") as fh:
                fh.write(str(processed))


def one_step_minors(g: Graph) -> Iterator[Graph]:
    """Every graph one minor operation away: a vertex deleted, an edge
    deleted, or an edge contracted."""
    for v in range(g.n):
        yield delete_vertex(g, v)
    for e in sorted(g.edges):
        yield delete_edge(g, e)
        yield contract_edge(g, e)


def is_minor_minimal(g: Graph, predicate: Predicate,
                     memo: MutableMapping[bytes, bool] | None = None) -> bool:
    """True when g fails the predicate but every one-step minor satisfies it.

    The memo (keyed by canonical form) is worth sharing across a whole scan:
    the same small minors recur under thousands of parents.
    """
    cache: MutableMapping[bytes, bool] = {} if memo is None else memo

    def holds(h: Graph) -> bool:
        key = canonical_form(h)
        if key not in cache:
            cache[key] = bool(predicate(h))
        return cache[key]

    if holds(g):
        return False
    return all(holds(h) for h in one_step_minors(g))


# ---------------------------------------------------------------------------
# obstruction scans

PROV_VC_OBSTRUCTION = "bridgeless_vc_obstruction"
PROV_EDGE_AUGMENTED = "edge_augmented"
PROV_OTHER = "other"


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: str


@dataclass(frozen=True)
class ObstructionReport:
    """Result of one obstruction scan plus any attached verification."""

    kind: str  # "vc" or "idf"
    k: int
    obstructions: tuple[Graph, ...]
    provenance: dict[str, str] = field(default_factory=dict)
    checks: dict[str, CheckResult] = field(default_factory=dict)

    def graph6_lines(self) -> list[str]:
        return [graph6_str(g) for g in self.obstructions]

    def as_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "count": len(self.obstructions),
            "obstructions": self.graph6_lines(),
            "provenance": dict(sorted(self.provenance.items())),
            "checks": {name: {"passed": r.passed, "detail": r.detail}
                       for name, r in sorted(self.checks.items())},
        }


_worker_memo: dict[tuple[str, int], dict[bytes, bool]] = {}


def _predicate_for(kind: str, k: int) -> Predicate:
    if kind == "vc":
        return lambda h: vc_decision(h, k)
    return lambda h: idf_decision(h, k)


def _minimal_worker(item: tuple[str, str, int]) -> bool:
    line, kind, k = item
    memo = _worker_memo.setdefault((kind, k), {})
    return is_minor_minimal(graph6_to_graph(line), _predicate_for(kind, k), memo)


def _scan(kind: str, k: int, max_n: int, *, workers: int,
          checkpoint_dir: str | None) -> tuple[Graph, ...]:
    found: list[Graph] = []
    if workers <= 1:
        memo: dict[bytes, bool] = {}
        predicate = _predicate_for(kind, k)
        for n in range(max_n + 1):
            for g in enumerate_graphs(n, checkpoint_dir=checkpoint_dir):
                if is_minor_minimal(g, predicate, memo):
                    found.append(g)
    else:
        for n in range(min(max_n, _MATERIALIZED_MAX) + 1):
            _ensure_level(n, workers, checkpoint_dir)
        with multiprocessing.Pool(workers) as pool:
            for n in range(max_n + 1):
                stream = enumerate_graphs(n, workers=1, checkpoint_dir=checkpoint_dir)
                while True:
                    lines = [graph6_str(g) for g in islice(stream, 4096)]
                    if not lines:
                        break
                    items = [(line, kind, k) for line in lines]
                    flags = pool.imap(_minimal_worker, items, chunksize=_CHUNK)
                    found.extend(graph6_to_graph(line)
                                 for line, keep in zip(lines, flags) if keep)
    return tuple(sorted(found, key=canonical_form))


def obs_vc(k: int, *, long_run: bool = False, workers: int = 1,
           checkpoint_dir: str | None = None) -> ObstructionReport:
    """Minor-minimal graphs with vertex cover number above k, complete up to
    the 2k+2 vertex bound.  k = 3 is a deliberate long run."""
    if k < 0 or k > 3:
        raise ValueError(f"supported budgets are 0..3, got {k}")
    if k == 3 and not long_run:
        raise ValueError("k = 3 scans take a while; pass long_run=True to opt in")
    members = _scan("vc", k, 2 * k + 2, workers=workers, checkpoint_dir=checkpoint_dir)
    return ObstructionReport(kind="vc", k=k, obstructions=members)


def _spanning_vc_minimal(g: Graph, target: int,
                         memo: MutableMapping[bytes, bool]) -> str:
    """Provenance of an obstruction g with value target+1: does deleting some
    edge set (possibly empty) leave a minor-minimal graph for cover budget
    target on the same vertices?"""
    predicate = _predicate_for("vc", target)
    seen: set[bytes] = set()
    edges = sorted(g.edges)
    for size in range(len(edges) + 1):
        for drop in combinations(edges, size):
            sub = Graph(g.n, set(edges) - set(drop))
            code = canonical_form(sub)
            if code in seen:
                continue
            seen.add(code)
            if is_minor_minimal(sub, predicate, memo):
                return PROV_VC_OBSTRUCTION if size == 0 else PROV_EDGE_AUGMENTED
    return PROV_OTHER


def obs_idf(k: int, *, long_run: bool = False, workers: int = 1,
            checkpoint_dir: str | None = None) -> ObstructionReport:
    """Minor-minimal graphs that no order-k identification turns into a
    forest, complete up to the 2k+4 vertex bound (k <= 2; k = 3 scans ten
    vertices and is a deliberate long run).

    Each member is annotated with how it relates to the cover obstructions:
    it is one itself, or an edge deletion away from one, or neither.
    """
    if k < 0 or k > 3:
        raise ValueError(f"supported budgets are 0..3, got {k}")
    if k == 3 and not long_run:
        raise ValueError("k = 3 scans take a while; pass long_run=True to opt in")
    max_n = min(2 * k + 4, ENUMERATION_MAX_VERTICES)
    members = _scan("idf", k, max_n, workers=workers, checkpoint_dir=checkpoint_dir)
    provenance: dict[str, str] = {}
    memos: dict[int, dict[bytes, bool]] = {}
    for g in members:
        value = idf_exact(g).value
        target = value - 1
        provenance[graph6_str(g)] = _spanning_vc_minimal(
            g, target, memos.setdefault(target, {}))
    return ObstructionReport(kind="idf", k=k, obstructions=members,
                             provenance=provenance)


# ---------------------------------------------------------------------------
# structural verification

def _forms(report: ObstructionReport) -> set[bytes]:
    return {canonical_form(g) for g in report.obstructions}


def _padded_form(h: Graph, n: int) -> bytes:
    return canonical_form(disjoint_union(h, Graph(n - h.n)) if h.n < n else h)


def _has_spanning_copy(g: Graph, h: Graph) -> bool:
    """Is some spanning subgraph of g (same vertex count) isomorphic to h
    padded with isolated vertices?"""
    if h.n > g.n or h.m > g.m:
        return False
    target = _padded_form(h, g.n)
    degs = sorted(h.degree(v) for v in range(h.n)) + [0] * (g.n - h.n)
    for keep in combinations(sorted(g.edges), h.m):
        kept = Graph(g.n, keep)
        if sorted(kept.degree(v) for v in range(g.n)) != degs:
            continue
        if canonical_form(kept) == target:
            return True
    return False


def verify_section4(k: int, *, long_run: bool = False, workers: int = 1,
                    checkpoint_dir: str | None = None,
                    vc_report: ObstructionReport | None = None,
                    idf_report: ObstructionReport | None = None) -> dict[str, CheckResult]:
    """Evaluate the structural cross-checks tying the two obstruction sets
    together.  Failures come back as report entries, never exceptions."""
    if vc_report is None:
        vc_report = obs_vc(k, long_run=long_run, workers=workers,
                           checkpoint_dir=checkpoint_dir)
    if idf_report is None:
        idf_report = obs_idf(k, long_run=long_run, workers=workers,
                             checkpoint_dir=checkpoint_dir)
    checks: dict[str, CheckResult] = {}

    bad = [graph6_str(g) for g in idf_report.obstructions if bridges(g)]
    checks["a_bridgeless"] = CheckResult(
        not bad, "every member bridgeless" if not bad else f"bridged members: {bad}")

    idf_forms = _forms(idf_report)
    missing = [graph6_str(g) for g in vc_report.obstructions
               if not bridges(g) and canonical_form(g) not in idf_forms]
    checks["b_bridgeless_vc_members"] = CheckResult(
        not missing,
        "bridgeless cover obstructions all present" if not missing
        else f"absent: {missing}")

    not2conn = []
    for g in vc_report.obstructions:
        for comp in connected_components(g):
            piece, _ = induced_subgraph(g, comp)
            if not is_2_connected(piece):
                not2conn.append(graph6_str(g))
                break
    checks["c_components_2_connected"] = CheckResult(
        not not2conn,
        "every component 2-connected" if not not2conn else f"violations: {not2conn}")

    wrong = [(graph6_str(g), vc_exact(g).value) for g in vc_report.obstructions
             if vc_exact(g).value != k + 1]
    checks["d_vc_value_exact"] = CheckResult(
        not wrong, f"all cover values equal {k + 1}" if not wrong
        else f"off-value members: {wrong}")

    out_of_band = [(graph6_str(g), idf_exact(g).value) for g in idf_report.obstructions
                   if not k + 1 <= idf_exact(g).value <= k + 2]
    checks["e_idf_value_window"] = CheckResult(
        not out_of_band, f"all values in [{k + 1}, {k + 2}]" if not out_of_band
        else f"out of window: {out_of_band}")

    f_failures = []
    f_examined = 0
    for g in idf_report.obstructions:
        if idf_exact(g).value != k + 1:
            continue
        f_examined += 1
        minors_of_g = [h for h in vc_report.obstructions
                       if brute_minor(h, g) is not None]
        if not minors_of_g:
            f_failures.append((graph6_str(g), "no cover obstruction is a minor"))
            continue
        for h in minors_of_g:
            if not _has_spanning_copy(g, h):
                f_failures.append((graph6_str(g),
                                   f"no edge set deletes down to {graph6_str(h)}"))
    checks["f_spanning_vc_obstruction"] = CheckResult(
        not f_failures,
        f"checked {f_examined} members of value {k + 1}" if not f_failures
        else f"failures: {f_failures}")

    oversized = [graph6_str(g) for g in idf_report.obstructions if g.n > 2 * k + 4]
    checks["g_size_bound"] = CheckResult(
        not oversized, f"all members within {2 * k + 4} vertices" if not oversized
        else f"oversized: {oversized}")
    return checks


# ---------------------------------------------------------------------------
# the named families against the computed sets

@dataclass(frozen=True)
class FamilyClaim:
    family: str
    description: str
    graph: Graph | None
    claimed_member: bool | None  # None marks an informational row
    computed_member: bool | None
    agrees: bool | None
    note: str = ""

    def as_json_dict(self) -> dict:
        return {"family": self.family, "description": self.description,
                "graph6": None if self.graph is None else graph6_str(self.graph),
                "claimed": self.claimed_member, "computed": self.computed_member,
                "agrees": self.agrees, "note": self.note}


def family_obstruction_report(k: int) -> tuple[FamilyClaim, ...]:
    """For each named family at parameter k, test minor-minimality against
    the order-k identification class and compare with the stated membership,
    flagging any disagreement.  A corrected marguerite row (one index lower)
    is appended for information."""
    if k < 0 or k > 2:
        raise ValueError(f"supported parameters are 0..2, got {k}")
    predicate = _predicate_for("idf", k)
    memo: dict[bytes, bool] = {}
    rows: list[FamilyClaim] = []

    def claim(family: str, description: str, g: Graph | None,
              claimed: bool | None, note: str = "") -> FamilyClaim:
        if g is None:
            return FamilyClaim(family, description, None, claimed, None, None, note)
        computed = is_minor_minimal(g, predicate, memo)
        agrees = None if claimed is None else computed == claimed
        return FamilyClaim(family, description, g, claimed, computed, agrees, note)

    if 2 * k + 1 >= 3:
        rows.append(claim("cycle", f"C{2 * k + 1}", gen_cycle(2 * k + 1), True))
    else:
        rows.append(claim("cycle", f"C{2 * k + 1}", None, True,
                          note="no cycle this short exists; clause inapplicable"))
    m = k // 2 + 1
    rows.append(claim("triangles", f"{m} disjoint triangles", gen_triangles(m), True))
    rows.append(claim("marguerite", f"{k + 1}-petal marguerite",
                      gen_marguerite(k + 1), True))
    if k >= 1:
        rows.append(claim("marguerite", f"{k}-petal marguerite (shifted index)",
                          gen_marguerite(k), None,
                          note="informational: the index one lower"))
    return tuple(rows)


# ---------------------------------------------------------------------------
# catalog files

def write_catalog(report: ObstructionReport, directory: str) -> tuple[str, str]:
    """Write the newline-separated graph6 catalog and its JSON sidecar;
    returns the two paths."""
    os.makedirs(directory, exist_ok=True)
    stem = f"obs-{report.kind}-k{report.k}"
    g6_path = os.path.join(directory, stem + ".g6")
    json_path = os.path.join(directory, stem + ".json")
    with open(g6_path, "w") as fh:
        fh.writelines(line + "\n" for line in report.graph6_lines())
    with open(json_path, "w") as fh:
        json.dump(report.as_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return g6_path, json_path
