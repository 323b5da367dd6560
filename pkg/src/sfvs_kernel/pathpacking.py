"""Vertex-disjoint path packings: Menger-style s-t paths and open A-paths.

The A-path machinery reduces to maximum matching on an auxiliary graph where
every vertex outside A is split into an adjacent twin pair: a packing of t
A-paths corresponds to a matching of size (#non-A vertices) + t. The
packing-or-blocker routine extracts a Tutte-Berge witness from the
Gallai-Edmonds decomposition of that auxiliary graph, closes it under the twin
exchange, and reads off a blocker of size at most twice the maximum packing.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional, Sequence, Union

import networkx as nx

from .multigraph import Multigraph


@dataclass
class PathPacking:
    """Pairwise fully vertex-disjoint paths, each a vertex sequence."""
    paths: list[list[int]]

    def __len__(self) -> int:
        return len(self.paths)


# -- unit-capacity flow ------------------------------------------------------


def _unit_flow_paths(vertices: Sequence[int],
                     out_neighbors: Callable[[int], Iterable[int]],
                     sources: Iterable[int],
                     sinks: Iterable[int],
                     cutoff: Optional[int] = None) -> list[list[int]]:
    """Maximum set of fully vertex-disjoint source-to-sink paths in a digraph.

    Vertices are split so every vertex carries capacity one; a vertex that is
    both source and sink yields a length-0 path. Deterministic BFS augmenting.
    """
    sources = sorted(set(sources))
    sinks = set(sinks)
    cap: dict[Hashable, dict[Hashable, int]] = {}
    real: set[tuple[Hashable, Hashable]] = set()

    def put(a: Hashable, b: Hashable) -> None:
        cap.setdefault(a, {})[b] = 1
        cap.setdefault(b, {}).setdefault(a, 0)
        real.add((a, b))

    for v in vertices:
        put(("i", v), ("o", v))
    for v in vertices:
        for w in sorted(set(out_neighbors(v))):
            if w != v:
                put(("o", v), ("i", w))
    for s in sources:
        put("S", ("i", s))
    for t in sorted(sinks):
        put(("o", t), "T")
    if "S" not in cap or "T" not in cap:
        return []

    flow = 0
    while cutoff is None or flow < cutoff:
        prev: dict[Hashable, Hashable] = {"S": "S"}
        queue = deque(["S"])
        while queue and "T" not in prev:
            x = queue.popleft()
            for y in sorted(cap[x], key=str):
                if cap[x][y] > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if "T" not in prev:
            break
        y = "T"
        while y != "S":
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1

    # walk the used arcs from each saturated source to recover the paths
    paths = []
    for s in sources:
        if cap["S"][("i", s)] != 0:
            continue
        path = [s]
        node: Hashable = ("o", s)
        while node != "T":
            nxt = None
            for y in sorted(cap[node], key=str):
                if (node, y) in real and cap[node][y] == 0:
                    nxt = y
                    break
            if nxt is None:
                raise AssertionError("flow decomposition lost a path")
            if nxt == "T":
                node = "T"
            else:
                kind, v = nxt
                if kind == "i":
                    path.append(v)
                node = ("o", v) if kind == "i" else nxt
        paths.append(path)
    return paths


def max_vertex_disjoint_st_paths(g: Multigraph, sources: Iterable[int],
                                 sinks: Iterable[int],
                                 cutoff: Optional[int] = None) -> PathPacking:
    """Fully vertex-disjoint paths between two vertex sets of a multigraph.

    Endpoints are consumed too; a vertex in both sets contributes a length-0
    path. Parallel edges and loops do not matter for vertex-disjointness.
    """
    src = [v for v in sources if g.has_vertex(v)]
    snk = [v for v in sinks if g.has_vertex(v)]
    paths = _unit_flow_paths(g.vertices(), g.neighbors, src, snk, cutoff)
    return PathPacking(paths)


def max_disjoint_directed_paths(vertices: Sequence[int],
                                out_neighbors: Callable[[int], Iterable[int]],
                                sources: Iterable[int],
                                sinks: Iterable[int]) -> PathPacking:
    return PathPacking(_unit_flow_paths(vertices, out_neighbors, sources, sinks))


# -- A-paths -----------------------------------------------------------------


def _apath_aux_graph(g: Multigraph, a: frozenset[int]) -> nx.Graph:
    aux = nx.Graph()
    for v in g.vertices():
        if v in a:
            aux.add_node(("a", v))
        else:
            aux.add_node(("c", v, 1))
            aux.add_node(("c", v, 2))
            aux.add_edge(("c", v, 1), ("c", v, 2))
    for eid in sorted(g.edges):
        u, v = g.edges[eid]
        if u == v:
            continue
        un = [("a", u)] if u in a else [("c", u, 1), ("c", u, 2)]
        vn = [("a", v)] if v in a else [("c", v, 1), ("c", v, 2)]
        for x in un:
            for y in vn:
                aux.add_edge(x, y)
    return aux


def _max_matching(aux: nx.Graph) -> set[frozenset]:
    raw = nx.max_weight_matching(aux, maxcardinality=True)
    return {frozenset(e) for e in raw}


def _project_apaths(g: Multigraph, a: frozenset[int],
                    matching: set[frozenset]) -> list[list[int]]:
    """Recover A-paths from a maximum matching of the auxiliary graph.

    The symmetric difference with the all-twins matching decomposes into
    alternating paths; each component with a surplus matching edge runs between
    two A-nodes and projects to one A-path.
    """
    twins = {frozenset([("c", v, 1), ("c", v, 2)])
             for v in g.vertices() if v not in a}
    diff = (matching | twins) - (matching & twins)
    adj: dict[Hashable, list[Hashable]] = {}
    for e in diff:
        x, y = tuple(e)
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)

    paths = []
    seen: set[Hashable] = set()
    ends = sorted((x for x, nbrs in adj.items() if len(nbrs) == 1), key=str)
    for start in ends:
        if start in seen or start[0] != "a":
            continue
        walk = [start]
        seen.add(start)
        while True:
            nxt = [y for y in adj[walk[-1]] if y not in seen]
            if not nxt:
                break
            seen.add(nxt[0])
            walk.append(nxt[0])
        if walk[-1][0] != "a":
            continue  # surplus-free component
        if frozenset([walk[0], walk[1]]) not in matching:
            continue
        proj = []
        for node in walk:
            v = node[1]
            if not proj or proj[-1] != v:
                proj.append(v)
        paths.append(proj)
    return paths


def verify_apaths(g: Multigraph, a: frozenset[int], paths: Sequence[Sequence[int]]) -> None:
    used: set[int] = set()
    for p in paths:
        if len(p) < 2 or p[0] not in a or p[-1] not in a:
            raise AssertionError("not an open A-path")
        if any(v in a for v in p[1:-1]):
            raise AssertionError("interior vertex inside A")
        if len(set(p)) != len(p):
            raise AssertionError("path repeats a vertex")
        for u, v in zip(p, p[1:]):
            if not g.edges_between(u, v):
                raise AssertionError("path uses a missing edge")
        if used & set(p):
            raise AssertionError("paths share a vertex")
        used |= set(p)


def max_disjoint_apaths(g: Multigraph, a: Iterable[int]) -> PathPacking:
    """Maximum family of vertex-disjoint paths with both endpoints in a."""
    aset = frozenset(v for v in a if g.has_vertex(v))
    if len(aset) < 2:
        return PathPacking([])
    aux = _apath_aux_graph(g, aset)
    matching = _max_matching(aux)
    t = len(matching) - sum(1 for v in g.vertices() if v not in aset)
    paths = _project_apaths(g, aset, matching)
    if len(paths) != t:
        raise AssertionError(f"matching promised {t} paths, projected {len(paths)}")
    verify_apaths(g, aset, paths)
    return PathPacking(paths)


def exists_apath(g: Multigraph, a: frozenset[int],
                 banned: frozenset[int] = frozenset()) -> bool:
    """Is there any A-path avoiding the banned vertices?"""
    live_a = sorted((a - banned) & set(g._inc))
    live_set = set(live_a)
    for u in live_a:
        for w in g.neighbors(u):
            if w in live_set and w != u:
                return True
    rest = [v for v in g.vertices() if v not in a and v not in banned]
    for comp in g.induced(rest).components():
        touched = set()
        for c in comp:
            for u in g.neighbors(c):
                if u in live_set:
                    touched.add(u)
                    if len(touched) >= 2:
                        return True
    return False


# -- packing or blocker ------------------------------------------------------


@dataclass
class GallaiResult:
    packing: Optional[PathPacking]
    blocker: Optional[frozenset[int]]


def gallai_blocker_or_packing(g: Multigraph, a: Iterable[int], k: int) -> GallaiResult:
    """Either k+1 disjoint A-paths, or a blocker of size <= 2 * (max packing).

    Both outcomes are verified before returning: the packing by direct
    inspection, the blocker by checking that no A-path survives it.
    """
    aset = frozenset(v for v in a if g.has_vertex(v))
    packing = max_disjoint_apaths(g, aset)
    if len(packing) >= k + 1:
        return GallaiResult(PathPacking(packing.paths[:k + 1]), None)

    t = len(packing)
    if t == 0:
        return GallaiResult(None, frozenset())

    aux = _apath_aux_graph(g, aset)
    nu = len(_max_matching(aux))
    witness = _gallai_edmonds_witness(aux, nu)
    witness = _close_under_twins(aux, witness, nu)

    b_u = {v for v in aset if ("a", v) in witness}
    b_u |= {v for v in g.vertices() if v not in aset
            and ("c", v, 1) in witness and ("c", v, 2) in witness}

    blocker = set(b_u)
    rest = [v for v in g.vertices() if v not in b_u]
    for comp in g.induced(rest).components():
        in_a = sorted(set(comp) & aset)
        blocker.update(in_a[1:])  # keep one A-vertex per component

    if len(blocker) > 2 * t:
        raise AssertionError("blocker exceeds twice the packing size")
    if exists_apath(g, aset, frozenset(blocker)):
        raise AssertionError("claimed blocker misses an A-path")
    return GallaiResult(None, frozenset(blocker))


def _gallai_edmonds_witness(aux: nx.Graph, nu: int) -> set:
    """The set A* of the Gallai-Edmonds decomposition: N(D) - D, where D are
    the vertices some maximum matching leaves exposed."""
    d = set()
    for x in sorted(aux.nodes, key=str):
        h = aux.copy()
        h.remove_node(x)
        if len(_max_matching(h)) == nu:
            d.add(x)
    star = set()
    for x in d:
        for y in aux.neighbors(x):
            if y not in d:
                star.add(y)
    return star


def _close_under_twins(aux: nx.Graph, witness: set, nu: int) -> set:
    """Drop lone twin copies from the witness; the Tutte-Berge value is kept.

    For a twin pair with exactly one copy in the witness, removing that copy
    merges it into its twin's component, which must be odd for a minimizer, so
    the expression |U| - odd(aux - U) is unchanged.
    """
    u = set(witness)
    target = _tutte_berge(aux, u)
    if target != nu:
        raise AssertionError("witness does not certify the matching number")
    changed = True
    while changed:
        changed = False
        for x in sorted(u, key=str):
            if x[0] != "c":
                continue
            twin = ("c", x[1], 3 - x[2])
            if twin not in u:
                u.discard(x)
                if _tutte_berge(aux, u) != nu:
                    raise AssertionError("twin closure broke the witness")
                changed = True
                break
    return u


def _tutte_berge(aux: nx.Graph, u: set) -> int:
    h = aux.copy()
    h.remove_nodes_from(u)
    odd = sum(1 for comp in nx.connected_components(h) if len(comp) % 2 == 1)
    return (aux.number_of_nodes() + len(u) - odd) // 2
