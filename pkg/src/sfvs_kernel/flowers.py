"""Maximum flowers: packings of S-cycles that pairwise meet only at a center z.

Every S-edge is first subdivided into a two-vertex S-segment, which makes
loops and parallel S-edges at the center look like ordinary triangles and
2-paths. A packing of t petals is then exactly a set of t S-segments whose
2t endpoints can be linked to N(z) by fully vertex-disjoint paths in G - z,
so the order is computed by a parity-constrained search over that gammoid:
depth-first over segment subsets with a flow feasibility check, plus a
one-sided algebraic certificate (rank of a random antisymmetric compression)
that lets the decision version answer yes without finishing the search.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Optional

from .fieldlinalg import PRIME, FieldMatrix
from .gammoid import Digraph, linked, represent
from .multigraph import Multigraph
from .pathpacking import _unit_flow_paths


@dataclass
class Petal:
    vertices: tuple[int, ...]   # cyclic order, starts at the center
    edge_ids: tuple[int, ...]


@dataclass
class Flower:
    center: int
    petals: list[Petal]

    @property
    def order(self) -> int:
        return len(self.petals)


def _subdivide_all(g: Multigraph, s: frozenset[int]):
    """Replace every S-edge {u, v} by u-p, p-q (the S part), q-v."""
    g2 = g.copy()
    s2: set[int] = set()
    orig_eid: dict[int, int] = {}
    fresh = max(g.vertices(), default=0) + 1
    for eid in sorted(g.edges):
        orig_eid[eid] = eid
    for eid in sorted(s):
        u, v = g2.endpoints(eid)
        g2.remove_edge(eid)
        p, q = fresh, fresh + 1
        fresh += 2
        g2.add_vertex(p)
        g2.add_vertex(q)
        e1 = g2.add_edge(u, p)
        e2 = g2.add_edge(p, q)
        e3 = g2.add_edge(q, v)
        orig_eid[e1] = orig_eid[e2] = orig_eid[e3] = eid
        s2.add(e2)
    return g2, frozenset(s2), orig_eid


def _link_digraph(g2: Multigraph, z: int) -> Digraph:
    vs = [v for v in g2.vertices() if v != z]
    arcs = set()
    for eid in g2.edges:
        u, w = g2.endpoints(eid)
        if u == z or w == z or u == w:
            continue
        arcs.add((u, w))
        arcs.add((w, u))
    return Digraph.build(vs, arcs)


def _algebraic_lower_bound(d: Digraph, sources: list[int],
                           pairs: list[tuple[int, int]],
                           rng: random.Random) -> int:
    """Half the rank of sum x_i (b_p b_q^T - b_q b_p^T) never exceeds the true
    parity optimum, and matches it with high probability."""
    if not sources or not pairs:
        return 0
    ground = sorted({v for pq in pairs for v in pq})
    rep = represent(d, sources, ground, rng)
    dim = rep.mat.nrows
    y = [[0] * dim for _ in range(dim)]
    for p, q in pairs:
        x = rng.randrange(1, PRIME)
        bp, bq = rep.column(p), rep.column(q)
        for i in range(dim):
            for j in range(dim):
                y[i][j] = (y[i][j] + x * (bp[i] * bq[j] - bq[i] * bp[j])) % PRIME
    r = FieldMatrix(y, dim).rank()
    assert r % 2 == 0, "antisymmetric matrices have even rank over a big prime field"
    return r // 2


def _search(d: Digraph, sources: list[int], pairs: list[tuple[int, int]],
            target: Optional[int]) -> list[tuple[int, int]]:
    """Exact max parity-independent set of segment pairs, cut off early once
    `target` many are found."""
    src = set(sources)
    best: list[tuple[int, int]] = []

    def feasible(chosen) -> bool:
        t = {v for pq in chosen for v in pq}
        return linked(d, src, t)

    def dfs(i: int, chosen: list[tuple[int, int]]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if target is not None and len(best) >= target:
                return True
        for j in range(i, len(pairs)):
            if len(chosen) + (len(pairs) - j) <= len(best):
                break
            chosen.append(pairs[j])
            if feasible(chosen) and dfs(j + 1, chosen):
                return True
            chosen.pop()
        return False

    dfs(0, [])
    return best


def _lift_cycle(g2_cycle: list[int], g2_edges: list[int],
                orig_eid: dict[int, int], original: set[int]) -> Petal:
    verts = [v for v in g2_cycle if v in original]
    eids: list[int] = []
    for e in g2_edges:
        oe = orig_eid[e]
        if not eids or eids[-1] != oe:
            eids.append(oe)
    while len(eids) > 1 and eids[0] == eids[-1]:
        eids.pop()
    return Petal(tuple(verts), tuple(eids))


def _reconstruct(g2: Multigraph, z: int, d: Digraph, sources: list[int],
                 chosen: list[tuple[int, int]], orig_eid: dict[int, int],
                 original: set[int]) -> list[Petal]:
    targets = {v for pq in chosen for v in pq}
    out = {v: [] for v in d.vertices}
    for u, w in d.arcs:
        out[u].append(w)
    paths = _unit_flow_paths(list(d.vertices), lambda v: sorted(out[v]),
                             set(sources), targets, cutoff=len(targets))
    assert len(paths) == len(targets), "chosen segments must stay linked"
    path_to = {p[-1]: p for p in paths}

    def edge_between(a: int, b: int) -> int:
        cands = [e for e in g2.edges_between(a, b) if not g2.is_loop(e)]
        assert cands, f"no edge between {a} and {b}"
        return min(cands)

    petals = []
    for p, q in chosen:
        walk = [z] + path_to[p] + list(reversed(path_to[q]))
        edges = [edge_between(walk[i], walk[i + 1]) for i in range(len(walk) - 1)]
        edges.append(edge_between(walk[-1], z))
        petals.append(_lift_cycle(walk, edges, orig_eid, original))
    return petals


def _setup(g: Multigraph, s: frozenset[int], z: int):
    g2, s2, orig_eid = _subdivide_all(g, s)
    d = _link_digraph(g2, z)
    sources = sorted(v for v in g2.neighbors(z) if v != z)
    pairs = [tuple(sorted(g2.endpoints(e))) for e in sorted(s2)]
    return g2, d, sources, pairs, orig_eid


def max_flower(g: Multigraph, s: frozenset[int], z: int) -> Flower:
    """Exact maximum flower at z, with petals materialized."""
    if not g.has_vertex(z) or not s:
        return Flower(z, [])
    g2, d, sources, pairs, orig_eid = _setup(g, s, z)
    chosen = _search(d, sources, pairs, None)
    petals = _reconstruct(g2, z, d, sources, chosen, orig_eid, set(g.vertices()))
    return Flower(z, petals)


def has_flower_of_order(g: Multigraph, s: frozenset[int], z: int, t: int,
                        rng: Optional[random.Random] = None) -> bool:
    """Decision version. The algebraic bound can only certify yes, so a miss
    costs time (the exhaustive search runs) but never the answer."""
    if t <= 0:
        return True
    if not g.has_vertex(z) or not s:
        return False
    _, d, sources, pairs, _ = _setup(g, s, z)
    if len(pairs) < t:
        return False
    if rng is not None and _algebraic_lower_bound(d, sources, pairs, rng) >= t:
        return True
    return len(_search(d, sources, pairs, t)) >= t


def validate_flower(g: Multigraph, s: frozenset[int], fl: Flower) -> None:
    z = fl.center
    seen: set[int] = set()
    for petal in fl.petals:
        vs, es = petal.vertices, petal.edge_ids
        assert vs[0] == z, "petals start at the center"
        assert len(set(vs)) == len(vs), "petal cycles are simple"
        inner = set(vs) - {z}
        assert not (inner & seen), "petals may only share the center"
        seen |= inner
        assert any(e in s for e in es), "every petal needs an S-edge"
        assert len(es) == len(vs)
        if len(vs) == 1:
            u, w = g.endpoints(es[0])
            assert u == w == z, "a one-vertex petal is a loop at the center"
            continue
        assert len(set(es)) == len(es)
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            u, w = g.endpoints(es[i])
            assert {u, w} == {a, b}, "petal edges must trace the cycle"
