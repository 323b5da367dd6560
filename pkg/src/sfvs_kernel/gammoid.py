"""Linear representations of gammoids and the block matroids built from them.

A set is independent in the gammoid of a digraph with fixed sources iff it can
be linked to the sources by fully vertex-disjoint paths (a source reaches
itself by a length-0 path). The representation goes through the classical
dual-of-transversal construction: build the bipartite link graph (arc (u, w)
gives an edge from u to the copy of w; every non-source also gets an edge to
its own copy), fill a random matrix over F_p on its support, and dualize.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from .fieldlinalg import PRIME, FieldMatrix, IncrementalBasis, dualize
from .multigraph import Multigraph
from .pathpacking import _unit_flow_paths


@dataclass
class Digraph:
    vertices: tuple[Hashable, ...]
    arcs: frozenset[tuple[Hashable, Hashable]]

    @classmethod
    def build(cls, vertices: Iterable[Hashable],
              arcs: Iterable[tuple[Hashable, Hashable]]) -> "Digraph":
        vs = tuple(sorted(set(vertices), key=str))
        arcset = frozenset(arcs)
        vset = set(vs)
        for u, w in arcset:
            if u not in vset or w not in vset:
                raise ValueError("arc endpoint outside vertex set")
        return cls(vs, arcset)

    def out_neighbors(self, v: Hashable) -> list[Hashable]:
        return sorted((w for u, w in self.arcs if u == v), key=str)


def linked(d: Digraph, sources: Iterable[Hashable], t: Iterable[Hashable]) -> bool:
    """Can t be hit by |t| fully vertex-disjoint paths from the sources?"""
    tset = set(t)
    out = {v: [] for v in d.vertices}
    for u, w in d.arcs:
        out[u].append(w)
    paths = _unit_flow_paths(list(d.vertices), lambda v: out[v],
                             set(sources), tset, cutoff=len(tset))
    return len(paths) == len(tset)


@dataclass
class MatroidRep:
    """Columns over F_p indexed by ground-set labels."""
    mat: FieldMatrix
    ground: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        if len(self.ground) != self.mat.ncols:
            raise ValueError("one column per ground element")
        self.col_of = {g: i for i, g in enumerate(self.ground)}
        if len(self.col_of) != len(self.ground):
            raise ValueError("duplicate ground labels")

    @property
    def rank(self) -> int:
        return self.mat.rank()

    def column(self, label: Hashable) -> list[int]:
        return self.mat.column(self.col_of[label])

    def rank_of(self, labels: Iterable[Hashable]) -> int:
        return self.mat.rank_of_columns(self.col_of[x] for x in labels)

    def is_independent(self, labels: Sequence[Hashable]) -> bool:
        labels = list(labels)
        if len(set(labels)) != len(labels):
            return False
        return self.rank_of(labels) == len(labels)


def represent(d: Digraph, sources: Iterable[Hashable],
              ground: Sequence[Hashable], rng: random.Random) -> MatroidRep:
    """Random representation of the gammoid on `ground`; sound with probability
    1 - O(poly/p) over the rng draws."""
    sources = set(sources)
    vs = list(d.vertices)
    vset = set(vs)
    if not sources <= vset or not set(ground) <= vset:
        raise ValueError("sources and ground must be vertices of the digraph")
    non_sources = [v for v in vs if v not in sources]
    row_of = {v: i for i, v in enumerate(non_sources)}
    col_of = {v: j for j, v in enumerate(vs)}

    support: set[tuple[int, int]] = set()
    for v in non_sources:
        support.add((row_of[v], col_of[v]))
    for u, w in sorted(d.arcs, key=str):
        if w not in sources:
            support.add((row_of[w], col_of[u]))

    for _ in range(4):
        mat = FieldMatrix.zeros(len(non_sources), len(vs))
        for i, j in sorted(support):
            mat.rows[i][j] = rng.randrange(1, PRIME)
        if mat.rank() == len(non_sources):
            dual = dualize(mat)
            cols = [col_of[g] for g in ground]
            return MatroidRep(dual.columns(cols), tuple(ground))
    raise AssertionError("transversal matrix failed to reach full row rank")


def with_sink_copies(g: Multigraph, skip_edges: Iterable[int] = ()) -> Digraph:
    """Bidirect a multigraph and attach two in-arc-only copies per vertex.

    Vertex v becomes ("v", v) with copies ("c1", v) and ("c2", v); every edge
    {u, w} yields both arcs between the originals plus arcs from each endpoint
    into the other endpoint's copies. Copies have no out-arcs, so paths can
    only end there.
    """
    skip = set(skip_edges)
    vertices: list[Hashable] = []
    for v in g.vertices():
        vertices += [("v", v), ("c1", v), ("c2", v)]
    arcs: set[tuple[Hashable, Hashable]] = set()
    for eid in sorted(g.edges):
        if eid in skip:
            continue
        u, w = g.edges[eid]
        arcs.add((("v", u), ("v", w)))
        arcs.add((("v", w), ("v", u)))
        arcs.add((("v", u), ("c1", w)))
        arcs.add((("v", u), ("c2", w)))
        arcs.add((("v", w), ("c1", u)))
        arcs.add((("v", w), ("c2", u)))
    return Digraph.build(vertices, arcs)


def direct_sum(a: MatroidRep, b: MatroidRep) -> MatroidRep:
    """Block-diagonal sum; grounds must be disjoint."""
    if set(a.ground) & set(b.ground):
        raise ValueError("grounds overlap")
    ra, rb = a.mat.nrows, b.mat.nrows
    ca, cb = a.mat.ncols, b.mat.ncols
    rows = [list(r) + [0] * cb for r in a.mat.rows]
    rows += [[0] * ca + list(r) for r in b.mat.rows]
    return MatroidRep(FieldMatrix(rows, ca + cb), a.ground + b.ground)


def uniform_rep(ground: Sequence[Hashable], k: int) -> MatroidRep:
    """Uniform matroid of rank k as a Vandermonde matrix; deterministic."""
    n = len(ground)
    rows = [[pow(j + 1, i, PRIME) for j in range(n)] for i in range(k)]
    return MatroidRep(FieldMatrix(rows, n), tuple(ground))
