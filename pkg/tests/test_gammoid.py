"""Gammoid representations against the flow oracle, plus block matroid helpers."""
import itertools
import random

import pytest

from sfvs_kernel.gammoid import (Digraph, MatroidRep, direct_sum, linked,
                                 represent, uniform_rep, with_sink_copies)
from sfvs_kernel.fieldlinalg import FieldMatrix
from sfvs_kernel.multigraph import Multigraph


def random_digraph(rng, n_hi=8):
    n = rng.randint(1, n_hi)
    vs = list(range(n))
    arcs = set()
    for _ in range(rng.randint(0, 3 * n)):
        u, w = rng.randrange(n), rng.randrange(n)
        if u != w:
            arcs.add((u, w))
    return Digraph.build(vs, arcs)


def test_digraph_build_rejects_stray_arcs():
    with pytest.raises(ValueError):
        Digraph.build([1, 2], [(1, 3)])


def test_linked_hand_case():
    d = Digraph.build([1, 2, 3, 4], [(1, 3), (2, 4), (3, 4)])
    assert linked(d, [1, 2], [3, 4])
    assert linked(d, [1], [4])       # 1 -> 3 -> 4
    assert not linked(d, [1], [3, 4])  # one source, two targets
    assert linked(d, [1], [1])       # a source reaches itself


def test_rank_agrees_with_linkage():
    rng = random.Random(11)
    for _ in range(40):
        d = random_digraph(rng, n_hi=7)
        vs = list(d.vertices)
        sources = rng.sample(vs, rng.randint(0, min(3, len(vs))))
        rep = represent(d, sources, vs, rng)
        # the dual construction has one row per source
        assert rep.mat.nrows == len(set(sources))
        for size in range(0, 4):
            for t in itertools.combinations(vs, size):
                want = linked(d, sources, t)
                assert rep.is_independent(t) == want, (sources, t)


def test_is_independent_rejects_duplicates():
    d = Digraph.build([1, 2, 3], [(1, 3), (2, 3)])
    rep = represent(d, [1, 2], [1, 2, 3], random.Random(0))
    assert rep.is_independent([1, 2])
    assert not rep.is_independent([2, 2])


def test_with_sink_copies_structure():
    g = Multigraph()
    for v in (1, 2, 3):
        g.add_vertex(v)
    e12 = g.add_edge(1, 2)
    g.add_edge(2, 3)
    d = with_sink_copies(g)
    assert len(d.vertices) == 9
    assert (("v", 1), ("v", 2)) in d.arcs
    assert (("v", 2), ("v", 1)) in d.arcs
    assert (("v", 1), ("c1", 2)) in d.arcs
    assert (("v", 1), ("c2", 2)) in d.arcs
    # copies never have out-arcs
    for u, _ in d.arcs:
        assert u[0] == "v"
    # skipping the 1-2 edge removes exactly its arcs
    d2 = with_sink_copies(g, skip_edges=[e12])
    assert (("v", 1), ("v", 2)) not in d2.arcs
    assert (("v", 1), ("c1", 2)) not in d2.arcs
    assert (("v", 2), ("v", 3)) in d2.arcs
    assert (("v", 2), ("c1", 3)) in d2.arcs


def test_sink_copies_let_two_paths_end_at_one_vertex():
    g = Multigraph.from_edges([1, 2, 3], [(1, 2), (3, 2)])
    d = with_sink_copies(g)
    src = [("v", 1), ("v", 3)]
    assert linked(d, src, [("c1", 2), ("c2", 2)])
    assert not linked(d, [("v", 1)], [("c1", 2), ("c2", 2)])


def test_direct_sum_ranks_add():
    a = MatroidRep(FieldMatrix([[1, 0, 1], [0, 1, 1]]), ("a0", "a1", "a2"))
    b = uniform_rep(("b0", "b1"), 1)
    m = direct_sum(a, b)
    assert m.rank == a.rank + b.rank
    assert m.ground == ("a0", "a1", "a2", "b0", "b1")
    assert m.rank_of(["a0", "a1", "b0"]) == 3
    assert m.rank_of(["b0", "b1"]) == 1


def test_direct_sum_rejects_overlap():
    a = uniform_rep(("x",), 1)
    with pytest.raises(ValueError):
        direct_sum(a, a)


def test_uniform_rep_rank_profile():
    m = uniform_rep(tuple(f"e{i}" for i in range(5)), 2)
    assert m.rank == 2
    for pair in itertools.combinations(m.ground, 2):
        assert m.rank_of(pair) == 2
    for triple in itertools.combinations(m.ground, 3):
        assert m.rank_of(triple) == 2
    assert m.rank_of(["e0"]) == 1
