"""Multigraph primitives, cycle detection, normalization, torso."""
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_instance, random_multigraph
from sfvs_kernel.multigraph import (Instance, Multigraph, PairInstance,
                                    find_s_cycle, has_s_cycle, is_solution,
                                    normalize, torso)
from sfvs_kernel.oracle import solve_exact
from sfvs_kernel.skernel import check_normalized


def skeleton(g: Multigraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    for eid in g.edges:
        u, v = g.endpoints(eid)
        if u != v:
            h.add_edge(u, v)
    return h


def test_basic_ops():
    g = Multigraph()
    for v in (1, 2, 3):
        g.add_vertex(v)
    e1 = g.add_edge(1, 2)
    e2 = g.add_edge(1, 2)
    e3 = g.add_edge(2, 3)
    loop = g.add_edge(3, 3)
    assert g.n == 3 and g.m == 4
    assert g.degree(1) == 2
    assert g.degree(3) == 3  # loop counts twice
    assert set(g.edges_between(1, 2)) == {e1, e2}
    assert g.is_loop(loop) and not g.is_loop(e3)
    assert g.neighbors(2) == [1, 3]
    removed = g.remove_vertex(2)
    assert removed == {e1, e2, e3}
    assert g.n == 2 and g.m == 1


def test_add_edge_explicit_id_collision():
    g = Multigraph()
    g.add_vertex(1)
    g.add_vertex(2)
    g.add_edge(1, 2, eid=7)
    with pytest.raises(ValueError):
        g.add_edge(1, 2, eid=7)


def test_endpoints_of_missing_edge():
    g = Multigraph()
    g.add_vertex(1)
    with pytest.raises(KeyError):
        g.endpoints(5)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_components_match_reference(seed):
    g, _ = random_multigraph(random.Random(seed), n_lo=1, n_hi=12)
    ours = {frozenset(c) for c in g.components()}
    ref = {frozenset(c) for c in nx.connected_components(skeleton(g))}
    assert ours == ref


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_bridges_match_reference(seed):
    g, _ = random_multigraph(random.Random(seed), n_lo=2, n_hi=12)
    sk = skeleton(g)
    expect = set()
    for u, v in nx.bridges(sk):
        eids = g.edges_between(u, v)
        if len(eids) == 1:
            expect.add(eids[0])
    assert g.bridges() == expect


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_shortest_path_is_shortest(seed):
    rng = random.Random(seed)
    g, _ = random_multigraph(rng, n_lo=2, n_hi=12)
    sk = skeleton(g)
    vs = g.vertices()
    src, dst = rng.choice(vs), rng.choice(vs)
    path = g.shortest_path(src, dst)
    if path is None:
        assert not nx.has_path(sk, src, dst)
        return
    assert path[0] == src and path[-1] == dst
    for a, b in zip(path, path[1:]):
        assert g.edges_between(a, b)
    assert len(set(path)) == len(path)
    assert len(path) - 1 == nx.shortest_path_length(sk, src, dst)


def test_induced_keeps_parallels_and_loops():
    g = Multigraph()
    for v in (1, 2, 3):
        g.add_vertex(v)
    g.add_edge(1, 2)
    g.add_edge(1, 2)
    g.add_edge(1, 1)
    g.add_edge(2, 3)
    h = g.induced({1, 2})
    assert h.n == 2 and h.m == 3
    assert len(h.edges_between(1, 2)) == 2


# -- special-cycle detection --------------------------------------------------


def ref_has_s_cycle(g, s, deleted=frozenset()):
    # an S-edge lies on a cycle iff it is a loop or its endpoints stay
    # connected without it
    for eid in s:
        u, v = g.endpoints(eid)
        if u in deleted or v in deleted:
            continue
        if u == v:
            return True
        if g.path_exists(u, v, banned_vertices=frozenset(deleted),
                         banned_edges=frozenset([eid])):
            return True
    return False


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=100, deadline=None)
def test_s_cycle_detection_matches_reference(seed):
    rng = random.Random(seed)
    pinst = random_instance(rng, n_hi=9)
    g, s = pinst.graph, pinst.s
    vs = g.vertices()
    deleted = frozenset(rng.sample(vs, rng.randint(0, min(3, len(vs)))))
    assert has_s_cycle(g, s, deleted) == ref_has_s_cycle(g, s, deleted)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=100, deadline=None)
def test_find_s_cycle_returns_a_real_cycle(seed):
    rng = random.Random(seed)
    pinst = random_instance(rng, n_hi=9)
    g, s = pinst.graph, pinst.s
    cyc = find_s_cycle(g, s)
    if cyc is None:
        assert not ref_has_s_cycle(g, s)
        return
    assert len(set(cyc)) == len(cyc)
    if len(cyc) == 1:
        assert any(g.is_loop(e) and e in s for e in g.incident(cyc[0]))
    elif len(cyc) == 2:
        u, v = cyc
        eids = g.edges_between(u, v)
        assert len(eids) >= 2 and any(e in s for e in eids)
    else:
        closed = cyc + [cyc[0]]
        hit = False
        for a, b in zip(closed, closed[1:]):
            eids = g.edges_between(a, b)
            assert eids
            hit = hit or any(e in s for e in eids)
        assert hit


def test_is_solution_checks_pairs():
    g = Multigraph()
    for v in (1, 2, 3):
        g.add_vertex(v)
    g.add_edge(1, 2)
    se = g.add_edge(2, 3)
    g.add_edge(3, 1)
    s = frozenset([se])
    pinst = PairInstance(g, s, frozenset([frozenset((2, 3))]), 2)
    assert not is_solution(pinst, frozenset())          # triangle survives
    assert not is_solution(pinst, frozenset([1]))       # pair unhit
    assert is_solution(pinst, frozenset([2]))
    with pytest.raises(ValueError):
        is_solution(pinst, frozenset([99]))


# -- normalization ------------------------------------------------------------


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=80, deadline=None)
def test_normalize_output_shape(seed):
    rng = random.Random(seed)
    pinst = random_instance(rng, n_hi=8, with_pairs=True)
    norm = normalize(pinst)
    out = norm.instance
    out.validate()
    check_normalized(Instance(out.graph, out.s, out.k))
    assert out.k == pinst.k - len(norm.forced)
    for v in out.graph.vertices():
        assert norm.landing[v] in set(pinst.graph.vertices())
    # no loops and no parallel S-edges survive anywhere
    for eid in out.graph.edges:
        assert not out.graph.is_loop(eid)
    for eid in out.s:
        u, v = out.graph.endpoints(eid)
        assert len(out.graph.edges_between(u, v)) == 1


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_normalize_preserves_answer_and_lifts_witnesses(seed):
    rng = random.Random(seed)
    pinst = random_instance(rng, n_hi=7, k_hi=2, with_pairs=True)
    norm = normalize(pinst)
    want = solve_exact(pinst)
    if norm.instance.k < 0:
        assert not want.found
        return
    got = solve_exact(norm.instance)
    assert got.found == want.found
    if got.found:
        lifted = norm.lift(got.witness)
        assert len(lifted) <= pinst.k
        assert is_solution(pinst, lifted)


def test_normalize_forces_s_loop_carriers():
    g = Multigraph()
    g.add_vertex(1)
    g.add_vertex(2)
    sloop = g.add_edge(1, 1)
    g.add_edge(1, 2)
    pinst = PairInstance(g, frozenset([sloop]), frozenset([frozenset((1, 2))]), 2)
    norm = normalize(pinst)
    assert norm.forced == frozenset([1])
    assert norm.instance.k == 1
    assert norm.instance.pairs == frozenset()  # pair satisfied by the forced vertex


def test_normalize_demotes_second_s_copy():
    g = Multigraph()
    g.add_vertex(1)
    g.add_vertex(2)
    e1 = g.add_edge(1, 2)
    e2 = g.add_edge(1, 2)
    inst = Instance(g, frozenset([e1, e2]), 1)
    out = normalize(inst).instance
    # one S-edge survives (subdivided), its sibling becomes plain
    assert len(out.s) == 1
    assert solve_exact(out).found == solve_exact(inst).found


# -- torso --------------------------------------------------------------------


def test_torso_keeps_two_cycle_through_outside_component():
    g = Multigraph()
    for v in (1, 2, 3):
        g.add_vertex(v)
    se = g.add_edge(1, 2)
    g.add_edge(1, 3)
    g.add_edge(2, 3)
    s = frozenset([se])  # vertex 3 is outside w yet closes a cycle through the S-edge
    t = torso(g, [1, 2])
    assert len(t.edges_between(1, 2)) == 2
    assert has_s_cycle(t, s)
    assert has_s_cycle(g, s)


def test_torso_adds_no_loops():
    # a component hanging off one w-vertex twice contributes nothing
    g = Multigraph.from_edges([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
    t = torso(g, [1])
    assert t.n == 1 and t.m == 0


def test_torso_connects_across_component():
    g = Multigraph.from_edges([1, 2, 3, 4], [(1, 3), (3, 4), (4, 2)])
    t = torso(g, [1, 2])
    assert len(t.edges_between(1, 2)) == 1


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_torso_preserves_s_cycles_under_deletions(seed):
    import itertools
    rng = random.Random(seed)
    pinst = random_instance(rng, n_hi=9)
    g, s = pinst.graph, pinst.s
    vs_of_s = {v for e in s for v in g.endpoints(e)}
    extra = [v for v in g.vertices() if v not in vs_of_s]
    rng.shuffle(extra)
    w = sorted(vs_of_s | set(extra[:rng.randint(0, len(extra))]))
    t = torso(g, w)
    assert s <= set(t.edges)
    for size in range(0, 3):
        for x in itertools.combinations(w, size):
            assert has_s_cycle(g, s, frozenset(x)) == \
                has_s_cycle(t, s, frozenset(x))
