"""Reduction rules that shrink S to a polynomial of the budget k.

Everything is organized around a feasible deletion set Z, disjoint from the
S-edge endpoints, that hits every S-cycle. The components of G - Z - S are
called bubbles; linking two bubbles whenever an S-edge runs between them gives
a forest (a cycle would lift to an S-cycle avoiding Z). Bubbles are solitary,
leaves, or inner by their degree in that forest.

The engine repeatedly applies the lowest-numbered applicable rule and
recomputes all derived structure from scratch in between. Rules either answer
the instance outright, delete graph material, demote S-edges to plain edges,
or record a vertex pair that every solution must hit; recorded pairs are
realized as parallel S-edges once no rule applies.

Soundness of the counting rules leans on witnesses being vertex-disjoint,
which is asserted at the moment each rule fires rather than trusted.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from .flowers import has_flower_of_order
from .multigraph import (Instance, Multigraph, PairInstance, has_s_cycle,
                         is_solution)
from .oracle import FeasibleZ, feasible_z_exact
from .pathpacking import exists_apath, gallai_blocker_or_packing
from .skernel import canonical_no, canonical_yes, check_normalized

Provider = Callable[[Multigraph, frozenset], FeasibleZ]


class FlowerEscape(Exception):
    """Raised when blocker construction finds k+1 disjoint leaf-to-leaf paths
    through a center z; those lift to a flower, so rule 6 applies after all."""

    def __init__(self, z: int):
        super().__init__(f"flower of order > k at {z}")
        self.z = z


# ---------------------------------------------------------------- structure


@dataclass
class Decomposition:
    y: frozenset[int]
    bubbles: list[frozenset[int]]
    bubble_of: dict[int, int]
    adj: dict[int, dict[int, int]]      # bubble -> neighbor bubble -> s-eid
    link: dict[int, tuple[int, int]]    # s-eid -> (bubble, bubble)
    yadj: dict[int, frozenset[int]]     # bubble -> adjacent Y vertices

    def degree(self, b: int) -> int:
        return len(self.adj[b])

    def leaves(self) -> list[int]:
        return [b for b in range(len(self.bubbles)) if self.degree(b) == 1]


def decompose(g: Multigraph, s: frozenset[int], y: frozenset[int]) -> Decomposition:
    for eid in s:
        for v in g.endpoints(eid):
            assert v not in y, "Y must avoid S-edge endpoints"
    live = [v for v in g.vertices() if v not in y]
    sub = g.induced(live)
    for eid in s:
        if eid in sub.edges:
            sub.remove_edge(eid)
    comps = sub.components()
    bubbles = sorted((frozenset(c) for c in comps), key=min)
    bubble_of = {v: i for i, c in enumerate(bubbles) for v in c}

    adj: dict[int, dict[int, int]] = {i: {} for i in range(len(bubbles))}
    link: dict[int, tuple[int, int]] = {}
    for eid in sorted(s):
        u, v = g.endpoints(eid)
        bu, bv = bubble_of[u], bubble_of[v]
        assert bu != bv, "an S-edge inside a bubble contradicts feasibility of Y"
        assert bv not in adj[bu], "parallel S-edges between bubbles contradict feasibility"
        adj[bu][bv] = eid
        adj[bv][bu] = eid
        link[eid] = (bu, bv)

    # forest check by union-find over bubble links
    parent = list(range(len(bubbles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid, (bu, bv) in link.items():
        ru, rv = find(bu), find(bv)
        assert ru != rv, "bubble graph must be a forest"
        parent[ru] = rv

    yset: dict[int, set[int]] = {i: set() for i in range(len(bubbles))}
    for eid in sorted(g.edges):
        if eid in s or g.is_loop(eid):
            continue
        u, v = g.endpoints(eid)
        if u in y and v in y:
            continue
        if u in y:
            yset[bubble_of[v]].add(u)
        elif v in y:
            yset[bubble_of[u]].add(v)
        else:
            assert bubble_of[u] == bubble_of[v], \
                "plain edges cannot cross bubbles"
    yadj = {i: frozenset(vs) for i, vs in yset.items()}
    return Decomposition(y, bubbles, bubble_of, adj, link, yadj)


def cover_matching(dec: Decomposition) -> set[int]:
    """Matching in the bubble forest covering every inner bubble: match each
    subtree root to its smallest child, recurse below skipped non-leaves."""
    n = len(dec.bubbles)
    seen = [False] * n
    matched: set[int] = set()

    def children_of(v: int, parent: Optional[int]) -> list[int]:
        return sorted(w for w in dec.adj[v] if w != parent)

    def rec(r: int, parent: Optional[int]) -> None:
        kids = children_of(r, parent)
        assert kids, "recursion only enters subtrees with an edge to place"
        v = kids[0]
        matched.add(dec.adj[r][v])
        rest = children_of(v, r) + kids[1:]
        for w in rest:
            if children_of(w, v if w in dec.adj[v] else r):
                rec(w, v if w in dec.adj[v] else r)

    for b in range(n):
        if seen[b] or not dec.adj[b]:
            seen[b] = True
            continue
        comp = [b]
        stack = [b]
        seen[b] = True
        while stack:
            x = stack.pop()
            for w in dec.adj[x]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        rec(min(comp), None)

    covered = {b for eid in matched for b in dec.link[eid]}
    for b in range(n):
        if dec.degree(b) >= 2:
            assert b in covered, "matching must cover every inner bubble"
    return matched


def uncovered_leaves(dec: Decomposition, matched: set[int]) -> list[int]:
    covered = {b for eid in matched for b in dec.link[eid]}
    return [b for b in dec.leaves() if b not in covered]


# ------------------------------------------------------------------ blocker


def _base_of(g: Multigraph, s: frozenset[int], x: int) -> int:
    """The unique non-partner neighbor of an S-edge endpoint."""
    sids = [e for e in g.incident(x) if e in s]
    assert len(sids) == 1
    u, v = g.endpoints(sids[0])
    partner = v if u == x else u
    others = {w for w in g.neighbors(x) if w != partner}
    assert len(others) == 1, "normalized S endpoints have exactly one base neighbor"
    return next(iter(others))


def compute_blocker(g: Multigraph, s: frozenset[int], dec: Decomposition,
                    z: int, k: int) -> frozenset[int]:
    """Vertices (outside V(S), inside partner territory) whose removal cuts
    every path between two z-adjacent leaves through the inner bubbles.
    Raises FlowerEscape when k+1 disjoint such paths exist instead.
    """
    lz = [b for b in dec.leaves() if z in dec.yadj[b]]
    if not lz:
        return frozenset()
    far_of: dict[int, tuple[int, int]] = {}
    inner_union: set[int] = set()
    for leaf in lz:
        (far, eid), = dec.adj[leaf].items()
        u, v = g.endpoints(eid)
        q = v if u in dec.bubbles[leaf] else u
        far_of[leaf] = (eid, q)
        if dec.degree(far) >= 2:
            inner_union |= dec.bubbles[far]

    fresh = max(g.vertices(), default=0) + 1
    pid_of = {leaf: fresh + i for i, leaf in enumerate(sorted(lz))}
    gz = Multigraph()
    for v in sorted(inner_union):
        gz.add_vertex(v)
    for pid in pid_of.values():
        gz.add_vertex(pid)
    for eid in sorted(g.edges):
        if eid in s or g.is_loop(eid):
            continue
        u, v = g.endpoints(eid)
        if u in inner_union and v in inner_union:
            gz.add_edge(u, v)
    for leaf in sorted(lz):
        _, q = far_of[leaf]
        if q in inner_union:
            gz.add_edge(pid_of[leaf], q)

    res = gallai_blocker_or_packing(gz, set(pid_of.values()), k)
    if res.packing is not None:
        raise FlowerEscape(z)

    q_of_pid = {pid: far_of[leaf][1] for leaf, pid in pid_of.items()}
    out: set[int] = set()
    for x in res.blocker:
        if x in q_of_pid:
            x = q_of_pid[x]
        if any(e in s for e in g.incident(x)):
            x = _base_of(g, s, x)
        out.add(x)

    vs = {v for eid in s for v in g.endpoints(eid)}
    assert out <= inner_union - vs
    assert len(out) <= 2 * k
    assert not exists_apath(gz, set(pid_of.values()), out), \
        "replacement vertices must still block every leaf-to-leaf path"
    return frozenset(out)


# ------------------------------------------------------------------- engine


@dataclass
class _State:
    graph: Multigraph
    s: set[int]
    pairs: set[frozenset[int]]
    k: int
    z: set[int]
    counts: Counter = field(default_factory=Counter)
    forced: list[int] = field(default_factory=list)
    outcome: Optional[str] = None
    steps: int = 0
    stats: Optional[dict] = None
    last_blocker: frozenset[int] = frozenset()


@dataclass
class EngineReport:
    outcome: str                      # "reduced" | "trivial-yes" | "trivial-no"
    final: Instance                   # pairs realized (or a canonical instance)
    fixpoint: Optional[PairInstance]  # state when no rule applied
    z: frozenset[int]
    blocker: frozenset[int]
    rule_counts: dict[int, int]
    forced: tuple[int, ...]
    stats: dict


def _delete_vertex(st: _State, v: int) -> None:
    removed = st.graph.remove_vertex(v)
    st.s -= set(removed)
    st.pairs = {p for p in st.pairs if v not in p}
    st.z.discard(v)
    st.k -= 1
    st.forced.append(v)


def _pair_vertices(st: _State) -> set[int]:
    return {v for p in st.pairs for v in p}


def _rule2(st: _State) -> bool:
    g = st.graph
    acted = False
    for eid in sorted(g.bridges()):
        g.remove_edge(eid)
        st.s.discard(eid)
        acted = True
    keep = _pair_vertices(st)
    for comp in sorted(g.components(), key=min):
        if keep & set(comp):
            continue
        if not any(e in st.s for v in comp for e in g.incident(v)):
            for v in sorted(comp):
                g.remove_vertex(v)
                st.z.discard(v)
            acted = True
    return acted


def _rule3(st: _State) -> Optional[int]:
    g = st.graph
    live = list(g.vertices())
    sub = g.induced(live)
    for eid in st.s:
        sub.remove_edge(eid)
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(sub.components()):
        for v in comp:
            comp_of[v] = i
    for eid in sorted(st.s):
        u, v = g.endpoints(eid)
        if comp_of[u] != comp_of[v]:
            return eid
    return None


def _m_sees(dec: Decomposition, matched: set[int]):
    out = {}
    for eid in sorted(matched):
        a, b = dec.link[eid]
        za, zb = dec.yadj[a], dec.yadj[b]
        singles = za & zb
        prs = {frozenset((x, y)) for x in za for y in zb if x != y}
        out[eid] = (singles, prs)
    return out


def _leaf_edges(g: Multigraph, st: _State, dec: Decomposition, lset: list[int],
                deczb: Decomposition):
    """Per uncovered leaf: its S-edge, its piece and partner piece in the
    Z+B decomposition, and the z-vertices each side sees."""
    out = []
    for leaf in lset:
        (far, eid), = dec.adj[leaf].items()
        assert dec.degree(far) >= 2, "partners of uncovered leaves are inner"
        u, v = g.endpoints(eid)
        p, q = (u, v) if u in dec.bubbles[leaf] else (v, u)
        izb = deczb.bubble_of[p]
        assert deczb.bubbles[izb] == dec.bubbles[leaf], \
            "blockers never cut into leaf bubbles"
        fzb = deczb.bubble_of[q]
        ey = deczb.yadj[izb]
        assert ey <= st.z, "leaf pieces see only Z"
        fy = deczb.yadj[fzb]
        singles = fy & ey
        oriented = {(x, y) for x in fy for y in ey if x != y}
        out.append((eid, izb, fzb, singles, oriented))
    return out


def _apply_once(st: _State, rng: random.Random) -> Optional[int]:
    g = st.graph
    k = st.k
    sfro = frozenset(st.s)

    # rule 1: out of budget
    if k < 0 or (k == 0 and (st.pairs or has_s_cycle(g, sfro, set()))):
        st.outcome = "trivial-no"
        return 1

    # rule 2: bridges and S-free components (components carrying a recorded
    # pair stay: the pair is a real constraint even without S-edges nearby)
    if _rule2(st):
        return 2

    # rule 3: an S-edge no cycle can use without a second S-edge
    eid = _rule3(st)
    if eid is not None:
        st.s.discard(eid)
        return 3

    # rule 4: a vertex in more pairs than the budget can miss
    cnt = Counter(v for p in st.pairs for v in p)
    hot = sorted(v for v, c in cnt.items() if c >= k + 1)
    if hot:
        _delete_vertex(st, hot[0])
        return 4

    # rule 5: more pairs than any budget-k solution can cover
    if len(st.pairs) > k * k:
        st.outcome = "trivial-no"
        return 5

    # rule 6: a flower exceeding the budget forces its center
    for zv in sorted(st.z):
        if has_flower_of_order(g, sfro, zv, k + 1, rng):
            _delete_vertex(st, zv)
            return 6

    dec = decompose(g, sfro, frozenset(st.z))
    matched = cover_matching(dec)
    sees = _m_sees(dec, matched)

    # rule 7: a pair seen by k+2 matched edges must be hit
    cnt7 = Counter()
    for _, prs in sees.values():
        for p in prs:
            cnt7[p] += 1
    cands = sorted((p for p, c in cnt7.items()
                    if c >= k + 2 and p not in st.pairs), key=sorted)
    if cands:
        pick = cands[0]
        wit = [e for e in sees if pick in sees[e][1]]
        assert len(wit) >= k + 2
        used: set[int] = set()
        for e in wit:
            a, b = dec.link[e]
            assert not ({a, b} & used), "witness bubbles must be disjoint"
            used |= {a, b}
        st.pairs.add(pick)
        return 7

    # rule 8: a matched edge whose every sighting is already recorded
    for e in sorted(sees):
        singles, prs = sees[e]
        if not singles and prs <= st.pairs:
            st.s.discard(e)
            return 8

    # rules 9/10 look at uncovered leaves through the blocker-refined pieces
    try:
        blockers = {zv: compute_blocker(g, sfro, dec, zv, k)
                    for zv in sorted(st.z)}
    except FlowerEscape as esc:
        assert has_flower_of_order(g, sfro, esc.z, k + 1, rng), \
            "escalated packings must lift to flowers"
        _delete_vertex(st, esc.z)
        return 6
    b = frozenset().union(*blockers.values()) if blockers else frozenset()
    st.last_blocker = b
    deczb = decompose(g, sfro, frozenset(st.z) | b)
    lset = uncovered_leaves(dec, matched)
    ledges = _leaf_edges(g, st, dec, lset, deczb)

    st.stats = {
        "z": len(st.z), "b": len(b), "m": len(matched), "l": len(lset),
        "pairs": len(st.pairs), "s": len(st.s), "k": st.k, "n": g.n,
    }

    # rule 9: an oriented pair seen by k+2 leaf edges must be hit
    cnt9 = Counter()
    for _, _, _, _, oriented in ledges:
        for o in oriented:
            cnt9[o] += 1
    cands9 = sorted((o for o, c in cnt9.items()
                     if c >= k + 2 and frozenset(o) not in st.pairs))
    if cands9:
        x, y = cands9[0]
        wit = [(izb, fzb) for _, izb, fzb, _, oriented in ledges
               if (x, y) in oriented]
        assert len(wit) >= k + 2
        pieces: set[int] = set()
        for izb, fzb in wit:
            assert izb not in pieces and fzb not in pieces, \
                "witness pieces must be disjoint"
            pieces |= {izb, fzb}
        st.pairs.add(frozenset((x, y)))
        return 9

    # rule 10: a leaf edge whose every sighting is already recorded
    for eid, _, _, singles, oriented in sorted(ledges):
        if not singles and all(frozenset(o) in st.pairs for o in oriented):
            st.s.discard(eid)
            return 10

    return None


def finalize(g: Multigraph, s: set[int], pairs: set[frozenset[int]],
             k: int) -> Instance:
    """Realize each recorded pair as an S-edge parallel to a plain edge."""
    out = g.copy()
    s2 = set(s)
    for pr in sorted(pairs, key=sorted):
        x, y = sorted(pr)
        assert x != y and out.has_vertex(x) and out.has_vertex(y)
        if not [e for e in out.edges_between(x, y) if not out.is_loop(e)]:
            out.add_edge(x, y)
        s2.add(out.add_edge(x, y))
    return Instance(out, frozenset(s2), k)


def reduce_pairs(pinst: PairInstance, provider: Optional[Provider] = None,
                 seed: int = 0, max_steps: Optional[int] = None) -> EngineReport:
    pinst.validate()
    check_normalized(Instance(pinst.graph, pinst.s, pinst.k))
    if provider is None:
        provider = lambda g, s: feasible_z_exact(g, s)
    rng = random.Random(seed)

    g = pinst.graph.copy()
    s = set(pinst.s)
    pairs = {frozenset(p) for p in pinst.pairs}
    k = pinst.k

    fz = provider(g, frozenset(s))
    vs = {v for eid in s for v in g.endpoints(eid)}
    assert fz.z.isdisjoint(vs), "providers must avoid S-edge endpoints"
    assert not has_s_cycle(g, frozenset(s), set(fz.z)), "provider output must be feasible"

    empty_stats = {"z": len(fz.z), "b": 0, "m": 0, "l": 0,
                   "pairs": len(pairs), "s": len(s), "k": k, "n": g.n}
    if k >= 0 and len(fz.z) <= k and is_solution(pinst, fz.z):
        return EngineReport("trivial-yes", canonical_yes(k), None, fz.z,
                            frozenset(), {}, (), empty_stats)
    if fz.factor is not None and fz.factor <= 8 and len(fz.z) > 8 * max(k, 0):
        return EngineReport("trivial-no", canonical_no(), None, fz.z,
                            frozenset(), {}, (), empty_stats)

    st = _State(g, s, pairs, k, set(fz.z))
    cap = max_steps if max_steps is not None else \
        2 * (g.n + g.m + len(s) + k * k) + 50
    while st.outcome is None:
        st.steps += 1
        assert st.steps <= cap, "rule loop exceeded its termination bound"
        fired = _apply_once(st, rng)
        if fired is None:
            break
        st.counts[fired] += 1

    blocker = st.last_blocker
    if st.outcome == "trivial-no":
        final = canonical_no()
        fix = None
    else:
        nz, kk = len(st.z), st.k
        stats = st.stats or {}
        m_sz, l_sz, b_sz = stats.get("m", 0), stats.get("l", 0), stats.get("b", 0)
        assert len(st.pairs) <= kk * kk
        assert m_sz <= (kk + 1) * nz * nz + kk * nz
        assert b_sz <= 2 * kk * nz
        assert l_sz <= (kk + 1) * nz * (b_sz + nz) + kk * nz
        assert len(st.s) <= 2 * m_sz + l_sz
        fix = PairInstance(st.graph, frozenset(st.s),
                           frozenset(st.pairs), st.k)
        final = finalize(st.graph, st.s, st.pairs, st.k)
        st.outcome = "reduced"

    report_stats = st.stats or empty_stats
    return EngineReport(st.outcome, final, fix, frozenset(st.z), blocker,
                        dict(st.counts), tuple(st.forced), report_stats)
