"""Shared builders and exhaustive reference oracles for the test suite."""
import itertools
from typing import Optional

from sfvs_kernel.multigraph import Instance, Multigraph, PairInstance, is_solution


def random_multigraph(rng, n_lo=2, n_hi=10, m_hi=None, allow_loops=True):
    n = rng.randint(n_lo, n_hi)
    g = Multigraph()
    for v in range(1, n + 1):
        g.add_vertex(v)
    m = rng.randint(1, m_hi if m_hi is not None else 2 * n)
    eids = []
    for _ in range(m):
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        if not allow_loops and u == v:
            continue
        eids.append(g.add_edge(u, v))
    return g, eids


def random_instance(rng, n_lo=2, n_hi=10, s_hi=4, k_hi=3, with_pairs=False):
    g, eids = random_multigraph(rng, n_lo, n_hi)
    s = frozenset(rng.sample(eids, min(len(eids), rng.randint(0, s_hi))))
    k = rng.randint(0, k_hi)
    pairs = frozenset()
    if with_pairs and g.n >= 2 and rng.random() < 0.5:
        vs = g.vertices()
        got = set()
        for _ in range(rng.randint(1, 2)):
            x, y = rng.sample(vs, 2)
            got.add(frozenset((x, y)))
        pairs = frozenset(got)
    return PairInstance(g, s, pairs, k)


def brute_solve(pinst: PairInstance) -> Optional[frozenset]:
    """Smallest solution by exhaustive subset search, None if none fits."""
    vs = pinst.graph.vertices()
    for size in range(min(pinst.k, len(vs)) + 1):
        for combo in itertools.combinations(vs, size):
            x = frozenset(combo)
            if is_solution(pinst, x):
                return x
    return None


def all_apaths(g: Multigraph, a):
    """Every simple path with both ends in a and interior outside it.

    Each path is reported once (smaller endpoint first)."""
    aset = set(a)
    out = []

    def extend(path):
        v = path[-1]
        for eid in g.incident(v):
            x, y = g.endpoints(eid)
            w = y if x == v else x
            if w in path:
                continue
            if w in aset:
                if len(path) >= 1 and path[0] <= w:
                    out.append(path + [w])
            else:
                extend(path + [w])

    for v in sorted(aset):
        extend([v])
    # a single edge between two a-vertices yields one report already; dedup
    # multi-edge duplicates by vertex sequence
    seen = set()
    uniq = []
    for p in out:
        key = tuple(p)
        if key not in seen:
            seen.add(key)
            uniq.append(p)
    return uniq


def brute_nu(g: Multigraph, a) -> int:
    """Maximum number of fully vertex-disjoint A-paths, exhaustively."""
    paths = [set(p) for p in all_apaths(g, a)]
    best = 0

    def pack(idx, used, count):
        nonlocal best
        best = max(best, count)
        if count + (len(paths) - idx) <= best:
            return
        for i in range(idx, len(paths)):
            if not (paths[i] & used):
                pack(i + 1, used | paths[i], count + 1)

    pack(0, set(), 0)
    return best


def as_pair_free(inst: Instance) -> PairInstance:
    return PairInstance(inst.graph, inst.s, frozenset(), inst.k)


def random_block_matroid(rng, d1_hi=5, d2_hi=2, ground_hi=10):
    """Direct sum of two full-row-rank random blocks plus candidate triples."""
    from sfvs_kernel.fieldlinalg import PRIME, FieldMatrix
    from sfvs_kernel.gammoid import MatroidRep, direct_sum

    def full_rank(d, n):
        while True:
            m = FieldMatrix([[rng.randrange(PRIME) for _ in range(n)]
                             for _ in range(d)], n)
            if m.rank() == d:
                return m

    while True:
        d1, d2 = rng.randint(1, d1_hi), rng.randint(1, d2_hi)
        n1 = rng.randint(max(d1, 2), ground_hi - d2)
        n2 = rng.randint(d2, min(3, ground_hi - n1))
        if n1 + n2 <= ground_hi:
            break
    g1 = tuple(("g", i) for i in range(n1))
    g2 = tuple(("h", j) for j in range(n2))
    m = direct_sum(MatroidRep(full_rank(d1, n1), g1),
                   MatroidRep(full_rank(d2, n2), g2))
    pairs = list(itertools.combinations(g1, 2))
    triples = [(a, b, c) for (a, b) in pairs for c in g2]
    rng.shuffle(triples)
    triples = triples[:rng.randint(1, min(8, len(triples)))]
    return m, d1, d2, triples


def check_representative(m, d1, d2, triples, kept):
    """Exhaustively confirm kept is (d1+d2-3)-representative for triples.

    Returns the number of (B, triple) demands checked."""
    q = d1 + d2 - 3
    ground = m.ground
    checked = 0
    for size in range(0, max(q, -1) + 1):
        for b in itertools.combinations(ground, size):
            if m.rank_of(b) != size:
                continue
            for t in triples:
                if m.rank_of(set(b) | set(t)) != size + 3:
                    continue
                checked += 1
                assert any(m.rank_of(set(b) | set(t2)) == size + 3
                           for t2 in kept), (b, t)
    return checked
