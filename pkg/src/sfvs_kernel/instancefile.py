"""Plain-text instance format.

    p sfvs <n> <m> <k>
    v <id>                isolated vertex (optional, ids must lie in 1..n)
    e <u> <v> <s|->       edge; third field marks membership in S
    c <x> <y>             a recorded pair: any solution must hit x or y

Lines starting with '#' are comments; a '#' also ends a data line early.
Edge ids are positional: the i-th e-line is edge i. The serializer
renumbers vertices to 1..n (sorted by original id) and records the map in
comments, so serializing the same instance twice gives identical bytes.
"""
from __future__ import annotations

from .multigraph import Multigraph, PairInstance


class FormatError(ValueError):
    pass


def parse_instance(text: str) -> PairInstance:
    n = m = k = None
    g = Multigraph()
    s: set[int] = set()
    pairs: set[frozenset[int]] = set()
    edges_seen = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()

        def fail(msg: str):
            raise FormatError(f"line {lineno}: {msg}")

        if tok[0] == "p":
            if n is not None:
                fail("duplicate p-line")
            if len(tok) != 5 or tok[1] != "sfvs":
                fail("expected 'p sfvs <n> <m> <k>'")
            try:
                n, m, k = int(tok[2]), int(tok[3]), int(tok[4])
            except ValueError:
                fail("p-line fields must be integers")
            if n < 0 or m < 0:
                fail("n and m must be nonnegative")
            for v in range(1, n + 1):
                g.add_vertex(v)
            continue

        if n is None:
            fail("data before the p-line")

        if tok[0] == "v":
            if len(tok) != 2:
                fail("expected 'v <id>'")
            _vertex(tok[1], n, fail)
            continue

        if tok[0] == "e":
            if len(tok) != 4:
                fail("expected 'e <u> <v> <s|->'")
            u = _vertex(tok[1], n, fail)
            v = _vertex(tok[2], n, fail)
            if tok[3] not in ("s", "-"):
                fail("edge flag must be 's' or '-'")
            edges_seen += 1
            eid = g.add_edge(u, v, eid=edges_seen)
            if tok[3] == "s":
                s.add(eid)
            continue

        if tok[0] == "c":
            if len(tok) != 3:
                fail("expected 'c <x> <y>'")
            x = _vertex(tok[1], n, fail)
            y = _vertex(tok[2], n, fail)
            if x == y:
                fail("pair endpoints must differ")
            pairs.add(frozenset((x, y)))
            continue

        fail(f"unknown line type {tok[0]!r}")

    if n is None:
        raise FormatError("missing p-line")
    if edges_seen != m:
        raise FormatError(f"p-line declares {m} edges, found {edges_seen}")
    pinst = PairInstance(g, frozenset(s), frozenset(pairs), k)
    pinst.validate()
    return pinst


def _vertex(tok: str, n: int, fail) -> int:
    try:
        v = int(tok)
    except ValueError:
        fail(f"vertex id {tok!r} is not an integer")
    if not 1 <= v <= n:
        fail(f"vertex id {v} outside 1..{n}")
    return v


def serialize_instance(pinst: PairInstance) -> str:
    g = pinst.graph
    orig = g.vertices()
    num = {v: i + 1 for i, v in enumerate(orig)}
    lines = [f"p sfvs {g.n} {g.m} {pinst.k}"]
    if any(v != num[v] for v in orig):
        for v in orig:
            lines.append(f"# {num[v]} was {v}")

    used = {w for eid in sorted(g.edges) for w in g.endpoints(eid)}
    for v in orig:
        if v not in used:
            lines.append(f"v {num[v]}")

    for eid in sorted(g.edges):
        u, v = g.endpoints(eid)
        a, b = sorted((num[u], num[v]))
        flag = "s" if eid in pinst.s else "-"
        lines.append(f"e {a} {b} {flag}")

    for pr in sorted(pinst.pairs, key=sorted):
        x, y = sorted(num[w] for w in pr)
        lines.append(f"c {x} {y}")

    return "\n".join(lines) + "\n"


def read_instance(path: str) -> PairInstance:
    with open(path, "r", encoding="ascii") as fh:
        return parse_instance(fh.read())


def write_instance(path: str, pinst: PairInstance) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_instance(pinst))
