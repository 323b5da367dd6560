"""Streaming representative-triple filter over block matroids."""
import random
from math import comb

import pytest

from helpers import check_representative, random_block_matroid
from sfvs_kernel.fieldlinalg import FieldMatrix
from sfvs_kernel.gammoid import MatroidRep, direct_sum, uniform_rep
from sfvs_kernel.repsets import representative_triples


def test_kept_family_is_representative():
    rng = random.Random(2)
    demands = 0
    for _ in range(30):
        m, d1, d2, triples = random_block_matroid(rng)
        kept = representative_triples(m, d1, d2, triples)
        assert set(kept) <= set(triples)
        assert len(kept) <= comb(d1, 2) * d2
        # input order survives filtering
        idx = [triples.index(t) for t in kept]
        assert idx == sorted(idx)
        demands += check_representative(m, d1, d2, triples, kept)
    assert demands > 0


def test_dependent_triples_are_dropped():
    # rank-1 first block: no pair of its columns is independent
    a = MatroidRep(FieldMatrix([[1, 2, 3]]), ("x0", "x1", "x2"))
    b = uniform_rep(("y0",), 1)
    m = direct_sum(a, b)
    kept = representative_triples(m, 1, 1, [("x0", "x1", "y0")])
    assert kept == []


def test_duplicate_wedges_keep_first():
    a = MatroidRep(FieldMatrix([[1, 0, 1], [0, 1, 1]]), ("x0", "x1", "x2"))
    b = uniform_rep(("y0",), 1)
    m = direct_sum(a, b)
    t1 = ("x0", "x1", "y0")
    t2 = ("x1", "x0", "y0")  # same wedge up to sign
    kept = representative_triples(m, 2, 1, [t1, t2])
    assert kept == [t1]


def test_row_count_mismatch_rejected():
    m = uniform_rep(("a", "b", "c"), 2)
    with pytest.raises(ValueError):
        representative_triples(m, 2, 1, [])
