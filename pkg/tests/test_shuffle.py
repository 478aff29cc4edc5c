from collections import Counter
from itertools import combinations, permutations
from math import comb

import pytest

import oracles
from shufflealg import comps
from shufflealg.errors import InvalidBlocks, NotContained, NotDisjoint
from shufflealg.perm import parse, reverse
from shufflealg.shuffle import (block_pairs, descent_subset_backward, descent_subset_forward,
                                distribution, bijection_check, shuffles)
from shufflealg.stats import IntSet


def test_shuffle_examples():
    assert set(shuffles(parse("53"), parse("16"))) == set(
        map(parse, ["5316", "5136", "5163", "1653", "1536", "1563"]))
    assert shuffles((), parse("12")) == [(1, 2)]
    assert len(shuffles(parse("123"), parse("456"))) == 20
    with pytest.raises(NotDisjoint):
        shuffles((1, 2), (2, 3))


def test_shuffles_match_oracle():
    for m in range(0, 4):
        for n in range(0, 4):
            letters = list(range(1, m + n + 1))
            for A in combinations(letters, m):
                B = [x for x in letters if x not in A]
                p, s = tuple(A[::-1]), tuple(B)
                assert sorted(shuffles(p, s)) == oracles.shuffles(p, s)


def test_shuffle_counts_symmetry_and_reversal():
    for total in range(0, 9):
        for m in range(0, total + 1):
            p = tuple(range(m, 0, -1))
            s = tuple(range(m + 1, total + 1))
            sh = shuffles(p, s)
            assert len(sh) == len(set(sh)) == comb(total, m)
            assert set(sh) == set(shuffles(s, p))
            assert {reverse(t) for t in sh} == set(shuffles(reverse(p), reverse(s)))


def test_distribution_examples():
    assert distribution("des", (2, 1), (3,)).counts() == Counter({1: 2, 2: 1})
    assert distribution("maj", (2, 1), (3,)).entries == (1, 2, 3)
    assert distribution("Des", (1,), (2,)).entries == (IntSet(()), IntSet((1,)))
    assert distribution("maj", (2, 1), (3,)).entries == distribution("maj", (3,), (2, 1)).entries


def test_des_distribution_depends_only_on_compositions():
    # every disjoint pair with letters [m+n], m+n <= 6
    for total in range(2, 7):
        for m in range(1, total):
            seen = {}
            for A in combinations(range(1, total + 1), m):
                B = [x for x in range(1, total + 1) if x not in A]
                for p in permutations(A):
                    for s in permutations(B):
                        key = (comps.comp_of_perm(p), comps.comp_of_perm(s))
                        d = distribution("Des", p, s)
                        assert seen.setdefault(key, d) == d


def test_forward_backward_worked_example():
    p, s = parse("12879"), parse("4635")
    J, K, L = (1, 2, 0, 2), (0, 2, 1, 1), (1, 4, 1, 3)
    tau = descent_subset_forward(p, s, J, K, L)
    assert tau == parse("124683579")
    assert descent_subset_backward(p, s, tau, {1, 5, 6}) == (J, K)


def test_forward_backward_small():
    assert descent_subset_forward((1,), (2,), (1, 0), (0, 1), (1, 1)) == (1, 2)
    assert descent_subset_backward((1,), (2,), (1, 2), {1}) == ((1, 0), (0, 1))
    assert descent_subset_backward((1,), (2,), (1, 2), set()) == ((1,), (1,))
    with pytest.raises(NotContained):
        descent_subset_backward((1,), (2,), (2, 1), set())
    with pytest.raises(InvalidBlocks):
        descent_subset_forward((1,), (2,), (1, 0), (1, 0), (1, 1))


def test_block_pairs_count_matches_oracle():
    p, s = parse("2413"), parse("65")
    p = tuple(x for x in p)
    s = (6, 5)
    n = 6
    for r in range(n):
        for A in combinations(range(1, n), r):
            inside = [t for t in oracles.shuffles(p, s) if oracles.des_set(t) <= set(A)]
            assert len(block_pairs(p, s, A)) == len(inside)


def test_bijection_non_canonical_pairs():
    assert bijection_check(parse("2413"), parse("65"))
    assert bijection_check(parse("31"), parse("524"))
    assert bijection_check((), parse("21"))
