import pytest

import oracles
from shufflealg.compat import classes, dimension, structure_constants
from shufflealg.compat.catalog import DIMENSION_FORMULAS, dimension_rows, fib
from shufflealg.comps import canonical_perm, compositions_of
from shufflealg.errors import IncompatibleAtRange
from shufflealg.stats import evaluate


def test_classes_examples():
    t = classes("Des", 4)
    assert len(t) == 8 and all(len(m) == 1 for _, m in t.classes)
    assert len(classes("pk", 5)) == 3
    assert len(classes("des", 1)) == 1


def test_classes_partition_compositions():
    for st in ("pk", "(lpk,des)", "Epk", "udr", "maj"):
        for n in range(1, 7):
            t = classes(st, n)
            members = [L for _, ms in t.classes for L in ms]
            assert sorted(members) == sorted(compositions_of(n))
            for v, ms in t.classes:
                assert all(evaluate(st, canonical_perm(L)) == v for L in ms)


def test_dimension_examples():
    assert dimension("Epk", 4) == 7 == fib(6) - 1
    assert dimension("(des,maj)", 4) == 8
    for name in DIMENSION_FORMULAS:
        assert dimension(name, 1) == 1


def test_fibonacci_convention():
    assert [fib(i) for i in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]


def test_dimension_table_matches_closed_forms():
    bad = [r for r in dimension_rows(8) if r[2] != r[3]]
    assert bad == []


@pytest.mark.parametrize("name", ["Des", "pk", "Lpk", "Epk", "(udr,des)", "(des,maj)",
                                  "Des[1,1]", "sir", "(rpk,pk)"])
def test_dimension_matches_permutation_oracle(name):
    # counts values over permutations directly, not over compositions
    for n in range(1, 7):
        assert dimension(name, n) == oracles.dimension(name, n)


def test_structure_constants_examples():
    sc = structure_constants("des", 1, 1)
    assert len(sc.left) == len(sc.right) == 1
    prod = sc.product(0, 0)
    assert {sc.target.classes[a][0]: c for a, c in prod.items()} == {0: 1, 1: 1}

    sc = structure_constants("maj", 2, 1)
    b = sc.left.values.index(1)
    prod = sc.product(b, 0)
    assert {sc.target.classes[a][0]: c for a, c in prod.items()} == {1: 1, 2: 1, 3: 1}

    sc = structure_constants("Des", 2, 2)
    for b, (_, (J,)) in enumerate(sc.left.classes):
        for g, (_, (K,)) in enumerate(sc.right.classes):
            got = {sc.target.classes[a][1][0]: c for a, c in sc.product(b, g).items()}
            assert got == dict(oracles.fundamental_coefficients(J, K))


def test_structure_constants_row_sums_and_symmetry():
    from math import comb
    for st in ("pk", "Pk", "Lpk", "(udr,des)", "Epk"):
        for m in range(1, 5):
            for n in range(1, 5):
                sc = structure_constants(st, m, n)
                sw = structure_constants(st, n, m)
                for b in range(len(sc.left)):
                    for g in range(len(sc.right)):
                        assert sum(sc.product(b, g).values()) == comb(m + n, m)
                        assert sc.product(b, g) == sw.product(g, b)


def test_structure_constants_reject_incompatible():
    with pytest.raises(IncompatibleAtRange):
        structure_constants("br", 2, 2)
