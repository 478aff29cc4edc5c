from itertools import permutations

import pytest
import sympy as sp

import oracles
from shufflealg.compat import homs, gfs
from shufflealg.compat.homs import (CHARACTERIZED, SERIES_STATS, image_point, image_series,
                                    phi_eval, verify_homomorphism)
from shufflealg.compat.gfs import KINDS, closed_form, verify_gf_identity
from shufflealg.errors import Unsupported
from shufflealg.qseries import Poly, q_factorial
from shufflealg.stats import evaluate

q = Poly.q()


def test_phi_examples():
    for p in range(6):
        assert phi_eval("des", (1,), mode="point", p=p) == Poly.const(p)
    assert phi_eval("maj", (1, 1)) == homs.QFraction(q, q_factorial(2))
    t = sp.symbols("t")
    want = sp.series(2 * t * (1 + t) ** 2 / (1 - t) ** 4, t, 0, 9).removeO()
    got = phi_eval("pk", (3,), P=8)
    assert [got[i].constant() for i in range(9)] == [want.coeff(t, i) for i in range(9)]
    with pytest.raises(Unsupported):
        phi_eval("br", (2,), P=4)


def test_des_point_formula():
    for n in range(1, 6):
        for d in range(n):
            for p in range(0, 9):
                assert image_point("des", d, n, p) == Poly.const(oracles.binom(p - d + n - 1, n))


def test_series_and_point_agree():
    for st in ("des", "(des,comaj)"):
        for n in range(1, 5):
            for L in [(n,), (1,) * n]:
                v = evaluate(st, oracles.first_perm_with_comp(L))
                s = image_series(st, v, n, 8)
                for p in range(9):
                    assert s[p] == image_point(st, v, n, p)


@pytest.mark.parametrize("st", CHARACTERIZED[1:])
def test_images_multiply_over_shuffles(st):
    # direct form of the homomorphism: sum over the shuffle set of phi(tau)
    # equals phi(pi) phi(sigma), evaluated pointwise and using oracle shuffles
    pairs = [((2, 1), (3,)), ((1, 3, 2), (4, 5)), ((3, 1), (5, 2, 4)), ((2, 4, 1), (3,))]
    for p, s in pairs:
        m, n = len(p), len(s)
        sh = oracles.shuffles(p, s)
        for x in range(0, m + n + 2):
            lhs = image_point(st, evaluate(st, p), m, x) * image_point(st, evaluate(st, s), n, x)
            rhs = Poly()
            for tau in sh:
                rhs = rhs + image_point(st, evaluate(st, tau), m + n, x)
            assert lhs == rhs, (st, p, s, x)


def test_maj_images_multiply_over_shuffles():
    for p, s in [((2, 1), (3,)), ((3, 1, 2), (5, 4))]:
        lhs = homs.image_maj(evaluate("maj", p), len(p)) * homs.image_maj(evaluate("maj", s), len(s))
        rhs = homs.QFraction(Poly(), Poly.const(1))
        for tau in oracles.shuffles(p, s):
            rhs = rhs + homs.image_maj(evaluate("maj", tau), len(tau))
        assert lhs == rhs


def test_spec_homomorphism_examples():
    assert verify_homomorphism("des", 1, 1)
    assert verify_homomorphism("maj", 2, 1)
    for m in range(1, 6):
        assert verify_homomorphism("(udr,des)", m, 6 - m)


@pytest.mark.parametrize("st", CHARACTERIZED)
def test_homomorphisms_small(st):
    for total in range(2, 5):
        for m in range(1, total):
            assert verify_homomorphism(st, m, total - m, mode="point")
            if st in SERIES_STATS:
                assert verify_homomorphism(st, m, total - m, mode="series")


def test_unsupported_statistic():
    with pytest.raises(Unsupported):
        verify_homomorphism("Epk", 1, 1)


def test_mutated_point_image_is_rejected(monkeypatch):
    real = homs.image_point

    def off_by_one(st, value, n, p):
        return real(st, value, n, p + 1) if n == 3 else real(st, value, n, p)

    monkeypatch.setattr(homs, "image_point", off_by_one)
    assert not verify_homomorphism("pk", 1, 2)


def test_mutated_series_image_is_rejected(monkeypatch):
    real = homs.image_series

    def wrong_power(st, value, n, P):
        s = real(st, value, n, P)
        return s.scale(2) if n == 3 and value == (2, 1) else s

    monkeypatch.setattr(homs, "image_series", wrong_power)
    assert not verify_homomorphism("(udr,des)", 1, 2, mode="series")


def test_mutated_maj_image_is_rejected(monkeypatch):
    monkeypatch.setattr(homs, "image_maj",
                        lambda v, n: homs.QFraction(Poly.q(v + (n == 3)), q_factorial(n)))
    assert not verify_homomorphism("maj", 2, 1)


def test_gf_examples():
    P = 6
    c = gfs.ribbon_coefficients(gfs.generating_function("des-gf", 2, P), 2, P)
    assert [c[(1, 1)][i].constant() for i in range(P + 1)] == [0, 0, 1, 3, 6, 10, 15]
    y = Poly.y()
    c = gfs.ribbon_coefficients(gfs.generating_function("pkdes-gf", 1, P), 1, P)
    # t(1+y)/(1-t)^2
    assert [c[(1,)][i] for i in range(P + 1)] == [Poly()] + [(1 + y) * k for k in range(1, P + 1)]


@pytest.mark.parametrize("kind", KINDS)
def test_gf_identities(kind):
    for n in range(1, 6):
        assert verify_gf_identity(kind, n, n + 3)


def test_mutated_gf_closed_form_is_rejected(monkeypatch):
    real = gfs.closed_form
    monkeypatch.setattr(gfs, "closed_form",
                        lambda kind, L, P: real(kind, L, P).shift(1) if L == (2, 1) else real(kind, L, P))
    assert not verify_gf_identity("udrdes-gf", 3, 6)
    assert verify_gf_identity("udrdes-gf", 2, 5)
