"""Classical symmetric functions in one alphabet: Newton, e-basis, powering."""

import itertools
import random
from fractions import Fraction

import pytest

from multisym.coeffring import QQ, ZZ
from multisym.polyring import MPoly
from multisym.symfun import (EPoly, e_in_powersums, elementary_mpoly,
                             epoly_substitute, epoly_to_mpoly, newton_p,
                             plethysm_P, plethysm_P_by_elimination, to_e_basis)


def e(i):
    return EPoly.gen(i)


def test_epoly_arithmetic_and_text():
    f = e(1) * e(1) - e(2).scale(3)
    assert f.text() == "e1^2 - 3*e2"
    assert f.degree() == 2
    assert f.is_homogeneous()
    assert not (f + EPoly.const(1)).is_homogeneous()
    assert (f - f).is_zero
    assert f.max_index() == 2
    assert (e(2) ** 3).degree() == 6
    assert EPoly.zero().degree() == -1


def test_newton_small():
    assert newton_p(1) == e(1)
    assert newton_p(2) == e(1) * e(1) - e(2).scale(2)
    assert newton_p(3) == e(1) ** 3 - (e(1) * e(2)).scale(3) + e(3).scale(3)
    with pytest.raises(ValueError):
        newton_p(0)


def test_newton_numeric():
    # p_k really is the power sum once the e_i become elementary polynomials
    rng = random.Random("newton")
    for k in (1, 2, 3, 4, 5):
        N = k + 2
        got = epoly_to_mpoly(newton_p(k), N, ZZ)
        pts = [tuple(rng.randint(-4, 4) for _ in range(N)) for _ in range(6)]
        for pt in pts:
            assert got.eval_at(pt) == sum(v ** k for v in pt)


def test_e_in_powersums():
    assert e_in_powersums(1) == {(1,): Fraction(1)}
    assert e_in_powersums(2) == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    # substituting numeric power sums for a concrete point recovers e_h
    rng = random.Random("einp")
    for h in (3, 4):
        N = h + 1
        pt = [rng.randint(-3, 3) for _ in range(N)]
        val = sum(
            c * _prod(Fraction(sum(v ** k for v in pt)) for k in lam)
            for lam, c in e_in_powersums(h).items())
        eh = elementary_mpoly(h, N, ZZ).eval_at(pt)
        assert val == eh


def _prod(it):
    out = Fraction(1)
    for v in it:
        out *= v
    return out


def test_elementary_mpoly():
    got = elementary_mpoly(2, 3, ZZ)
    a, b, c = (MPoly.variable(i, 3, ZZ) for i in (1, 2, 3))
    assert got == a * b + a * c + b * c
    assert elementary_mpoly(0, 3, ZZ) == MPoly.one(3, ZZ)
    assert elementary_mpoly(4, 3, ZZ).is_zero


def test_to_e_basis_examples():
    a, b = (MPoly.variable(i, 2, QQ) for i in (1, 2))
    assert to_e_basis((a + b) ** 2) == e(1) * e(1)
    assert to_e_basis(a * a + b * b) == e(1) * e(1) - e(2).scale(2)
    assert to_e_basis(elementary_mpoly(2, 3, QQ)) == e(2)
    assert to_e_basis(MPoly.zero(3, QQ)).is_zero


def test_to_e_basis_rejections():
    a, b = (MPoly.variable(i, 2, QQ) for i in (1, 2))
    with pytest.raises(ValueError):
        to_e_basis(a)  # not symmetric
    with pytest.raises(ValueError):
        to_e_basis((a + b) ** 3)  # degree exceeds the variable count


def test_to_e_basis_round_trip():
    rng = random.Random("ebasis")
    for _ in range(10):
        N = rng.choice([2, 3, 4])
        f = MPoly.zero(N, QQ)
        for _ in range(3):
            mu = tuple(rng.randint(0, 1) for _ in range(N))
            f = f + MPoly.monomial(mu, QQ, QQ.embed(rng.randint(-2, 3)))
        sym = MPoly.zero(N, QQ)
        for perm in itertools.permutations(range(1, N + 1)):
            sym = sym + f.permute_vars(perm)
        ep = to_e_basis(sym)
        assert epoly_to_mpoly(ep, N, QQ) == sym


def test_powered_alphabet_small():
    assert plethysm_P(1, 1) == e(1)
    assert plethysm_P(3, 1) == e(3)
    assert plethysm_P(1, 2) == e(1) * e(1) - e(2).scale(2)
    assert plethysm_P(2, 2) == \
        e(2) * e(2) - (e(1) * e(3)).scale(2) + e(4).scale(2)
    for k in range(1, 9):
        assert plethysm_P(1, k) == newton_p(k)


def test_powered_alphabet_is_homogeneous():
    cases = [(h, k) for h in range(1, 5) for k in range(1, 5)] + [(1, 5)]
    for h, k in cases:
        P = plethysm_P(h, k)
        assert P.is_homogeneous() and P.degree() == h * k
        assert P.max_index() <= h * k
        assert all(isinstance(c, int) for c in P.terms.values())


def test_powered_alphabet_numeric():
    # evaluate e_h(x^k) directly on points and compare
    rng = random.Random("plethnum")
    for h, k in [(2, 2), (2, 3), (3, 2)]:
        N = h * k
        P = plethysm_P(h, k)
        direct = MPoly.zero(N, ZZ)
        for sub in itertools.combinations(range(N), h):
            mu = tuple(k if i in sub else 0 for i in range(N))
            direct = direct + MPoly.monomial(mu, ZZ, ZZ.one)
        via = epoly_to_mpoly(P, N, ZZ)
        assert via == direct


def test_powered_alphabet_matches_elimination():
    for h, k in [(1, 3), (2, 2), (2, 3), (3, 2)]:
        assert plethysm_P(h, k) == plethysm_P_by_elimination(h, k)


def test_epoly_substitute_generic():
    f = e(1) * e(2) - e(3).scale(4) + EPoly.const(7)
    vals = {1: Fraction(2), 2: Fraction(-1, 2), 3: Fraction(3)}
    got = epoly_substitute(f, lambda i: vals[i], Fraction(1),
                           lambda c, x: Fraction(c) * x)
    assert got == Fraction(2) * Fraction(-1, 2) - 4 * Fraction(3) + 7
