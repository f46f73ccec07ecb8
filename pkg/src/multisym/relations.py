"""Defining relations of the n-slot invariant ring.

Per multidegree a the kernel of the limit ring onto the n-slot ring is
spanned by the basis symbols of weight above n.  Rewriting such a symbol
into the free generators (in the no-cutoff ambient) yields a polynomial
identity that must evaluate to zero once the cutoff is applied: a defining
relation.  Over the rationals the single symbol family e_{n+1}(f) generates
the relation ideal, and the free e_1 alphabet makes those generators
explicit.
"""

from __future__ import annotations

import random
from itertools import product as _cartesian

from .coeffring import QQ, Ring, Zmod
from .linalg import RankTracker, rank_of
from .monomial import Mono, grlex_key, mono_pow, monomials_of_total_degree, monomials_up_to
from .msf import (INF, MsfElement, alpha_weight, alphas_of_multidegree,
                  e_alpha, ek_of_f)
from .polyring import MPoly, NPoly
from .rewrite import GenPoly, evaluate, rewrite

__all__ = [
    "kernel_basis",
    "relation_items",
    "relation_polys",
    "genpoly_expand",
    "verify_relation",
    "char_zero_ideal_gens",
    "genpoly_to_e1",
    "coverage_rank",
    "multidegrees_upto",
]


def kernel_basis(n: int, m: int, a: Mono) -> list:
    """All indices of multidegree a and weight above n."""
    return [al for al in alphas_of_multidegree(m, a) if alpha_weight(al) > n]


def multidegrees_upto(max_a: Mono) -> list:
    """Componentwise bounded multidegrees, ordered by total then entries."""
    out = list(_cartesian(*(range(x + 1) for x in max_a)))
    out.sort(key=grlex_key)
    return out


def relation_items(n: int, m: int, max_a: Mono, ring: Ring) -> list:
    """(multidegree, index, relation) triples in deterministic order.

    Each relation is the rewrite of the dead basis symbol in the no-cutoff
    ambient, so it is a nonzero polynomial in the free generators that
    evaluates to zero in the n-slot ring.
    """
    if len(max_a) != m:
        raise ValueError("bound length must equal m")
    items = []
    for a in multidegrees_upto(max_a):
        for alpha in kernel_basis(n, m, a):
            x = e_alpha(alpha, INF, m, ring)
            items.append((a, alpha, rewrite(x)))
    return items


def relation_polys(n: int, m: int, max_a: Mono, ring: Ring) -> list:
    return [g for _, _, g in relation_items(n, m, max_a, ring)]


def genpoly_expand(g: GenPoly, n: int) -> NPoly:
    """Expand a generator polynomial in the concrete n-slot ring.

    Goes straight from symbols to orbit-sum polynomials and multiplies
    there, bypassing the abstract product: an independent route used to
    double-check vanishing.
    """
    R = g.ring
    m = g.m
    total = NPoly.zero(n, m, R)
    cache: dict[tuple, NPoly] = {}
    for symmono, c in g.terms.items():
        term = NPoly.one(n, m, R)
        for (i, nu), e in symmono:
            if i > n:
                term = NPoly.zero(n, m, R)
                break
            if (i, nu) not in cache:
                cache[(i, nu)] = e_alpha([(nu, i)], n, m, R).expand()
            term = term * (cache[(i, nu)] ** e)
        total = total + term.scale(c)
    return total


def verify_relation(g: GenPoly, n: int) -> bool:
    """Vanishing along both routes: abstract evaluation and full expansion."""
    if not evaluate(g, n).is_zero:
        return False
    return genpoly_expand(g, n).is_zero


def char_zero_ideal_gens(n: int, m: int, bound: int) -> list:
    """Rational ideal generators: e_{n+1}(f_d) for f_d the sum of all
    monomials of total degree up to d, d = 1..bound, cut to total
    multidegree <= bound and written in the free e_1 alphabet.

    Empty when bound < n+1, since every coefficient of e_{n+1}(f) has
    total degree at least n+1.
    """
    out = []
    for d in range(1, bound + 1):
        terms = {}
        for t in range(1, d + 1):
            for mu in monomials_of_total_degree(m, t):
                terms[mu] = QQ.one
        f = MPoly(m, QQ, terms)
        el = ek_of_f(f, n + 1, INF).total_degree_cut(bound)
        if el.is_zero:
            continue
        g = genpoly_to_e1(rewrite(el))
        if not any(g == seen for seen in out):
            out.append(g)
    return out


def _e1_expr(k: int, nu: Mono, m: int, ring: Ring) -> GenPoly:
    # k*e_k = sum_i (-1)^(i-1) p_i e_(k-i) on the alphabet of nu-values,
    # where p_i of that alphabet is the symbol E[1;nu^i]
    if k == 0:
        return GenPoly.one(m, ring)
    acc = GenPoly.zero(m, ring)
    inv_k = ring.inv(ring.embed(k))
    for i in range(1, k + 1):
        t = GenPoly.symbol(1, mono_pow(nu, i), m, ring) * _e1_expr(k - i, nu, m, ring)
        t = t.scale(inv_k)
        acc = acc + t if i % 2 == 1 else acc - t
    return acc


def genpoly_to_e1(g: GenPoly) -> GenPoly:
    """Re-express every symbol in e_1 symbols; needs division in the ring."""
    R = g.ring
    if not R.has_division:
        raise ValueError("the e_1 alphabet conversion needs a field")
    m = g.m
    memo: dict[tuple, GenPoly] = {}
    total = GenPoly.zero(m, R)
    for symmono, c in g.terms.items():
        term = GenPoly.const(c, m, R)
        for (i, nu), e in symmono:
            if (i, nu) not in memo:
                memo[(i, nu)] = _e1_expr(i, nu, m, R)
            term = term * (memo[(i, nu)] ** e)
        total = total + term
    return total


def coverage_rank(n: int, m: int, a: Mono):
    """(achieved rank, kernel dimension) in multidegree a over the rationals.

    Rows are the coefficient patterns of e_{n+k}(f) for deterministic
    pseudo-random integer f, k running over every weight the kernel
    contains.  Certified with a big-prime rank first, exact rational
    fallback if that comes up short.
    """
    kernel = kernel_basis(n, m, a)
    dim = len(kernel)
    if dim == 0:
        return 0, 0
    by_weight = {}
    for alpha in kernel:
        by_weight.setdefault(alpha_weight(alpha), []).append(alpha)
    monos = monomials_up_to(m, a)
    rng = random.Random(f"coverage:{n}:{m}:{a}")
    Fp = Zmod(1000003)

    # A row coming from e_{n+k}(f) is supported on indices of weight n+k
    # only, so the coverage matrix is block diagonal by weight and the
    # blocks can be ranked independently.
    achieved = 0
    for w in sorted(by_weight):
        block = by_weight[w]
        d = len(block)
        samples = []
        for _ in range(d + 8):
            lam = {mu: rng.randint(1, 97) for mu in monos}
            row = []
            for alpha in block:
                v = 1
                for mu, mult in alpha:
                    v *= lam[mu] ** mult
                row.append(v)
            samples.append(row)
        tr = RankTracker(d, Fp)
        for row in samples:
            tr.add([Fp.embed(v) for v in row])
            if tr.rank == d:
                break
        got = tr.rank
        if got < d:
            got = rank_of(([QQ.embed(v) for v in row] for row in samples),
                          d, QQ)
        achieved += got
    return achieved, dim
