"""Rewriting orbit-sum symbols into polynomials in the generators e_i(nu).

GenPoly is a polynomial in abstract symbols E[i;nu] = e_i(nu) over a
coefficient ring, graded by giving E[i;nu] multidegree i*deg(nu).  Two
alphabets share the type:

* the free-generator alphabet, nu primitive: what rewrite produces;
* the e_1 alphabet over the rationals, symbols E[1;mu] with mu arbitrary,
  used for the characteristic-zero relation generators.

The pipeline has two stages.  reduce_to_monomial_es applies the peeling
recursion: for an index with several support monomials, split off the
largest one as e_a(mu) times the rest and subtract the lower-weight
correction terms coming from the product formula; iterate.  The recursion
is ambient-independent because every index involved keeps weight at most
the input's.  primitive_reduce then replaces each symbol e_i(nu^k), k >= 2,
by the polynomial P_{i,k} evaluated at e_j -> E[j;nu], killing E[j;nu] with
j > n first in a finite ambient.
"""

from __future__ import annotations

from functools import cache

from .coeffring import Ring
from .monomial import (Mono, deg_leq, deg_scale, grlex_key, is_primitive,
                       monomials_up_to, primitive_decompose)
from .msf import (INF, AlphaIndex, MsfElement, _alpha_product_z, alpha_weight,
                  e_alpha)
from .symfun import epoly_substitute, plethysm_P

__all__ = [
    "GenPoly",
    "reduce_to_monomial_es",
    "primitive_reduce",
    "rewrite",
    "evaluate",
    "free_monomial_count",
    "genpoly_to_json",
    "genpoly_from_json",
]


def _symbol_key(sym):
    i, nu = sym
    return (grlex_key(nu), i)


def _symmono_mul(a, b) -> tuple:
    """Product of two symbol monomials, each a sorted tuple of (symbol, exp)."""
    d = dict(a)
    for sym, e in b:
        d[sym] = d.get(sym, 0) + e
    return tuple(sorted(d.items(), key=lambda t: _symbol_key(t[0])))


def _symmono_degree(symmono, m: int) -> Mono:
    deg = [0] * m
    for (i, nu), e in symmono:
        for t, x in enumerate(nu):
            deg[t] += i * x * e
    return tuple(deg)


class GenPoly:
    """Polynomial in the abstract symbols E[i;nu] over a Ring."""

    __slots__ = ("m", "ring", "terms")

    def __init__(self, m: int, ring: Ring, terms=None):
        if m < 1:
            raise ValueError("need m >= 1")
        self.m = m
        self.ring = ring
        clean = {}
        if terms:
            for symmono, c in terms.items():
                if ring.is_zero(c):
                    continue
                for (i, nu), e in symmono:
                    if not isinstance(i, int) or i < 1:
                        raise ValueError(f"bad symbol index {i!r}")
                    if len(nu) != m or not any(nu) or any(x < 0 for x in nu):
                        raise ValueError(f"bad symbol monomial {nu!r}")
                    if e < 1:
                        raise ValueError("nonpositive symbol exponent")
                clean[symmono] = c
        self.terms = clean

    @classmethod
    def zero(cls, m: int, ring: Ring) -> "GenPoly":
        return cls(m, ring)

    @classmethod
    def one(cls, m: int, ring: Ring) -> "GenPoly":
        return cls(m, ring, {(): ring.one})

    @classmethod
    def const(cls, c, m: int, ring: Ring) -> "GenPoly":
        return cls(m, ring, {(): c})

    @classmethod
    def symbol(cls, i: int, nu: Mono, m: int, ring: Ring) -> "GenPoly":
        return cls(m, ring, {(((i, tuple(nu)), 1),): ring.one})

    def _compat(self, other: "GenPoly") -> None:
        if self.m != other.m or self.ring != other.ring:
            raise ValueError("ambient mismatch between GenPoly operands")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenPoly):
            return NotImplemented
        return (self.m, self.ring) == (other.m, other.ring) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "GenPoly") -> "GenPoly":
        self._compat(other)
        R = self.ring
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = R.add(out.get(k, R.zero), c)
        return GenPoly(self.m, R, out)

    def __neg__(self) -> "GenPoly":
        R = self.ring
        return GenPoly(self.m, R, {k: R.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "GenPoly") -> "GenPoly":
        return self + (-other)

    def scale(self, c) -> "GenPoly":
        R = self.ring
        return GenPoly(self.m, R, {k: R.mul(c, v) for k, v in self.terms.items()})

    def __mul__(self, other: "GenPoly") -> "GenPoly":
        self._compat(other)
        R = self.ring
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = _symmono_mul(ka, kb)
                out[key] = R.add(out.get(key, R.zero), R.mul(ca, cb))
        return GenPoly(self.m, R, out)

    def __pow__(self, k: int) -> "GenPoly":
        if k < 0:
            raise ValueError("negative power")
        acc = GenPoly.one(self.m, self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def symbols(self):
        out = set()
        for symmono in self.terms:
            for sym, _ in symmono:
                out.add(sym)
        return out

    def is_primitive_alphabet(self) -> bool:
        return all(is_primitive(nu) for _, nu in self.symbols())

    def max_symbol_degree(self) -> int:
        """Largest total degree i*deg(nu) of an occurring symbol; 0 if none."""
        best = 0
        for i, nu in self.symbols():
            best = max(best, i * sum(nu))
        return best

    def multidegrees(self):
        return {_symmono_degree(k, self.m) for k in self.terms}

    def multidegree_component(self, a: Mono) -> "GenPoly":
        a = tuple(a)
        keep = {k: c for k, c in self.terms.items()
                if _symmono_degree(k, self.m) == a}
        return GenPoly(self.m, self.ring, keep)

    def _term_key(self, symmono):
        d = _symmono_degree(symmono, self.m)
        return (sum(d), d, tuple((_symbol_key(sym), e) for sym, e in symmono))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self._term_key(t[0]))

    def text(self) -> str:
        if not self.terms:
            return "0"
        R = self.ring
        bits = []
        for symmono, c in self.sorted_terms():
            vs = "*".join(
                "E[%d;(%s)]" % (i, ",".join(str(x) for x in nu))
                + (f"^{e}" if e > 1 else "")
                for (i, nu), e in symmono
            )
            cs = R.format_coeff(c)
            if vs:
                t = vs if cs == "1" else (f"-{vs}" if cs == "-1" else f"{cs}*{vs}")
            else:
                t = cs
            bits.append(t)
        out = bits[0]
        for t in bits[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"GenPoly({self.text()})"


# integer core of the peeling recursion, shared across coefficient rings

@cache
def _reduce_alpha(alpha: AlphaIndex) -> tuple:
    """e_alpha as an integer combination of symbol monomials.

    Returned as a tuple of (symmono, int) pairs so it can live in a cache.
    """
    if not alpha:
        return (((), 1),)
    if len(alpha) == 1:
        mu, a = alpha[0]
        return (((((a, mu), 1),), 1),)
    mu_p, a_p = alpha[-1]  # largest support monomial
    rest = alpha[:-1]
    pivot_sym = (a_p, mu_p)

    acc: dict[tuple, int] = {}
    for symmono, c in _reduce_alpha(rest):
        key = _symmono_mul(symmono, ((pivot_sym, 1),))
        acc[key] = acc.get(key, 0) + c
    prod = _alpha_product_z(((mu_p, a_p),), rest, None)
    if prod.get(alpha) != 1:
        raise AssertionError("peeled product must contain the index once")
    for gamma, mult in prod.items():
        if gamma == alpha:
            continue
        if alpha_weight(gamma) >= alpha_weight(alpha):
            raise AssertionError("correction term fails to drop in weight")
        for symmono, c in _reduce_alpha(gamma):
            acc[symmono] = acc.get(symmono, 0) - mult * c
    return tuple((k, v) for k, v in acc.items() if v)


def reduce_to_monomial_es(x: MsfElement) -> GenPoly:
    """First stage: x as a polynomial in symbols e_i(mu), mu any monomial."""
    R = x.ring
    out: dict[tuple, object] = {}
    for alpha, c in x.terms.items():
        for symmono, k in _reduce_alpha(alpha):
            v = R.mul(c, R.embed(k))
            out[symmono] = R.add(out.get(symmono, R.zero), v)
    return GenPoly(x.m, R, out)


def primitive_reduce(p: GenPoly, n=INF) -> GenPoly:
    """Second stage: only primitive symbol monomials survive.

    Each e_i(nu^k) with k >= 2 becomes P_{i,k} at e_j -> E[j;nu]; in a
    finite ambient all symbols with index above n are zero and are dropped
    before substituting.
    """
    R = p.ring
    m = p.m
    one = GenPoly.one(m, R)
    zero = GenPoly.zero(m, R)

    factor_cache: dict[tuple, GenPoly] = {}

    def factor_for(sym) -> GenPoly:
        if sym in factor_cache:
            return factor_cache[sym]
        i, mu = sym
        nu, k = primitive_decompose(mu)
        if n is not INF and i > n:
            out = zero
        elif k == 1:
            out = GenPoly.symbol(i, nu, m, R)
        else:
            ep = plethysm_P(i, k)

            def value_of(j, nu=nu):
                if n is not INF and j > n:
                    return zero
                return GenPoly.symbol(j, nu, m, R)

            out = epoly_substitute(ep, value_of, one,
                                   lambda c, g: g.scale(R.embed(c)))
        factor_cache[sym] = out
        return out

    total = GenPoly.zero(m, R)
    for symmono, c in p.terms.items():
        term = GenPoly.const(c, m, R)
        for sym, e in symmono:
            if term.is_zero:
                break
            term = term * (factor_for(sym) ** e)
        total = total + term
    return total


def rewrite(x: MsfElement) -> GenPoly:
    """x as a polynomial in the free generators E[i;nu], nu primitive."""
    return primitive_reduce(reduce_to_monomial_es(x), x.n)


def evaluate(g: GenPoly, n) -> MsfElement:
    """Substitute E[i;nu] -> e_i(nu) and multiply out in ambient n."""
    R = g.ring
    m = g.m
    total = MsfElement.zero(n, m, R)
    for symmono, c in g.terms.items():
        term = MsfElement.one(n, m, R)
        for (i, nu), e in symmono:
            if term.is_zero:
                break
            base = e_alpha([(nu, i)], n, m, R, truncating=True)
            term = term * (base ** e)
        total = total + term.scale(c)
    return total


def genpoly_to_json(g: GenPoly) -> dict:
    terms = []
    for symmono, c in g.sorted_terms():
        terms.append({
            "symbols": [{"i": i, "nu": list(nu), "exp": e} for (i, nu), e in symmono],
            "coeff": g.ring.format_coeff(c),
        })
    return {"m": g.m, "ring": g.ring.to_string(), "terms": terms}


def genpoly_from_json(d) -> GenPoly:
    if not isinstance(d, dict):
        raise ValueError("generator polynomial must be a JSON object")
    for key in ("m", "ring", "terms"):
        if key not in d:
            raise ValueError(f"missing the {key!r} field")
    m = d["m"]
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"bad variable count {m!r}")
    ring = Ring.from_string(d["ring"])
    out = {}
    for t in d["terms"]:
        if not isinstance(t, dict) or "symbols" not in t or "coeff" not in t:
            raise ValueError(f"bad term {t!r}")
        syms = {}
        for s in t["symbols"]:
            if not isinstance(s, dict) or not {"i", "nu", "exp"} <= set(s):
                raise ValueError(f"bad symbol {s!r}")
            nu = s["nu"]
            if not isinstance(nu, list) or len(nu) != m:
                raise ValueError(f"bad symbol monomial {nu!r}")
            sym = (s["i"], tuple(nu))
            syms[sym] = syms.get(sym, 0) + s["exp"]
        key = tuple(sorted(syms.items(), key=lambda t2: _symbol_key(t2[0])))
        c = ring.parse_coeff(t["coeff"])
        out[key] = ring.add(out.get(key, ring.zero), c)
    return GenPoly(m, ring, out)


@cache
def _free_symbols(m: int, a: Mono) -> tuple:
    """Symbols (i, nu) with nu primitive and multidegree i*deg(nu) <= a."""
    syms = []
    for nu in monomials_up_to(m, a):
        if not is_primitive(nu):
            continue
        i = 1
        while deg_leq(deg_scale(nu, i), a):
            syms.append((i, nu))
            i += 1
    syms.sort(key=_symbol_key)
    return tuple(syms)


def free_monomial_count(m: int, a) -> int:
    """Number of monomials of multidegree a in the free commutative
    polynomial ring on the symbols E[i;nu] with nu primitive, grading
    each symbol by i*deg(nu).
    """
    a = tuple(a)
    if len(a) != m:
        raise ValueError("multidegree length must equal m")
    if not any(a):
        return 1
    degs = [deg_scale(nu, i) for i, nu in _free_symbols(m, a)]

    @cache
    def rec(idx, remaining):
        if not any(remaining):
            return 1
        if idx == len(degs):
            return 0
        d = degs[idx]
        total = rec(idx + 1, remaining)
        rem = remaining
        while deg_leq(d, rem):
            rem = tuple(rem[t] - d[t] for t in range(m))
            total += rec(idx + 1, rem)
        return total

    return rec(0, a)
