"""One-row symmetric function algebra over Z.

EPoly is a polynomial in abstract symbols e_1, e_2, ... graded by
deg(e_i) = i.  The module supplies the Newton expressions of the power sums
p_k in the e-basis, the classical elimination that rewrites a concrete
symmetric polynomial into the e-basis, and the polynomials P_{h,k}
expressing e_h(x_1^k, x_2^k, ...) in the e_i.

P_{h,k} is computed through the power-sum basis: e_h is expanded into
products of p_r (with rational coefficients), the substitution x -> x^k
sends p_r to p_{rk}, and the result is pushed back into the e-basis with
the Newton expressions.  The direct route (expand e_h(x^k) in h*k
variables, then eliminate) is kept as plethysm_P_by_elimination for
cross-checking at small sizes; it is far too large already at h = k = 4.

Everything here is coefficient-exact; specialization into a target ring
happens at the call sites.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations

from .coeffring import Ring, ZZ
from .polyring import MPoly

__all__ = [
    "EPoly",
    "newton_p",
    "plethysm_P",
    "plethysm_P_by_elimination",
    "to_e_basis",
    "elementary_mpoly",
    "epoly_to_mpoly",
    "epoly_substitute",
    "e_in_powersums",
]


def _trim(exps) -> tuple:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class EPoly:
    """Sparse polynomial in e_1, e_2, ...; keys are exponent tuples of
    (e_1, ..., e_L) with trailing zeros trimmed."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c == 0:
                    continue
                key = _trim(exps)
                if any(e < 0 for e in key):
                    raise ValueError(f"negative exponent in {key}")
                clean[key] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "EPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "EPoly":
        return cls({(): c})

    @classmethod
    def gen(cls, i: int) -> "EPoly":
        """The symbol e_i."""
        if i < 1:
            raise ValueError("e_i needs i >= 1")
        return cls({(0,) * (i - 1) + (1,): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "EPoly") -> "EPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return EPoly(out)

    def __neg__(self) -> "EPoly":
        return EPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "EPoly") -> "EPoly":
        return self + (-other)

    def scale(self, c) -> "EPoly":
        return EPoly({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "EPoly") -> "EPoly":
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                if len(ka) < len(kb):
                    ka2 = ka + (0,) * (len(kb) - len(ka))
                    key = tuple(x + y for x, y in zip(ka2, kb))
                else:
                    kb2 = kb + (0,) * (len(ka) - len(kb))
                    key = tuple(x + y for x, y in zip(ka, kb2))
                out[key] = out.get(key, 0) + ca * cb
        return EPoly(out)

    def __pow__(self, k: int) -> "EPoly":
        if k < 0:
            raise ValueError("negative power")
        acc = EPoly.const(1)
        for _ in range(k):
            acc = acc * self
        return acc

    def degree(self) -> int:
        """Graded degree with deg(e_i) = i; -1 for zero."""
        if not self.terms:
            return -1
        return max(sum((i + 1) * e for i, e in enumerate(k)) for k in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum((i + 1) * e for i, e in enumerate(k)) for k in self.terms}
        return len(degs) <= 1

    def max_index(self) -> int:
        """Largest i with e_i occurring; 0 for constants."""
        return max((len(k) for k in self.terms), default=0)

    def sorted_terms(self):
        # leading term first: highest weighted degree, then largest exponents
        def key(item):
            exps = item[0]
            return (sum((i + 1) * e for i, e in enumerate(exps)), exps)
        return sorted(self.terms.items(), key=key, reverse=True)

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.sorted_terms():
            vs = "*".join(
                f"e{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps) if e
            )
            if vs:
                t = vs if c == 1 else (f"-{vs}" if c == -1 else f"{c}*{vs}")
            else:
                t = str(c)
            bits.append(t)
        out = bits[0]
        for t in bits[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        return f"EPoly({self.text()})"


@cache
def newton_p(k: int) -> EPoly:
    """The power sum p_k in the e-basis via the Newton recurrence
    p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k."""
    if k < 1:
        raise ValueError("p_k needs k >= 1; p_0 depends on the variable count")
    if k == 1:
        return EPoly.gen(1)
    acc = EPoly.zero()
    for i in range(1, k):
        t = EPoly.gen(i) * newton_p(k - i)
        acc = acc + (t if i % 2 == 1 else -t)
    ek = EPoly.gen(k).scale(k)
    return acc + (ek if (k - 1) % 2 == 0 else -ek)


@cache
def e_in_powersums(h: int) -> dict:
    """e_h as a rational combination of power-sum products.

    Keys are partitions (descending tuples of the p-indices), values are
    Fractions; from h * e_h = sum_{i=1..h} (-1)^{i-1} p_i e_{h-i}.
    """
    if h == 0:
        return {(): Fraction(1)}
    out: dict[tuple, Fraction] = {}
    for i in range(1, h + 1):
        sign = 1 if i % 2 == 1 else -1
        for part, c in e_in_powersums(h - i).items():
            key = tuple(sorted(part + (i,), reverse=True))
            out[key] = out.get(key, Fraction(0)) + sign * c / h
    return {k: c for k, c in out.items() if c}


@cache
def plethysm_P(h: int, k: int) -> EPoly:
    """The polynomial P_{h,k} with e_h(x_1^k, x_2^k, ...) = P_{h,k}(e_1, e_2, ...).

    Homogeneous of degree h*k; integer coefficients even though the
    power-sum detour is rational.
    """
    if h < 0 or k < 1:
        raise ValueError("need h >= 0 and k >= 1")
    if h == 0:
        return EPoly.const(1)
    acc: dict[tuple, Fraction] = {}
    for part, c in e_in_powersums(h).items():
        prod = EPoly.const(1)
        for r in part:
            prod = prod * newton_p(r * k)
        for exps, v in prod.terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + c * v
    terms = {}
    for exps, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise AssertionError(f"non-integral coefficient {c} in P_{h},{k}")
        terms[exps] = int(c)
    return EPoly(terms)


def elementary_mpoly(i: int, N: int, ring: Ring) -> MPoly:
    """The i-th elementary symmetric polynomial in N concrete variables."""
    if i < 0:
        raise ValueError("negative index")
    if i > N:
        return MPoly.zero(N, ring)
    terms = {}
    for sel in combinations(range(N), i):
        mu = tuple(1 if t in sel else 0 for t in range(N))
        terms[mu] = ring.one
    return MPoly(N, ring, terms)


def epoly_to_mpoly(ep: EPoly, N: int, ring: Ring) -> MPoly:
    """Substitute the concrete elementary polynomials in N variables."""
    total = MPoly.zero(N, ring)
    for exps, c in ep.terms.items():
        term = MPoly.one(N, ring)
        for i0, e in enumerate(exps):
            if e:
                term = term * (elementary_mpoly(i0 + 1, N, ring) ** e)
        total = total + term.scale(ring.embed(c))
    return total


def epoly_substitute(ep: EPoly, value_of, one, scalar):
    """Generic evaluation: e_i -> value_of(i), in any commutative target.

    one is the unit of the target; scalar(c, x) scales a target value by an
    integer coefficient.
    """
    total = None
    for exps, c in ep.terms.items():
        term = one
        for i0, e in enumerate(exps):
            for _ in range(e):
                term = term * value_of(i0 + 1)
        term = scalar(c, term)
        total = term if total is None else total + term
    if total is None:
        return scalar(0, one)
    return total


def _check_symmetric(f: MPoly) -> None:
    N = f.m
    for t in range(1, N):
        perm = list(range(1, N + 1))
        perm[t - 1], perm[t] = perm[t], perm[t - 1]
        if f.permute_vars(tuple(perm)) != f:
            raise ValueError("input polynomial is not symmetric")


def to_e_basis(f: MPoly) -> EPoly:
    """Rewrite a symmetric polynomial in N variables into the e-basis.

    Classical elimination: repeatedly kill the lex-leading term lambda by
    subtracting c * prod_i e_i^(lambda_i - lambda_{i+1}).  Input degree must
    not exceed N, the range where the e-basis expression is stable.
    """
    N = f.m
    ring = f.ring
    if f.total_degree() > N:
        raise ValueError(f"degree {f.total_degree()} exceeds the {N}-variable faithful range")
    _check_symmetric(f)
    rest = f
    out = {}
    while not rest.is_zero:
        lam = max(rest.terms)  # lex leading, y_1 heaviest
        if any(lam[i] < lam[i + 1] for i in range(N - 1)):
            raise AssertionError("leading exponent of a symmetric polynomial must decrease")
        c = rest.terms[lam]
        exps = [0] * N
        for i in range(N):
            nxt = lam[i + 1] if i + 1 < N else 0
            exps[i] = lam[i] - nxt
        key = _trim(exps)
        out[key] = out.get(key, 0) + c
        prod = MPoly.one(N, ring)
        for i0, e in enumerate(key):
            if e:
                prod = prod * (elementary_mpoly(i0 + 1, N, ring) ** e)
        rest = rest - prod.scale(c)
    return EPoly(out)


def plethysm_P_by_elimination(h: int, k: int) -> EPoly:
    """Reference route for P_{h,k}: expand e_h(x^k) in h*k variables and
    eliminate.  Exponential in h*k; for cross-checks only."""
    if h < 0 or k < 1:
        raise ValueError("need h >= 0 and k >= 1")
    if h == 0:
        return EPoly.const(1)
    N = h * k
    terms = {}
    for sel in combinations(range(N), h):
        mu = tuple(k if t in sel else 0 for t in range(N))
        terms[mu] = 1
    return to_e_basis(MPoly(N, ZZ, terms))
