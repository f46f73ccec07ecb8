"""The algebra of multisymmetric functions in the orbit-sum basis.

An element is a finite R-linear combination of basis symbols e_alpha, where
alpha assigns a multiplicity to finitely many positive monomials in m
variables.  With n slots the symbols of weight |alpha| <= n form a module
basis of the invariant ring; the weight cutoff disappears in the inverse
limit (ambient INF).

The product of two basis symbols is again a combination of basis symbols,
with structure constants given by counting nonnegative integer tables with
prescribed row and column margins: a table gamma with rows indexed by the
support of alpha (plus a 0-row) and columns by the support of beta (plus a
0-column) contributes the symbol on arguments

    f_i   with multiplicity gamma_{i0},
    g_j   with multiplicity gamma_{0j},
    f_i*g_j with multiplicity gamma_{ij},

equal arguments being merged with a multinomial factor.  In a finite
ambient only tables of total sum <= n survive.  All structure constants are
computed over Z and embedded into R at the end, so they can vanish in
positive characteristic.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .coeffring import Ring
from .monomial import Mono, grlex_key, mono_mul, monomials_up_to, total_degree
from .polyring import NPoly

INF = float("inf")

__all__ = [
    "INF",
    "AmbientMismatch",
    "WeightExceedsAmbient",
    "AlphaIndex",
    "make_alpha",
    "alpha_weight",
    "alpha_multidegree",
    "mono_text",
    "alpha_text",
    "MsfElement",
    "e_alpha",
    "product",
    "expand",
    "merge_repeats",
    "truncate",
    "ek_of_f",
    "alphas_of_multidegree",
    "basis_alphas",
    "element_to_json",
    "element_from_json",
]


class AmbientMismatch(Exception):
    """Operands live in different ambients (n, m or coefficient ring)."""


class WeightExceedsAmbient(Exception):
    """Requested basis symbol vanishes in this ambient (weight > n)."""


AlphaIndex = tuple  # tuple of (Mono, mult), sorted strictly by grlex


def make_alpha(pairs) -> AlphaIndex:
    """Canonical AlphaIndex from (monomial, multiplicity) pairs."""
    seen = {}
    m = None
    for mu, mult in pairs:
        mu = tuple(mu)
        if m is None:
            m = len(mu)
        elif len(mu) != m:
            raise ValueError("mixed variable counts in one index")
        if not mu or not any(mu) or any(e < 0 for e in mu):
            raise ValueError(f"support monomial {mu} must have positive degree")
        if not isinstance(mult, int) or mult < 1:
            raise ValueError(f"multiplicity {mult!r} must be a positive integer")
        if mu in seen:
            raise ValueError(f"repeated support monomial {mu}")
        seen[mu] = mult
    return tuple(sorted(seen.items(), key=lambda t: grlex_key(t[0])))


def alpha_weight(alpha: AlphaIndex) -> int:
    return sum(mult for _, mult in alpha)


def alpha_multidegree(alpha: AlphaIndex, m: int) -> Mono:
    deg = [0] * m
    for mu, mult in alpha:
        for i, e in enumerate(mu):
            deg[i] += mult * e
    return tuple(deg)


def _alpha_key(alpha: AlphaIndex, m: int):
    a = alpha_multidegree(alpha, m)
    return (sum(a), a, tuple((grlex_key(mu), mult) for mu, mult in alpha))


def mono_text(mu: Mono) -> str:
    if not any(mu):
        return "1"
    return "*".join(
        f"y{i+1}" + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(mu) if e
    )


def alpha_text(alpha: AlphaIndex) -> str:
    if not alpha:
        return "1"
    return "e(" + ", ".join(f"{mono_text(mu)}:{mult}" for mu, mult in alpha) + ")"


# integer core of the merge rule: equal argument monomials collapse and pick
# up the multinomial coefficient (sum of mults)! / prod(mult_i!)

def _merge_int(args) -> tuple[AlphaIndex, int]:
    groups: dict[Mono, list[int]] = {}
    for mu, mult in args:
        if mult == 0:
            continue
        groups.setdefault(mu, []).append(mult)
    mult_factor = 1
    support = []
    for mu, parts in groups.items():
        tot = sum(parts)
        if len(parts) > 1:
            c = factorial(tot)
            for p in parts:
                c //= factorial(p)
            mult_factor *= c
        support.append((mu, tot))
    support.sort(key=lambda t: grlex_key(t[0]))
    return tuple(support), mult_factor


def merge_repeats(args, ring: Ring):
    """Public form of the merge rule: canonical index plus an R-scalar."""
    alpha, k = _merge_int(args)
    return alpha, ring.embed(k)


def _inner_tables(avec, bvec, min_inner):
    """Nonnegative k x h tables with row sums <= avec, col sums <= bvec and
    total >= min_inner, in row-major lexicographic order."""
    k, h = len(avec), len(bvec)
    cells = k * h
    inner = [0] * cells
    colcap = list(bvec)

    def rec(pos, rowleft, total, rows_rest):
        if pos == cells:
            if total >= min_inner:
                yield tuple(inner)
            return
        # even filling every later cell to its row capacity cannot reach
        # min_inner: prune
        if total + rowleft + rows_rest < min_inner:
            return
        i, j = divmod(pos, h)
        cap = min(rowleft, colcap[j])
        for v in range(cap + 1):
            inner[pos] = v
            colcap[j] -= v
            if j == h - 1:
                nxt_rowleft = avec[i + 1] if i + 1 < k else 0
                nxt_rest = rows_rest - nxt_rowleft
                yield from rec(pos + 1, nxt_rowleft, total + v, nxt_rest)
            else:
                yield from rec(pos + 1, rowleft - v, total + v, rows_rest)
            colcap[j] += v
        inner[pos] = 0

    if cells == 0:
        if min_inner <= 0:
            yield ()
        return
    yield from rec(0, avec[0], 0, sum(avec) - avec[0])


@cache
def _alpha_product_z(alpha: AlphaIndex, beta: AlphaIndex, cap) -> dict:
    """Structure constants over Z of e_alpha * e_beta.

    cap is None for the no-cutoff product (inverse limit) or the slot count
    n; keys of the result are the indices gamma with |gamma| <= cap.
    """
    wa, wb = alpha_weight(alpha), alpha_weight(beta)
    fs = [mu for mu, _ in alpha]
    gs = [mu for mu, _ in beta]
    avec = tuple(mult for _, mult in alpha)
    bvec = tuple(mult for _, mult in beta)
    min_inner = 0 if cap is None else wa + wb - cap
    h = len(bvec)
    out: dict[AlphaIndex, int] = {}
    for inner in _inner_tables(avec, bvec, min_inner):
        args = []
        for i, fi in enumerate(fs):
            row = inner[i * h:(i + 1) * h]
            left = avec[i] - sum(row)
            if left:
                args.append((fi, left))
            for j, v in enumerate(row):
                if v:
                    args.append((mono_mul(fi, gs[j]), v))
        for j, gj in enumerate(gs):
            colsum = sum(inner[i * h + j] for i in range(len(avec)))
            left = bvec[j] - colsum
            if left:
                args.append((gj, left))
        gamma, mult = _merge_int(args)
        out[gamma] = out.get(gamma, 0) + mult
    return out


class MsfElement:
    """R-linear combination of basis symbols; ambient is n slots or INF."""

    __slots__ = ("n", "m", "ring", "terms")

    def __init__(self, n, m: int, ring: Ring, terms=None):
        if n is not INF and (not isinstance(n, int) or n < 1):
            raise ValueError(f"ambient slot count must be a positive integer or INF, got {n!r}")
        if m < 1:
            raise ValueError("need m >= 1")
        self.n = n
        self.m = m
        self.ring = ring
        clean = {}
        if terms:
            for alpha, c in terms.items():
                if ring.is_zero(c):
                    continue
                self._check_alpha(alpha)
                clean[alpha] = c
        self.terms = clean

    def _check_alpha(self, alpha: AlphaIndex) -> None:
        prev = None
        w = 0
        for mu, mult in alpha:
            if len(mu) != self.m:
                raise ValueError(f"support monomial {mu} not in {self.m} variables")
            if not any(mu):
                raise ValueError("constant monomial in support")
            if mult < 1:
                raise ValueError("nonpositive multiplicity")
            key = grlex_key(mu)
            if prev is not None and key <= prev:
                raise ValueError(f"index {alpha} not in canonical order")
            prev = key
            w += mult
        if self.n is not INF and w > self.n:
            raise ValueError(f"index of weight {w} cannot live in ambient n={self.n}")

    @classmethod
    def zero(cls, n, m: int, ring: Ring) -> "MsfElement":
        return cls(n, m, ring)

    @classmethod
    def one(cls, n, m: int, ring: Ring) -> "MsfElement":
        return cls(n, m, ring, {(): ring.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def finite(self) -> bool:
        return self.n is not INF

    def _compat(self, other: "MsfElement") -> None:
        if self.n != other.n or self.m != other.m or self.ring != other.ring:
            raise AmbientMismatch(
                f"({self.n},{self.m},{self.ring.to_string()}) vs "
                f"({other.n},{other.m},{other.ring.to_string()})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MsfElement):
            return NotImplemented
        return (self.n, self.m, self.ring) == (other.n, other.m, other.ring) \
            and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "MsfElement") -> "MsfElement":
        self._compat(other)
        R = self.ring
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = R.add(out.get(a, R.zero), c)
        return MsfElement(self.n, self.m, R, out)

    def __neg__(self) -> "MsfElement":
        R = self.ring
        return MsfElement(self.n, self.m, R, {a: R.neg(c) for a, c in self.terms.items()})

    def __sub__(self, other: "MsfElement") -> "MsfElement":
        return self + (-other)

    def scale(self, c) -> "MsfElement":
        R = self.ring
        return MsfElement(self.n, self.m, R, {a: R.mul(c, v) for a, v in self.terms.items()})

    def __mul__(self, other: "MsfElement") -> "MsfElement":
        self._compat(other)
        R = self.ring
        cap = None if self.n is INF else self.n
        out: dict[AlphaIndex, object] = {}
        for ax, cx in self.terms.items():
            for ay, cy in other.terms.items():
                cxy = R.mul(cx, cy)
                ck = cap
                if ck is not None and ck >= alpha_weight(ax) + alpha_weight(ay):
                    ck = None
                for gamma, mult in _alpha_product_z(ax, ay, ck).items():
                    c = R.mul(cxy, R.embed(mult))
                    out[gamma] = R.add(out.get(gamma, R.zero), c)
        return MsfElement(self.n, self.m, R, out)

    def __pow__(self, k: int) -> "MsfElement":
        if k < 0:
            raise ValueError("negative power")
        acc = MsfElement.one(self.n, self.m, self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def truncate(self, target) -> "MsfElement":
        if self.n is not INF and (target is INF or target > self.n):
            raise ValueError(f"cannot lift from ambient {self.n} to {target}")
        if target == self.n:
            return self
        keep = {a: c for a, c in self.terms.items()
                if target is INF or alpha_weight(a) <= target}
        return MsfElement(target, self.m, self.ring, keep)

    def multidegree_component(self, a: Mono) -> "MsfElement":
        a = tuple(a)
        keep = {al: c for al, c in self.terms.items()
                if alpha_multidegree(al, self.m) == a}
        return MsfElement(self.n, self.m, self.ring, keep)

    def total_degree_cut(self, bound: int) -> "MsfElement":
        """Keep the terms of total multidegree <= bound."""
        keep = {al: c for al, c in self.terms.items()
                if sum(alpha_multidegree(al, self.m)) <= bound}
        return MsfElement(self.n, self.m, self.ring, keep)

    def multidegrees(self):
        return {alpha_multidegree(a, self.m) for a in self.terms}

    def expand(self) -> NPoly:
        """Concrete orbit-sum polynomial in the n-slot ring."""
        if self.n is INF:
            raise ValueError("cannot expand an inverse-limit element")
        out: dict[tuple, object] = {}
        R = self.ring
        for alpha, c in self.terms.items():
            for exps in _expand_alpha(alpha, self.n, self.m):
                out[exps] = R.add(out.get(exps, R.zero), c)
        return NPoly(self.n, self.m, R, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _alpha_key(t[0], self.m))

    def text(self) -> str:
        if not self.terms:
            return "0"
        R = self.ring
        bits = []
        for alpha, c in self.sorted_terms():
            body = alpha_text(alpha)
            cs = R.format_coeff(c)
            if alpha:
                t = body if cs == "1" else (f"-{body}" if cs == "-1" else f"{cs}*{body}")
            else:
                t = cs
            bits.append(t)
        out = bits[0]
        for t in bits[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self) -> str:
        n = "inf" if self.n is INF else self.n
        return f"MsfElement(n={n}, m={self.m}, {self.text()})"


@cache
def _expand_alpha(alpha: AlphaIndex, n: int, m: int) -> tuple:
    """Flat exponent tuples of the orbit sum of e_alpha in n slots.

    One tuple per way of giving each support monomial its multiplicity many
    slots, all slots distinct; every tuple occurs exactly once.
    """
    from itertools import combinations

    results = []

    def rec(idx, avail, exps):
        if idx == len(alpha):
            results.append(tuple(exps))
            return
        mu, mult = alpha[idx]
        for slots in combinations(avail, mult):
            new = list(exps)
            for j in slots:
                base = j * m
                for i, e in enumerate(mu):
                    new[base + i] += e
            rec(idx + 1, tuple(s for s in avail if s not in slots), new)

    if alpha_weight(alpha) > n:
        return ()
    rec(0, tuple(range(n)), [0] * (n * m))
    return tuple(results)


def e_alpha(support, n, m: int, ring: Ring, truncating: bool = False) -> "MsfElement":
    """The basis symbol with multiplicity map given by support pairs.

    In finite ambient a weight above n either raises WeightExceedsAmbient or,
    with truncating=True, gives the zero element.
    """
    alpha = make_alpha(support)
    for mu, _ in alpha:
        if len(mu) != m:
            raise ValueError(f"support monomial {mu} not in {m} variables")
    if n is not INF and alpha_weight(alpha) > n:
        if truncating:
            return MsfElement.zero(n, m, ring)
        raise WeightExceedsAmbient(
            f"weight {alpha_weight(alpha)} symbol vanishes for n={n}")
    return MsfElement(n, m, ring, {alpha: ring.one})


def product(x: MsfElement, y: MsfElement) -> MsfElement:
    return x * y


def expand(x: MsfElement) -> NPoly:
    return x.expand()


def truncate(x: MsfElement, target) -> MsfElement:
    return x.truncate(target)


def ek_of_f(f, k: int, n) -> MsfElement:
    """e_k evaluated at a polynomial argument f with zero constant term.

    Writing f = sum_mu lambda_mu * mu, the result is the sum over indices
    alpha supported on the monomials of f with |alpha| = k of
    (prod_mu lambda_mu^alpha(mu)) e_alpha.  Weight k terms all vanish when
    k > n in a finite ambient.
    """
    from .monomial import compositions

    R = f.ring
    m = f.m
    if k < 0:
        raise ValueError("negative k")
    if not R.is_zero(f.constant_term()):
        raise ValueError("argument must have zero constant term")
    if k == 0:
        return MsfElement.one(n, m, R)
    if n is not INF and k > n:
        return MsfElement.zero(n, m, R)
    support = sorted(f.terms.items(), key=lambda t: grlex_key(t[0]))
    monos = [mu for mu, _ in support]
    lams = [c for _, c in support]
    out = {}
    for parts in compositions(k, len(monos)):
        coeff = R.one
        pairs = []
        for mu, lam, p in zip(monos, lams, parts):
            if p:
                coeff = R.mul(coeff, R.power(lam, p))
                pairs.append((mu, p))
        if R.is_zero(coeff):
            continue
        alpha = tuple(sorted(pairs, key=lambda t: grlex_key(t[0])))
        out[alpha] = R.add(out.get(alpha, R.zero), coeff)
    return MsfElement(n, m, R, out)


@cache
def _alphas_cached(m: int, a: Mono, max_weight) -> tuple:
    monos = monomials_up_to(m, a)
    monos.reverse()  # largest first so indices come out sorted ascending

    found = []

    def rec(idx, remaining, budget, acc):
        if not any(remaining):
            found.append(tuple(reversed(acc)))
            return
        if idx == len(monos) or budget == 0:
            return
        mu = monos[idx]
        top = min(remaining[i] // mu[i] for i in range(m) if mu[i])
        if budget is not None:
            top = min(top, budget)
        rec(idx + 1, remaining, budget, acc)
        for mult in range(1, top + 1):
            rem = tuple(remaining[i] - mult * mu[i] for i in range(m))
            rec(idx + 1, rem,
                None if budget is None else budget - mult,
                acc + [(mu, mult)])

    rec(0, a, max_weight, [])
    found.sort(key=lambda al: (alpha_weight(al), _alpha_key(al, m)))
    return tuple(found)


def alphas_of_multidegree(m: int, a: Mono, max_weight=None) -> list:
    """All indices of multidegree exactly a, optionally of weight <= max_weight.

    Deterministic order: by weight, then by the canonical index key.
    """
    a = tuple(a)
    if len(a) != m:
        raise ValueError("multidegree length must equal m")
    return list(_alphas_cached(m, a, max_weight))


def basis_alphas(n: int, m: int, a: Mono) -> list:
    """Indices of the module basis in multidegree a for n slots."""
    return alphas_of_multidegree(m, a, max_weight=n)


# JSON forms, the CLI exchange format

def element_to_json(x: MsfElement) -> dict:
    terms = []
    for alpha, c in x.sorted_terms():
        terms.append({
            "alpha": [{"mono": list(mu), "mult": mult} for mu, mult in alpha],
            "coeff": x.ring.format_coeff(c),
        })
    return {
        "n": "inf" if x.n is INF else x.n,
        "m": x.m,
        "ring": x.ring.to_string(),
        "terms": terms,
    }


def element_from_json(d) -> MsfElement:
    if not isinstance(d, dict):
        raise ValueError("element must be a JSON object")
    for key in ("n", "m", "ring", "terms"):
        if key not in d:
            raise ValueError(f"element is missing the {key!r} field")
    n = d["n"]
    if n == "inf":
        n = INF
    elif not isinstance(n, int) or n < 1:
        raise ValueError(f"bad slot count {d['n']!r}")
    m = d["m"]
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"bad variable count {m!r}")
    ring = Ring.from_string(d["ring"])
    if not isinstance(d["terms"], list):
        raise ValueError("terms must be a list")
    out = {}
    R = ring
    for t in d["terms"]:
        if not isinstance(t, dict) or "alpha" not in t or "coeff" not in t:
            raise ValueError(f"bad term {t!r}")
        pairs = []
        for entry in t["alpha"]:
            if not isinstance(entry, dict) or "mono" not in entry or "mult" not in entry:
                raise ValueError(f"bad index entry {entry!r}")
            mono = entry["mono"]
            if not isinstance(mono, list) or len(mono) != m \
                    or any(not isinstance(e, int) or e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r}")
            pairs.append((tuple(mono), entry["mult"]))
        alpha = make_alpha(pairs)
        c = R.parse_coeff(t["coeff"])
        out[alpha] = R.add(out.get(alpha, R.zero), c)
    return MsfElement(n, m, ring, out)
