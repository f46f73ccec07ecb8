"""Concrete polynomial rings.

Two sparse representations over a coefficient ring R:

* ``MPoly``: R[y_1,...,y_m], keys are exponent tuples of length m.
* ``NPoly``: R[x_i(j) : 1<=i<=m, 1<=j<=n], the n-slot ring.  Keys are flat
  exponent tuples of length n*m in slot-major layout, x_i(j) living at flat
  index (j-1)*m + (i-1).  Slot-major makes the slot permutation action a
  block permutation of the key.

Both are canonical: no zero coefficients are ever stored, so structural
equality is ring equality.
"""

from __future__ import annotations

from .coeffring import Ring
from .monomial import Mono, grlex_key

__all__ = [
    "MPoly",
    "NPoly",
    "subst_slot",
    "sn_act",
    "check_perm",
    "flat_index",
    "npoly_multidegree",
    "npoly_text",
    "parse_npoly",
]


class MPoly:
    """Sparse polynomial in m variables y_1..y_m over a Ring."""

    __slots__ = ("m", "ring", "terms")

    def __init__(self, m: int, ring: Ring, terms=None):
        if m < 1:
            raise ValueError("need at least one variable")
        self.m = m
        self.ring = ring
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != m:
                    raise ValueError(f"exponent tuple {mono} not of length {m}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                if not ring.is_zero(c):
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls, m: int, ring: Ring) -> "MPoly":
        return cls(m, ring)

    @classmethod
    def one(cls, m: int, ring: Ring) -> "MPoly":
        return cls(m, ring, {(0,) * m: ring.one})

    @classmethod
    def monomial(cls, mu: Mono, ring: Ring, coeff=None) -> "MPoly":
        c = ring.one if coeff is None else coeff
        return cls(len(mu), ring, {tuple(mu): c})

    @classmethod
    def variable(cls, i: int, m: int, ring: Ring) -> "MPoly":
        """y_i, 1-based."""
        if not 1 <= i <= m:
            raise ValueError(f"variable index {i} outside 1..{m}")
        mu = tuple(1 if t == i - 1 else 0 for t in range(m))
        return cls(m, ring, {mu: ring.one})

    def _compat(self, other: "MPoly") -> None:
        if self.m != other.m or self.ring != other.ring:
            raise ValueError("ambient mismatch between MPoly operands")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * self.m, self.ring.zero)

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(mu) for mu in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.m == other.m and self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "MPoly") -> "MPoly":
        self._compat(other)
        R = self.ring
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = R.add(out.get(mono, R.zero), c)
        return MPoly(self.m, R, out)

    def __neg__(self) -> "MPoly":
        R = self.ring
        return MPoly(self.m, R, {mu: R.neg(c) for mu, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def scale(self, c) -> "MPoly":
        R = self.ring
        return MPoly(self.m, R, {mu: R.mul(c, v) for mu, v in self.terms.items()})

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._compat(other)
        R = self.ring
        addf, mulf, zero = R.add, R.mul, R.zero
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                out[key] = addf(out.get(key, zero), mulf(ca, cb))
        return MPoly(self.m, R, out)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        acc = MPoly.one(self.m, self.ring)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def permute_vars(self, perm) -> "MPoly":
        """Apply y_i -> y_perm(i); perm is a 1-based image tuple of length m."""
        check_perm(perm, self.m)
        out = {}
        for mu, c in self.terms.items():
            key = [0] * self.m
            for i, e in enumerate(mu):
                key[perm[i] - 1] = e
            out[tuple(key)] = c
        return MPoly(self.m, self.ring, out)

    def eval_at(self, values):
        """Evaluate at a point, values[i] an integer substituted for y_{i+1}."""
        if len(values) != self.m:
            raise ValueError("wrong number of values")
        R = self.ring
        acc = R.zero
        for mu, c in self.terms.items():
            v = 1
            for base, e in zip(values, mu):
                v *= base ** e
            acc = R.add(acc, R.mul(c, R.embed(v)))
        return acc

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for mu, c in self.sorted_terms():
            vs = "*".join(
                f"y{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mu) if e
            )
            bits.append(f"{self.ring.format_coeff(c)}*{vs}" if vs else self.ring.format_coeff(c))
        return "MPoly(" + " + ".join(bits) + ")"


def check_perm(sigma, n: int) -> None:
    """sigma must be a tuple of the 1-based images (sigma[j-1] = image of j)."""
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")


def flat_index(i: int, j: int, m: int) -> int:
    """Flat position of x_i(j), both 1-based."""
    return (j - 1) * m + (i - 1)


class NPoly:
    """Sparse polynomial in the n*m variables x_i(j)."""

    __slots__ = ("n", "m", "ring", "terms")

    def __init__(self, n: int, m: int, ring: Ring, terms=None):
        if n < 1 or m < 1:
            raise ValueError("need n >= 1 and m >= 1")
        self.n = n
        self.m = m
        self.ring = ring
        size = n * m
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != size:
                    raise ValueError(f"exponent tuple of length {len(mono)}, expected {size}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                if not ring.is_zero(c):
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int, m: int, ring: Ring) -> "NPoly":
        return cls(n, m, ring)

    @classmethod
    def one(cls, n: int, m: int, ring: Ring) -> "NPoly":
        return cls(n, m, ring, {(0,) * (n * m): ring.one})

    @classmethod
    def monomial(cls, exps, n: int, m: int, ring: Ring, coeff=None) -> "NPoly":
        c = ring.one if coeff is None else coeff
        return cls(n, m, ring, {tuple(exps): c})

    @classmethod
    def variable(cls, i: int, j: int, n: int, m: int, ring: Ring) -> "NPoly":
        """x_i(j), family i in 1..m, slot j in 1..n."""
        if not 1 <= i <= m:
            raise ValueError(f"family index {i} outside 1..{m}")
        if not 1 <= j <= n:
            raise ValueError(f"slot index {j} outside 1..{n}")
        exps = [0] * (n * m)
        exps[flat_index(i, j, m)] = 1
        return cls(n, m, ring, {tuple(exps): ring.one})

    def _compat(self, other: "NPoly") -> None:
        if self.n != other.n or self.m != other.m or self.ring != other.ring:
            raise ValueError("ambient mismatch between NPoly operands")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, NPoly):
            return NotImplemented
        return (self.n, self.m, self.ring) == (other.n, other.m, other.ring) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "NPoly") -> "NPoly":
        self._compat(other)
        R = self.ring
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = R.add(out.get(mono, R.zero), c)
        return NPoly(self.n, self.m, R, out)

    def __neg__(self) -> "NPoly":
        R = self.ring
        return NPoly(self.n, self.m, R, {mu: R.neg(c) for mu, c in self.terms.items()})

    def __sub__(self, other: "NPoly") -> "NPoly":
        return self + (-other)

    def scale(self, c) -> "NPoly":
        R = self.ring
        return NPoly(self.n, self.m, R, {mu: R.mul(c, v) for mu, v in self.terms.items()})

    def __mul__(self, other: "NPoly") -> "NPoly":
        self._compat(other)
        R = self.ring
        addf, mulf, zero = R.add, R.mul, R.zero
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                out[key] = addf(out.get(key, zero), mulf(ca, cb))
        return NPoly(self.n, self.m, R, out)

    def __pow__(self, k: int) -> "NPoly":
        if k < 0:
            raise ValueError("negative power")
        acc = NPoly.one(self.n, self.m, self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def multidegree_component(self, a: Mono) -> "NPoly":
        """Terms of multidegree exactly a; summing over all a recovers self."""
        if len(a) != self.m:
            raise ValueError("multidegree length must equal m")
        keep = {mono: c for mono, c in self.terms.items()
                if npoly_multidegree(mono, self.m) == tuple(a)}
        return NPoly(self.n, self.m, self.ring, keep)

    def multidegrees(self):
        """Set of multidegrees occurring in this polynomial."""
        return {npoly_multidegree(mono, self.m) for mono in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __repr__(self) -> str:
        return f"NPoly({npoly_text(self)})"


def npoly_multidegree(mono, m: int) -> Mono:
    """Multidegree of a flat exponent tuple: x_i(j) counts toward family i."""
    deg = [0] * m
    for flat, e in enumerate(mono):
        if e:
            deg[flat % m] += e
    return tuple(deg)


def subst_slot(f: MPoly, j: int, n: int) -> NPoly:
    """The substitution y_i -> x_i(j), landing f in the n-slot ring."""
    if not 1 <= j <= n:
        raise ValueError(f"slot index {j} outside 1..{n}")
    m = f.m
    base = (j - 1) * m
    out = {}
    for mu, c in f.terms.items():
        exps = [0] * (n * m)
        for i, e in enumerate(mu):
            exps[base + i] = e
        out[tuple(exps)] = c
    return NPoly(n, m, f.ring, out)


def sn_act(sigma, p: NPoly) -> NPoly:
    """Slot permutation x_i(j) -> x_i(sigma(j)); sigma[j-1] is the image of j."""
    check_perm(sigma, p.n)
    m = p.m
    out = {}
    for mono, c in p.terms.items():
        key = [0] * len(mono)
        for j in range(p.n):
            dst = (sigma[j] - 1) * m
            src = j * m
            key[dst:dst + m] = mono[src:src + m]
        out[tuple(key)] = c
    return NPoly(p.n, p.m, p.ring, out)


# text form, mostly for tests and --text output

def npoly_text(p: NPoly) -> str:
    if not p.terms:
        return "0"
    R = p.ring
    bits = []
    for mono, c in p.sorted_terms():
        vs = []
        for flat, e in enumerate(mono):
            if e:
                i = flat % p.m + 1
                j = flat // p.m + 1
                vs.append(f"x{i}({j})" + (f"^{e}" if e > 1 else ""))
        body = "*".join(vs)
        cs = R.format_coeff(c)
        if body:
            txt = body if cs == "1" else (f"-{body}" if cs == "-1" else f"{cs}*{body}")
        else:
            txt = cs
        bits.append(txt)
    out = bits[0]
    for t in bits[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def parse_npoly(s: str, n: int, m: int, ring: Ring) -> NPoly:
    """Parse the npoly_text form, e.g. 'x1(1)*x2(2) + 2*x1(2)^3'."""
    import re

    s = s.strip()
    if s == "0":
        return NPoly.zero(n, m, ring)
    # split into signed terms at top level
    s = s.replace("-", "+-")
    parts = [t.strip() for t in s.split("+") if t.strip()]
    var_re = re.compile(r"^x(\d+)\((\d+)\)(?:\^(\d+))?$")
    total = NPoly.zero(n, m, ring)
    for part in parts:
        neg = part.startswith("-")
        if neg:
            part = part[1:].strip()
        coeff = ring.one
        exps = [0] * (n * m)
        saw_var = False
        for factor in part.split("*"):
            factor = factor.strip()
            mo = var_re.match(factor)
            if mo:
                i, j = int(mo.group(1)), int(mo.group(2))
                e = int(mo.group(3)) if mo.group(3) else 1
                if not (1 <= i <= m and 1 <= j <= n):
                    raise ValueError(f"variable x{i}({j}) outside ambient ({n},{m})")
                exps[flat_index(i, j, m)] += e
                saw_var = True
            else:
                coeff = ring.mul(coeff, ring.parse_coeff(factor))
        if not saw_var and not part:
            raise ValueError("empty term")
        if neg:
            coeff = ring.neg(coeff)
        total = total + NPoly.monomial(exps, n, m, ring, coeff)
    return total
