"""Exact coefficient rings: the integers, the rationals, and prime fields.

A :class:`Ring` is an immutable arithmetic context shared by every other
module.  Elements are plain Python values (``int`` for the integers and for
prime fields, stored reduced to ``0..p-1``; ``Fraction`` for the rationals),
so structural equality is mathematical equality and every element hashes.

Division is deliberately not part of the common contract; the rationals and
the prime fields advertise it through :attr:`Ring.has_division`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Ring", "ZZ", "QQ", "Zmod", "is_prime"]

# Deterministic Miller-Rabin witnesses; exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Ring:
    """One of Z, Q, or Z/p with p prime.

    All operations are total and pure; a Ring is safe to share freely.
    """

    kind: str  # "Z" | "Q" | "Zp"
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown ring kind: {self.kind!r}")
        if self.kind == "Zp":
            if not isinstance(self.p, int) or self.p < 2 or not is_prime(self.p):
                raise ValueError(f"modulus must be a prime >= 2, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("only prime fields take a modulus")

    # construction / naming

    @staticmethod
    def from_string(s: str) -> "Ring":
        if s == "Z":
            return ZZ
        if s == "Q":
            return QQ
        if s.startswith("Zmod:"):
            try:
                p = int(s[len("Zmod:"):])
            except ValueError:
                raise ValueError(f"bad modulus in ring string {s!r}") from None
            return Ring("Zp", p)
        raise ValueError(f"unknown ring string {s!r} (expected Z, Q or Zmod:<p>)")

    def to_string(self) -> str:
        if self.kind == "Zp":
            return f"Zmod:{self.p}"
        return self.kind

    def __repr__(self) -> str:
        return f"Ring({self.to_string()})"

    # arithmetic

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    @property
    def has_division(self) -> bool:
        return self.kind in ("Q", "Zp")

    def embed(self, k: int):
        """The canonical image of the integer k, a ring homomorphism."""
        if self.kind == "Z":
            return k
        if self.kind == "Q":
            return Fraction(k)
        return k % self.p

    def add(self, a, b):
        if self.kind == "Zp":
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.kind == "Zp":
            return (a - b) % self.p
        return a - b

    def neg(self, a):
        if self.kind == "Zp":
            return (-a) % self.p
        return -a

    def mul(self, a, b):
        if self.kind == "Zp":
            return (a * b) % self.p
        return a * b

    def power(self, a, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        if self.kind == "Zp":
            return pow(a, k, self.p)
        return a ** k

    def inv(self, a):
        if self.kind == "Q":
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(a)
        if self.kind == "Zp":
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, self.p - 2, self.p)
        raise ValueError("the integers have no division")

    def is_zero(self, a) -> bool:
        return a == self.zero

    # serialization

    def parse_coeff(self, s: str):
        """Parse "17", "-3" or (rationals only) "3/2"."""
        s = s.strip()
        if "/" in s:
            if self.kind != "Q":
                raise ValueError(f"fractional coefficient {s!r} outside Q")
            return Fraction(s)
        try:
            k = int(s)
        except ValueError:
            raise ValueError(f"bad coefficient string {s!r}") from None
        return self.embed(k)

    def format_coeff(self, a) -> str:
        return str(a)


ZZ = Ring("Z")
QQ = Ring("Q")


def Zmod(p: int) -> Ring:
    return Ring("Zp", p)
