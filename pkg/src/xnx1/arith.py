"""Exact integer arithmetic: primes, Kronecker symbols and small finite fields.

Everything downstream (polynomial factorization patterns, the matrix group
over F_25, the per-prime reports) sits on the functions and field classes
defined here.  All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from functools import lru_cache

_INT_RE = re.compile(r"[+-]?\d+\Z")

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ParseError(ValueError):
    """Malformed decimal integer text."""


class DomainError(ValueError):
    """Argument outside the domain of an arithmetic operation."""


def parse_integer(text: str) -> int:
    """Parse a decimal integer with optional sign, exactly."""
    if not _INT_RE.match(text.strip()):
        raise ParseError(f"not a decimal integer: {text!r}")
    return int(text)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 64-bit inputs used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_reduce(n: int, p: int) -> int:
    """Residue of n in [0, p) for prime p."""
    if not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")
    return n % p


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (empty list below 2)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the full extension of the Jacobi symbol.

    Handles n zero, negative and even; multiplicative in both arguments.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd n > 0 by quadratic reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


class PrimeField:
    """The field F_p; elements are plain ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def element(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def is_square(self, a) -> bool:
        return a % self.p == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def fmt(self, a) -> str:
        return str(a)


class QuadField:
    """The field F_{p^2} = F_p[t]/(t^2 - c) for a non-residue c.

    Elements are pairs (a, b) of ints in [0, p) standing for a + b*t.
    """

    def __init__(self, p: int, c: int):
        base = PrimeField(p)
        if base.is_square(c % p):
            raise DomainError(f"{c} is a square mod {p}; t^2 - {c} is reducible")
        self.p = p
        self.c = c % p

    def __repr__(self):
        return f"QuadField({self.p}, {self.c})"

    @property
    def zero(self):
        return (0, 0)

    @property
    def one(self):
        return (1, 0)

    def element(self, a: int, b: int = 0):
        return (a % self.p, b % self.p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def sub(self, x, y):
        return ((x[0] - y[0]) % self.p, (x[1] - y[1]) % self.p)

    def neg(self, x):
        return (-x[0] % self.p, -x[1] % self.p)

    def mul(self, x, y):
        a, b = x
        a2, b2 = y
        return ((a * a2 + self.c * b * b2) % self.p, (a * b2 + b * a2) % self.p)

    def inv(self, x):
        a, b = x
        norm = (a * a - self.c * b * b) % self.p
        if norm == 0:
            raise DomainError("inverse of zero")
        ninv = pow(norm, self.p - 2, self.p)
        return (a * ninv % self.p, -b * ninv % self.p)

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def in_base(self, x) -> bool:
        """True iff x lies in the prime subfield F_p."""
        return x[1] == 0

    def fmt(self, x) -> str:
        a, b = x
        if b == 0:
            return str(a)
        if a == 0:
            return "t" if b == 1 else f"{b}t"
        return f"{a}+{b}t" if b != 1 else f"{a}+t"


@lru_cache(maxsize=None)
def f25() -> QuadField:
    """F_25 realised as F_5[t]/(t^2 - 2); zeta := t has multiplicative order 8."""
    return QuadField(5, 2)


ZETA = (0, 1)
