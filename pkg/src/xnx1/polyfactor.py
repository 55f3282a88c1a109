"""Polynomial arithmetic over Z and F_p.

Provides the per-prime data the Frobenius pipeline feeds on: root counts,
factorization degree patterns (cycle types) via deterministic distinct-degree
factorization, exact discriminants, and real-root counts via Sturm sequences.

Integer polynomials are lists of ints with the constant term first.
Mod-p polynomials are wrapped in :class:`PolyFp`; the heavy lifting runs on
int64 numpy vectors (safe as long as p^2 * (deg+1) fits in 64 bits, enforced).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import DomainError, is_prime

# Largest modulus for which int64 convolution accumulators cannot overflow
# at the degrees used here (deg <= 96 after squaring a degree-48 polynomial).
_MAX_P = 90_000_000


class Ramified(Exception):
    """Reduction mod p is not squarefree: p divides the discriminant or index."""


# ---------------------------------------------------------------------------
# integer polynomials

def trim(coeffs: list[int]) -> list[int]:
    """Canonical form: strip leading (high-degree) zeros."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(coeffs: list[int]) -> int:
    c = trim(coeffs)
    return len(c) - 1 if c else -1


def poly_deriv(coeffs: list[int]) -> list[int]:
    return trim([i * c for i, c in enumerate(coeffs)][1:])


def parse_poly_text(text: str) -> list[int]:
    """Parse a polynomial data file.

    Two layouts are accepted: a single line ``c0 c1 ... cd`` (constant term
    first), or one ``<degree> <coefficient>`` pair per line (any order,
    omitted degrees are zero).  Lines starting with ``#`` are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise DomainError("empty polynomial file")
    if len(lines) == 1 and len(lines[0].split()) != 2:
        return trim([int(tok) for tok in lines[0].split()])
    pairs = {}
    for ln in lines:
        toks = ln.split()
        if len(toks) != 2:
            raise DomainError(f"expected '<degree> <coefficient>': {ln!r}")
        d, c = int(toks[0]), int(toks[1])
        if d < 0 or d in pairs:
            raise DomainError(f"bad or repeated degree {d}")
        pairs[d] = c
    out = [0] * (max(pairs) + 1)
    for d, c in pairs.items():
        out[d] = c
    return trim(out)


def format_poly_line(coeffs: list[int]) -> str:
    return " ".join(str(c) for c in trim(coeffs))


# ---------------------------------------------------------------------------
# polynomials over F_p

@dataclass(frozen=True)
class PolyFp:
    """Dense polynomial over F_p, canonical (no leading zeros)."""

    coeffs: tuple[int, ...]  # constant term first, entries in [0, p)
    p: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs


def reduce_mod_p(coeffs: list[int], p: int) -> PolyFp:
    """Coefficientwise reduction of an integer polynomial mod a prime."""
    if not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")
    if p > _MAX_P:
        raise DomainError(f"modulus {p} too large for the int64 kernel")
    return PolyFp(tuple(trim([c % p for c in coeffs])), p)


def _vec(f: PolyFp) -> np.ndarray:
    return np.array(f.coeffs, dtype=np.int64)


def _trim_vec(v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(v)[0]
    return v[: nz[-1] + 1] if len(nz) else v[:0]


def _divmod_vec(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of a by b (b nonzero), coefficients mod p."""
    b = _trim_vec(b % p)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = a % p
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return np.zeros(0, dtype=np.int64), _trim_vec(a)
    inv_lead = pow(int(b[-1]), p - 2, p)
    q = np.zeros(da - db + 1, dtype=np.int64)
    r = a.copy()
    for i in range(da - db, -1, -1):
        c = r[i + db] * inv_lead % p
        if c:
            q[i] = c
            r[i : i + db + 1] = (r[i : i + db + 1] - c * b) % p
    return q, _trim_vec(r)


def _gcd_vec(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a, b = _trim_vec(a % p), _trim_vec(b % p)
    while len(b):
        a, b = b, _divmod_vec(a, b, p)[1]
    if len(a):
        a = a * pow(int(a[-1]), p - 2, p) % p  # monic
    return a


def _mulmod_vec(a: np.ndarray, b: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    prod = np.convolve(a, b) % p if len(a) and len(b) else np.zeros(0, dtype=np.int64)
    return _divmod_vec(prod, f, p)[1]


def _x_power_mod(e: int, f: np.ndarray, p: int) -> np.ndarray:
    """X^e mod f by binary exponentiation."""
    result = np.array([1], dtype=np.int64)
    base = _divmod_vec(np.array([0, 1], dtype=np.int64), f, p)[1]
    while e:
        if e & 1:
            result = _mulmod_vec(result, base, f, p)
        e >>= 1
        if e:
            base = _mulmod_vec(base, base, f, p)
    return result


def poly_gcd_fp(f: PolyFp, g: PolyFp) -> PolyFp:
    if f.p != g.p:
        raise DomainError("mixed moduli")
    return PolyFp(tuple(int(c) for c in _gcd_vec(_vec(f), _vec(g), f.p)), f.p)


def deriv_fp(f: PolyFp) -> PolyFp:
    p = f.p
    return PolyFp(tuple(trim([i * c % p for i, c in enumerate(f.coeffs)][1:])), p)


def is_squarefree_fp(f: PolyFp) -> bool:
    return poly_gcd_fp(f, deriv_fp(f)).degree == 0


def count_roots_mod_p(f: PolyFp) -> int:
    """Number of distinct roots of f in F_p, as deg gcd(X^p - X, f)."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    p = f.p
    fv = _vec(f)
    if len(fv) == 1:
        return 0
    xp = _x_power_mod(p, fv, p)
    # X^p - X mod f
    w = np.zeros(max(len(xp), 2), dtype=np.int64)
    w[: len(xp)] = xp
    w[1] = (w[1] - 1) % p
    g = _gcd_vec(w, fv, p)
    return len(g) - 1 if len(g) else 0


def factorization_cycle_type(f: PolyFp) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree f, ascending.

    Deterministic distinct-degree factorization: the product of the degree-d
    irreducible factors is gcd(X^(p^d) - X, remaining); the count of degree-d
    factors is its degree divided by d.  No equal-degree splitting is done.
    The iterated Frobenius powers X^(p^d) are obtained through the matrix of
    the p-power map on F_p[X]/(f), so only one modular exponentiation is paid.
    """
    if f.is_zero():
        raise DomainError("zero polynomial")
    p, n = f.p, f.degree
    if n == 0:
        return ()
    if not is_squarefree_fp(f):
        raise Ramified(f"not squarefree mod {p}")
    fv = _vec(f)
    if n == 1:
        return (1,)
    xq = _x_power_mod(p, fv, p)
    # Frobenius matrix: column i holds X^(i*p) mod f.
    frob = np.zeros((n, n), dtype=np.int64)
    col = np.array([1], dtype=np.int64)
    for i in range(n):
        frob[: len(col), i] = col
        if i < n - 1:
            col = _mulmod_vec(col, xq, fv, p)
    w = np.zeros(n, dtype=np.int64)
    w[1 % n] = 1  # the vector of X
    remaining = fv
    parts: list[int] = []
    d = 0
    while len(remaining) - 1 > 0:
        d += 1
        if 2 * d > len(remaining) - 1:
            parts.append(len(remaining) - 1)  # remainder is irreducible
            break
        w = frob @ w % p  # now w = X^(p^d) mod f
        diff = w.copy()
        diff[1] = (diff[1] - 1) % p
        g = _gcd_vec(diff, remaining, p)
        if len(g) - 1 > 0:
            parts.extend([d] * ((len(g) - 1) // d))
            remaining = _divmod_vec(remaining, g, p)[0]
    return tuple(sorted(parts))


# ---------------------------------------------------------------------------
# discriminants over Z

def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant_Z(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials via the Sylvester determinant."""
    f, g = trim(f), trim(g)
    n, m = len(f) - 1, len(g) - 1
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    frev = f[::-1]  # leading coefficient first
    grev = g[::-1]
    for i in range(m):
        rows.append([0] * i + frev + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + grev + [0] * (size - m - 1 - i))
    return _bareiss_det(rows)


def discriminant_Z(f: list[int]) -> int:
    """Exact discriminant: (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        raise DomainError("discriminant needs degree >= 1")
    res = resultant_Z(f, poly_deriv(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res // f[-1]


def disc_formula(n: int) -> int:
    """Closed form (-1)^((n-1)(n-2)/2) * (n^n - (1-n)^(n-1)) for X^n - X - 1."""
    if n < 2:
        raise DomainError("need n >= 2")
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    return sign * (n**n - (1 - n) ** (n - 1))


@dataclass(frozen=True)
class SquarefreeVerdict:
    """Outcome of a bounded square-factor search: p is None if none found."""

    bound: int
    square_factor: int | None

    @property
    def clean_below_bound(self) -> bool:
        return self.square_factor is None


def squarefree_witness(d: int, bound: int) -> SquarefreeVerdict:
    """Trial-divide |d| by primes <= bound; report the first p with p^2 | d.

    This is explicitly not a full squarefreeness proof, only a bounded check.
    """
    if d == 0:
        raise DomainError("zero has every square factor")
    from .arith import primes_up_to

    d = abs(d)
    for p in primes_up_to(bound):
        if d % (p * p) == 0:
            return SquarefreeVerdict(bound, p)
        while d % p == 0:
            d //= p
    return SquarefreeVerdict(bound, None)


# ---------------------------------------------------------------------------
# real roots

def _sturm_chain(f: list[Fraction]) -> list[list[Fraction]]:
    def ftrim(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return c

    def frem(a, b):
        a = a[:]
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            coef = a[-1] / b[-1]
            shift = len(a) - 1 - db
            for i, bc in enumerate(b):
                a[i + shift] -= coef * bc
            a = ftrim(a)
        return a

    chain = [ftrim(f), ftrim([i * c for i, c in enumerate(f)][1:])]
    while len(chain[-1]) > 1:
        r = frem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes_at_inf(chain, positive: bool) -> int:
    signs = []
    for c in chain:
        lead = c[-1]
        d = len(c) - 1
        s = 1 if lead > 0 else -1
        if not positive and d % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(f: list[int]) -> int:
    """Number of distinct real roots, by Sturm's theorem over exact rationals."""
    f = trim(f)
    if len(f) - 1 < 1:
        raise DomainError("need degree >= 1")
    ff = [Fraction(c) for c in f]
    sq = discriminant_Z(f)
    if sq == 0:
        raise DomainError("polynomial not squarefree over Q")
    chain = _sturm_chain(ff)
    return _sign_changes_at_inf(chain, False) - _sign_changes_at_inf(chain, True)
