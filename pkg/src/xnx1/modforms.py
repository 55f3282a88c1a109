"""Truncated q-series: eta products, binary theta series, and the cubic case.

Coefficients are exact Python integers throughout; the discriminant-weight
product has coefficients far beyond 64 bits well before the default
truncation order 5000.  Products of (1 - q^{dk}) factors expand through the
pentagonal-number series, so each multiplication is dense-by-sparse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import DomainError, primes_up_to
from .polyfactor import count_roots_mod_p, reduce_mod_p
from .reporting import CheckLine, Report

DEFAULT_TRUNCATION = 5000

F3_COEFFS = [-1, -1, 0, 1]  # X^3 - X - 1


@dataclass(frozen=True)
class QSeries:
    """Polynomial truncation a_0 + a_1 q + ... + a_N q^N of a power series."""

    coeffs: tuple
    N: int

    def __post_init__(self):
        if len(self.coeffs) != self.N + 1:
            raise DomainError("coefficient count must be N + 1")

    @classmethod
    def from_list(cls, coeffs, N: int) -> "QSeries":
        data = list(coeffs[: N + 1]) + [0] * (N + 1 - len(coeffs))
        return cls(tuple(data), N)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __add__(self, other: "QSeries") -> "QSeries":
        self._match(other)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.N)

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._match(other)
        return QSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.N)

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._match(other)
        sparse = [(e, c) for e, c in enumerate(other.coeffs) if c]
        return self.mul_sparse(sparse)

    def mul_sparse(self, sparse) -> "QSeries":
        """Multiply by sum of c * q^e given as (e, c) pairs, truncated."""
        out = [0] * (self.N + 1)
        a = self.coeffs
        for e, c in sparse:
            if e > self.N:
                continue
            hi = self.N - e + 1
            for i in range(hi):
                out[i + e] += a[i] * c
        return QSeries(tuple(out), self.N)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise DomainError("negative shift would leave the polynomial range")
        return QSeries(tuple([0] * k + list(self.coeffs[: self.N + 1 - k])), self.N)

    def halve(self) -> "QSeries":
        if any(c % 2 for c in self.coeffs):
            raise DomainError("series has an odd coefficient; exact halving fails")
        return QSeries(tuple(c // 2 for c in self.coeffs), self.N)

    def reduce_mod(self, m: int) -> tuple:
        return tuple(c % m for c in self.coeffs)

    def _match(self, other: "QSeries") -> None:
        if self.N != other.N:
            raise DomainError("truncation orders differ")


def _pentagonal_sparse(d: int, N: int) -> list:
    """(exponent, sign) pairs of prod_k (1 - q^{dk}) = sum (-1)^j q^{d j(3j-1)/2}."""
    terms = []
    j = 0
    while True:
        for jj in ([j] if j == 0 else [j, -j]):
            e = d * jj * (3 * jj - 1) // 2
            if e <= N:
                terms.append((e, -1 if jj % 2 else 1))
        if d * j * (3 * j - 1) // 2 > N and j > 0:
            break
        j += 1
    return sorted(set(terms))


def eta_product(factors, N: int) -> QSeries:
    """q^(sum d*e / 24) * prod_d prod_k (1 - q^{dk})^{e_d}, truncated at N.

    factors is a list of (scale d, exponent e) pairs; the weight condition
    sum d*e = 0 mod 24 makes the leading power integral.
    """
    if N < 1:
        raise DomainError("truncation order must be at least 1")
    total = sum(d * e for d, e in factors)
    if total % 24:
        raise DomainError("sum of scale*exponent must be divisible by 24")
    result = QSeries.from_list([1], N)
    for d, e in factors:
        if d < 1 or e < 0:
            raise DomainError("factor scales must be positive, exponents >= 0")
        sparse = _pentagonal_sparse(d, N)
        for _ in range(e):
            result = result.mul_sparse(sparse)
    return result.shift(total // 24)


def theta_binary_qf(a: int, b: int, c: int, N: int) -> QSeries:
    """Theta series of a x^2 + b x y + c y^2; coefficient of q^n counts
    integral representations of n."""
    disc = 4 * a * c - b * b
    if a <= 0 or disc <= 0:
        raise DomainError("form must be positive definite")
    if N < 0:
        raise DomainError("negative truncation order")
    counts = [0] * (N + 1)
    ymax = int((4 * a * N / disc) ** 0.5) + 2
    for y in range(-ymax, ymax + 1):
        # solve a x^2 + (b y) x + (c y^2 - N) <= 0 for x
        d = b * b * y * y - 4 * a * (c * y * y - N)
        if d < 0:
            continue
        root = d**0.5
        lo = int((-b * y - root) / (2 * a)) - 2
        hi = int((-b * y + root) / (2 * a)) + 2
        for x in range(lo, hi + 1):
            v = a * x * x + b * x * y + c * y * y
            if 0 <= v <= N:
                counts[v] += 1
    return QSeries(tuple(counts), N)


def verify_n3(N_coeff: int = DEFAULT_TRUNCATION, pmax: int | None = None) -> Report:
    """The cubic-field suite: the weight-one form of level 23 in both guises,
    its congruence with the discriminant form mod 23, and the prime-indexed
    root-count identity for X^3 - X - 1."""
    if pmax is None:
        pmax = N_coeff
    if pmax > N_coeff:
        raise DomainError("pmax exceeds the computed coefficient range")
    lines = []
    f_eta = eta_product([(1, 1), (23, 1)], N_coeff)
    # The two discriminant -23 forms: x^2 + xy + 6y^2 and 2x^2 + xy + 3y^2.
    theta_diff = theta_binary_qf(1, 1, 6, N_coeff) - theta_binary_qf(2, 1, 3, N_coeff)
    parity_ok = all(c % 2 == 0 for c in theta_diff.coeffs)
    lines.append(
        CheckLine("theta-difference-even", f"N={N_coeff}", "-", "-", parity_ok)
    )
    f_theta = theta_diff.halve() if parity_ok else None
    eq = parity_ok and f_eta.coeffs == f_theta.coeffs
    first_bad = next(
        (n for n in range(N_coeff + 1) if f_theta and f_eta[n] != f_theta[n]), None
    )
    lines.append(
        CheckLine(
            "eta-equals-theta", f"N={N_coeff}",
            "equal" if eq else f"mismatch at {first_bad}", "equal", eq,
        )
    )
    delta = eta_product([(1, 24)], N_coeff)
    cong = delta.reduce_mod(23) == f_eta.reduce_mod(23)
    lines.append(
        CheckLine("delta-congruence-23", f"N={N_coeff}", "-", "-", cong)
    )
    bad_primes = []
    values_seen = set()
    for p in primes_up_to(pmax):
        if p == 23:
            continue
        a_p = f_eta[p]
        values_seen.add(a_p)
        n_p = count_roots_mod_p(reduce_mod_p(F3_COEFFS, p))
        if n_p != 1 + a_p:
            bad_primes.append(p)
    lines.append(
        CheckLine(
            "root-count-identity", f"p<={pmax}",
            "all match" if not bad_primes else f"fail at {bad_primes[:5]}",
            "all match", not bad_primes,
        )
    )
    lines.append(
        CheckLine(
            "eigenvalue-range", f"p<={pmax}", str(sorted(values_seen)),
            "subset of [-1, 0, 2]", values_seen <= {-1, 0, 2},
        )
    )
    return Report("cubic-field q-series suite", lines)
