"""Integer arithmetic and finite fields, cross-checked against sympy."""

import pytest
import sympy
from hypothesis import given, strategies as st

from xnx1.arith import (
    DomainError,
    ParseError,
    PrimeField,
    QuadField,
    ZETA,
    f25,
    is_prime,
    kronecker,
    parse_integer,
    primes_up_to,
)


def test_parse_integer():
    assert parse_integer("  -37\n") == -37
    assert parse_integer("+12") == 12
    for bad in ("", "3.5", "0x10", "1 2", "--3"):
        with pytest.raises(ParseError):
            parse_integer(bad)


def test_primes_up_to_against_sympy():
    assert primes_up_to(1) == []
    assert primes_up_to(200) == list(sympy.primerange(2, 201))


@given(st.integers(min_value=0, max_value=10**6))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # classic Mersenne composite


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=1, max_value=501))
def test_kronecker_matches_sympy_jacobi(a, n):
    if n % 2 == 0:
        n += 1
    assert kronecker(a, n) == sympy.jacobi_symbol(a, n)


def test_kronecker_extension_rules():
    # (a/2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    assert [kronecker(a, 2) for a in range(-4, 5)] == [0, -1, 0, 1, 0, 1, 0, -1, 0]
    # (a/0) is 1 exactly for a = +-1
    assert [kronecker(a, 0) for a in (-2, -1, 0, 1, 2)] == [0, 1, 0, 1, 0]
    # negative modulus: sign flips exactly for negative a
    assert kronecker(-3, -5) == -kronecker(-3, 5)
    assert kronecker(3, -5) == kronecker(3, 5)
    # multiplicative in the lower argument
    for a in range(-20, 21):
        assert kronecker(a, 12) == kronecker(a, 4) * kronecker(a, 3)


def test_kronecker_quintic_symbols():
    # the three quadratic characters at the first few unramified primes
    assert [kronecker(2869, p) for p in (2, 3, 5, 7, 11, 13)] == [-1, 1, 1, -1, 1, 1]
    assert [kronecker(-19, p) for p in (2, 3, 5, 7)] == [-1, -1, 1, 1]
    for p in primes_up_to(500):
        if p in (19, 151):
            continue
        assert kronecker(-19, p) * kronecker(2869, p) == kronecker(-151, p)


def test_prime_field_ops():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.mul(F.inv(3), 3) == F.one
    assert F.is_square(2) and not F.is_square(3)
    with pytest.raises(DomainError):
        F.inv(0)
    with pytest.raises(DomainError):
        PrimeField(8)


def test_quad_field_structure():
    F = f25()
    assert F.mul(ZETA, ZETA) == (2, 0)  # t^2 = 2
    # zeta has multiplicative order 8
    acc, k = ZETA, 1
    while acc != F.one:
        acc = F.mul(acc, ZETA)
        k += 1
    assert k == 8
    for x in F.elements():
        if x != F.zero:
            assert F.mul(x, F.inv(x)) == F.one
    assert F.in_base((3, 0)) and not F.in_base((0, 3))
    with pytest.raises(DomainError):
        QuadField(5, 4)  # 4 is a square mod 5
