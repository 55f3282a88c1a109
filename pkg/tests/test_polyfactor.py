"""Polynomial machinery over F_p and Z, cross-checked against sympy."""

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.abc import x

from xnx1.arith import DomainError
from xnx1.polyfactor import (
    Ramified,
    count_roots_mod_p,
    disc_formula,
    discriminant_Z,
    factorization_cycle_type,
    format_poly_line,
    is_squarefree_fp,
    parse_poly_text,
    real_root_count,
    reduce_mod_p,
    resultant_Z,
    squarefree_witness,
)

F5 = [-1, -1, 0, 0, 0, 1]  # X^5 - X - 1
G6 = [9, 7, -31, 30, -10, -1, 1]


def _sympy_cycle_type(coeffs, p):
    poly = sympy.Poly(list(reversed(coeffs)), x, modulus=p, symmetric=False)
    parts = []
    for factor, mult in poly.factor_list()[1]:
        parts.extend([factor.degree()] * mult)
    return tuple(sorted(parts))


def test_parse_poly_text_formats():
    assert parse_poly_text("-1 -1 0 0 0 1") == F5
    labeled = "# comment\n5 1\n1 -1\n0 -1\n"
    assert parse_poly_text(labeled) == F5
    with pytest.raises(DomainError):
        parse_poly_text("")
    with pytest.raises(DomainError):
        parse_poly_text("3 1\n3 2")  # repeated degree


def test_format_poly_roundtrip():
    assert parse_poly_text(format_poly_line(F5)) == F5


@pytest.mark.parametrize("p", [2, 3, 7, 13, 101, 997])
def test_cycle_type_matches_sympy_quintic(p):
    assert factorization_cycle_type(reduce_mod_p(F5, p)) == _sympy_cycle_type(F5, p)
    assert factorization_cycle_type(reduce_mod_p(G6, p)) == _sympy_cycle_type(G6, p)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=9),
    st.sampled_from([2, 3, 5, 7, 11, 31]),
)
def test_cycle_type_matches_sympy_random(coeffs, p):
    coeffs = coeffs + [1]  # force monic so reduction keeps the degree
    f = reduce_mod_p(coeffs, p)
    if not is_squarefree_fp(f):
        with pytest.raises(Ramified):
            factorization_cycle_type(f)
    else:
        assert factorization_cycle_type(f) == _sympy_cycle_type(coeffs, p)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=2, max_size=7),
    st.sampled_from([3, 5, 7, 13]),
)
def test_root_count_matches_sympy(coeffs, p):
    coeffs = coeffs + [1]
    n = count_roots_mod_p(reduce_mod_p(coeffs, p))
    brute = sum(
        1
        for a in range(p)
        if sum(c * pow(a, i, p) for i, c in enumerate(coeffs)) % p == 0
    )
    assert n == brute


def test_quintic_ramified_primes():
    for p in (19, 151):
        assert not is_squarefree_fp(reduce_mod_p(F5, p))
        with pytest.raises(Ramified):
            factorization_cycle_type(reduce_mod_p(F5, p))
    # only those two primes ramify below 1000
    from xnx1.arith import primes_up_to

    bad = [
        p
        for p in primes_up_to(1000)
        if not is_squarefree_fp(reduce_mod_p(F5, p))
    ]
    assert bad == [19, 151]


def test_resultant_and_discriminant_match_sympy():
    f = [2, 0, -3, 1, 5]
    g = [1, 4, -1, 2]
    fs = sympy.Poly(list(reversed(f)), x)
    gs = sympy.Poly(list(reversed(g)), x)
    assert resultant_Z(f, g) == sympy.resultant(fs, gs)
    assert discriminant_Z(f) == sympy.discriminant(fs)
    assert discriminant_Z(F5) == 2869


def test_disc_formula_matches_exact():
    for n in range(2, 41):
        f_n = [-1, -1] + [0] * (n - 2) + [1]
        assert discriminant_Z(f_n) == disc_formula(n)


def test_squarefree_witness():
    verdict = squarefree_witness(2869, 10**5)
    assert verdict.clean_below_bound and verdict.square_factor is None
    verdict = squarefree_witness(12 * 49, 100)
    assert verdict.square_factor == 2
    with pytest.raises(DomainError):
        squarefree_witness(0, 10)


def test_real_root_count_matches_sympy():
    cases = [F5, G6, [-1, -1, 0, 1], [1, 0, 1], [-2, 0, 1], [6, -5, 1]]
    for f in cases:
        expected = len(set(sympy.Poly(list(reversed(f)), x).real_roots()))
        assert real_root_count(f) == expected


def test_quintic_has_one_real_root():
    assert real_root_count(F5) == 1
