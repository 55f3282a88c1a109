"""q-series engine: eta products, theta series, the cubic-field suite."""

import pytest

from xnx1.arith import DomainError
from xnx1.modforms import (
    QSeries,
    eta_product,
    theta_binary_qf,
    verify_n3,
)

# tau(1..10), the discriminant-form coefficients
TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


def test_qseries_construction_and_ops():
    a = QSeries.from_list([1, 2, 3], 4)
    b = QSeries.from_list([0, 1], 4)
    assert (a + b).coeffs == (1, 3, 3, 0, 0)
    assert (a - b).coeffs == (1, 1, 3, 0, 0)
    assert (a * b).coeffs == (0, 1, 2, 3, 0)
    assert a.shift(2).coeffs == (0, 0, 1, 2, 3)
    with pytest.raises(DomainError):
        a + QSeries.from_list([1], 9)


def test_halving_requires_even_coefficients():
    assert QSeries.from_list([2, 4], 1).halve().coeffs == (1, 2)
    with pytest.raises(DomainError):
        QSeries.from_list([1, 2], 1).halve()


def test_eta_product_discriminant_form():
    delta = eta_product([(1, 24)], 10)
    assert list(delta.coeffs[1:]) == TAU


def test_eta_product_level23_form():
    f = eta_product([(1, 1), (23, 1)], 13)
    # below q^23 this is q times the pentagonal-number series
    assert f.coeffs == (0, 1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_eta_product_weight_condition():
    with pytest.raises(DomainError):
        eta_product([(1, 1)], 10)  # 1 not divisible by 24
    with pytest.raises(DomainError):
        eta_product([(1, 24)], 0)


def test_theta_series_small_coefficients():
    t1 = theta_binary_qf(1, 1, 6, 8)
    assert t1[0] == 1
    assert t1[1] == 2  # (x, y) = (+-1, 0)
    assert t1[6] == 4  # (+-1, -+1) wait: checked below against brute force
    t2 = theta_binary_qf(2, 1, 3, 8)
    assert t2[0] == 1 and t2[1] == 0 and t2[2] == 2
    # brute-force oracle
    for theta, (a, b, c) in ((t1, (1, 1, 6)), (t2, (2, 1, 3))):
        counts = [0] * 9
        for xx in range(-20, 21):
            for yy in range(-20, 21):
                v = a * xx * xx + b * xx * yy + c * yy * yy
                if v <= 8:
                    counts[v] += 1
        assert list(theta.coeffs) == counts


def test_theta_rejects_indefinite_forms():
    with pytest.raises(DomainError):
        theta_binary_qf(2, 6, 3, 10)  # discriminant 36 - 24 > 0
    with pytest.raises(DomainError):
        theta_binary_qf(-1, 0, 1, 10)


def test_verify_n3_small():
    rep = verify_n3(500, 500)
    assert rep.ok, rep.render()


def test_verify_n3_rejects_pmax_beyond_truncation():
    with pytest.raises(DomainError):
        verify_n3(100, 200)
