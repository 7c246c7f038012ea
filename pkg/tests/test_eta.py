from fractions import Fraction

import pytest

from mjtheta.errors import LevelMismatch, NotConstant
from mjtheta.eta import (
    EtaQuotient, parse_eta, format_eta, eta_expand, eta_fricke, eta_dlog,
    verify_fricke_constant, _euler_product,
)
from mjtheta.series import QSeries, series_mul, series_pow, series_eq


def brute_euler(order):
    # oracle: multiply the factors (1 - q^n) one at a time
    c = {0: 1}
    for n in range(1, order):
        c = {k: v for k, v in c.items()}
        new = dict(c)
        for k, v in c.items():
            if k + n < order:
                new[k + n] = new.get(k + n, 0) - v
        c = {k: v for k, v in new.items() if v}
    return c


def test_euler_product_against_brute_force():
    order = 60
    got = _euler_product(order)
    want = brute_euler(order)
    assert {k: v for k, v in got.coeffs.items()} == \
        {k: Fraction(v) for k, v in want.items()}


def test_parse_format_roundtrip():
    for text in ["1^24 / 2^24", "1^4 2^4 / 3^4 6^4", "1^2 8^1 / 2^1 16^2",
                 "1^1 12^1 15^1 20^1 / 3^1 4^1 5^1 60^1"]:
        e = parse_eta(text)
        assert parse_eta(format_eta(e)) == e


def test_eta_expand_leading_term():
    e = parse_eta("1^24 / 2^24")
    f = eta_expand(e, 5)
    assert f.coeff(-1) == 1
    assert f.coeff(0) == -24
    # eta(tau)^24 itself: q * prod(1-q^n)^24 = q - 24 q^2 + 252 q^3 - ...
    g = eta_expand(EtaQuotient([(1, 24)]), 5)
    assert g.coeff(1) == 1 and g.coeff(2) == -24 and g.coeff(3) == 252


def test_eta_expand_fractional_prefactor():
    # eta(tau) = q^{1/24}(1 - q - q^2 + q^5 + ...)
    f = eta_expand(EtaQuotient([(1, 1)]), 3)
    assert f.coeff(Fraction(1, 24)) == 1
    assert f.coeff(Fraction(25, 24)) == -1
    assert f.coeff(Fraction(49, 24)) == -1


def test_fricke_level_mismatch():
    with pytest.raises(LevelMismatch):
        eta_fricke(parse_eta("1^4 5^2"), 6)


def test_fricke_lambency_two():
    e = parse_eta("1^24 / 2^24")
    image, mult = eta_fricke(e, 2)
    assert image == parse_eta("2^24 / 1^24")
    assert mult == 4096
    assert verify_fricke_constant(e, 2, 30) == 4096


def test_fricke_constant_by_series_product():
    # independent route: expand both factors and multiply
    e = parse_eta("1^4 2^4 / 3^4 6^4")
    image, mult = eta_fricke(e, 6)
    prod = series_mul(eta_expand(e, 40), eta_expand(image, 40))
    assert list(prod.coeffs.items()) == [(0, 1)]
    assert verify_fricke_constant(e, 6, 40) == mult == 81


def test_not_constant_detected():
    # eta(tau)^24 * (eta(tau)^24 | W_1) = eta^48 is certainly not constant
    e = EtaQuotient([(1, 24)])
    with pytest.raises(NotConstant):
        verify_fricke_constant(e, 1, 10)


def numeric_dlog(e, order):
    # oracle: theta(f)/f with theta = q d/dq acting on the exact expansion
    f = eta_expand(e, order)
    theta = QSeries({k: v * Fraction(k, f.den) for k, v in f.coeffs.items()},
                    f.order, f.den)
    return series_mul(theta, series_pow(f, -1))


def test_dlog_against_log_derivative():
    for text in ["1^24 / 2^24", "1^4 2^4 / 3^4 6^4", "1^12 / 3^12",
                 "1^2 8^1 / 2^1 16^2"]:
        e = parse_eta(text)
        got = eta_dlog(e, 25)
        want = numeric_dlog(e, 25)
        assert series_eq(got, want), text


def test_dlog_known_values():
    # 1^24/2^24: constant -1, then -24, -24, -96, -24, -144
    f = eta_dlog(parse_eta("1^24 / 2^24"), 6)
    assert [f.coeff(n) for n in range(6)] == [-1, -24, -24, -96, -24, -144]


def test_dlog_constant_is_minus_one_for_weight_zero_catalog_shapes():
    for text in ["1^24 / 2^24", "1^4 2^4 / 3^4 6^4",
                 "1^1 12^1 15^1 20^1 / 3^1 4^1 5^1 60^1"]:
        assert eta_dlog(parse_eta(text), 2).coeff(0) == -1
