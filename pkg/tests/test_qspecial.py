import math

import pytest

from qharm.qcore import QParam, SeriesConfig, admissible_q, q_gamma, \
    q_pochhammer_inf
from qharm.qspecial import (
    bessel_bound_constant,
    phi11,
    q_bessel3,
    q_bessel3_order,
    q_cos,
    q_cos_grid,
    q_sin,
    q_sin_grid,
)

P5 = QParam(0.5, side_k=1)
P3 = QParam(0.3)


def test_trig_at_zero():
    assert q_cos(P5, 0.0).value == 1.0
    assert q_sin(P5, 0.0).value == 0.0


def test_sin_is_odd():
    a = q_sin(P5, 0.7)
    b = q_sin(P5, -0.7)
    assert a.value == pytest.approx(-b.value, rel=1e-14)


def test_trig_small_argument_series():
    # two-term check: sin(x) = x - q^0 x^3/[3]_q! + O(x^5) etc.
    x = 1e-3
    s = q_sin(P5, x).value
    three_fact = (1.0) * (1.5) * (1.75)  # [1][2][3] at q=0.5
    assert s == pytest.approx(x - x**3 / three_fact, abs=1e-14)


def test_trig_phi11_forms():
    """cos(x;q^2) = 1phi1(0; q; q^2, (1-q)^2 x^2) and
    sin(x;q^2) = x 1phi1(0; q^3; q^2, (1-q)^2 x^2)."""
    q = 0.5
    base = QParam(q * q)
    for x in (0.3, 1.0, 1.9):
        z = (1.0 - q) ** 2 * x * x
        assert q_cos(P5, x).value == pytest.approx(
            phi11(base, q, z).value, rel=1e-12)
        assert q_sin(P5, x).value == pytest.approx(
            x * phi11(base, q**3, z).value, rel=1e-12)


def test_grid_deep_cancellation_certified():
    """At side-condition q the grid values at q^{-m} shrink like q^{m^2};
    the certified bound must cover the truncation honestly."""
    for p in (P5, admissible_q(2)):
        for m in (4, 8, 12):
            # resolve below the expected magnitude, or the certified
            # truncation bound legitimately swamps the tiny result
            cfg = SeriesConfig(tol_abs=1e-6 * p.q ** (m * m + m))
            r = q_sin_grid(p, -m, cfg)
            envelope = 2.0 / q_pochhammer_inf(p, p.q) ** 2 * p.q ** (m * m - m)
            assert abs(r.value) <= envelope
            assert r.abs_error_bound < abs(r.value) * 1e-3


def test_sin_sup_bound_on_grid():
    # |sin(x;q^2)| <= 1/(q;q)_oo^2 along the grid, side-condition q
    bound = 1.0 / q_pochhammer_inf(P5, 0.5) ** 2
    worst = max(abs(q_sin_grid(P5, n).value) for n in range(-12, 15))
    assert worst <= bound


def test_trig_derivative_identities():
    """D_q cos = -q^{-1} sin(q .) and D_q sin = cos, spot-checked."""
    p, q = P5, 0.5
    for n in (-6, -2, 0, 3, 10):
        x = q**n
        dqc = (q_cos_grid(p, n).value - q_cos_grid(p, n + 1).value) / ((1 - q) * x)
        assert dqc == pytest.approx(-q_sin_grid(p, n + 1).value / q, abs=1e-10)
        dqs = (q_sin_grid(p, n).value - q_sin_grid(p, n + 1).value) / ((1 - q) * x)
        assert dqs == pytest.approx(q_cos_grid(p, n).value, abs=1e-10)


def test_bessel_prefactor_cases():
    assert q_bessel3(P5, 1.0, 0.0).value == 0.0
    assert q_bessel3(P5, 0.0, 0.0).value == 1.0
    with pytest.raises(ValueError):
        q_bessel3(P5, -0.5, 0.0)
    with pytest.raises(ValueError):
        q_bessel3(P5, 1.0, -1.0)


def test_bessel_symmetry_both_q():
    for p in (P5, P3):
        for alpha, beta in ((0.0, 1.0), (0.5, 1.5), (1.0, 2.5)):
            a = q_bessel3(p, alpha, 0.0, z_exponent=beta)
            b = q_bessel3(p, beta, 0.0, z_exponent=alpha)
            assert abs(a.value - b.value) <= \
                a.abs_error_bound + b.abs_error_bound + 1e-13


def test_bessel_magnitude_bound_generic_q():
    """The decay |J_alpha(q^{-m})| <= C q^{m^2} holds for every q, not
    just side-condition q; this is the deep-cancellation stress case."""
    for p in (P5, P3):
        c = bessel_bound_constant(p, 0.5)
        for m in range(1, 11):
            r = q_bessel3(p, 0.5, 0.0, z_exponent=-m)
            assert abs(r.value) + r.abs_error_bound <= c * p.q ** (m * m)


def test_bessel_reference_value():
    # independent 600-digit series evaluation, q = 0.3, alpha = 1/2, z = q^{-8}
    r = q_bessel3(P3, 0.5, 0.0, z_exponent=-8)
    assert r.value == pytest.approx(2.0232712e-40, rel=1e-6)


def test_bessel_negative_order_reroute():
    # J_{-m}(q^{1/2}) must match J_{1/2}(q^{-m}) through the symmetry
    for m in (1, 3, 6):
        a = q_bessel3_order(P5, -m, 0.5)
        b = q_bessel3(P5, 0.5, 0.0, z_exponent=-m)
        assert a.value == pytest.approx(b.value, rel=1e-10)


def test_trig_bessel_relations():
    """cos and sin against their J_{-1/2} / J_{1/2} forms; at q = 1/2 the
    argument (1-q)x/q = x stays on the grid."""
    q = 0.5
    g = q_gamma(QParam(q * q), 0.5)
    for n in (-3, 0, 2):
        x = q**n
        cos_rhs = g / (q * (1 + 1 / q) ** 0.5) * x**0.5 \
            * q_bessel3(P5, -0.5, 0.0, z_exponent=n).value
        assert q_cos_grid(P5, n).value == pytest.approx(cos_rhs, rel=1e-10)
        sin_rhs = g / (1 + 1 / q) ** 0.5 * x**0.5 \
            * q_bessel3(P5, 0.5, 0.0, z_exponent=n).value
        assert q_sin_grid(P5, n).value == pytest.approx(sin_rhs, rel=1e-10)


def test_eval_result_reports_resources():
    r = q_cos_grid(P5, -10, SeriesConfig(tol_abs=1e-20))
    assert r.terms_used > 10
    assert r.precision_used_bits >= 64
