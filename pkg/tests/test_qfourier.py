import math

import pytest

from qharm.qcore import QParam, admissible_q, q_gamma
from qharm.qgrid import GridRange, QFunction, lq_norm
from qharm.qfourier import (
    COSINE,
    SINE,
    TransformSpec,
    c_q_constant,
    derivative_exchange_check,
    fourier_cosine,
    fourier_sine,
    inverse_cosine,
    inverse_sine,
    kernel_value,
    sine_kernel_constant,
)
from qharm.qspecial import q_cos_grid, q_sin_grid

P = QParam(0.5, side_k=1)
WIN = GridRange(-30, 60)


def spec(kind=COSINE, rng=WIN):
    return TransformSpec(kind, rng)


def rand_fn(seed: int) -> QFunction:
    import random

    r = random.Random(seed)
    return QFunction(P, {n: r.uniform(-1, 1) for n in range(-3, 4)})


def test_transform_spec_validation():
    with pytest.raises(ValueError):
        TransformSpec("fourier", WIN)


def test_c_q_against_gamma():
    q = 0.5
    assert c_q_constant(P) == pytest.approx(
        math.sqrt(1 + 1 / q) / q_gamma(QParam(q * q), 0.5), rel=1e-12)


def test_structural_constant_identity():
    # c_q^2 (1-q) K_q = q^2, an exact consequence of the definitions
    for p in (P, admissible_q(2), QParam(0.77)):
        lhs = c_q_constant(p) ** 2 * p.one_minus_q * sine_kernel_constant(p)
        assert lhs == pytest.approx(p.q**2, rel=1e-12)


def test_kernel_cache_matches_direct_eval():
    for e in (-6, 0, 9):
        kv, ke = kernel_value(P, COSINE, e)
        direct = q_cos_grid(P, e)
        assert kv == pytest.approx(direct.value, abs=ke + direct.abs_error_bound)
        sv, _ = kernel_value(P, SINE, e)
        assert sv == pytest.approx(q_sin_grid(P, e).value, abs=1e-12)


def test_transform_of_unit_is_kernel_column():
    # f = e_0: F(f)(q^m) = c_q (1-q) cos(q^m;q^2)
    g = fourier_cosine(QFunction.unit(P, 0), spec())
    cq = c_q_constant(P)
    for m in (-4, 0, 7):
        assert g(m) == pytest.approx(cq * 0.5 * q_cos_grid(P, m).value,
                                     rel=1e-10)


def test_zero_in_zero_out():
    g = fourier_sine(QFunction(P, {}), spec(SINE))
    assert g.is_zero


def test_plancherel_cosine():
    for s in range(5):
        f = rand_fn(s)
        g = fourier_cosine(f, spec())
        assert lq_norm(g, 2) == pytest.approx(lq_norm(f, 2), rel=1e-8)


def test_plancherel_sine_factor_q():
    for s in range(5):
        f = rand_fn(s)
        g = fourier_sine(f, spec(SINE))
        assert lq_norm(g, 2) == pytest.approx(P.q * lq_norm(f, 2), rel=1e-8)


def test_inversion_round_trips():
    back = TransformSpec(COSINE, GridRange(-4, 4))
    for s in (3, 8):
        f = rand_fn(s)
        rc = inverse_cosine(fourier_cosine(f, spec()), back)
        assert rc.max_abs_diff(f) < 1e-8
        rs = inverse_sine(fourier_sine(f, spec(SINE)),
                          TransformSpec(SINE, GridRange(-4, 4)))
        assert rs.max_abs_diff(f) < 1e-8


def test_round_trip_at_golden_q():
    pg = admissible_q(2)
    f = QFunction(pg, {0: 1.0, 1: -0.25, 3: 0.5})
    g = fourier_cosine(f, TransformSpec(COSINE, GridRange(-20, 80)))
    back = inverse_cosine(g, TransformSpec(COSINE, GridRange(-1, 4)))
    assert back.max_abs_diff(f) < 1e-8


def test_derivative_exchange():
    r = derivative_exchange_check(rand_fn(4), TransformSpec(COSINE, GridRange(-5, 20)))
    assert r.passed
    assert r.abs_err < 1e-8


def test_error_bound_propagates():
    g = fourier_cosine(QFunction.unit(P, 0), spec())
    assert g.error_bound > 0.0
    assert g.error_bound < 1e-10
