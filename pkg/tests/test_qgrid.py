import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qharm.qcore import NonConvergenceError, QParam
from qharm.qgrid import (
    GridMismatchError,
    GridRange,
    QFunction,
    change_of_variable_check,
    d_q,
    d_q_plus,
    improper_integral,
    inner_product,
    integration_by_parts_check,
    jackson_integral_0_a,
    jackson_integral_0_inf,
    jackson_integral_interval,
    lq_norm,
    read_csv,
    write_csv,
)

P = QParam(0.5)


def rand_fn(seed: int, lo: int = -4, hi: int = 4) -> QFunction:
    import random

    rng = random.Random(seed)
    return QFunction(P, {n: rng.uniform(-1, 1) for n in range(lo, hi + 1)})


def test_grid_range():
    r = GridRange(-3, 5)
    assert list(r.exponents()) == list(range(-3, 6))
    assert len(r) == 9
    with pytest.raises(ValueError):
        GridRange(2, 1)


def test_qfunction_basics():
    f = QFunction(P, {0: 1.0, 2: 0.0, 5: -2.0})
    assert f.support == [0, 5]  # exact zeros dropped
    assert f(0) == 1.0
    assert f(99) == 0.0
    assert not f.is_zero
    assert f.is_real
    assert QFunction(P, {}).is_zero
    with pytest.raises(ValueError):
        QFunction(P, {0: float("nan")})


def test_qfunction_algebra():
    f = QFunction.unit(P, 0)
    g = QFunction.unit(P, 1)
    h = f + g * 2.0
    assert h(0) == 1.0 and h(1) == 2.0
    assert (h - h).is_zero
    z = QFunction(P, {0: 1 + 2j})
    assert z.conj()(0) == 1 - 2j
    assert not z.is_real


def test_shift_moves_samples():
    # (shift j)(x) = f(q^j x): the sample at q^n comes from exponent n+j
    f = QFunction(P, {2: 7.0})
    g = f.shift(1)
    assert g(1) == 7.0
    assert f.shift(-1)(3) == 7.0


def test_dq_difference_quotient():
    f = QFunction.unit(P, 0)
    df = d_q(f)
    # (f(x)-f(qx))/((1-q)x): nonzero at n=0 and n=-1
    assert set(df.support) == {-1, 0}
    assert df(0) == pytest.approx(1.0 / (0.5 * 1.0))
    assert df(-1) == pytest.approx(-1.0 / (0.5 * 2.0))


def test_dq_plus_reindexes_dq():
    """(D_q^+ f)(q^n) = q^{-1} (D_q f)(q^{n-1}) for every sample."""
    f = rand_fn(3)
    a = d_q_plus(f)
    b = d_q(f)
    for n in set(a.support) | {m + 1 for m in b.support}:
        assert a(n) == pytest.approx(b(n - 1) / P.q, rel=1e-12, abs=1e-15)


def test_dq_plus_norm_relation():
    # consequence of the reindexing: ||D_q^+ f|| = q^{-1/2} ||D_q f||
    f = rand_fn(11)
    assert lq_norm(d_q_plus(f), 2) == pytest.approx(
        lq_norm(d_q(f), 2) / math.sqrt(P.q), rel=1e-12)


def test_jackson_0_inf_exact():
    f = QFunction(P, {0: 1.0, 1: 3.0})
    # (1-q)(q^0*1 + q^1*3) = 0.5 * 2.5
    assert jackson_integral_0_inf(f) == pytest.approx(1.25)


def test_jackson_0_a_geometric():
    # int_0^1 x d_q x = (1-q) sum q^{2n} = (1-q)/(1-q^2)
    v = jackson_integral_0_a(P, lambda x: x, 1.0)
    assert v == pytest.approx((1 - 0.5) / (1 - 0.25), rel=1e-10)


def test_jackson_interval_additive():
    f = lambda x: x * x
    whole = jackson_integral_0_a(P, f, 1.0)
    assert jackson_integral_interval(P, f, 0.25, 1.0) == pytest.approx(
        whole - jackson_integral_0_a(P, f, 0.25), rel=1e-12)


def test_improper_integral_bilateral():
    # int_0^oo x e^{-x} restricted: use f with known Jackson value via the
    # grid identity sum_n q^n f(q^n); compare against a direct wide sum
    f = lambda x: x * math.exp(-x)
    v = improper_integral(P, f, 1.0)
    direct = 0.5 * sum(0.5**n * f(0.5**n) for n in range(-60, 200))
    assert v == pytest.approx(direct, rel=1e-10)


def test_improper_integral_rejects_growth():
    with pytest.raises(NonConvergenceError):
        improper_integral(P, lambda x: math.exp(x) / (1 + x), 1.0)


def test_lq_norm_and_inner_product():
    f = QFunction.unit(P, 0)
    assert lq_norm(f, 2) == pytest.approx(math.sqrt(0.5))
    g = QFunction(P, {0: 2.0})
    assert inner_product(f, g) == pytest.approx(1.0)
    # conjugate-linear in the second slot
    z = QFunction(P, {0: 1j})
    assert inner_product(f, z) == pytest.approx(-0.5j)
    with pytest.raises(ValueError):
        lq_norm(f, 0.5)


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_ibp_both_variants(seed):
    f = rand_fn(seed)
    g = rand_fn(seed + 1)
    for variant in ("standard", "plus"):
        r = integration_by_parts_check(f, g, 0.0, P.q**-6, variant)
        assert r.passed, (variant, r.abs_err)


def test_ibp_finite_interval():
    f = rand_fn(21)
    g = rand_fn(22)
    for variant in ("standard", "plus"):
        r = integration_by_parts_check(f, g, P.q**6, P.q**-6, variant)
        assert r.passed


def test_change_of_variable_linear():
    r = change_of_variable_check(P, lambda u: u**3, 2.0, 1.0, 0.0, 1.0,
                                 tolerance=1e-12)
    assert r.passed


def test_change_of_variable_square():
    r = change_of_variable_check(P, lambda u: math.exp(-u), 1.0, 2.0, 0.0, 1.0,
                                 tolerance=1e-10)
    assert r.passed


def test_csv_round_trip(tmp_path):
    f = QFunction(P, {-2: 1.2345678901234567, 0: -1.0, 7: 3e-15})
    path = str(tmp_path / "f.csv")
    write_csv(f, path)
    g = read_csv(path, P)
    assert g == f


def test_csv_complex_round_trip(tmp_path):
    f = QFunction(P, {0: 1 + 2j, 3: -0.5j})
    path = str(tmp_path / "fc.csv")
    write_csv(f, path)
    assert read_csv(path, P) == f
    header = open(path).readline().strip()
    assert header == "n,x,value_re,value_im"


def test_csv_grid_mismatch(tmp_path):
    path = str(tmp_path / "bad.csv")
    with open(path, "w") as fh:
        fh.write("n,x,value_re\n0,0.9,1.0\n")
    with pytest.raises(GridMismatchError, match="row 2"):
        read_csv(path, P)


def test_csv_malformed(tmp_path):
    path = str(tmp_path / "bad2.csv")
    with open(path, "w") as fh:
        fh.write("n,x,value_re\n0,1.0,abc\n")
    with pytest.raises(GridMismatchError):
        read_csv(path, P)
    with open(path, "w") as fh:
        fh.write("wrong,header\n")
    with pytest.raises(GridMismatchError):
        read_csv(path, P)
