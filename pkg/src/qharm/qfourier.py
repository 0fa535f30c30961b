"""q-Fourier-cosine and q-Fourier-sine transforms on grid functions.

For a finitely supported f the transforms are exact finite sums

    F_c(f)(q^m) = c_q (1-q) sum_n q^n f(q^n) cos(q^{m+n}; q^2)
    F_s(f)(q^m) = c_q (1-q) sum_n q^n f(q^n) sin(q^{m+n}; q^2)

evaluated on an output exponent window. The kernel depends only on the
exponent sum m+n, so kernel values are cached per (q, kind, exponent);
for m+n < 0 the kernel is of order q^{(m+n)^2} and its evaluation
tolerance is scaled down to that magnitude so cached values stay
relatively accurate (naive absolute-tolerance values would wreck the
Plancherel and inversion checks through the q^n weights).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import mpmath as mp

from .qcore import DEFAULT_CONFIG, QParam, SeriesConfig, _mp_q_gamma
from .qgrid import GridRange, QFunction, d_q
from .report import VerificationReport
from .qspecial import _trig_mp

COSINE = "cosine"
SINE = "sine"


@dataclass(frozen=True)
class TransformSpec:
    kind: str
    output_range: GridRange
    cfg: SeriesConfig = DEFAULT_CONFIG

    def __post_init__(self) -> None:
        if self.kind not in (COSINE, SINE):
            raise ValueError(f"kind must be '{COSINE}' or '{SINE}', got {self.kind!r}")


# -- transform normalisation constants --------------------------------------


def c_q_constant(p: QParam, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """c_q = (1 + q^{-1})^{1/2} / Gamma_{q^2}(1/2)."""
    with mp.workprec(max(cfg.precision_bits, 80)):
        g = _mp_q_gamma(p.q**2, 0.5, mp.mpf(cfg.tol_abs) * mp.mpf("1e-6"), cfg.max_terms)
        return float(mp.sqrt(1 + 1 / mp.mpf(p.q)) / g)


def sine_kernel_constant(p: QParam, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """K_q = q^2 Gamma_{q^2}(1/2)^2 / ((1 + q^{-1})(1 - q)), the diagonal
    value of sqrt(xy) int sin(xt;q^2) sin(yt;q^2) d_q t."""
    with mp.workprec(max(cfg.precision_bits, 80)):
        g = _mp_q_gamma(p.q**2, 0.5, mp.mpf(cfg.tol_abs) * mp.mpf("1e-6"), cfg.max_terms)
        qm = mp.mpf(p.q)
        return float(qm**2 * g**2 / ((1 + 1 / qm) * (1 - qm)))


# -- kernel cache ------------------------------------------------------------

_kernel_cache: dict[tuple, tuple[float, float]] = {}
_kernel_lock = threading.Lock()


def kernel_value(p: QParam, kind: str, exponent: int,
                 cfg: SeriesConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """(value, abs_error_bound) of cos/sin(q^exponent; q^2)."""
    base_tol = min(cfg.tol_abs, 1e-8) * 1e-6
    key = (p.q, p.side_k, kind, exponent, base_tol)
    hit = _kernel_cache.get(key)
    if hit is not None:
        return hit
    s = 0 if kind == COSINE else 1
    with mp.workprec(64):
        tol = mp.mpf(base_tol)
        if exponent < 0:
            # (asj) magnitude envelope: |kernel| ~ q^{exponent^2}
            tol *= mp.mpf(p.q) ** (exponent * exponent)
    v, e, _, _ = _trig_mp(p, None, s, tol, cfg.max_terms, x_exp=exponent)
    result = (float(v), float(e))
    with _kernel_lock:
        _kernel_cache[key] = result
    return result


# -- the transforms ----------------------------------------------------------


def _transform(f: QFunction, spec: TransformSpec, kind: str) -> QFunction:
    p = f.param
    cq = c_q_constant(p, spec.cfg)
    weights = [(n, p.one_minus_q * p.q**n * f(n)) for n in f.support]
    out: dict[int, complex] = {}
    err = 0.0
    for m in spec.output_range.exponents():
        acc = 0.0 + 0.0j
        acc_err = 0.0
        for n, w in weights:
            kv, ke = kernel_value(p, kind, m + n, spec.cfg)
            acc += w * kv
            acc_err += abs(w) * ke
        out[m] = cq * acc
        err = max(err, cq * acc_err)
    return QFunction(p, out, error_bound=err + f.error_bound * cq)


def fourier_cosine(f: QFunction, spec: TransformSpec) -> QFunction:
    """F_q(f)(x) = c_q int_0^oo f(t) cos(xt;q^2) d_q t on the output window."""
    return _transform(f, spec, COSINE)


def fourier_sine(f: QFunction, spec: TransformSpec) -> QFunction:
    """_qF(f)(x) = c_q int_0^oo f(t) sin(xt;q^2) d_q t on the output window."""
    return _transform(f, spec, SINE)


def inverse_cosine(g: QFunction, spec: TransformSpec) -> QFunction:
    """The cosine transform is an involution: F_q^{-1} = F_q."""
    return fourier_cosine(g, spec)


def inverse_sine(g: QFunction, spec: TransformSpec) -> QFunction:
    """(_qF)^{-1} = q^{-2} _qF."""
    return fourier_sine(g, spec) * (1.0 / g.param.q**2)


# -- derivative / transform exchange ----------------------------------------


def derivative_exchange_check(f: QFunction, spec: TransformSpec,
                              tolerance: float = 1e-8) -> VerificationReport:
    """Max pointwise deviation, over the output window, of

        _qF(D_q f)(l)   = -(l/q)   F_q(f)(l/q)
        F_q(D_q f)(l)   =  (l/q^2) _qF(f)(l)
    """
    p = f.param
    rng = spec.output_range
    df = d_q(f)
    sine_df = fourier_sine(df, spec)
    cos_df = fourier_cosine(df, spec)
    shifted = GridRange(rng.n_min - 1, rng.n_max - 1)
    cos_f = fourier_cosine(f, TransformSpec(COSINE, shifted, spec.cfg))
    sin_f = fourier_sine(f, TransformSpec(SINE, rng, spec.cfg))
    dev = 0.0
    for m in rng.exponents():
        lam = p.q**m
        dev = max(dev, abs(sine_df(m) + lam / p.q * cos_f(m - 1)))
        dev = max(dev, abs(cos_df(m) - lam / p.q**2 * sin_f(m)))
    return VerificationReport("derivative-exchange", dev, 0.0, dev, dev,
                              tolerance, dev <= tolerance)
